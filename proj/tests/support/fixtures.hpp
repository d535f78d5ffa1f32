#pragma once

// Shared worked-example inputs used across the unit and acceptance suites:
// a four-neuron and a five-neuron proximity matrix plus a set of three
// five-neuron memories, along with their hand-checked products.

#include <vector>

namespace fixtures {

inline std::vector<std::vector<double>> proximity4() {
    return {
        {0, 1, 2, 4},
        {1, 0, 1.5, 2},
        {2, 1.5, 0, 3},
        {4, 2, 3, 0},
    };
}

inline std::vector<std::vector<double>> proximity5() {
    return {
        {0, 1, 2.5, 4, 7},
        {1, 0, 2, 4.5, 3},
        {2.5, 2, 0, 1, 6},
        {4, 4.5, 1, 0, 5},
        {7, 3, 6, 5, 0},
    };
}

inline std::vector<std::vector<int>> memories5() {
    return {
        {1, 1, 1, 1, 1},
        {1, -1, -1, -1, 1},
        {1, 1, -1, -1, -1},
    };
}

// Hebbian weights for memories5, checked entry by entry by hand.
inline std::vector<std::vector<int>> weights5() {
    return {
        {0, 1, -1, -1, 1},
        {1, 0, 1, 1, -1},
        {-1, 1, 0, 3, 1},
        {-1, 1, 3, 0, 1},
        {1, -1, 1, 1, 0},
    };
}

// weights5 relabeled along the order starting at neuron 2 (2 1 3 5 4).
inline std::vector<std::vector<int>> weights5_start2() {
    return {
        {0, 1, 1, -1, 1},
        {1, 0, -1, 1, -1},
        {1, -1, 0, 1, 3},
        {-1, 1, 1, 0, 1},
        {1, -1, 3, 1, 0},
    };
}

// weights5 relabeled along the order starting at neuron 3 (3 4 2 1 5).
inline std::vector<std::vector<int>> weights5_start3() {
    return {
        {0, 3, 1, -1, 1},
        {3, 0, 1, -1, 1},
        {1, 1, 0, 1, -1},
        {-1, -1, 1, 0, 1},
        {1, 1, -1, 1, 0},
    };
}

// weights5 relabeled along the order starting at neuron 4 (4 3 1 2 5).
// Derived from the permutation rule; hand-checked against an independent
// index remap before the implementation existed.
inline std::vector<std::vector<int>> weights5_start4() {
    return {
        {0, 3, -1, 1, 1},
        {3, 0, -1, 1, 1},
        {-1, -1, 0, 1, 1},
        {1, 1, 1, 0, -1},
        {1, 1, 1, -1, 0},
    };
}

// weights5 relabeled along the order starting at neuron 5 (5 2 4 3 1).
inline std::vector<std::vector<int>> weights5_start5() {
    return {
        {0, -1, 1, 1, 1},
        {-1, 0, 1, 1, 1},
        {1, 1, 0, 3, -1},
        {1, 1, 3, 0, -1},
        {1, 1, -1, -1, 0},
    };
}

// Strictly lower triangle of weights5.
inline std::vector<std::vector<int>> generator5() {
    return {
        {0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0},
        {-1, 1, 0, 0, 0},
        {-1, 1, 3, 0, 0},
        {1, -1, 1, 1, 0},
    };
}

// Strictly lower triangle of weights5_start3.
inline std::vector<std::vector<int>> generator5_start3() {
    return {
        {0, 0, 0, 0, 0},
        {3, 0, 0, 0, 0},
        {1, 1, 0, 0, 0},
        {-1, -1, 1, 0, 0},
        {1, 1, -1, 1, 0},
    };
}

}  // namespace fixtures
