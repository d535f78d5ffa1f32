#include "bmem/model.hpp"

#include <string>

namespace bmem {

BipolarVector::BipolarVector(std::vector<int> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw ValidationError("bipolar vector must have at least one entry");
    }
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] != 1 && bits_[i] != -1) {
            throw ValidationError("bipolar entry " + std::to_string(i + 1) + " is " +
                                  std::to_string(bits_[i]) + ", expected +1 or -1");
        }
    }
}

BipolarVector BipolarVector::uniform(std::size_t n, int bit) {
    return BipolarVector(std::vector<int>(n, bit));
}

BipolarVector BipolarVector::complement() const {
    std::vector<int> flipped(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        flipped[i] = -bits_[i];
    }
    return BipolarVector(std::move(flipped));
}

MemorySet::MemorySet(std::vector<BipolarVector> memories) : memories_(std::move(memories)) {
    for (const auto& memory : memories_) {
        if (memory.size() != memories_.front().size()) {
            throw DimensionError("memories must all have the same dimension");
        }
    }
}

std::size_t MemorySet::dimension() const noexcept {
    return memories_.empty() ? 0 : memories_.front().size();
}

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw ValidationError("weight matrix must be square");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i][i] != 0) {
            throw ValidationError("weight matrix diagonal must be zero");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rows[i][j] != rows[j][i]) {
                throw ValidationError("weight matrix must be symmetric");
            }
        }
    }
    WeightMatrix result(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            result.entries_[i * n + j] = rows[i][j];
        }
    }
    return result;
}

std::vector<std::vector<int>> WeightMatrix::rows() const {
    std::vector<std::vector<int>> result(n_, std::vector<int>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            result[i][j] = at(i, j);
        }
    }
    return result;
}

WeightMatrix train_hebbian(const MemorySet& memories) {
    if (memories.empty()) {
        throw DimensionError("cannot train on an empty memory set: dimension unknown");
    }
    const std::size_t n = memories.dimension();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    for (std::size_t k = 0; k < memories.count(); ++k) {
        const BipolarVector& memory = memories[k];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    rows[i][j] += memory[i] * memory[j];
                }
            }
        }
    }
    return WeightMatrix::from_rows(rows);
}

BipolarVector synchronous_update(const WeightMatrix& weights, const BipolarVector& state) {
    if (weights.size() != state.size()) {
        throw DimensionError("state dimension " + std::to_string(state.size()) +
                             " does not match weight matrix size " +
                             std::to_string(weights.size()));
    }
    const std::size_t n = weights.size();
    std::vector<int> updated(n);
    for (std::size_t i = 0; i < n; ++i) {
        long long net = 0;
        for (std::size_t j = 0; j < n; ++j) {
            net += static_cast<long long>(weights.at(i, j)) * state[j];
        }
        updated[i] = sgn(net);
    }
    return BipolarVector(std::move(updated));
}

bool is_stored(const WeightMatrix& weights, const BipolarVector& state) {
    return synchronous_update(weights, state) == state;
}

}  // namespace bmem
