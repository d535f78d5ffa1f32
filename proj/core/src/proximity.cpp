#include "bmem/proximity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bmem {

ProximityMatrix ProximityMatrix::validated(std::vector<std::vector<double>> rows) {
    const std::size_t n = rows.size();
    if (n == 0) {
        throw ValidationError("proximity matrix must have at least one row");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ValidationError("proximity matrix is not square: row " +
                                  std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
        }
        if (rows[i][i] != 0.0) {
            throw ValidationError("proximity diagonal entry " + std::to_string(i + 1) +
                                  " must be zero");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] < 0.0) {
                throw ValidationError("proximity entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ") is negative");
            }
        }
    }
    ProximityMatrix result;
    result.n_ = n;
    result.distances_.resize(n * n);
    result.symmetric_ = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            result.distances_[i * n + j] = rows[i][j];
            if (rows[i][j] != rows[j][i]) {
                result.symmetric_ = false;
            }
        }
    }
    return result;
}

std::vector<std::vector<double>> ProximityMatrix::rows() const {
    std::vector<std::vector<double>> result(n_, std::vector<double>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            result[i][j] = at(i, j);
        }
    }
    return result;
}

ActivityOrder::ActivityOrder(std::vector<std::size_t> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw ValidationError("activity order must not be empty");
    }
    std::vector<bool> seen(labels_.size(), false);
    for (std::size_t label : labels_) {
        if (label >= labels_.size() || seen[label]) {
            throw ValidationError("activity order must be a permutation of the neuron labels");
        }
        seen[label] = true;
    }
}

ActivityOrder ActivityOrder::identity(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    return ActivityOrder(std::move(labels));
}

std::vector<std::size_t> ActivityOrder::inverse() const {
    std::vector<std::size_t> positions(labels_.size());
    for (std::size_t position = 0; position < labels_.size(); ++position) {
        positions[labels_[position]] = position;
    }
    return positions;
}

ActivityOrder activity_order(const ProximityMatrix& proximity, std::size_t start) {
    const std::size_t n = proximity.size();
    if (start >= n) {
        throw ValidationError("start neuron " + std::to_string(start + 1) +
                              " out of range 1.." + std::to_string(n));
    }
    std::vector<std::size_t> rest;
    rest.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (j != start) {
            rest.push_back(j);
        }
    }
    // The start neuron comes first regardless of any zero-distance tie.
    std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
        if (proximity.at(start, a) != proximity.at(start, b)) {
            return proximity.at(start, a) < proximity.at(start, b);
        }
        return a < b;
    });
    std::vector<std::size_t> labels;
    labels.reserve(n);
    labels.push_back(start);
    labels.insert(labels.end(), rest.begin(), rest.end());
    return ActivityOrder(std::move(labels));
}

std::vector<ActivityOrder> all_orders(const ProximityMatrix& proximity) {
    std::vector<ActivityOrder> orders;
    orders.reserve(proximity.size());
    for (std::size_t start = 0; start < proximity.size(); ++start) {
        orders.push_back(activity_order(proximity, start));
    }
    return orders;
}

}  // namespace bmem
