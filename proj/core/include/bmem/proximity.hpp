#pragma once

#include <cstddef>
#include <vector>

#include "bmem/errors.hpp"

namespace bmem {

// Pairwise neural-path distances. Row i holds the distances from neuron i.
// Symmetry is not required (pathways may differ per direction); the matrix
// only has to be square, nonnegative and zero on the diagonal.
class ProximityMatrix {
public:
    ProximityMatrix() = default;

    // Validates the structural rules above; throws ValidationError otherwise.
    static ProximityMatrix validated(std::vector<std::vector<double>> rows);

    std::size_t size() const noexcept { return n_; }
    double at(std::size_t i, std::size_t j) const { return distances_[i * n_ + j]; }

    // Informational flag computed at validation time.
    bool symmetric() const noexcept { return symmetric_; }

    std::vector<std::vector<double>> rows() const;

private:
    std::size_t n_ = 0;
    std::vector<double> distances_;
    bool symmetric_ = true;
};

// Permutation of the neuron labels 0..n-1; position 0 is the starting neuron.
class ActivityOrder {
public:
    ActivityOrder() = default;

    // Throws ValidationError unless `labels` is a permutation of 0..n-1.
    explicit ActivityOrder(std::vector<std::size_t> labels);

    static ActivityOrder identity(std::size_t n);

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t start() const { return labels_.front(); }
    std::size_t at(std::size_t position) const { return labels_[position]; }
    const std::vector<std::size_t>& labels() const noexcept { return labels_; }

    // inverse()[label] = position of that label within the order.
    std::vector<std::size_t> inverse() const;

    friend bool operator==(const ActivityOrder&, const ActivityOrder&) = default;

private:
    std::vector<std::size_t> labels_;
};

// Activity spreads from `start` to the remaining neurons in ascending order
// of distance from the start; ties break toward the lower neuron label.
// Distances compare exactly as stored, without an epsilon.
ActivityOrder activity_order(const ProximityMatrix& proximity, std::size_t start);

// One order per starting neuron, element k starting at neuron k.
std::vector<ActivityOrder> all_orders(const ProximityMatrix& proximity);

}  // namespace bmem
