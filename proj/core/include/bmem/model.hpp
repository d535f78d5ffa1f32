#pragma once

#include <cstddef>
#include <vector>

#include "bmem/errors.hpp"

namespace bmem {

// Sign convention used everywhere in the model: zero counts as positive.
[[nodiscard]] constexpr int sgn(long long x) noexcept { return x >= 0 ? 1 : -1; }

// Neuron state / memory vector with entries in {+1, -1}.
class BipolarVector {
public:
    BipolarVector() = default;

    // Throws ValidationError if empty or any entry is not +1/-1.
    explicit BipolarVector(std::vector<int> bits);

    // n copies of `bit` (+1 or -1).
    static BipolarVector uniform(std::size_t n, int bit);

    std::size_t size() const noexcept { return bits_.size(); }
    int operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<int>& bits() const noexcept { return bits_; }

    BipolarVector complement() const;

    friend bool operator==(const BipolarVector&, const BipolarVector&) = default;

private:
    std::vector<int> bits_;
};

// Training set of equally sized bipolar vectors. Duplicates are allowed and
// contribute their outer product once per occurrence.
class MemorySet {
public:
    MemorySet() = default;

    // Throws DimensionError when the vectors do not share one dimension.
    explicit MemorySet(std::vector<BipolarVector> memories);

    std::size_t count() const noexcept { return memories_.size(); }
    bool empty() const noexcept { return memories_.empty(); }
    std::size_t dimension() const noexcept;
    const BipolarVector& operator[](std::size_t k) const { return memories_[k]; }
    const std::vector<BipolarVector>& memories() const noexcept { return memories_; }

    friend bool operator==(const MemorySet&, const MemorySet&) = default;

private:
    std::vector<BipolarVector> memories_;
};

// Symmetric integer weight matrix with zero diagonal.
class WeightMatrix {
public:
    WeightMatrix() = default;
    explicit WeightMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

    // Throws ValidationError unless `rows` is square, symmetric and has a
    // zero diagonal.
    static WeightMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t size() const noexcept { return n_; }
    int at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<int> entries_;
};

// Hebbian outer-product training: weights[i][j] = sum_k mem_k[i] * mem_k[j]
// for i != j, diagonal forced to zero. Throws DimensionError on an empty set.
WeightMatrix train_hebbian(const MemorySet& memories);

// One synchronous threshold pass: result[i] = sgn(sum_j weights[i][j] * state[j]).
BipolarVector synchronous_update(const WeightMatrix& weights, const BipolarVector& state);

// Storage test: true iff the state is a fixed point of synchronous_update.
bool is_stored(const WeightMatrix& weights, const BipolarVector& state);

}  // namespace bmem
