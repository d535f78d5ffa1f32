#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bmem/errors.hpp"
#include "bmem/model.hpp"
#include "bmem/proximity.hpp"
#include "bmem/recall.hpp"

namespace bmem {

// Identity-first taxonomy for recall results and fixed points. A vector that
// equals a trained memory (or a complement) keeps that name even when it
// fails the storage test; `fixed_point` reports the test separately.
enum class OutcomeKind {
    stored_memory,
    complement_of,
    spurious_fixed_point,
    non_fixed_point,
};

struct RecallOutcome {
    OutcomeKind kind = OutcomeKind::non_fixed_point;
    std::optional<std::size_t> memory_index;  // zero-based; set for the first two kinds
    BipolarVector vector;
    bool fixed_point = false;

    friend bool operator==(const RecallOutcome&, const RecallOutcome&) = default;
};

// Precedence: stored memory > complement > spurious fixed point > non fixed
// point, lowest memory index first. The memory set may be empty.
RecallOutcome classify(const BipolarVector& vector, const MemorySet& memories,
                       const WeightMatrix& weights);

inline constexpr std::size_t kDefaultEnumerationLimit = 20;

// Scans all 2^n bipolar vectors and returns the classified fixed points, in
// ascending lexicographic order with +1 before -1. Throws LimitError when n
// exceeds `limit`.
std::vector<RecallOutcome> enumerate_fixed_points(const WeightMatrix& weights,
                                                  const MemorySet& memories,
                                                  std::size_t limit = kDefaultEnumerationLimit);

enum class SeedPolarity { plus, minus, both };

struct NeuronMapEntry {
    std::size_t start = 0;  // zero-based neuron label
    int seed_bit = 0;
    RecallResult result;
    RecallOutcome outcome;
};

// Which memory each neuron recalls: one single-bit recall per neuron per
// requested polarity, each classified against the training set.
struct NeuronMemoryMap {
    std::vector<NeuronMapEntry> entries;
};

NeuronMemoryMap neuron_memory_map(const WeightMatrix& weights, const ProximityMatrix& proximity,
                                  const MemorySet& memories,
                                  SeedPolarity polarity = SeedPolarity::both);

struct CapacityRow {
    std::size_t memory_count = 0;
    std::size_t trials = 0;
    double all_stored_fraction = 0.0;
    double per_memory_stored_fraction = 0.0;

    friend bool operator==(const CapacityRow&, const CapacityRow&) = default;
};

struct CapacityReport {
    std::size_t neuron_count = 0;
    std::uint64_t rng_seed = 0;
    std::vector<CapacityRow> rows;  // ascending by memory_count

    friend bool operator==(const CapacityReport&, const CapacityReport&) = default;
};

// Monte-Carlo storage experiment: per memory count m, draws `trials`
// independent sets of m uniform random bipolar vectors, trains, and records
// how often all m memories (and individual memories) pass the storage test.
// Fully reproducible from rng_seed; each (m, trial) pair uses its own stream.
CapacityReport capacity_sweep(std::size_t neuron_count, std::vector<std::size_t> memory_counts,
                              std::size_t trials, std::uint64_t rng_seed);

}  // namespace bmem
