#include "bmem/analysis.hpp"

#include <algorithm>
#include <string>

#include "bmem/rng.hpp"

namespace bmem {
namespace {

RecallOutcome classify_with_status(const BipolarVector& vector, const MemorySet& memories,
                                   bool fixed_point) {
    RecallOutcome outcome;
    outcome.vector = vector;
    outcome.fixed_point = fixed_point;
    for (std::size_t k = 0; k < memories.count(); ++k) {
        if (memories[k] == vector) {
            outcome.kind = OutcomeKind::stored_memory;
            outcome.memory_index = k;
            return outcome;
        }
    }
    for (std::size_t k = 0; k < memories.count(); ++k) {
        if (memories[k].complement() == vector) {
            outcome.kind = OutcomeKind::complement_of;
            outcome.memory_index = k;
            return outcome;
        }
    }
    outcome.kind = fixed_point ? OutcomeKind::spurious_fixed_point : OutcomeKind::non_fixed_point;
    return outcome;
}

void check_dimensions(const BipolarVector& vector, const MemorySet& memories,
                      const WeightMatrix& weights) {
    if (vector.size() != weights.size()) {
        throw DimensionError("vector dimension does not match weight matrix size");
    }
    if (!memories.empty() && memories.dimension() != vector.size()) {
        throw DimensionError("memory set dimension does not match the vector");
    }
}

}  // namespace

RecallOutcome classify(const BipolarVector& vector, const MemorySet& memories,
                       const WeightMatrix& weights) {
    check_dimensions(vector, memories, weights);
    return classify_with_status(vector, memories, is_stored(weights, vector));
}

std::vector<RecallOutcome> enumerate_fixed_points(const WeightMatrix& weights,
                                                  const MemorySet& memories, std::size_t limit) {
    const std::size_t n = weights.size();
    if (n > limit) {
        throw LimitError("refusing exhaustive scan of " + std::to_string(n) +
                         " neurons: limit is " + std::to_string(limit));
    }
    if (!memories.empty() && memories.dimension() != n) {
        throw DimensionError("memory set dimension does not match weight matrix size");
    }
    std::vector<RecallOutcome> fixed_points;
    // Code 0 is the all +1 vector; a set bit at weight (n-1-i) flips neuron i
    // to -1, so the scan runs in lexicographic order with +1 before -1.
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<int> bits(n);
        for (std::size_t i = 0; i < n; ++i) {
            bits[i] = ((code >> (n - 1 - i)) & 1u) == 0 ? 1 : -1;
        }
        BipolarVector candidate(std::move(bits));
        if (synchronous_update(weights, candidate) == candidate) {
            fixed_points.push_back(classify_with_status(candidate, memories, true));
        }
    }
    return fixed_points;
}

NeuronMemoryMap neuron_memory_map(const WeightMatrix& weights, const ProximityMatrix& proximity,
                                  const MemorySet& memories, SeedPolarity polarity) {
    if (weights.size() != proximity.size()) {
        throw DimensionError("proximity matrix size does not match weight matrix size");
    }
    if (!memories.empty() && memories.dimension() != weights.size()) {
        throw DimensionError("memory set dimension does not match weight matrix size");
    }
    std::vector<int> seed_bits;
    if (polarity == SeedPolarity::plus || polarity == SeedPolarity::both) {
        seed_bits.push_back(1);
    }
    if (polarity == SeedPolarity::minus || polarity == SeedPolarity::both) {
        seed_bits.push_back(-1);
    }
    NeuronMemoryMap map;
    map.entries.reserve(weights.size() * seed_bits.size());
    for (std::size_t start = 0; start < weights.size(); ++start) {
        const ActivityOrder order = activity_order(proximity, start);
        for (int bit : seed_bits) {
            NeuronMapEntry entry;
            entry.start = start;
            entry.seed_bit = bit;
            entry.result = recall(weights, order, {bit});
            entry.outcome = classify(entry.result.normative_bits, memories, weights);
            map.entries.push_back(std::move(entry));
        }
    }
    return map;
}

CapacityReport capacity_sweep(std::size_t neuron_count, std::vector<std::size_t> memory_counts,
                              std::size_t trials, std::uint64_t rng_seed) {
    if (neuron_count < 2) {
        throw ValidationError("capacity sweep needs at least 2 neurons");
    }
    if (trials < 1) {
        throw ValidationError("capacity sweep needs at least 1 trial");
    }
    if (memory_counts.empty()) {
        throw ValidationError("capacity sweep needs at least one memory count");
    }
    for (std::size_t m : memory_counts) {
        if (m < 1) {
            throw ValidationError("memory counts must be at least 1");
        }
    }
    std::sort(memory_counts.begin(), memory_counts.end());

    CapacityReport report;
    report.neuron_count = neuron_count;
    report.rng_seed = rng_seed;
    report.rows.reserve(memory_counts.size());
    for (std::size_t m : memory_counts) {
        std::size_t all_stored_trials = 0;
        std::size_t stored_memories = 0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            SplitMix64 rng(derive_stream(rng_seed, m, trial));
            const MemorySet memories = random_memory_set(rng, m, neuron_count);
            const WeightMatrix weights = train_hebbian(memories);
            std::size_t stored = 0;
            for (std::size_t k = 0; k < m; ++k) {
                if (is_stored(weights, memories[k])) {
                    ++stored;
                }
            }
            stored_memories += stored;
            if (stored == m) {
                ++all_stored_trials;
            }
        }
        CapacityRow row;
        row.memory_count = m;
        row.trials = trials;
        row.all_stored_fraction = static_cast<double>(all_stored_trials) / trials;
        row.per_memory_stored_fraction =
            static_cast<double>(stored_memories) / (static_cast<double>(trials) * m);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace bmem
