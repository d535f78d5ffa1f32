#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bmem/analysis.hpp"
#include "bmem/errors.hpp"
#include "bmem/model.hpp"
#include "bmem/proximity.hpp"
#include "bmem/recall.hpp"

namespace bmem {

// Report views are the external face of the CLI: every neuron label, order
// position and memory index in them is 1-based, matching the file formats.

struct ClassificationView {
    std::string kind;                   // stored-memory | complement-of | spurious-fixed-point | non-fixed-point
    std::optional<std::size_t> memory;  // 1-based, present for the first two kinds
    bool fixed_point = false;

    friend bool operator==(const ClassificationView&, const ClassificationView&) = default;
};

struct TrainReport {
    std::size_t n = 0;
    std::size_t memory_count = 0;
    std::vector<std::vector<int>> weights;

    friend bool operator==(const TrainReport&, const TrainReport&) = default;
};

struct OrdersReport {
    std::size_t n = 0;
    bool symmetric = true;
    std::vector<std::vector<std::size_t>> orders;  // element k starts at neuron k+1

    friend bool operator==(const OrdersReport&, const OrdersReport&) = default;
};

struct StepView {
    std::size_t position = 0;  // 1-based slot within the order
    long long net_input = 0;
    int bit = 0;
    bool zero_input = false;

    friend bool operator==(const StepView&, const StepView&) = default;
};

struct TraceView {
    std::size_t seed_length = 0;
    std::vector<StepView> steps;
    std::vector<std::vector<int>> fragments;

    friend bool operator==(const TraceView&, const TraceView&) = default;
};

struct RecallReport {
    std::size_t n = 0;
    std::size_t start = 0;  // 1-based
    std::vector<std::size_t> order;
    std::vector<int> seed;
    std::vector<int> ordered_bits;
    std::vector<int> normative_bits;
    ClassificationView classification;
    std::optional<TraceView> trace;

    friend bool operator==(const RecallReport&, const RecallReport&) = default;
};

struct MapRow {
    std::size_t neuron = 0;  // 1-based
    int seed = 0;
    std::vector<std::size_t> order;
    std::vector<int> normative_bits;
    ClassificationView classification;

    friend bool operator==(const MapRow&, const MapRow&) = default;
};

struct MapReport {
    std::size_t n = 0;
    std::vector<MapRow> entries;

    friend bool operator==(const MapReport&, const MapReport&) = default;
};

struct EnumerateEntry {
    std::vector<int> vector;
    ClassificationView classification;

    friend bool operator==(const EnumerateEntry&, const EnumerateEntry&) = default;
};

struct EnumerateCounts {
    std::size_t stored = 0;
    std::size_t complements = 0;
    std::size_t spurious = 0;
    std::size_t total = 0;

    friend bool operator==(const EnumerateCounts&, const EnumerateCounts&) = default;
};

struct EnumerateReport {
    std::size_t n = 0;
    std::vector<EnumerateEntry> fixed_points;
    EnumerateCounts counts;

    friend bool operator==(const EnumerateReport&, const EnumerateReport&) = default;
};

using ReportDocument = std::variant<TrainReport, OrdersReport, RecallReport, MapReport,
                                    EnumerateReport, CapacityReport>;

std::string kind_name(OutcomeKind kind);
ClassificationView to_view(const RecallOutcome& outcome);
std::vector<std::size_t> one_based(const ActivityOrder& order);

TrainReport make_train_report(const MemorySet& memories, const WeightMatrix& weights);
OrdersReport make_orders_report(const ProximityMatrix& proximity,
                                const std::vector<ActivityOrder>& orders);
RecallReport make_recall_report(const std::vector<int>& seed, const RecallResult& result,
                                const RecallOutcome& outcome, bool include_trace);
MapReport make_map_report(std::size_t n, const NeuronMemoryMap& map);
EnumerateReport make_enumerate_report(std::size_t n, const std::vector<RecallOutcome>& fixed_points);

// Machine form: a JSON document with a "command" discriminator, newline
// terminated, byte-stable for identical inputs. Round-trips losslessly
// through parse_machine.
std::string to_machine(const ReportDocument& document);
ReportDocument parse_machine(const std::string& text);  // throws ParseError

// Human form: plain tables, free to evolve, not pinned by golden files.
std::string to_human(const ReportDocument& document);

}  // namespace bmem
