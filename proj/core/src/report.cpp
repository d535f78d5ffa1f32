#include "bmem/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace bmem {

using ordered_json = nlohmann::ordered_json;

std::string kind_name(OutcomeKind kind) {
    switch (kind) {
        case OutcomeKind::stored_memory: return "stored-memory";
        case OutcomeKind::complement_of: return "complement-of";
        case OutcomeKind::spurious_fixed_point: return "spurious-fixed-point";
        case OutcomeKind::non_fixed_point: return "non-fixed-point";
    }
    return "non-fixed-point";
}

ClassificationView to_view(const RecallOutcome& outcome) {
    ClassificationView view;
    view.kind = kind_name(outcome.kind);
    if (outcome.memory_index) {
        view.memory = *outcome.memory_index + 1;
    }
    view.fixed_point = outcome.fixed_point;
    return view;
}

std::vector<std::size_t> one_based(const ActivityOrder& order) {
    std::vector<std::size_t> labels;
    labels.reserve(order.size());
    for (std::size_t label : order.labels()) {
        labels.push_back(label + 1);
    }
    return labels;
}

TrainReport make_train_report(const MemorySet& memories, const WeightMatrix& weights) {
    TrainReport report;
    report.n = weights.size();
    report.memory_count = memories.count();
    report.weights = weights.rows();
    return report;
}

OrdersReport make_orders_report(const ProximityMatrix& proximity,
                                const std::vector<ActivityOrder>& orders) {
    OrdersReport report;
    report.n = proximity.size();
    report.symmetric = proximity.symmetric();
    report.orders.reserve(orders.size());
    for (const ActivityOrder& order : orders) {
        report.orders.push_back(one_based(order));
    }
    return report;
}

RecallReport make_recall_report(const std::vector<int>& seed, const RecallResult& result,
                                const RecallOutcome& outcome, bool include_trace) {
    RecallReport report;
    report.n = result.ordered_bits.size();
    report.start = result.trace.order.start() + 1;
    report.order = one_based(result.trace.order);
    report.seed = seed;
    report.ordered_bits = result.ordered_bits.bits();
    report.normative_bits = result.normative_bits.bits();
    report.classification = to_view(outcome);
    if (include_trace) {
        TraceView trace;
        trace.seed_length = result.trace.seed_length;
        trace.steps.reserve(result.trace.steps.size());
        for (const RecallStep& step : result.trace.steps) {
            trace.steps.push_back(StepView{step.position + 1, step.net_input, step.bit,
                                           step.zero_input});
        }
        trace.fragments = result.trace.fragments;
        report.trace = std::move(trace);
    }
    return report;
}

MapReport make_map_report(std::size_t n, const NeuronMemoryMap& map) {
    MapReport report;
    report.n = n;
    report.entries.reserve(map.entries.size());
    for (const NeuronMapEntry& entry : map.entries) {
        MapRow row;
        row.neuron = entry.start + 1;
        row.seed = entry.seed_bit;
        row.order = one_based(entry.result.trace.order);
        row.normative_bits = entry.result.normative_bits.bits();
        row.classification = to_view(entry.outcome);
        report.entries.push_back(std::move(row));
    }
    return report;
}

EnumerateReport make_enumerate_report(std::size_t n,
                                      const std::vector<RecallOutcome>& fixed_points) {
    EnumerateReport report;
    report.n = n;
    report.fixed_points.reserve(fixed_points.size());
    for (const RecallOutcome& outcome : fixed_points) {
        EnumerateEntry entry;
        entry.vector = outcome.vector.bits();
        entry.classification = to_view(outcome);
        report.fixed_points.push_back(std::move(entry));
        switch (outcome.kind) {
            case OutcomeKind::stored_memory: ++report.counts.stored; break;
            case OutcomeKind::complement_of: ++report.counts.complements; break;
            case OutcomeKind::spurious_fixed_point: ++report.counts.spurious; break;
            case OutcomeKind::non_fixed_point: break;
        }
    }
    report.counts.total = fixed_points.size();
    return report;
}

namespace {

ordered_json classification_json(const ClassificationView& view) {
    ordered_json j;
    j["kind"] = view.kind;
    if (view.memory) {
        j["memory"] = *view.memory;
    }
    j["fixed_point"] = view.fixed_point;
    return j;
}

ClassificationView classification_from_json(const ordered_json& j) {
    ClassificationView view;
    view.kind = j.at("kind").get<std::string>();
    if (j.contains("memory")) {
        view.memory = j.at("memory").get<std::size_t>();
    }
    view.fixed_point = j.at("fixed_point").get<bool>();
    return view;
}

ordered_json to_json(const TrainReport& report) {
    ordered_json j;
    j["command"] = "train";
    j["n"] = report.n;
    j["memories"] = report.memory_count;
    j["weights"]["n"] = report.n;
    j["weights"]["rows"] = report.weights;
    return j;
}

ordered_json to_json(const OrdersReport& report) {
    ordered_json j;
    j["command"] = "orders";
    j["n"] = report.n;
    j["symmetric"] = report.symmetric;
    j["orders"] = report.orders;
    return j;
}

ordered_json to_json(const RecallReport& report) {
    ordered_json j;
    j["command"] = "recall";
    j["n"] = report.n;
    j["start"] = report.start;
    j["order"] = report.order;
    j["seed"] = report.seed;
    j["ordered_bits"] = report.ordered_bits;
    j["normative_bits"] = report.normative_bits;
    j["classification"] = classification_json(report.classification);
    if (report.trace) {
        ordered_json steps = ordered_json::array();
        for (const StepView& step : report.trace->steps) {
            ordered_json s;
            s["position"] = step.position;
            s["net_input"] = step.net_input;
            s["bit"] = step.bit;
            s["zero_input"] = step.zero_input;
            steps.push_back(std::move(s));
        }
        j["trace"]["seed_length"] = report.trace->seed_length;
        j["trace"]["steps"] = std::move(steps);
        j["trace"]["fragments"] = report.trace->fragments;
    }
    return j;
}

ordered_json to_json(const MapReport& report) {
    ordered_json j;
    j["command"] = "map";
    j["n"] = report.n;
    ordered_json entries = ordered_json::array();
    for (const MapRow& row : report.entries) {
        ordered_json e;
        e["neuron"] = row.neuron;
        e["seed"] = row.seed;
        e["order"] = row.order;
        e["normative_bits"] = row.normative_bits;
        e["classification"] = classification_json(row.classification);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

ordered_json to_json(const EnumerateReport& report) {
    ordered_json j;
    j["command"] = "enumerate";
    j["n"] = report.n;
    ordered_json points = ordered_json::array();
    for (const EnumerateEntry& entry : report.fixed_points) {
        ordered_json e;
        e["vector"] = entry.vector;
        e["classification"] = classification_json(entry.classification);
        points.push_back(std::move(e));
    }
    j["fixed_points"] = std::move(points);
    j["counts"]["stored-memory"] = report.counts.stored;
    j["counts"]["complement-of"] = report.counts.complements;
    j["counts"]["spurious-fixed-point"] = report.counts.spurious;
    j["counts"]["total"] = report.counts.total;
    return j;
}

ordered_json to_json(const CapacityReport& report) {
    ordered_json j;
    j["command"] = "capacity";
    j["n"] = report.neuron_count;
    j["rng_seed"] = report.rng_seed;
    ordered_json rows = ordered_json::array();
    for (const CapacityRow& row : report.rows) {
        ordered_json r;
        r["m"] = row.memory_count;
        r["trials"] = row.trials;
        r["all_stored_fraction"] = row.all_stored_fraction;
        r["per_memory_stored_fraction"] = row.per_memory_stored_fraction;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

TrainReport train_from_json(const ordered_json& j) {
    TrainReport report;
    report.n = j.at("n").get<std::size_t>();
    report.memory_count = j.at("memories").get<std::size_t>();
    report.weights = j.at("weights").at("rows").get<std::vector<std::vector<int>>>();
    return report;
}

OrdersReport orders_from_json(const ordered_json& j) {
    OrdersReport report;
    report.n = j.at("n").get<std::size_t>();
    report.symmetric = j.at("symmetric").get<bool>();
    report.orders = j.at("orders").get<std::vector<std::vector<std::size_t>>>();
    return report;
}

RecallReport recall_from_json(const ordered_json& j) {
    RecallReport report;
    report.n = j.at("n").get<std::size_t>();
    report.start = j.at("start").get<std::size_t>();
    report.order = j.at("order").get<std::vector<std::size_t>>();
    report.seed = j.at("seed").get<std::vector<int>>();
    report.ordered_bits = j.at("ordered_bits").get<std::vector<int>>();
    report.normative_bits = j.at("normative_bits").get<std::vector<int>>();
    report.classification = classification_from_json(j.at("classification"));
    if (j.contains("trace")) {
        TraceView trace;
        trace.seed_length = j.at("trace").at("seed_length").get<std::size_t>();
        for (const auto& s : j.at("trace").at("steps")) {
            trace.steps.push_back(StepView{s.at("position").get<std::size_t>(),
                                           s.at("net_input").get<long long>(),
                                           s.at("bit").get<int>(),
                                           s.at("zero_input").get<bool>()});
        }
        trace.fragments = j.at("trace").at("fragments").get<std::vector<std::vector<int>>>();
        report.trace = std::move(trace);
    }
    return report;
}

MapReport map_from_json(const ordered_json& j) {
    MapReport report;
    report.n = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("entries")) {
        MapRow row;
        row.neuron = e.at("neuron").get<std::size_t>();
        row.seed = e.at("seed").get<int>();
        row.order = e.at("order").get<std::vector<std::size_t>>();
        row.normative_bits = e.at("normative_bits").get<std::vector<int>>();
        row.classification = classification_from_json(e.at("classification"));
        report.entries.push_back(std::move(row));
    }
    return report;
}

EnumerateReport enumerate_from_json(const ordered_json& j) {
    EnumerateReport report;
    report.n = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("fixed_points")) {
        EnumerateEntry entry;
        entry.vector = e.at("vector").get<std::vector<int>>();
        entry.classification = classification_from_json(e.at("classification"));
        report.fixed_points.push_back(std::move(entry));
    }
    report.counts.stored = j.at("counts").at("stored-memory").get<std::size_t>();
    report.counts.complements = j.at("counts").at("complement-of").get<std::size_t>();
    report.counts.spurious = j.at("counts").at("spurious-fixed-point").get<std::size_t>();
    report.counts.total = j.at("counts").at("total").get<std::size_t>();
    return report;
}

CapacityReport capacity_from_json(const ordered_json& j) {
    CapacityReport report;
    report.neuron_count = j.at("n").get<std::size_t>();
    report.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    for (const auto& r : j.at("rows")) {
        CapacityRow row;
        row.memory_count = r.at("m").get<std::size_t>();
        row.trials = r.at("trials").get<std::size_t>();
        row.all_stored_fraction = r.at("all_stored_fraction").get<double>();
        row.per_memory_stored_fraction = r.at("per_memory_stored_fraction").get<double>();
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace

std::string to_machine(const ReportDocument& document) {
    const ordered_json j =
        std::visit([](const auto& report) { return to_json(report); }, document);
    return j.dump(2) + "\n";
}

ReportDocument parse_machine(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("not a machine report document: ") + e.what());
    }
    try {
        const std::string command = j.at("command").get<std::string>();
        if (command == "train") return train_from_json(j);
        if (command == "orders") return orders_from_json(j);
        if (command == "recall") return recall_from_json(j);
        if (command == "map") return map_from_json(j);
        if (command == "enumerate") return enumerate_from_json(j);
        if (command == "capacity") return capacity_from_json(j);
        throw ParseError("unknown report command '" + command + "'");
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("malformed report document: ") + e.what());
    }
}

namespace {

std::string bits_to_string(const std::vector<int>& bits) {
    std::ostringstream out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << bits[i];
    }
    return out.str();
}

std::string labels_to_string(const std::vector<std::size_t>& labels) {
    std::ostringstream out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << labels[i];
    }
    return out.str();
}

std::string classification_text(const ClassificationView& view) {
    if (view.kind == "stored-memory") {
        return "stored memory #" + std::to_string(view.memory.value_or(0)) +
               (view.fixed_point ? "" : " (not a fixed point)");
    }
    if (view.kind == "complement-of") {
        return "complement of memory #" + std::to_string(view.memory.value_or(0)) +
               (view.fixed_point ? " (fixed point)" : " (not a fixed point)");
    }
    if (view.kind == "spurious-fixed-point") {
        return "spurious fixed point";
    }
    return "not a fixed point";
}

void render_matrix(std::ostringstream& out, const std::vector<std::vector<int>>& rows) {
    std::size_t width = 1;
    for (const auto& row : rows) {
        for (int value : row) {
            width = std::max(width, std::to_string(value).size());
        }
    }
    for (const auto& row : rows) {
        out << " ";
        for (int value : row) {
            out << ' ' << std::setw(static_cast<int>(width)) << value;
        }
        out << '\n';
    }
}

std::string human(const TrainReport& report) {
    std::ostringstream out;
    out << "weight matrix (n = " << report.n << ", trained on " << report.memory_count
        << (report.memory_count == 1 ? " memory)" : " memories)") << '\n';
    render_matrix(out, report.weights);
    return out.str();
}

std::string human(const OrdersReport& report) {
    std::ostringstream out;
    out << "activity orders (n = " << report.n << ", proximity "
        << (report.symmetric ? "symmetric" : "asymmetric") << ")\n";
    for (std::size_t k = 0; k < report.orders.size(); ++k) {
        out << "neuron " << (k + 1) << ": " << labels_to_string(report.orders[k]) << '\n';
    }
    return out.str();
}

std::string human(const RecallReport& report) {
    std::ostringstream out;
    out << "recall from neuron " << report.start << " (seed " << bits_to_string(report.seed)
        << ")\n";
    out << "order:          " << labels_to_string(report.order) << '\n';
    out << "ordered bits:   " << bits_to_string(report.ordered_bits) << '\n';
    out << "normative bits: " << bits_to_string(report.normative_bits) << '\n';
    out << "classification: " << classification_text(report.classification) << '\n';
    if (report.trace) {
        out << "trace (seed length " << report.trace->seed_length << "):\n";
        for (const StepView& step : report.trace->steps) {
            out << "  position " << step.position << ": net " << step.net_input << " -> "
                << (step.bit > 0 ? "+1" : "-1") << (step.zero_input ? " (zero input)" : "")
                << '\n';
        }
    }
    return out.str();
}

std::string human(const MapReport& report) {
    std::ostringstream out;
    out << "neuron memory map (n = " << report.n << ")\n";
    out << "neuron  seed  order" << std::string(report.n >= 3 ? 2 * report.n - 4 : 1, ' ')
        << "normative" << '\n';
    for (const MapRow& row : report.entries) {
        std::ostringstream line;
        line << std::left << std::setw(8) << row.neuron << std::setw(6)
             << (row.seed > 0 ? "+1" : "-1") << std::setw(std::max<std::size_t>(2 * report.n + 1, 7))
             << labels_to_string(row.order) << bits_to_string(row.normative_bits) << "  "
             << classification_text(row.classification);
        out << line.str() << '\n';
    }
    return out.str();
}

std::string human(const EnumerateReport& report) {
    std::ostringstream out;
    out << "fixed points (n = " << report.n << "): " << report.counts.total << " total\n";
    for (const EnumerateEntry& entry : report.fixed_points) {
        out << "  " << bits_to_string(entry.vector) << "  "
            << classification_text(entry.classification) << '\n';
    }
    out << "counts: stored " << report.counts.stored << ", complements "
        << report.counts.complements << ", spurious " << report.counts.spurious << '\n';
    return out.str();
}

std::string human(const CapacityReport& report) {
    std::ostringstream out;
    out << "capacity sweep: n = " << report.neuron_count << ", rng seed " << report.rng_seed
        << '\n';
    out << "   m  trials  all stored  per memory\n";
    out << std::fixed << std::setprecision(3);
    for (const CapacityRow& row : report.rows) {
        out << std::setw(4) << row.memory_count << std::setw(8) << row.trials << std::setw(12)
            << row.all_stored_fraction << std::setw(12) << row.per_memory_stored_fraction
            << '\n';
    }
    return out.str();
}

}  // namespace

std::string to_human(const ReportDocument& document) {
    return std::visit([](const auto& report) { return human(report); }, document);
}

}  // namespace bmem
