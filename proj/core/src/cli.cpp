#include "bmem/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"

#include "bmem/analysis.hpp"
#include "bmem/io.hpp"
#include "bmem/model.hpp"
#include "bmem/proximity.hpp"
#include "bmem/recall.hpp"
#include "bmem/report.hpp"

namespace bmem {
namespace {

std::vector<int> parse_seed_bits(const std::string& text) {
    std::vector<int> bits;
    std::string token;
    std::istringstream tokens(text);
    while (std::getline(tokens, token, ',')) {
        if (token == "1" || token == "+1") {
            bits.push_back(1);
        } else if (token == "-1") {
            bits.push_back(-1);
        } else {
            throw ValidationError("seed token '" + token + "': expected 1, +1 or -1");
        }
    }
    if (bits.empty()) {
        throw ValidationError("seed must contain at least one bit");
    }
    return bits;
}

SeedPolarity parse_polarity(const std::string& text) {
    if (text == "+1") {
        return SeedPolarity::plus;
    }
    if (text == "-1") {
        return SeedPolarity::minus;
    }
    return SeedPolarity::both;
}

void check_same_dimension(const MemorySet& memories, const ProximityMatrix& proximity) {
    if (memories.dimension() != proximity.size()) {
        throw DimensionError("memories file dimension " + std::to_string(memories.dimension()) +
                             " does not match proximity matrix size " +
                             std::to_string(proximity.size()));
    }
}

void emit(const ReportDocument& document, const std::string& format, std::ostream& out) {
    out << (format == "machine" ? to_machine(document) : to_human(document));
}

// 1-based start flag -> internal label, range checked against the network.
std::size_t to_internal_start(std::size_t start, std::size_t n) {
    if (start < 1 || start > n) {
        throw ValidationError("start neuron " + std::to_string(start) + " out of range 1.." +
                              std::to_string(n));
    }
    return start - 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hebbian associative memory with proximity-ordered B-matrix recall"};
    app.name("bmem");
    app.require_subcommand(1);

    std::string memories_path;
    std::string proximity_path;
    std::string format = "human";
    std::string seed_text;
    std::string polarity_text = "both";
    std::size_t start = 0;
    std::size_t enumeration_limit = kDefaultEnumerationLimit;
    std::size_t capacity_n = 0;
    std::size_t capacity_m_max = 0;
    std::size_t capacity_trials = 100;
    std::uint64_t capacity_seed = 0;
    bool with_trace = false;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"human", "machine"}))
            ->capture_default_str();
    };

    CLI::App* train = app.add_subcommand("train", "Train the Hebbian weight matrix");
    train->add_option("memories", memories_path, "Memories file")->required();
    add_format(train);
    train->callback([&] {
        const MemorySet memories = parse_memories_file(memories_path);
        const WeightMatrix weights = train_hebbian(memories);
        emit(make_train_report(memories, weights), format, out);
    });

    CLI::App* orders = app.add_subcommand("orders", "Derive all per-neuron activity orders");
    orders->add_option("proximity", proximity_path, "Proximity matrix file")->required();
    add_format(orders);
    orders->callback([&] {
        const ProximityMatrix proximity = parse_proximity_file(proximity_path);
        emit(make_orders_report(proximity, all_orders(proximity)), format, out);
    });

    CLI::App* recall_cmd = app.add_subcommand("recall", "Fragment-expansion recall from one neuron");
    recall_cmd->add_option("memories", memories_path, "Memories file")->required();
    recall_cmd->add_option("proximity", proximity_path, "Proximity matrix file")->required();
    recall_cmd->add_option("--start", start, "Starting neuron (1-based)")->required();
    recall_cmd->add_option("--seed", seed_text, "Comma-separated seed bits, e.g. -1 or 1,-1")
        ->required();
    recall_cmd->add_flag("--trace", with_trace, "Include the per-step trace");
    add_format(recall_cmd);
    recall_cmd->callback([&] {
        const MemorySet memories = parse_memories_file(memories_path);
        const ProximityMatrix proximity = parse_proximity_file(proximity_path);
        const WeightMatrix weights = train_hebbian(memories);
        check_same_dimension(memories, proximity);
        const ActivityOrder order =
            activity_order(proximity, to_internal_start(start, weights.size()));
        const std::vector<int> seed = parse_seed_bits(seed_text);
        const RecallResult result = recall(weights, order, seed);
        const RecallOutcome outcome = classify(result.normative_bits, memories, weights);
        emit(make_recall_report(seed, result, outcome, with_trace), format, out);
    });

    CLI::App* map_cmd = app.add_subcommand("map", "Per-neuron memory map for single-bit seeds");
    map_cmd->add_option("memories", memories_path, "Memories file")->required();
    map_cmd->add_option("proximity", proximity_path, "Proximity matrix file")->required();
    map_cmd->add_option("--polarity", polarity_text, "Seed polarity")
        ->check(CLI::IsMember({"both", "+1", "-1"}))
        ->capture_default_str();
    add_format(map_cmd);
    map_cmd->callback([&] {
        const MemorySet memories = parse_memories_file(memories_path);
        const ProximityMatrix proximity = parse_proximity_file(proximity_path);
        const WeightMatrix weights = train_hebbian(memories);
        check_same_dimension(memories, proximity);
        const NeuronMemoryMap map =
            neuron_memory_map(weights, proximity, memories, parse_polarity(polarity_text));
        emit(make_map_report(weights.size(), map), format, out);
    });

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive fixed-point census");
    enumerate_cmd->add_option("memories", memories_path, "Memories file")->required();
    enumerate_cmd->add_option("--limit", enumeration_limit, "Largest n to scan exhaustively")
        ->capture_default_str();
    add_format(enumerate_cmd);
    enumerate_cmd->callback([&] {
        const MemorySet memories = parse_memories_file(memories_path);
        const WeightMatrix weights = train_hebbian(memories);
        const auto fixed_points = enumerate_fixed_points(weights, memories, enumeration_limit);
        emit(make_enumerate_report(weights.size(), fixed_points), format, out);
    });

    CLI::App* capacity_cmd = app.add_subcommand("capacity", "Monte-Carlo storage capacity sweep");
    capacity_cmd->add_option("--n", capacity_n, "Number of neurons")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    capacity_cmd->add_option("--m-max", capacity_m_max, "Sweep memory counts 1..m-max")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    capacity_cmd->add_option("--trials", capacity_trials, "Trials per memory count")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    capacity_cmd->add_option("--seed", capacity_seed, "RNG seed")->capture_default_str();
    add_format(capacity_cmd);
    capacity_cmd->callback([&] {
        std::vector<std::size_t> memory_counts(capacity_m_max);
        std::iota(memory_counts.begin(), memory_counts.end(), std::size_t{1});
        emit(capacity_sweep(capacity_n, std::move(memory_counts), capacity_trials, capacity_seed),
             format, out);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitSuccess;
}

}  // namespace bmem
