#include "cyclemax/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cyclemax/bounds.hpp"
#include "cyclemax/constructions.hpp"
#include "cyclemax/counting.hpp"
#include "cyclemax/errors.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/reduction.hpp"
#include "cyclemax/search.hpp"

namespace cyclemax::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { graph6, multi };
enum class OutputMode { kv, text };

struct RunConfig {
    std::string input_path;
    std::string inline_graph;
    Format format = Format::graph6;
    OutputMode output = OutputMode::kv;
    int workers = 1;
    std::uint64_t seed = 0;
    bool timing = false;
};

/// Prints key=value, or "key: value" in text mode.
class Emitter {
public:
    Emitter(std::ostream& out, OutputMode mode) : out_(out), mode_(mode) {}

    void operator()(const std::string& key, const std::string& value) const {
        if (mode_ == OutputMode::kv)
            out_ << key << '=' << value << '\n';
        else
            out_ << key << ": " << value << '\n';
    }

private:
    std::ostream& out_;
    OutputMode mode_;
};

std::string read_input(const RunConfig& config, std::istream& in) {
    if (!config.inline_graph.empty())
        return config.inline_graph;
    if (!config.input_path.empty()) {
        std::ifstream file(config.input_path, std::ios::binary);
        if (!file)
            throw InputError("cannot open input file: " + config.input_path);
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string trimmed(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

SimpleGraph read_simple(const RunConfig& config, std::istream& in) {
    if (config.format != Format::graph6)
        throw InputError("this command reads graph6 input only");
    return parse_graph6(trimmed(read_input(config, in)));
}

std::string joined(const std::vector<std::string>& items, const char* separator = ",") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0)
            out += separator;
        out += items[i];
    }
    return out;
}

template <typename T>
std::string joined_numbers(const std::vector<T>& items) {
    std::vector<std::string> text;
    for (const T& x : items)
        text.push_back(std::to_string(x));
    return joined(text);
}

std::string format_double(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

CountOptions counting_options(const RunConfig& config) {
    CountOptions options;
    options.workers = config.workers;
    return options;
}

void emit_bounds(const Emitter& emit, const BoundReport& r) {
    emit("n", std::to_string(r.n));
    emit("m", std::to_string(r.m));
    emit("components", std::to_string(r.components));
    emit("degree.max", std::to_string(r.max_degree));
    if (r.ahrens) {
        emit("bound.ahrens.lo", r.ahrens->lower.get_str());
        emit("bound.ahrens.hi", r.ahrens->upper.get_str());
    }
    if (r.aldred_thomassen)
        emit("bound.at", format_rational(*r.aldred_thomassen));
    if (r.new_bound)
        emit("bound.new", r.new_bound->to_string(true));
    emit("bound.corollary", r.corollary.bound.to_string(true));
}

int cmd_count(const RunConfig& config, bool list, std::size_t limit, std::istream& in,
              const Emitter& emit, std::ostream& out) {
    if (config.format == Format::multi) {
        if (list)
            throw InputError("--list supports graph6 input only");
        const Multigraph g = parse_multigraph(read_input(config, in));
        emit("cycles", count_cycles_multi(g, counting_options(config)).get_str());
        return kOk;
    }
    const SimpleGraph g = read_simple(config, in);
    emit("cycles", count_cycles(g, counting_options(config)).get_str());
    if (list) {
        const CycleListing listing = list_cycles(g, limit);
        for (const auto& cycle : listing.cycles)
            out << joined_numbers(cycle) << '\n';
        emit("listed", std::to_string(listing.cycles.size()));
        emit("truncated", listing.truncated ? "true" : "false");
    }
    return kOk;
}

int cmd_count_paths(const RunConfig& config, int s, int t, std::istream& in, const Emitter& emit) {
    if (config.format == Format::multi) {
        const Multigraph g = parse_multigraph(read_input(config, in));
        emit("paths", count_paths(g, s, t).get_str());
        return kOk;
    }
    const SimpleGraph g = read_simple(config, in);
    emit("paths", count_paths(g, s, t, counting_options(config)).get_str());
    return kOk;
}

int cmd_bounds(const RunConfig& config, std::istream& in, const Emitter& emit) {
    if (config.format == Format::multi) {
        const Multigraph g = parse_multigraph(read_input(config, in));
        emit_bounds(emit, bound_report(g));
        return kOk;
    }
    emit_bounds(emit, bound_report(read_simple(config, in)));
    return kOk;
}

int cmd_reduce(const RunConfig& config, bool verify, std::istream& in, std::ostream& out,
               std::ostream& err) {
    const SimpleGraph g = read_simple(config, in);
    SelectionOptions options;
    options.seed = config.seed;
    options.verify_counts = verify;
    const ReductionTrace trace = reduce_to_bounded_degree(g, options, counting_options(config));

    // In text mode the report goes to stderr so stdout carries only graph6.
    std::ostream& report_stream = config.output == OutputMode::kv ? out : err;
    const Emitter emit(report_stream, config.output);
    emit("steps", std::to_string(trace.steps.size()));
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const ReductionStep& step = trace.steps[i];
        const std::string prefix = "step." + std::to_string(i + 1) + ".";
        emit(prefix + "u", std::to_string(step.u));
        emit(prefix + "k", std::to_string(step.k));
        emit(prefix + "S", step.weights.total().get_str());
        emit(prefix + "deleted", joined_numbers(step.deleted_vertices));
        std::vector<std::string> parts;
        for (const auto& part : step.part_vertices)
            parts.push_back(joined_numbers(part));
        emit(prefix + "parts", joined(parts, "|"));
        emit(prefix + "retained", step.deletion.retained.get_str());
        emit(prefix + "cross", step.partition.cross.get_str());
        if (step.cycles_before)
            emit(prefix + "before", step.cycles_before->get_str());
        if (step.cycles_after)
            emit(prefix + "after", step.cycles_after->get_str());
    }
    emit("completed", trace.completed ? "true" : "false");
    if (config.output == OutputMode::kv)
        emit("graph", to_graph6(trace.result));
    else
        out << to_graph6(trace.result) << '\n';
    if (!trace.completed) {
        err << "error: step cap of " << g.size() << " reached with maximum degree >= 12\n";
        return kCapacity;
    }
    return kOk;
}

int cmd_search(const RunConfig& config, int edges, bool no_prune, bool exhaustive,
               const Emitter& emit) {
    const auto start = std::chrono::steady_clock::now();
    ExtremalResult result;
    if (exhaustive) {
        result = exhaustive_search(edges, config.workers);
    } else {
        SearchOptions options;
        options.prune_max_degree = !no_prune;
        options.prune_min_degree = !no_prune;
        options.workers = config.workers;
        result = extremal_search(edges, options);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    emit("m", std::to_string(result.m));
    emit("cmax", result.cmax.get_str());
    emit("witnesses", joined(result.witness_graph6));
    emit("witness.count", std::to_string(result.witnesses.size()));
    emit("n.range", std::to_string(result.n_min) + ".." + std::to_string(result.n_max));
    emit("prune.min_degree", std::to_string(result.min_degree_used));
    emit("prune.max_degree", result.max_degree_pruned ? "11" : "none");
    emit("nodes.generated", std::to_string(result.stats.generated));
    emit("nodes.expansions", std::to_string(result.stats.expansions));
    emit("nodes.counted", std::to_string(result.stats.counted));
    emit("bound.corollary", corollary_bound(static_cast<std::uint64_t>(edges)).bound.to_string(true));
    if (config.timing)
        emit("time.seconds", format_double(seconds));
    return kOk;
}

int cmd_verify(const RunConfig& config, int nmax, const Emitter& emit) {
    const CorpusReport report = verify_bounds_on_corpus(nmax, config.workers);
    emit("nmax", std::to_string(report.nmax));
    emit("graphs", std::to_string(report.graphs));
    for (const BoundCheck* check : {&report.ahrens_lower, &report.ahrens_upper,
                                    &report.aldred_thomassen, &report.new_bound}) {
        const std::string prefix = "check." + check->name + ".";
        emit(prefix + "checked", std::to_string(check->checked));
        emit(prefix + "violations", std::to_string(check->violations));
        emit(prefix + "ratio", format_double(check->extreme_ratio));
        emit(prefix + "tight", std::to_string(check->tight.size()));
    }
    for (const std::string& v : report.violations)
        emit("violation", v);
    emit("status", report.clean() ? "ok" : "violations");
    return report.clean() ? kOk : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact cycle counts, cycle bounds and extremal search for graphs", "cyclemax"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "graph6";
    std::string output = "kv";
    app.add_option("--input,-i", config.input_path, "Read the graph from this file");
    app.add_option("--format,-f", format, "Input format")
        ->check(CLI::IsMember({"graph6", "multi"}));
    app.add_option("--output,-o", output, "Output mode")->check(CLI::IsMember({"kv", "text"}));
    app.add_option("--workers,-w", config.workers, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", config.seed, "Seed for randomized selection fallbacks");
    app.add_flag("--timing", config.timing, "Report wall-clock time (search)");

    bool list = false;
    std::size_t limit = 1'000'000;
    auto* count = app.add_subcommand("count", "Count simple cycles");
    count->add_option("graph", config.inline_graph, "Inline graph6 string");
    count->add_flag("--list", list, "Also list the cycles, one per line");
    count->add_option("--limit", limit, "Listing cap")->check(CLI::Range(1, 1'000'000));

    int source = 0, target = 0;
    auto* count_paths_cmd = app.add_subcommand("count-paths", "Count simple paths between two vertices");
    count_paths_cmd->add_option("s", source, "First endpoint")->required();
    count_paths_cmd->add_option("t", target, "Second endpoint")->required();
    count_paths_cmd->add_option("graph", config.inline_graph, "Inline graph6 string");

    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every applicable cycle bound");
    bounds_cmd->add_option("graph", config.inline_graph, "Inline graph6 string");

    auto* construct = app.add_subcommand("construct", "Emit a construction");
    construct->require_subcommand(1);
    int size_arg = 0;
    std::uint64_t edges_arg = 0;
    auto* hn = construct->add_subcommand("hn", "Ladder H_n (graph6)");
    hn->add_option("n", size_arg)->required();
    auto* gn = construct->add_subcommand("gn", "G_n, H_n with its ends identified (graph6)");
    gn->add_option("n", size_arg)->required();
    auto* lb = construct->add_subcommand("lb", "Lower-bound graph with m edges (graph6)");
    lb->add_option("m", size_arg)->required();
    auto* cnm = construct->add_subcommand("cnm", "Multicycle C_{n,m} (MULTI)");
    cnm->add_option("n", size_arg)->required();
    cnm->add_option("m", edges_arg)->required();

    bool no_verify = false;
    auto* reduce = app.add_subcommand("reduce", "Apply the degree-reducing surgery until Delta <= 11");
    reduce->add_option("graph", config.inline_graph, "Inline graph6 string");
    reduce->add_flag("--no-verify", no_verify, "Skip the before/after cycle counts");

    int search_edges = 0;
    bool no_prune = false, exhaustive = false;
    auto* search = app.add_subcommand("search", "Determine C(m) and its witnesses");
    search->add_option("--edges,-m", search_edges, "Edge count m")->required();
    search->add_flag("--no-prune", no_prune, "Disable the Delta <= 11 and delta >= 3 prunes");
    search->add_flag("--exhaustive", exhaustive, "Search every graph without isolated vertices");

    int nmax = 0;
    auto* verify = app.add_subcommand("verify", "Check the bounds on all connected graphs");
    verify->add_option("--nmax", nmax, "Largest order")->required();

    std::vector<std::string> argv_storage{"cyclemax"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    config.format = format == "multi" ? Format::multi : Format::graph6;
    config.output = output == "text" ? OutputMode::text : OutputMode::kv;
    const Emitter emit(out, config.output);

    try {
        if (*count)
            return cmd_count(config, list, limit, in, emit, out);
        if (*count_paths_cmd)
            return cmd_count_paths(config, source, target, in, emit);
        if (*bounds_cmd)
            return cmd_bounds(config, in, emit);
        if (*hn) {
            out << to_graph6(construct_hn(size_arg)) << '\n';
            return kOk;
        }
        if (*gn) {
            out << to_graph6(construct_gn(size_arg)) << '\n';
            return kOk;
        }
        if (*lb) {
            out << to_graph6(construct_lower_bound_graph(size_arg)) << '\n';
            return kOk;
        }
        if (*cnm) {
            out << to_multigraph_text(construct_cnm({size_arg, edges_arg}));
            return kOk;
        }
        if (*reduce)
            return cmd_reduce(config, !no_verify, in, out, err);
        if (*search)
            return cmd_search(config, search_edges, no_prune, exhaustive, emit);
        if (*verify)
            return cmd_verify(config, nmax, emit);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    }
    err << app.help();
    return kUsage;
}

} // namespace cyclemax::cli
