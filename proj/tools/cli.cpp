#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "seedset/activation.hpp"
#include "seedset/analysis.hpp"
#include "seedset/error.hpp"
#include "seedset/exact.hpp"
#include "seedset/solvers.hpp"

namespace seedset::cli {

namespace {

constexpr const char* kCsvHeader =
    "network,algorithm,scheme,seed,n,m,target_size,normalized_size,iterations,upper_bound,wall_ms";

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed(double x, int digits = 6) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

std::string network_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

// One CSV row. Mean rows carry fractional sizes, so sizes are kept as text.
struct RunRecord {
    std::string network, algorithm, scheme;
    std::uint64_t seed = 0;
    std::size_t n = 0, m = 0;
    std::string target_size, normalized_size, iterations, upper_bound;
    std::int64_t wall_ms = 0;

    std::string csv() const {
        std::ostringstream s;
        s << network << ',' << algorithm << ',' << scheme << ',' << seed << ',' << n << ',' << m << ','
          << target_size << ',' << normalized_size << ',' << iterations << ',' << upper_bound << ',' << wall_ms;
        return s.str();
    }
};

struct GraphOptions {
    bool directed = false;
    bool undirected = false;
    EdgeMode mode() const { return directed ? EdgeMode::directed : EdgeMode::undirected; }
};

void add_graph_flags(CLI::App& cmd, GraphOptions& g) {
    auto* d = cmd.add_flag("--directed", g.directed, "Treat each line as one arc");
    auto* u = cmd.add_flag("--undirected", g.undirected, "Treat each line as an edge (default)");
    d->excludes(u);
}

TieBreak parse_tie(const std::string& text, std::uint64_t seed) {
    if (text == "minid") return TieBreak::min_id();
    return TieBreak::random(seed);
}

struct Solved {
    std::vector<NodeId> seeds;
    std::size_t iterations = 0;
    std::chrono::nanoseconds wall{0};
    std::vector<IterationRecord> trace;
};

Solved solve_with(const std::string& algorithm, const Digraph& g, const ThresholdAssignment& t,
                  const SolverOptions& options) {
    Solved s;
    if (algorithm == "exact" || algorithm == "dag") {
        const auto start = std::chrono::steady_clock::now();
        ExactResult r = algorithm == "exact" ? brute_force(g, t) : dag_optimal(g, t);
        s.wall = std::chrono::steady_clock::now() - start;
        s.seeds = std::move(r.seeds);
        s.iterations = algorithm == "exact" ? r.subsets_checked : g.num_nodes();
        return s;
    }
    TargetSetResult r;
    if (algorithm == "mts")
        r = mts(g, t, options);
    else if (algorithm == "tss")
        r = tss(g, t, options);
    else if (algorithm == "greedy")
        r = greedy(g, t, options);
    else if (algorithm == "tip")
        r = tip_decomp(g, t, options);
    else
        throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
    s.seeds = std::move(r.seeds);
    s.iterations = r.iterations;
    s.wall = r.wall_time;
    s.trace = std::move(r.trace);
    return s;
}

RunRecord make_record(const std::string& network, const std::string& algorithm, const std::string& scheme,
                      std::uint64_t seed, const Digraph& g, const ThresholdAssignment& t, const Solved& s,
                      bool deterministic) {
    RunRecord rec;
    rec.network = network;
    rec.algorithm = algorithm;
    rec.scheme = scheme;
    rec.seed = seed;
    rec.n = g.num_nodes();
    rec.m = g.num_edges();
    rec.target_size = std::to_string(s.seeds.size());
    rec.normalized_size = fixed(static_cast<double>(s.seeds.size()) / static_cast<double>(g.num_nodes()));
    rec.iterations = std::to_string(s.iterations);
    rec.upper_bound = fixed(upper_bound(g, t).value());
    rec.wall_ms = deterministic ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(s.wall).count();
    return rec;
}

// Output goes to --output when given, else to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw std::runtime_error("cannot write " + path);
            stream_ = file_.get();
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

// ---------------------------------------------------------------------------

struct SolveArgs {
    std::string input, algorithm = "mts", thresholds = "random", tie = "minid", trace, output;
    GraphOptions graph;
    std::uint64_t seed = 0;
    bool verify = false, emit_seeds = false, deterministic = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const auto loaded = load_edge_list_file(a.input, a.graph.mode());
    const Digraph& g = loaded.graph;
    const auto scheme = ThresholdScheme::parse(a.thresholds);
    const std::uint64_t seed = scheme.kind == ThresholdScheme::Kind::random && scheme.has_seed ? scheme.seed : a.seed;
    const auto t = scheme.assign(g, seed);

    SolverOptions options;
    options.tie = parse_tie(a.tie, a.seed);
    options.record_trace = !a.trace.empty();
    const Solved s = solve_with(a.algorithm, g, t, options);

    if (a.verify && !is_target_set(g, t, s.seeds))
        throw VerificationFailure(a.algorithm + " returned a set that does not activate every node");

    if (!a.trace.empty()) {
        std::ofstream trace(a.trace, std::ios::binary);
        if (!trace) throw std::runtime_error("cannot write " + a.trace);
        TargetSetResult r;
        r.trace = s.trace;
        write_trace_csv(g, r, trace);
    }

    Sink sink(a.output, out);
    *sink << kCsvHeader << '\n'
          << make_record(network_name(a.input), a.algorithm, scheme.name(), seed, g, t, s, a.deterministic).csv()
          << '\n';
    if (a.emit_seeds)
        for (NodeId v : s.seeds) *sink << g.label(v) << '\n';
    return ok;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
    std::vector<std::string> inputs;
    std::vector<std::string> algorithms{"mts", "tss", "greedy", "tip"};
    std::vector<std::string> schemes;
    std::string tie = "minid", output;
    GraphOptions graph;
    std::uint64_t seed = 0;
    std::size_t repeats = 10, jobs = 1;
    bool deterministic = false;
};

struct BenchJob {
    std::size_t scheme_index = 0;
    std::size_t repeat = 0;
    std::uint64_t seed = 0;
};

struct JobOutcome {
    std::vector<std::optional<Solved>> runs;  // one per algorithm; empty on failure
    ThresholdAssignment thresholds;
};

void run_parallel(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& th : pool) th.join();
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<ThresholdScheme> schemes;
    if (a.schemes.empty())
        schemes = standard_schemes();
    else
        for (const auto& s : a.schemes) schemes.push_back(ThresholdScheme::parse(s));
    for (const auto& alg : a.algorithms)
        if (alg != "mts" && alg != "tss" && alg != "greedy" && alg != "tip" && alg != "exact" && alg != "dag")
            throw std::invalid_argument("unknown algorithm '" + alg + "'");
    if (a.repeats == 0) throw std::invalid_argument("--repeats must be at least 1");

    Sink sink(a.output, out);
    *sink << kCsvHeader << '\n';
    int status = ok;
    std::mutex err_mutex;

    for (const auto& input : a.inputs) {
        std::optional<LoadedGraph> loaded;
        try {
            loaded = load_edge_list_file(input, a.graph.mode());
        } catch (const std::exception& e) {
            err << "bench: skipping " << input << ": " << e.what() << '\n';
            status = std::max<int>(status, usage_error);
            continue;
        }
        const Digraph& g = loaded->graph;
        const std::string network = network_name(input);

        std::vector<BenchJob> jobs;
        for (std::size_t s = 0; s < schemes.size(); ++s) {
            const bool random = schemes[s].kind == ThresholdScheme::Kind::random;
            const std::size_t reps = random ? a.repeats : 1;
            for (std::size_t r = 0; r < reps; ++r) {
                const std::uint64_t base = random && schemes[s].has_seed ? schemes[s].seed : a.seed;
                jobs.push_back({s, r, random ? base + r : a.seed});
            }
        }

        std::vector<JobOutcome> outcomes(jobs.size());
        run_parallel(jobs.size(), a.jobs, [&](std::size_t j) {
            const BenchJob& job = jobs[j];
            JobOutcome& o = outcomes[j];
            o.runs.resize(a.algorithms.size());
            try {
                // Thresholds are drawn once and shared by every algorithm of this repetition.
                o.thresholds = schemes[job.scheme_index].assign(g, job.seed);
            } catch (const std::exception& e) {
                std::lock_guard lock(err_mutex);
                err << "bench: " << network << " " << schemes[job.scheme_index].name() << ": " << e.what() << '\n';
                status = std::max<int>(status, usage_error);
                return;
            }
            SolverOptions options;
            options.tie = parse_tie(a.tie, job.seed);
            for (std::size_t i = 0; i < a.algorithms.size(); ++i) {
                try {
                    o.runs[i] = solve_with(a.algorithms[i], g, o.thresholds, options);
                } catch (const InvariantViolation& e) {
                    std::lock_guard lock(err_mutex);
                    err << "bench: " << network << " " << a.algorithms[i] << ": invariant violated: " << e.what()
                        << '\n';
                    status = std::max<int>(status, invariant_violated);
                } catch (const std::exception& e) {
                    std::lock_guard lock(err_mutex);
                    err << "bench: " << network << " " << a.algorithms[i] << ": " << e.what() << '\n';
                    status = std::max<int>(status, usage_error);
                }
            }
        });

        // Rows in job order, algorithm-major within each scheme; a mean row
        // follows the repetitions of every random scheme.
        std::size_t j = 0;
        for (std::size_t s = 0; s < schemes.size(); ++s) {
            std::size_t first = j;
            while (j < jobs.size() && jobs[j].scheme_index == s) ++j;
            const bool random = schemes[s].kind == ThresholdScheme::Kind::random;
            for (std::size_t i = 0; i < a.algorithms.size(); ++i) {
                double size_sum = 0, iter_sum = 0, ub_sum = 0;
                std::int64_t ms_sum = 0;
                std::size_t done = 0;
                for (std::size_t k = first; k < j; ++k) {
                    const auto& run = outcomes[k].runs.empty() ? std::nullopt : outcomes[k].runs[i];
                    if (!run) continue;
                    const RunRecord rec = make_record(network, a.algorithms[i], schemes[s].name(), jobs[k].seed, g,
                                                      outcomes[k].thresholds, *run, a.deterministic);
                    *sink << rec.csv() << '\n';
                    size_sum += static_cast<double>(run->seeds.size());
                    iter_sum += static_cast<double>(run->iterations);
                    ub_sum += upper_bound(g, outcomes[k].thresholds).value();
                    ms_sum += rec.wall_ms;
                    ++done;
                }
                if (!random || done == 0) continue;
                const double d = static_cast<double>(done);
                RunRecord mean;
                mean.network = network;
                mean.algorithm = a.algorithms[i];
                mean.scheme = schemes[s].name() + ":mean";
                mean.seed = jobs[first].seed;
                mean.n = g.num_nodes();
                mean.m = g.num_edges();
                mean.target_size = fixed(size_sum / d, 2);
                mean.normalized_size = fixed(size_sum / d / static_cast<double>(g.num_nodes()));
                mean.iterations = fixed(iter_sum / d, 2);
                mean.upper_bound = fixed(ub_sum / d);
                mean.wall_ms = ms_sum / static_cast<std::int64_t>(done);
                *sink << mean.csv() << '\n';
            }
        }
        (*sink).flush();
    }
    return status;
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string family, output;
    std::size_t n = 0, communities = 4;
    double p = 0.3, avg_degree = 8, mixing = 0.1;
    std::uint64_t seed = 0;
};

Digraph generate(const GenArgs& a) {
    const auto& f = a.family;
    if (f == "tree") return gen_tree(a.n, a.seed);
    if (f == "cycle") return gen_cycle(a.n, false);
    if (f == "dcycle") return gen_cycle(a.n, true);
    if (f == "clique") return gen_clique(a.n);
    if (f == "dag") return gen_dag(a.n, a.p, a.seed);
    if (f == "dirac") return gen_dirac(a.n, a.seed);
    if (f == "polytree") return gen_polytree(a.n, a.seed);
    if (f == "gnp") return gen_gnp(a.n, a.p, false, a.seed);
    if (f == "dgnp") return gen_gnp(a.n, a.p, true, a.seed);
    if (f == "planted") {
        if (a.communities == 0 || a.n % a.communities != 0)
            throw std::invalid_argument("planted: n must be a multiple of --communities");
        return gen_planted(a.communities, a.n / a.communities, a.avg_degree, a.mixing, a.seed);
    }
    throw std::invalid_argument("unknown family '" + f + "'");
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const Digraph g = generate(a);
    Sink sink(a.output, out);
    write_edge_list(g, *sink);
    if (!a.output.empty()) {
        std::ofstream side(a.output + ".json", std::ios::binary);
        if (!side) throw std::runtime_error("cannot write " + a.output + ".json");
        side << sidecar_json(g, a.family, a.seed) << '\n';
    }
    return ok;
}

// ---------------------------------------------------------------------------

using Row = std::map<std::string, std::string>;

std::vector<Row> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream s(line);
        while (std::getline(s, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        return cells;
    };
    std::string line;
    std::size_t number = 0;
    std::vector<std::string> header;
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split(line);
        if (header.empty()) {
            header = std::move(cells);
            continue;
        }
        if (cells.size() != header.size())
            throw ParseError(path + ": expected " + std::to_string(header.size()) + " fields", number);
        Row row;
        for (std::size_t i = 0; i < cells.size(); ++i) row[header[i]] = cells[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

double number_field(const Row& row, const std::string& key) {
    const auto it = row.find(key);
    if (it == row.end()) throw ParseError("missing column '" + key + "'");
    try {
        std::size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("column '" + key + "' is not a number: '" + it->second + "'");
    }
}

struct CorrelateArgs {
    std::string input, stats, output;
};

// Rows need a modularity column, either inline or joined by network from --stats.
// Normalized size is target_size / n, averaged per network when a group holds repetitions.
int cmd_correlate(const CorrelateArgs& a, std::ostream& out, std::ostream& err) {
    const auto rows = read_csv(a.input);
    std::map<std::string, double> modularity_of;
    if (!a.stats.empty())
        for (const auto& r : read_csv(a.stats)) modularity_of[r.at("network")] = number_field(r, "modularity");

    struct Acc {
        double sum = 0;
        std::size_t count = 0;
        double modularity = 0;
    };
    std::map<std::pair<std::string, std::string>, std::map<std::string, Acc>> groups;
    for (const auto& r : rows) {
        if (!r.count("network") || !r.count("algorithm") || !r.count("scheme"))
            throw ParseError("rows need network, algorithm and scheme columns");
        const std::string& network = r.at("network");
        double q;
        if (r.count("modularity")) {
            q = number_field(r, "modularity");
        } else if (auto it = modularity_of.find(network); it != modularity_of.end()) {
            q = it->second;
        } else {
            throw ParseError("no modularity for network '" + network + "'");
        }
        const double size = number_field(r, "target_size"), n = number_field(r, "n");
        if (n <= 0) throw ParseError("network '" + network + "' has n <= 0");
        auto& acc = groups[{r.at("algorithm"), r.at("scheme")}][network];
        acc.sum += size / n;
        ++acc.count;
        acc.modularity = q;
    }

    Sink sink(a.output, out);
    *sink << "algorithm,scheme,networks,pcc\n";
    for (const auto& [key, per_network] : groups) {
        if (per_network.size() < 2) {
            err << "correlate: skipping " << key.first << '/' << key.second << ": fewer than 2 networks\n";
            continue;
        }
        std::vector<double> xs, ys;
        for (const auto& [name, acc] : per_network) {
            xs.push_back(acc.modularity);
            ys.push_back(acc.sum / static_cast<double>(acc.count));
        }
        try {
            const double r = pearson(xs, ys);
            *sink << key.first << ',' << key.second << ',' << xs.size() << ',' << fixed(r) << '\n';
        } catch (const std::invalid_argument& e) {
            err << "correlate: skipping " << key.first << '/' << key.second << ": " << e.what() << '\n';
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string input, thresholds = "random", seeds;
    GraphOptions graph;
    std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto loaded = load_edge_list_file(a.input, a.graph.mode());
    const Digraph& g = loaded.graph;
    const auto t = ThresholdScheme::parse(a.thresholds).assign(g, a.seed);

    std::map<Label, NodeId> index;
    for (NodeId v = 0; v < g.num_nodes(); ++v) index[g.label(v)] = v;
    std::ifstream in(a.seeds);
    if (!in) throw std::runtime_error("cannot open " + a.seeds);
    std::vector<NodeId> seeds;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        std::istringstream s(line);
        std::string token;
        while (s >> token) {
            if (token[0] == '#') break;
            Label l;
            try {
                std::size_t used = 0;
                l = std::stoll(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::logic_error&) {
                throw ParseError("not a node label: '" + token + "'", number);
            }
            const auto it = index.find(l);
            if (it == index.end()) throw ParseError("unknown node " + token, number);
            seeds.push_back(it->second);
        }
    }

    const auto trace = activate(g, t, seeds);
    out << "active " << trace.num_active() << '/' << g.num_nodes() << " after " << trace.converged_at()
        << " rounds\n";
    if (!trace.all_active()) {
        out << "not a target set\n";
        return verification_failed;
    }
    out << "target set\n";
    return ok;
}

// ---------------------------------------------------------------------------

struct StatsArgs {
    std::vector<std::string> inputs;
    std::string output;
    GraphOptions graph;
    std::uint64_t seed = 0;
};

// Directed inputs are symmetrized before modularity and clustering.
int cmd_stats(const StatsArgs& a, std::ostream& out) {
    Sink sink(a.output, out);
    *sink << "network,n,m,communities,modularity,clustering,dag,tree,cycle,clique,ore,dirac\n";
    for (const auto& input : a.inputs) {
        const auto loaded = load_edge_list_file(input, a.graph.mode());
        const Digraph& g = loaded.graph;
        const auto cls = classify(g);
        const Digraph sym = g.bidirected() ? g : Digraph::from_arcs(g.num_nodes(), g.arcs(), true, g.labels());
        const Partition p = detect_communities(sym, a.seed);
        *sink << network_name(input) << ',' << g.num_nodes() << ',' << g.num_edges() << ',' << p.num_communities
              << ',' << fixed(modularity(sym, p)) << ',' << fixed(clustering_coefficient(sym)) << ','
              << cls.is_dag << ',' << cls.is_tree_underlying << ',' << cls.is_cycle << ',' << cls.is_clique << ','
              << cls.is_ore << ',' << cls.is_dirac << '\n';
    }
    return ok;
}

const std::vector<std::string> kAlgorithms{"mts", "tss", "greedy", "tip", "exact", "dag"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Target set selection under the linear threshold model", "seedset"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve one instance and print a CSV record");
    s->add_option("--input", solve.input, "Edge list")->required();
    add_graph_flags(*s, solve.graph);
    s->add_option("--algorithm", solve.algorithm)->check(CLI::IsMember(kAlgorithms));
    s->add_option("--thresholds", solve.thresholds, "random[:seed] | const:t | prop:a | majority | file:path");
    s->add_option("--seed", solve.seed);
    s->add_option("--tie", solve.tie)->check(CLI::IsMember({"minid", "random"}));
    s->add_flag("--verify", solve.verify, "Re-run activation on the result");
    s->add_option("--trace", solve.trace, "Write the per-iteration trace CSV to this file");
    s->add_flag("--emit-seeds", solve.emit_seeds, "Print seed labels after the record");
    s->add_option("--output", solve.output);
    s->add_flag("--deterministic", solve.deterministic, "Report wall_ms as 0");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Sweep algorithms x threshold schemes over networks");
    b->add_option("--input", bench.inputs, "Edge lists")->required();
    add_graph_flags(*b, bench.graph);
    b->add_option("--algorithm,--algorithms", bench.algorithms)->delimiter(',')->check(CLI::IsMember(kAlgorithms));
    b->add_option("--thresholds", bench.schemes, "Schemes (default: the 19 standard ones)")->delimiter(',');
    b->add_option("--seed", bench.seed);
    b->add_option("--repeats", bench.repeats, "Repetitions of random schemes");
    b->add_option("--tie", bench.tie)->check(CLI::IsMember({"minid", "random"}));
    b->add_option("--jobs", bench.jobs);
    b->add_option("--output", bench.output);
    b->add_flag("--deterministic", bench.deterministic, "Report wall_ms as 0");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a synthetic instance");
    g->add_option("family", gen.family, "tree|cycle|dcycle|clique|dag|dirac|polytree|gnp|dgnp|planted")->required();
    g->add_option("n", gen.n)->required();
    g->add_option("--p", gen.p, "Arc/edge probability (dag, gnp, dgnp)");
    g->add_option("--communities", gen.communities);
    g->add_option("--avg-degree", gen.avg_degree);
    g->add_option("--mixing", gen.mixing);
    g->add_option("--seed", gen.seed);
    g->add_option("--output", gen.output, "Edge list path; a .json sidecar is written next to it");

    CorrelateArgs corr;
    auto* c = app.add_subcommand("correlate", "PCC between modularity and normalized target set size");
    c->add_option("--input", corr.input, "CSV with network,algorithm,scheme,target_size,n[,modularity]")->required();
    c->add_option("--stats", corr.stats, "CSV with network,modularity (output of `stats`)");
    c->add_option("--output", corr.output);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check that a seed set activates every node");
    v->add_option("--input", verify.input)->required();
    add_graph_flags(*v, verify.graph);
    v->add_option("--thresholds", verify.thresholds);
    v->add_option("--seed", verify.seed);
    v->add_option("--seeds", verify.seeds, "Seed labels, whitespace separated")->required();

    StatsArgs stats;
    auto* st = app.add_subcommand("stats", "Modularity, clustering and structural classes");
    st->add_option("--input", stats.inputs)->required();
    add_graph_flags(*st, stats.graph);
    st->add_option("--seed", stats.seed, "Label propagation seed");
    st->add_option("--output", stats.output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (s->parsed()) return cmd_solve(solve, out);
        if (b->parsed()) return cmd_bench(bench, out, err);
        if (g->parsed()) return cmd_gen(gen, out);
        if (c->parsed()) return cmd_correlate(corr, out, err);
        if (v->parsed()) return cmd_verify(verify, out);
        if (st->parsed()) return cmd_stats(stats, out);
    } catch (const VerificationFailure& e) {
        err << "seedset: verification failed: " << e.what() << '\n';
        return verification_failed;
    } catch (const InvariantViolation& e) {
        err << "seedset: invariant violated: " << e.what() << '\n';
        return invariant_violated;
    } catch (const std::exception& e) {
        err << "seedset: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace seedset::cli
