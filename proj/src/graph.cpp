#include "seedset/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "seedset/error.hpp"

namespace seedset {

namespace {

void build_csr(std::size_t n, const std::vector<Arc>& arcs, bool by_source, std::vector<std::size_t>& offsets,
               std::vector<NodeId>& targets) {
    offsets.assign(n + 1, 0);
    for (const Arc& a : arcs) ++offsets[(by_source ? a.from : a.to) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    targets.resize(arcs.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    // arcs are sorted by (from, to), so both views come out sorted.
    for (const Arc& a : arcs) {
        if (by_source)
            targets[cursor[a.from]++] = a.to;
        else
            targets[cursor[a.to]++] = a.from;
    }
}

}  // namespace

Digraph Digraph::from_arcs(std::size_t n, std::vector<Arc> arcs, bool bidirected, std::vector<Label> labels,
                           LoadReport* report) {
    if (n > std::numeric_limits<NodeId>::max()) throw std::invalid_argument("too many nodes");
    if (labels.empty()) {
        labels.resize(n);
        std::iota(labels.begin(), labels.end(), Label{0});
    }
    if (labels.size() != n) throw std::invalid_argument("label count does not match node count");

    std::size_t self_loops = 0;
    std::erase_if(arcs, [&](const Arc& a) {
        if (a.from >= n || a.to >= n) throw std::out_of_range("arc endpoint out of range");
        if (a.from == a.to) {
            ++self_loops;
            return true;
        }
        return false;
    });
    const std::size_t raw = arcs.size();
    if (bidirected) {
        arcs.reserve(2 * raw);
        for (std::size_t i = 0; i < raw; ++i) arcs.push_back({arcs[i].to, arcs[i].from});
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    if (report) {
        report->self_loops += self_loops;
        // In undirected mode an edge listed as both "u v" and "v u" counts as one duplicate.
        const std::size_t distinct = bidirected ? arcs.size() / 2 : arcs.size();
        report->duplicate_arcs += raw - distinct;
    }

    Digraph g;
    g.labels_ = std::move(labels);
    build_csr(n, arcs, true, g.out_offsets_, g.out_targets_);
    build_csr(n, arcs, false, g.in_offsets_, g.in_sources_);

    // Symmetric iff every node's in-list equals its out-list.
    g.bidirected_ = g.out_offsets_ == g.in_offsets_ && g.out_targets_ == g.in_sources_;
    return g;
}

bool Digraph::has_arc(NodeId from, NodeId to) const noexcept {
    auto nbrs = out(from);
    return std::binary_search(nbrs.begin(), nbrs.end(), to);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(num_arcs());
    for (NodeId u = 0; u < num_nodes(); ++u)
        for (NodeId v : out(u)) result.push_back({u, v});
    return result;
}

Digraph Digraph::induced(std::span<const NodeId> nodes) const {
    constexpr NodeId absent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> local(num_nodes(), absent);
    std::vector<Label> sub_labels;
    sub_labels.reserve(nodes.size());
    for (NodeId i = 0; i < nodes.size(); ++i) {
        local[nodes[i]] = i;
        sub_labels.push_back(labels_[nodes[i]]);
    }
    std::vector<Arc> sub_arcs;
    for (NodeId i = 0; i < nodes.size(); ++i)
        for (NodeId w : out(nodes[i]))
            if (local[w] != absent) sub_arcs.push_back({i, local[w]});
    return from_arcs(nodes.size(), std::move(sub_arcs), false, std::move(sub_labels));
}

// ---------------------------------------------------------------------------

namespace {

bool parse_label(std::string_view& rest, Label& out) {
    std::size_t i = 0;
    while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t' || rest[i] == '\r')) ++i;
    rest.remove_prefix(i);
    if (rest.empty()) return false;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out);
    if (ec != std::errc{}) return false;
    std::size_t used = static_cast<std::size_t>(ptr - rest.data());
    if (used < rest.size() && rest[used] != ' ' && rest[used] != '\t' && rest[used] != '\r') return false;
    rest.remove_prefix(used);
    return true;
}

bool only_space(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, EdgeMode mode) {
    std::vector<std::pair<Label, Label>> raw;
    LoadReport report;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view rest(line);
        if (only_space(rest)) continue;
        auto first = rest.find_first_not_of(" \t");
        if (rest[first] == '#' || rest[first] == '%') continue;
        Label a = 0, b = 0;
        if (!parse_label(rest, a) || !parse_label(rest, b) || !only_space(rest))
            throw ParseError("expected two integer node labels", lineno);
        raw.emplace_back(a, b);
    }
    report.lines = lineno;
    if (raw.empty()) throw ParseError("edge list contains no edges");

    // Dense ids follow ascending label order.
    std::vector<Label> labels;
    labels.reserve(2 * raw.size());
    for (auto [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto id_of = [&](Label l) {
        return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    std::vector<Arc> arcs;
    arcs.reserve(raw.size());
    for (auto [a, b] : raw) arcs.push_back({id_of(a), id_of(b)});

    LoadedGraph result;
    const std::size_t n = labels.size();
    result.graph = Digraph::from_arcs(n, std::move(arcs), mode == EdgeMode::undirected, std::move(labels), &report);
    result.report = report;
    return result;
}

LoadedGraph load_edge_list_file(const std::string& path, EdgeMode mode) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in, mode);
}

void write_edge_list(const Digraph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        for (NodeId v : g.out(u)) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::string sidecar_json(const Digraph& g, const std::string& family, std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["directed"] = !g.bidirected();
    j["nodes"] = g.num_nodes();
    j["arcs"] = g.num_arcs();
    if (!family.empty()) {
        j["family"] = family;
        j["seed"] = seed;
    }
    j["labels"] = g.labels();
    return j.dump(2) + "\n";
}

}  // namespace seedset
