#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace seedset {

/// Dense node index in [0, n).
using NodeId = std::uint32_t;
/// Label as it appears in input files.
using Label = std::int64_t;

struct Arc {
    NodeId from;
    NodeId to;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Counters filled while building a graph from raw arcs.
struct LoadReport {
    std::size_t lines = 0;
    std::size_t duplicate_arcs = 0;
    std::size_t self_loops = 0;
};

/// Immutable directed graph in compressed sparse row form, with both the
/// outgoing and the incoming view. Undirected inputs are stored as
/// bidirected digraphs (each edge becomes two opposite arcs).
class Digraph {
public:
    Digraph() = default;

    /// Builds from arcs over nodes [0, n). Self-loops and parallel arcs are
    /// dropped and counted in `report` when given. Labels default to the
    /// identity. When `bidirected` is set, the reverse of every arc is added.
    static Digraph from_arcs(std::size_t n, std::vector<Arc> arcs, bool bidirected,
                             std::vector<Label> labels = {}, LoadReport* report = nullptr);

    std::size_t num_nodes() const noexcept { return labels_.size(); }
    std::size_t num_arcs() const noexcept { return out_targets_.size(); }
    /// Undirected edge count for bidirected graphs, arc count otherwise.
    std::size_t num_edges() const noexcept { return bidirected_ ? num_arcs() / 2 : num_arcs(); }
    bool bidirected() const noexcept { return bidirected_; }

    std::span<const NodeId> out(NodeId v) const noexcept {
        return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
    }
    std::span<const NodeId> in(NodeId v) const noexcept {
        return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
    }
    std::size_t out_degree(NodeId v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(NodeId v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }

    /// O(log d) lookup; adjacency lists are sorted.
    bool has_arc(NodeId from, NodeId to) const noexcept;

    Label label(NodeId v) const noexcept { return labels_[v]; }
    const std::vector<Label>& labels() const noexcept { return labels_; }

    /// All arcs in (from, to) lexicographic order.
    std::vector<Arc> arcs() const;

    /// Subgraph induced by `nodes` (kept in the given order). Labels carry over.
    Digraph induced(std::span<const NodeId> nodes) const;

private:
    std::vector<std::size_t> out_offsets_{0};
    std::vector<NodeId> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<NodeId> in_sources_;
    std::vector<Label> labels_;
    bool bidirected_ = false;
};

enum class EdgeMode { directed, undirected };

struct LoadedGraph {
    Digraph graph;
    LoadReport report;
};

/// Reads a whitespace-separated edge list. Lines starting with '#' (or '%')
/// and blank lines are skipped. Labels are remapped densely in ascending
/// label order. Throws ParseError on malformed lines or an empty graph.
LoadedGraph load_edge_list(std::istream& in, EdgeMode mode);
LoadedGraph load_edge_list_file(const std::string& path, EdgeMode mode);

/// One "from to" line per arc, using the original labels. A bidirected
/// graph is written with both arcs of every edge.
void write_edge_list(const Digraph& g, std::ostream& out);

/// JSON sidecar describing directedness and the label map.
std::string sidecar_json(const Digraph& g, const std::string& family = {}, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Structural classes

struct GraphClassReport {
    bool is_dag = false;
    bool is_tree_underlying = false;
    bool is_cycle = false;
    bool is_clique = false;
    bool is_ore = false;
    bool is_dirac = false;
};

GraphClassReport classify(const Digraph& g);

bool is_dag(const Digraph& g);
/// True when the underlying simple undirected graph is a tree (n-1 edges, connected).
bool is_underlying_tree(const Digraph& g);
/// Connected components of the underlying undirected graph, as a component id per node.
std::vector<std::uint32_t> weak_components(const Digraph& g, std::size_t* count = nullptr);

// ---------------------------------------------------------------------------
// Generators. All are deterministic functions of their arguments.

Digraph gen_tree(std::size_t n, std::uint64_t seed);
Digraph gen_cycle(std::size_t n, bool directed);
Digraph gen_clique(std::size_t n);
Digraph gen_dag(std::size_t n, double arc_prob, std::uint64_t seed);
Digraph gen_dirac(std::size_t n, std::uint64_t seed);
Digraph gen_polytree(std::size_t n, std::uint64_t seed);
/// Erdos-Renyi G(n, p), either directed arcs or undirected edges.
Digraph gen_gnp(std::size_t n, double p, bool directed, std::uint64_t seed);
/// Undirected planted-partition graph: `communities` blocks of `block_size`
/// nodes, every node has expected degree `avg_degree`, of which a fraction
/// `mixing` goes to other blocks.
Digraph gen_planted(std::size_t communities, std::size_t block_size, double avg_degree, double mixing,
                    std::uint64_t seed);

}  // namespace seedset
