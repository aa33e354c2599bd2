#include "seedset/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace seedset {

namespace {

using boost::multiprecision::cpp_rational;

cpp_rational fractional_sum(const std::map<std::uint64_t, std::uint64_t>& fractions) {
    cpp_rational sum = 0;
    for (auto [den, num] : fractions) sum += cpp_rational(num, den);
    return sum;
}

long double approx_fractional_sum(const std::map<std::uint64_t, std::uint64_t>& fractions) {
    long double sum = 0;
    for (auto [den, num] : fractions) sum += static_cast<long double>(num) / static_cast<long double>(den);
    return sum;
}

void require_bidirected(const Digraph& g, const char* what) {
    if (!g.bidirected()) throw std::invalid_argument(std::string(what) + " requires an undirected (bidirected) graph");
}

}  // namespace

void UpperBound::add(std::uint64_t num, std::uint64_t den) {
    if (num >= den) {
        ++whole_;
        return;
    }
    if (num == 0) return;
    auto& acc = fractions_[den];
    acc += num;
    whole_ += acc / den;
    acc %= den;
}

double UpperBound::value() const {
    return static_cast<double>(static_cast<long double>(whole_) + approx_fractional_sum(fractions_));
}

bool UpperBound::admits(std::size_t size) const {
    if (size <= whole_) return true;
    const std::uint64_t rest = size - whole_;
    if (rest > fractions_.size()) return false;  // each fraction is < 1
    // Decide in floating point when clearly separated, exactly otherwise.
    const long double approx = approx_fractional_sum(fractions_);
    const long double slack = 1e-12L * static_cast<long double>(fractions_.size() + 1);
    if (approx > static_cast<long double>(rest) + slack) return true;
    if (approx < static_cast<long double>(rest) - slack) return false;
    return fractional_sum(fractions_) >= cpp_rational(rest);
}

std::string UpperBound::exact() const {
    cpp_rational total = fractional_sum(fractions_) + cpp_rational(whole_);
    return numerator(total).str() + "/" + denominator(total).str();
}

UpperBound upper_bound(const Digraph& g, const ThresholdAssignment& t) {
    if (t.size() != g.num_nodes()) throw std::invalid_argument("threshold count does not match node count");
    UpperBound bound;
    for (NodeId v = 0; v < g.num_nodes(); ++v) bound.add(t[v], g.in_degree(v) + 1);
    return bound;
}

// ---------------------------------------------------------------------------

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
    Partition p;
    p.community.resize(labels.size());
    std::map<std::uint32_t, std::uint32_t> dense;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        auto [it, fresh] = dense.try_emplace(labels[v], p.num_communities);
        if (fresh) ++p.num_communities;
        p.community[v] = it->second;
    }
    return p;
}

double modularity(const Digraph& g, const Partition& p) {
    require_bidirected(g, "modularity");
    if (p.community.size() != g.num_nodes()) throw std::invalid_argument("partition size does not match node count");
    const double m = static_cast<double>(g.num_edges());
    if (m == 0) return 0.0;
    std::vector<double> inside(p.num_communities, 0.0), degree(p.num_communities, 0.0);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        const auto c = p.community[v];
        degree[c] += static_cast<double>(g.out_degree(v));
        for (NodeId w : g.out(v))
            if (p.community[w] == c) inside[c] += 0.5;  // each internal edge is seen from both ends
    }
    double q = 0.0;
    for (std::uint32_t c = 0; c < p.num_communities; ++c) {
        const double share = degree[c] / (2.0 * m);
        q += inside[c] / m - share * share;
    }
    return q;
}

Partition detect_communities(const Digraph& g, std::uint64_t seed, std::size_t max_sweeps) {
    require_bidirected(g, "community detection");
    const std::size_t n = g.num_nodes();
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> label(n);
    std::iota(label.begin(), label.end(), 0u);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});

    std::vector<std::uint32_t> count(n, 0);
    std::vector<std::uint32_t> touched, best;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        std::shuffle(order.begin(), order.end(), rng);
        bool changed = false;
        for (NodeId v : order) {
            if (g.out_degree(v) == 0) continue;
            touched.clear();
            for (NodeId w : g.out(v)) {
                if (count[label[w]]++ == 0) touched.push_back(label[w]);
            }
            std::uint32_t top = 0;
            for (auto l : touched) top = std::max(top, count[l]);
            best.clear();
            for (auto l : touched)
                if (count[l] == top) best.push_back(l);
            for (auto l : touched) count[l] = 0;

            if (std::find(best.begin(), best.end(), label[v]) != best.end()) continue;
            std::sort(best.begin(), best.end());
            std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
            label[v] = best[pick(rng)];
            changed = true;
        }
        if (!changed) break;
    }
    return Partition::from_labels(label);
}

double clustering_coefficient(const Digraph& g) {
    require_bidirected(g, "clustering coefficient");
    const std::size_t n = g.num_nodes();
    if (n == 0) return 0.0;
    std::vector<bool> mark(n, false);
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const auto nbrs = g.out(v);
        const std::size_t d = nbrs.size();
        if (d < 2) continue;
        for (NodeId u : nbrs) mark[u] = true;
        std::size_t links = 0;  // each neighbor-neighbor edge counted twice
        for (NodeId u : nbrs)
            for (NodeId w : g.out(u))
                if (mark[w]) ++links;
        for (NodeId u : nbrs) mark[u] = false;
        total += static_cast<double>(links) / static_cast<double>(d * (d - 1));
    }
    return total / static_cast<double>(n);
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("pearson: sequences differ in length");
    if (xs.size() < 2) throw std::invalid_argument("pearson: need at least two points");
    const double nx = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / nx;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / nx;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) throw std::invalid_argument("pearson: zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace seedset
