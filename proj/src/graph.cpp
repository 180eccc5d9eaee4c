#include "cyclemax/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "cyclemax/errors.hpp"

namespace cyclemax {

namespace {

void check_pair(int n, Vertex u, Vertex v) {
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} outside vertex range 0.." + std::to_string(n - 1));
}

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

} // namespace

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    build_adjacency();
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        check_pair(n, e.u, e.v);
        edges_.push_back(ordered(e.u, e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_adjacency();
}

SimpleGraph SimpleGraph::from_masks(std::span<const std::uint64_t> masks) {
    const int n = static_cast<int>(masks.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (std::uint64_t rest = masks[u] >> u >> 1; rest; rest &= rest - 1)
            edges.push_back({u, u + 1 + std::countr_zero(rest)});
    return SimpleGraph(n, edges);
}

void SimpleGraph::build_adjacency() {
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
    masks_.clear();
    if (n_ <= kMaskLimit) {
        masks_.assign(n_, 0);
        for (const Edge& e : edges_) {
            masks_[e.u] |= std::uint64_t{1} << e.v;
            masks_[e.v] |= std::uint64_t{1} << e.u;
        }
    }
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        return false;
    if (has_masks())
        return (masks_[u] >> v) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int SimpleGraph::component_count() const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n_;
    for (const Edge& e : edges_) {
        Vertex a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

SimpleGraph SimpleGraph::without_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range");
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
    for (const Edge& e : edges_)
        if (e.u != v && e.v != v)
            kept.push_back({shift(e.u), shift(e.v)});
    return SimpleGraph(n_ - 1, kept);
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (const Edge& e : edges_)
        mapped.push_back(ordered(perm[e.u], perm[e.v]));
    return SimpleGraph(n_, mapped);
}

SimpleGraph SimpleGraph::extended(int extra, std::span<const Edge> new_edges) const {
    std::vector<Edge> all(edges_);
    all.insert(all.end(), new_edges.begin(), new_edges.end());
    return SimpleGraph(n_ + extra, all);
}

Multigraph::Multigraph(int n) : n_(n), mult_(static_cast<std::size_t>(n) * n, 0), underlying_(n) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
}

Multigraph::Multigraph(int n, std::span<const Bundle> bundles) : Multigraph(n) {
    for (const Bundle& b : bundles) {
        check_pair(n, b.pair.u, b.pair.v);
        if (b.multiplicity == 0)
            throw std::invalid_argument("multiplicity must be at least 1");
        mult_[static_cast<std::size_t>(b.pair.u) * n + b.pair.v] += b.multiplicity;
        mult_[static_cast<std::size_t>(b.pair.v) * n + b.pair.u] += b.multiplicity;
        m_ += b.multiplicity;
    }
    std::vector<Edge> simple;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (auto k = mult_[static_cast<std::size_t>(u) * n + v]) {
                bundles_.push_back({{u, v}, k});
                simple.push_back({u, v});
            }
    underlying_ = SimpleGraph(n, simple);
}

Multigraph Multigraph::from_simple(const SimpleGraph& g) {
    std::vector<Bundle> bundles;
    for (const Edge& e : g.edges())
        bundles.push_back({e, 1});
    return Multigraph(g.order(), bundles);
}

std::uint32_t Multigraph::multiplicity(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return 0;
    return mult_[static_cast<std::size_t>(u) * n_ + v];
}

std::uint64_t Multigraph::degree(Vertex v) const {
    std::uint64_t d = 0;
    for (int w = 0; w < n_; ++w)
        d += multiplicity(v, w);
    return d;
}

namespace {

template <typename Degree>
DegreeStats summarize(int n, std::uint64_t m, Degree degree) {
    if (n == 0)
        throw DomainError("degree statistics are undefined for a graph without vertices");
    DegreeStats stats;
    stats.max_degree = 0;
    stats.min_degree = degree(0);
    for (int v = 0; v < n; ++v) {
        std::uint64_t d = degree(v);
        stats.max_degree = std::max(stats.max_degree, d);
        stats.min_degree = std::min(stats.min_degree, d);
    }
    stats.average = mpq_class(mpz_class(2) * mpz_class(std::to_string(m)), mpz_class(n));
    stats.average.canonicalize();
    return stats;
}

} // namespace

DegreeStats degree_stats(const SimpleGraph& g) {
    return summarize(g.order(), static_cast<std::uint64_t>(g.size()),
                     [&](Vertex v) { return static_cast<std::uint64_t>(g.degree(v)); });
}

DegreeStats degree_stats(const Multigraph& g) {
    return summarize(g.order(), g.size(), [&](Vertex v) { return g.degree(v); });
}

} // namespace cyclemax
