#pragma once

// Brute-force oracles and seeded generators shared by the test binaries.
// Nothing here calls the library's counting, canonical or selection code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclemax/graph.hpp"

namespace oracle {

using cyclemax::Edge;
using cyclemax::Multigraph;
using cyclemax::SimpleGraph;
using cyclemax::Vertex;

/// Edge list with one entry per parallel copy.
inline std::vector<Edge> expanded_edges(const Multigraph& g) {
    std::vector<Edge> out;
    for (const auto& b : g.bundles())
        for (std::uint32_t i = 0; i < b.multiplicity; ++i)
            out.push_back(b.pair);
    return out;
}

namespace detail {

inline int find(std::vector<int>& parent, int x) {
    while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
    return x;
}

/// The selected edges touch only degree-2 vertices and form one component.
inline bool is_single_cycle(int n, const std::vector<Edge>& edges, std::uint64_t subset) {
    std::vector<int> degree(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    int touched = 0, unions = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!(subset >> i & 1))
            continue;
        const auto [u, v] = edges[i];
        if (degree[u]++ == 0)
            ++touched;
        if (degree[v]++ == 0)
            ++touched;
        const int a = find(parent, u), b = find(parent, v);
        if (a != b) {
            parent[a] = b;
            ++unions;
        }
    }
    for (int d : degree)
        if (d != 0 && d != 2)
            return false;
    return touched > 0 && unions == touched - 1;
}

} // namespace detail

/// Cycles per the multigraph definition: edge sets in which every touched
/// vertex has degree 2 and which are connected. Parallel copies are
/// distinct edges, so two copies of a pair form a 2-cycle.
inline std::uint64_t cycles_by_edge_subsets(int n, const std::vector<Edge>& edges) {
    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t{1} << edges.size();
    for (std::uint64_t subset = 1; subset < limit; ++subset)
        if (detail::is_single_cycle(n, edges, subset))
            ++count;
    return count;
}

inline std::uint64_t cycles(const SimpleGraph& g) {
    return cycles_by_edge_subsets(g.order(), g.edges());
}

inline std::uint64_t cycles(const Multigraph& g) {
    return cycles_by_edge_subsets(g.order(), expanded_edges(g));
}

/// Cycles as vertex sequences: for every vertex subset of size >= 3, the
/// orderings that start at its smallest vertex and close up, halved for
/// the two directions.
inline std::uint64_t cycles_by_vertex_sequences(const SimpleGraph& g) {
    const int n = g.order();
    std::uint64_t directed = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (subset >> v & 1)
                vs.push_back(v);
        if (vs.size() < 3)
            continue;
        do {
            bool closed = true;
            for (std::size_t i = 0; i < vs.size() && closed; ++i)
                closed = g.adjacent(vs[i], vs[(i + 1) % vs.size()]);
            directed += closed;
        } while (std::next_permutation(vs.begin() + 1, vs.end()));
    }
    return directed / 2;
}

/// s-t paths as edge sets: s and t have degree 1, every other touched
/// vertex degree 2, and the selection is connected.
inline std::uint64_t paths_by_edge_subsets(int n, const std::vector<Edge>& edges, Vertex s, Vertex t) {
    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t{1} << edges.size();
    for (std::uint64_t subset = 1; subset < limit; ++subset) {
        std::vector<int> degree(n, 0);
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        int touched = 0, unions = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!(subset >> i & 1))
                continue;
            const auto [u, v] = edges[i];
            if (degree[u]++ == 0)
                ++touched;
            if (degree[v]++ == 0)
                ++touched;
            const int a = detail::find(parent, u), b = detail::find(parent, v);
            if (a != b) {
                parent[a] = b;
                ++unions;
            }
        }
        bool ok = degree[s] == 1 && degree[t] == 1 && unions == touched - 1;
        for (int v = 0; v < n && ok; ++v)
            if (v != s && v != t && degree[v] != 0 && degree[v] != 2)
                ok = false;
        count += ok;
    }
    return count;
}

/// graph6 written out from the format description: N(n) then the upper
/// triangle column by column, six bits per byte, plus 63.
inline std::string graph6(int n, const std::vector<Edge>& edges) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((static_cast<long long>(n) >> shift) & 63) + 63));
    }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : edges)
        adj[u][v] = adj[v][u] = true;
    std::vector<bool> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(adj[i][j]);
    while (bits.size() % 6 != 0)
        bits.push_back(false);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b)
            value = value * 2 + (bits[k + b] ? 1 : 0);
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

/// Isomorphism by trying every permutation (n <= 8 or so).
inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    const int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (const auto& e : a.edges())
            if (!b.adjacent(perm[e.u], perm[e.v])) {
                same = false;
                break;
            }
        if (same)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Largest product of at most parts_max positive parts summing to <= m, by
/// enumerating non-increasing part sequences.
inline mpz_class best_partition_product(int m, int parts_max) {
    mpz_class best = 1;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int largest) -> void {
        mpz_class product = 1;
        for (int p : parts)
            product *= p;
        best = std::max(best, product);
        if (static_cast<int>(parts.size()) == parts_max)
            return;
        for (int x = std::min(remaining, largest); x >= 1; --x) {
            parts.push_back(x);
            self(self, remaining - x, x);
            parts.pop_back();
        }
    };
    rec(rec, m, m);
    return best;
}

/// Symmetric weight table with a zero diagonal.
using Weights = std::vector<std::vector<mpz_class>>;

inline mpz_class total(const Weights& w) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            s += w[i][j];
    return s;
}

/// Best weight surviving removal of six indices, over all 6-subsets.
inline mpz_class best_retained(const Weights& w) {
    const int k = static_cast<int>(w.size());
    mpz_class best = -1;
    std::vector<bool> chosen(k, false);
    std::fill(chosen.end() - 6, chosen.end(), true);
    do {
        mpz_class kept = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!chosen[i] && !chosen[j])
                    kept += w[i][j];
        best = std::max(best, kept);
    } while (std::next_permutation(chosen.begin(), chosen.end()));
    return best;
}

/// Best cross weight over every assignment of indices to four labelled
/// parts of sizes floor((k+l-1)/4).
inline mpz_class best_cross(const Weights& w) {
    const int k = static_cast<int>(w.size());
    std::array<int, 4> sizes{};
    for (int l = 1; l <= 4; ++l)
        sizes[l - 1] = (k + l - 1) / 4;
    mpz_class best = -1;
    std::vector<int> part(k, 0);
    std::uint64_t combos = 1;
    for (int i = 0; i < k; ++i)
        combos *= 4;
    for (std::uint64_t code = 0; code < combos; ++code) {
        std::array<int, 4> filled{};
        std::uint64_t c = code;
        for (int i = 0; i < k; ++i) {
            part[i] = static_cast<int>(c % 4);
            c /= 4;
            ++filled[part[i]];
        }
        if (filled != sizes)
            continue;
        mpz_class cross = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (part[i] != part[j])
                    cross += w[i][j];
        best = std::max(best, cross);
    }
    return best;
}

} // namespace oracle

namespace gen {

using cyclemax::Edge;
using cyclemax::Multigraph;
using cyclemax::SimpleGraph;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// G(n, p) with p in percent.
inline SimpleGraph random_graph(Rng& rng, int n, int percent) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform(rng, 0, 99) < percent)
                edges.push_back({u, v});
    return SimpleGraph(n, edges);
}

/// Labelled graph on n vertices from the bits of `code` over the pairs.
inline SimpleGraph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (code >> bit & 1)
                edges.push_back({u, v});
    return SimpleGraph(n, edges);
}

/// Multigraph with 2..max_n vertices and 1..max_m edges in total.
inline Multigraph random_multigraph(Rng& rng, int max_n, int max_m) {
    const int n = uniform(rng, 2, max_n);
    const int m = uniform(rng, 1, max_m);
    std::vector<Multigraph::Bundle> bundles;
    for (int i = 0; i < m; ++i) {
        int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 2);
        if (v >= u)
            ++v;
        bundles.push_back({{std::min(u, v), std::max(u, v)}, 1});
    }
    return Multigraph(n, bundles);
}

inline std::vector<int> permutation(Rng& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Graph with a hub of degree exactly `hub_degree` (the maximum degree)
/// plus `extra` random non-hub edges that keep every degree <= hub_degree.
inline SimpleGraph hub_graph(Rng& rng, int n, int hub_degree, int extra) {
    std::vector<Edge> edges;
    std::vector<int> degree(n, 0);
    auto others = permutation(rng, n - 1);
    for (int i = 0; i < hub_degree; ++i) {
        edges.push_back({0, others[i] + 1});
        ++degree[0];
        ++degree[others[i] + 1];
    }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : edges)
        adj[e.u][e.v] = adj[e.v][e.u] = true;
    for (int tries = 0; extra > 0 && tries < 1000; ++tries) {
        const int u = uniform(rng, 1, n - 1), v = uniform(rng, 1, n - 1);
        if (u == v || adj[u][v] || degree[u] == hub_degree || degree[v] == hub_degree)
            continue;
        adj[u][v] = adj[v][u] = true;
        edges.push_back({std::min(u, v), std::max(u, v)});
        ++degree[u];
        ++degree[v];
        --extra;
    }
    return SimpleGraph(n, edges);
}

/// Symmetric random weights in [0, hi] with a zero diagonal.
inline oracle::Weights random_weights(Rng& rng, int k, int hi) {
    oracle::Weights w(k, std::vector<mpz_class>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            w[i][j] = w[j][i] = uniform(rng, 0, hi);
    return w;
}

} // namespace gen
