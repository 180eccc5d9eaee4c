#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cyclemax {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Graphs up to this order also carry one adjacency bitmask per vertex.
inline constexpr int kMaskLimit = 64;

/// Loop-free undirected graph on vertices 0..n-1. Immutable once built.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    /// Duplicate pairs collapse; loops and out-of-range endpoints throw
    /// std::invalid_argument.
    SimpleGraph(int n, std::span<const Edge> edges);
    SimpleGraph(int n, std::initializer_list<Edge> edges)
        : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    static SimpleGraph from_masks(std::span<const std::uint64_t> masks);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    bool has_masks() const noexcept { return n_ <= kMaskLimit; }
    /// One bitmask per vertex; only meaningful when has_masks().
    std::span<const std::uint64_t> masks() const noexcept { return masks_; }

    int component_count() const;
    bool is_connected() const { return n_ <= 1 || component_count() == 1; }

    /// Removes v and shifts every higher label down by one.
    SimpleGraph without_vertex(Vertex v) const;
    /// Relabels vertex v as perm[v].
    SimpleGraph relabeled(std::span<const Vertex> perm) const;
    /// Appends `extra` isolated vertices and the given edges.
    SimpleGraph extended(int extra, std::span<const Edge> new_edges) const;

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void build_adjacency();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> masks_;
};

/// Loop-free undirected multigraph: each unordered pair carries a
/// multiplicity >= 1. m() is the sum of multiplicities.
class Multigraph {
public:
    struct Bundle {
        Edge pair;
        std::uint32_t multiplicity = 0;

        bool operator==(const Bundle&) const = default;
    };

    Multigraph() = default;
    explicit Multigraph(int n);
    /// Repeated pairs accumulate. Loops, zero multiplicities and out-of-range
    /// endpoints throw std::invalid_argument.
    Multigraph(int n, std::span<const Bundle> bundles);
    Multigraph(int n, std::initializer_list<Bundle> bundles)
        : Multigraph(n, std::span<const Bundle>(bundles.begin(), bundles.size())) {}
    static Multigraph from_simple(const SimpleGraph& g);

    int order() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return m_; }
    const std::vector<Bundle>& bundles() const noexcept { return bundles_; }
    std::uint32_t multiplicity(Vertex u, Vertex v) const;
    std::uint64_t degree(Vertex v) const;
    const SimpleGraph& underlying() const noexcept { return underlying_; }

    bool operator==(const Multigraph& other) const {
        return n_ == other.n_ && bundles_ == other.bundles_;
    }

private:
    int n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<Bundle> bundles_;
    std::vector<std::uint32_t> mult_;  // n*n row-major
    SimpleGraph underlying_;
};

struct DegreeStats {
    std::uint64_t max_degree = 0;
    std::uint64_t min_degree = 0;
    mpq_class average;  // 2m/n
};

/// Throws DomainError when the graph has no vertices.
DegreeStats degree_stats(const SimpleGraph& g);
DegreeStats degree_stats(const Multigraph& g);

/// graph6 encoding (no sparse6, no header on output). Decoding accepts an
/// optional ">>graph6<<" header and a trailing newline.
SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);

/// MULTI text format: a "MULTI <n>" line, then "<u> <v> <mult>" lines with
/// u < v. Blank lines and lines starting with '#' are ignored.
Multigraph parse_multigraph(std::string_view text);
std::string to_multigraph_text(const Multigraph& g);

} // namespace cyclemax
