#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclemax/graph.hpp"

namespace cyclemax {

/// Default largest order accepted by canonical_form.
inline constexpr int kCanonicalLimit = 16;

/// Canonical labeling: result[i] is the original vertex placed at position i.
///
/// Each connected component is labeled by minimizing its graph6 bit string
/// over the permutations compatible with an equitable (color-refined)
/// ordered partition, branching on the first non-singleton cell. Twin
/// vertices (N(a)-b == N(b)-a) are interchangeable and are branched on once.
/// Components are then concatenated in order of (order, minimized string),
/// so two graphs get the same relabeled graph iff they are isomorphic.
std::vector<Vertex> canonical_labeling(std::span<const std::uint64_t> adjacency);

/// Throws CapacityError when g.order() > limit.
std::vector<Vertex> canonical_labeling(const SimpleGraph& g, int limit = kCanonicalLimit);
SimpleGraph canonical_graph(const SimpleGraph& g, int limit = kCanonicalLimit);

/// graph6 string of the canonically relabeled graph. Equal iff isomorphic.
std::string canonical_form(const SimpleGraph& g, int limit = kCanonicalLimit);
std::string canonical_form(std::span<const std::uint64_t> adjacency);

/// graph6 of the graph whose position i holds original vertex labeling[i].
std::string graph6_from_masks(std::span<const std::uint64_t> adjacency,
                              std::span<const Vertex> labeling);

} // namespace cyclemax
