#pragma once

#include <cstdint>
#include <vector>

namespace cyclemax {

/// Adjacency bitmasks of a canonically labeled graph.
using Masks = std::vector<std::uint64_t>;

/// Target class for isomorph-free generation on exactly `order` vertices.
struct GenerationOptions {
    int order = 0;
    int edges = 0;
    int min_degree = 0;
    int max_degree = -1;  // negative: unbounded
    bool connected = false;
    int workers = 1;
};

/// Graphs are grown one edge per level. Level j keeps one canonical
/// representative per isomorphism class of j-edge graphs that can still be
/// completed to the target class within the remaining edges.
struct GenerationResult {
    /// levels[j], sorted; the last level is filtered to the target class.
    std::vector<std::vector<Masks>> levels;
    std::uint64_t expansions = 0;  // children examined before deduplication
};

/// Throws CapacityError when order exceeds the canonical-form limit.
GenerationResult generate_levels(const GenerationOptions& options);

/// The last level of generate_levels.
std::vector<Masks> generate_graphs(const GenerationOptions& options);

/// Connected components of a mask graph.
int mask_component_count(const Masks& adjacency);

} // namespace cyclemax
