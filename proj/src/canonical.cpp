#include "cyclemax/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cyclemax/errors.hpp"

namespace cyclemax {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

/// Column j of the graph6 bit stream for a labeling, packed so that plain
/// integer comparison of columns matches the stream order (row 0 first).
Mask column(std::span<const Mask> adj, std::span<const Vertex> lab, int j) {
    Mask col = 0;
    const Mask row = adj[lab[j]];
    for (int i = 0; i < j; ++i)
        if (row & bit(lab[i]))
            col |= bit(63 - i);
    return col;
}

class ComponentLabeler {
public:
    explicit ComponentLabeler(std::span<const Mask> adj) : adj_(adj), n_(static_cast<int>(adj.size())) {
        twins_.assign(n_, 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if ((adj_[a] & ~bit(b)) == (adj_[b] & ~bit(a)))
                    twins_[a] |= bit(b);
    }

    void run() {
        std::vector<Mask> cells{n_ == 64 ? ~Mask{0} : bit(n_) - 1};
        explore(std::move(cells));
    }

    const std::vector<Vertex>& labeling() const { return best_lab_; }
    const std::vector<Mask>& key() const { return best_key_; }

private:
    void refine(std::vector<Mask>& cells) const {
        std::vector<std::pair<std::vector<std::uint8_t>, int>> sigs;
        while (true) {
            std::vector<Mask> next;
            next.reserve(n_);
            for (Mask cell : cells) {
                if (std::popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                sigs.clear();
                for (Mask rest = cell; rest; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    std::vector<std::uint8_t> sig(cells.size());
                    for (std::size_t k = 0; k < cells.size(); ++k)
                        sig[k] = static_cast<std::uint8_t>(std::popcount(adj_[v] & cells[k]));
                    sigs.emplace_back(std::move(sig), v);
                }
                std::sort(sigs.begin(), sigs.end());
                Mask group = 0;
                for (std::size_t i = 0; i < sigs.size(); ++i) {
                    if (i > 0 && sigs[i].first != sigs[i - 1].first) {
                        next.push_back(group);
                        group = 0;
                    }
                    group |= bit(sigs[i].second);
                }
                next.push_back(group);
            }
            if (next.size() == cells.size())
                return;
            cells = std::move(next);
        }
    }

    void explore(std::vector<Mask> cells) {
        refine(cells);

        std::size_t prefix = 0;
        while (prefix < cells.size() && std::popcount(cells[prefix]) == 1)
            ++prefix;

        if (!best_key_.empty() && prefix >= 2) {
            std::vector<Vertex> lab(prefix);
            for (std::size_t i = 0; i < prefix; ++i)
                lab[i] = std::countr_zero(cells[i]);
            for (std::size_t j = 1; j < prefix; ++j) {
                Mask col = column(adj_, lab, static_cast<int>(j));
                if (col < best_key_[j])
                    break;
                if (col > best_key_[j])
                    return;
            }
        }

        if (prefix == cells.size()) {
            std::vector<Vertex> lab(n_);
            for (int i = 0; i < n_; ++i)
                lab[i] = std::countr_zero(cells[i]);
            std::vector<Mask> key(n_, 0);
            for (int j = 1; j < n_; ++j)
                key[j] = column(adj_, lab, j);
            if (best_key_.empty() || key < best_key_) {
                best_key_ = std::move(key);
                best_lab_ = std::move(lab);
            }
            return;
        }

        const Mask target = cells[prefix];
        Mask tried = 0;
        for (Mask rest = target; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (twins_[v] & tried)
                continue;
            tried |= bit(v);
            std::vector<Mask> branch;
            branch.reserve(cells.size() + 1);
            branch.insert(branch.end(), cells.begin(), cells.begin() + static_cast<long>(prefix));
            branch.push_back(bit(v));
            branch.push_back(target & ~bit(v));
            branch.insert(branch.end(), cells.begin() + static_cast<long>(prefix) + 1, cells.end());
            explore(std::move(branch));
        }
    }

    std::span<const Mask> adj_;
    int n_;
    std::vector<Mask> twins_;
    std::vector<Mask> best_key_;
    std::vector<Vertex> best_lab_;
};

struct LabeledComponent {
    std::vector<Vertex> vertices;  // global ids in canonical order
    std::vector<Mask> key;
};

} // namespace

std::vector<Vertex> canonical_labeling(std::span<const Mask> adj) {
    const int n = static_cast<int>(adj.size());
    if (n > kMaskLimit)
        throw CapacityError("canonical labeling supports at most 64 vertices");

    std::vector<LabeledComponent> parts;
    Mask unseen = n == 64 ? ~Mask{0} : bit(n) - 1;
    while (unseen) {
        Mask comp = bit(std::countr_zero(unseen));
        Mask frontier = comp;
        while (frontier) {
            Mask grow = 0;
            for (Mask rest = frontier; rest; rest &= rest - 1)
                grow |= adj[std::countr_zero(rest)];
            frontier = grow & ~comp;
            comp |= grow;
        }
        unseen &= ~comp;

        std::vector<Vertex> members;
        for (Mask rest = comp; rest; rest &= rest - 1)
            members.push_back(std::countr_zero(rest));
        std::vector<Mask> local(members.size(), 0);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = 0; b < members.size(); ++b)
                if (adj[members[a]] & bit(members[b]))
                    local[a] |= bit(static_cast<int>(b));

        ComponentLabeler labeler(local);
        labeler.run();
        LabeledComponent part;
        for (Vertex local_v : labeler.labeling())
            part.vertices.push_back(members[local_v]);
        part.key = labeler.key();
        parts.push_back(std::move(part));
    }

    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.vertices.size() != b.vertices.size())
            return a.vertices.size() < b.vertices.size();
        return a.key < b.key;
    });
    std::vector<Vertex> lab;
    lab.reserve(n);
    for (const auto& part : parts)
        lab.insert(lab.end(), part.vertices.begin(), part.vertices.end());
    return lab;
}

std::vector<Vertex> canonical_labeling(const SimpleGraph& g, int limit) {
    if (g.order() > limit || g.order() > kMaskLimit)
        throw CapacityError("canonical form limited to " + std::to_string(std::min(limit, kMaskLimit)) +
                            " vertices, graph has " + std::to_string(g.order()));
    return canonical_labeling(g.masks());
}

SimpleGraph canonical_graph(const SimpleGraph& g, int limit) {
    auto lab = canonical_labeling(g, limit);
    std::vector<Vertex> position(lab.size());
    for (std::size_t i = 0; i < lab.size(); ++i)
        position[lab[i]] = static_cast<Vertex>(i);
    return g.relabeled(position);
}

std::string canonical_form(const SimpleGraph& g, int limit) {
    auto lab = canonical_labeling(g, limit);
    return graph6_from_masks(g.masks(), lab);
}

std::string canonical_form(std::span<const Mask> adj) {
    auto lab = canonical_labeling(adj);
    return graph6_from_masks(adj, lab);
}

std::string graph6_from_masks(std::span<const Mask> adj, std::span<const Vertex> lab) {
    const int n = static_cast<int>(lab.size());
    if (n > 62) {
        std::vector<Vertex> position(n);
        for (int i = 0; i < n; ++i)
            position[lab[i]] = i;
        return to_graph6(SimpleGraph::from_masks(adj).relabeled(position));
    }
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int chunk = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        const Mask row = adj[lab[v]];
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | static_cast<int>((row >> lab[u]) & 1U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

} // namespace cyclemax
