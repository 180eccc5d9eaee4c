#include "cyclemax/counting.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

#include "cyclemax/errors.hpp"

namespace cyclemax {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

Mask above(int r, int n) {
    Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    return r >= 63 ? Mask{0} : all & ~(bit(r + 1) - 1);
}

std::uint64_t cycles_from_root_dfs(std::span<const Mask> adj, int r) {
    const int n = static_cast<int>(adj.size());
    const Mask allowed = above(r, n);
    const Mask closers = adj[r] & allowed;
    std::uint64_t total = 0;

    struct Frame {
        int v;
        Mask remaining;
    };
    std::vector<Frame> stack;
    stack.reserve(n);
    for (Mask firsts = closers; firsts; firsts &= firsts - 1) {
        const int first = std::countr_zero(firsts);
        Mask visited = bit(r) | bit(first);
        // Closing vertices must exceed `first`; that fixes the direction.
        const Mask late_closers = closers & ~(bit(first + 1) - 1);
        stack.push_back({first, adj[first] & allowed & ~visited});
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.remaining == 0) {
                visited &= ~bit(top.v);
                stack.pop_back();
                continue;
            }
            const int w = std::countr_zero(top.remaining);
            top.remaining &= top.remaining - 1;
            if (late_closers & bit(w))
                ++total;
            visited |= bit(w);
            stack.push_back({w, adj[w] & allowed & ~visited});
        }
    }
    return total;
}

std::uint64_t cycles_from_root_dfs(const SimpleGraph& g, int r) {
    const int n = g.order();
    std::vector<char> visited(n, 0), closes(n, 0);
    for (Vertex w : g.neighbors(r))
        closes[w] = 1;
    std::uint64_t total = 0;
    int first = -1;
    visited[r] = 1;
    auto dfs = [&](auto&& self, Vertex v) -> void {
        for (Vertex w : g.neighbors(v)) {
            if (w <= r || visited[w])
                continue;
            if (closes[w] && w > first)
                ++total;
            visited[w] = 1;
            self(self, w);
            visited[w] = 0;
        }
    };
    for (Vertex a : g.neighbors(r)) {
        if (a <= r)
            continue;
        first = a;
        visited[a] = 1;
        dfs(dfs, a);
        visited[a] = 0;
    }
    return total;
}

/// Cycles with smallest vertex r via DP over subsets of the vertices above r.
Count cycles_from_root_dp(std::span<const Mask> adj, int r) {
    const int n = static_cast<int>(adj.size());
    const int c = n - 1 - r;
    if (c < 2)
        return 0;
    // Local index i stands for vertex r + 1 + i.
    std::vector<Mask> local(c, 0);
    Mask closers = 0;
    for (int i = 0; i < c; ++i) {
        local[i] = adj[r + 1 + i] >> (r + 1);
        if (adj[r] & bit(r + 1 + i))
            closers |= bit(i);
    }
    const std::size_t states = std::size_t{1} << c;
    std::vector<std::uint64_t> dp(states * c, 0);
    for (Mask rest = closers; rest; rest &= rest - 1) {
        int a = std::countr_zero(rest);
        dp[bit(a) * c + a] = 1;
    }
    unsigned __int128 doubled = 0;
    for (std::size_t mask = 1; mask < states; ++mask) {
        const bool long_enough = std::popcount(mask) >= 2;
        for (Mask rest = mask; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::uint64_t ways = dp[mask * c + v];
            if (ways == 0)
                continue;
            if (long_enough && (closers & bit(v)))
                doubled += ways;
            for (Mask ext = local[v] & ~mask; ext; ext &= ext - 1) {
                const int w = std::countr_zero(ext);
                dp[(mask | bit(w)) * c + w] += ways;
            }
        }
    }
    // Every cycle is traversed in both directions.
    unsigned __int128 cycles = doubled / 2;
    Count out(static_cast<unsigned long>(cycles >> 64));
    out <<= 64;
    out += static_cast<unsigned long>(cycles & 0xffffffffffffffffULL);
    return out;
}

/// Number of simple paths from s to every vertex, by DP over subsets.
std::vector<Count> paths_from_dp(std::span<const Mask> adj, int s) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> others;
    std::vector<int> index(n, -1);
    for (int v = 0; v < n; ++v)
        if (v != s) {
            index[v] = static_cast<int>(others.size());
            others.push_back(v);
        }
    const int c = n - 1;
    std::vector<Mask> local(c, 0);
    for (int i = 0; i < c; ++i)
        for (Mask rest = adj[others[i]] & ~bit(s); rest; rest &= rest - 1)
            local[i] |= bit(index[std::countr_zero(rest)]);

    std::vector<unsigned __int128> reach(c, 0);
    if (c > 0) {
        const std::size_t states = std::size_t{1} << c;
        std::vector<std::uint64_t> dp(states * c, 0);
        for (Mask rest = adj[s]; rest; rest &= rest - 1) {
            int a = index[std::countr_zero(rest)];
            dp[bit(a) * c + a] = 1;
        }
        for (std::size_t mask = 1; mask < states; ++mask) {
            for (Mask rest = mask; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const std::uint64_t ways = dp[mask * c + v];
                if (ways == 0)
                    continue;
                reach[v] += ways;
                for (Mask ext = local[v] & ~mask; ext; ext &= ext - 1) {
                    const int w = std::countr_zero(ext);
                    dp[(mask | bit(w)) * c + w] += ways;
                }
            }
        }
    }
    std::vector<Count> out(n, 0);
    for (int i = 0; i < c; ++i) {
        Count value(static_cast<unsigned long>(reach[i] >> 64));
        value <<= 64;
        value += static_cast<unsigned long>(reach[i] & 0xffffffffffffffffULL);
        out[others[i]] = value;
    }
    return out;
}

/// Number of simple paths from s to every vertex, by DFS.
std::vector<Count> paths_from_dfs(const SimpleGraph& g, int s) {
    const int n = g.order();
    std::vector<std::uint64_t> reach(n, 0);
    if (g.has_masks()) {
        auto adj = g.masks();
        struct Frame {
            int v;
            Mask remaining;
        };
        std::vector<Frame> stack;
        Mask visited = bit(s);
        stack.push_back({s, adj[s]});
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.remaining == 0) {
                visited &= ~bit(top.v);
                stack.pop_back();
                continue;
            }
            const int w = std::countr_zero(top.remaining);
            top.remaining &= top.remaining - 1;
            ++reach[w];
            visited |= bit(w);
            stack.push_back({w, adj[w] & ~visited});
        }
    } else {
        std::vector<char> visited(n, 0);
        visited[s] = 1;
        auto dfs = [&](auto&& self, Vertex v) -> void {
            for (Vertex w : g.neighbors(v)) {
                if (visited[w])
                    continue;
                ++reach[w];
                visited[w] = 1;
                self(self, w);
                visited[w] = 0;
            }
        };
        dfs(dfs, s);
    }
    std::vector<Count> out(n);
    for (int v = 0; v < n; ++v)
        out[v] = Count(std::to_string(reach[v]));
    return out;
}

bool prefer_subset_dp(const SimpleGraph& g) {
    const int n = g.order();
    // DFS cost grows like 2^(cyclomatic number), the DP like 2^n.
    return n <= kSubsetDpLimit && g.size() - n + 1 > n;
}

CountMethod resolve(const SimpleGraph& g, CountMethod requested) {
    if (requested == CountMethod::subset_dp) {
        if (g.order() > kSubsetDpLimit)
            throw CapacityError("subset DP supports at most " + std::to_string(kSubsetDpLimit) +
                                " vertices");
        return requested;
    }
    if (requested == CountMethod::dfs)
        return requested;
    return prefer_subset_dp(g) ? CountMethod::subset_dp : CountMethod::dfs;
}

std::vector<Count> paths_from(const SimpleGraph& g, int s, const CountOptions& options) {
    if (resolve(g, options.method) == CountMethod::subset_dp)
        return paths_from_dp(g.masks(), s);
    return paths_from_dfs(g, s);
}

template <typename PerRoot>
Count sum_over_roots(int n, int workers, PerRoot per_root) {
    workers = std::clamp(workers, 1, std::max(1, n));
    std::vector<Count> partial(workers, 0);
    auto work = [&](int w) {
        for (int r = w; r < n; r += workers)
            partial[w] += per_root(r);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
    }
    Count total = 0;
    for (const Count& c : partial)
        total += c;
    return total;
}

Count to_count(std::uint64_t value) {
    return Count(std::to_string(value));
}

} // namespace

std::uint64_t count_cycles_masks(std::span<const Mask> adj) {
    std::uint64_t total = 0;
    for (int r = 0; r < static_cast<int>(adj.size()); ++r)
        total += cycles_from_root_dfs(adj, r);
    return total;
}

Count count_cycles(const SimpleGraph& g, const CountOptions& options) {
    const int n = g.order();
    if (resolve(g, options.method) == CountMethod::subset_dp)
        return sum_over_roots(n, options.workers,
                              [&](int r) { return cycles_from_root_dp(g.masks(), r); });
    if (g.has_masks())
        return sum_over_roots(n, options.workers,
                              [&](int r) { return to_count(cycles_from_root_dfs(g.masks(), r)); });
    return sum_over_roots(n, options.workers,
                          [&](int r) { return to_count(cycles_from_root_dfs(g, r)); });
}

Count count_cycles_multi(const Multigraph& g, const CountOptions& options) {
    const int n = g.order();
    const SimpleGraph& simple = g.underlying();

    Count total = 0;
    for (const auto& b : g.bundles()) {
        Count k = b.multiplicity;
        total += k * (k - 1) / 2;
    }

    auto per_root = [&](int r) -> Count {
        Count found = 0;
        std::vector<char> visited(n, 0);
        std::vector<Count> weight(n + 1);
        int first = -1;
        visited[r] = 1;
        auto dfs = [&](auto&& self, Vertex v, int depth) -> void {
            for (Vertex w : simple.neighbors(v)) {
                if (w <= r || visited[w])
                    continue;
                weight[depth + 1] = weight[depth] * g.multiplicity(v, w);
                if (w > first) {
                    if (auto back = g.multiplicity(w, r))
                        found += weight[depth + 1] * back;
                }
                visited[w] = 1;
                self(self, w, depth + 1);
                visited[w] = 0;
            }
        };
        for (Vertex a : simple.neighbors(r)) {
            if (a <= r)
                continue;
            first = a;
            weight[0] = g.multiplicity(r, a);
            visited[a] = 1;
            dfs(dfs, a, 0);
            visited[a] = 0;
        }
        return found;
    };
    total += sum_over_roots(n, options.workers, per_root);
    return total;
}

Count count_paths(const SimpleGraph& g, Vertex s, Vertex t, const CountOptions& options) {
    if (s < 0 || t < 0 || s >= g.order() || t >= g.order())
        throw std::invalid_argument("path endpoint out of range");
    if (s == t)
        throw std::invalid_argument("path endpoints must differ");
    if (resolve(g, options.method) == CountMethod::subset_dp)
        return paths_from_dp(g.masks(), s)[t];

    std::uint64_t total = 0;
    std::vector<char> visited(g.order(), 0);
    visited[s] = 1;
    auto dfs = [&](auto&& self, Vertex v) -> void {
        for (Vertex w : g.neighbors(v)) {
            if (visited[w])
                continue;
            if (w == t) {
                ++total;
                continue;
            }
            visited[w] = 1;
            self(self, w);
            visited[w] = 0;
        }
    };
    dfs(dfs, s);
    return to_count(total);
}

Count count_paths(const Multigraph& g, Vertex s, Vertex t) {
    if (s < 0 || t < 0 || s >= g.order() || t >= g.order())
        throw std::invalid_argument("path endpoint out of range");
    if (s == t)
        throw std::invalid_argument("path endpoints must differ");
    const SimpleGraph& simple = g.underlying();
    Count total = 0;
    std::vector<char> visited(g.order(), 0);
    std::vector<Count> weight(g.order() + 1);
    weight[0] = 1;
    visited[s] = 1;
    auto dfs = [&](auto&& self, Vertex v, int depth) -> void {
        for (Vertex w : simple.neighbors(v)) {
            if (visited[w])
                continue;
            weight[depth + 1] = weight[depth] * g.multiplicity(v, w);
            if (w == t) {
                total += weight[depth + 1];
                continue;
            }
            visited[w] = 1;
            self(self, w, depth + 1);
            visited[w] = 0;
        }
    };
    dfs(dfs, s, 0);
    return total;
}

PairWeights::PairWeights(std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)), w_(vertices_.size() * vertices_.size(), 0) {}

const Count& PairWeights::at(int i, int j) const {
    const int k = size();
    if (i < 0 || j < 0 || i >= k || j >= k)
        throw std::out_of_range("pair weight index out of range");
    return w_[static_cast<std::size_t>(i) * k + j];
}

void PairWeights::set(int i, int j, const Count& value) {
    const int k = size();
    if (i < 0 || j < 0 || i >= k || j >= k)
        throw std::out_of_range("pair weight index out of range");
    if (i == j)
        throw std::invalid_argument("pair weights have a zero diagonal");
    if (value < 0)
        throw std::invalid_argument("pair weights are non-negative");
    w_[static_cast<std::size_t>(i) * k + j] = value;
    w_[static_cast<std::size_t>(j) * k + i] = value;
}

Count PairWeights::total() const {
    Count s = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            s += at(i, j);
    return s;
}

Count PairWeights::incident(int i) const {
    Count s = 0;
    for (int j = 0; j < size(); ++j)
        s += at(i, j);
    return s;
}

PairWeights PairWeights::restricted(std::span<const int> indices) const {
    std::vector<Vertex> verts;
    for (int i : indices)
        verts.push_back(vertex(i));
    PairWeights out(std::move(verts));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            out.set(static_cast<int>(a), static_cast<int>(b), at(indices[a], indices[b]));
    return out;
}

PairWeights pair_weights(const SimpleGraph& g, Vertex u, const CountOptions& options) {
    if (u < 0 || u >= g.order())
        throw std::invalid_argument("vertex out of range");
    PairWeights w(g.neighbors(u));
    const SimpleGraph rest = g.without_vertex(u);
    auto shifted = [u](Vertex x) { return x > u ? x - 1 : x; };
    for (int i = 0; i < w.size(); ++i) {
        auto reach = paths_from(rest, shifted(w.vertex(i)), options);
        for (int j = i + 1; j < w.size(); ++j)
            w.set(i, j, reach[shifted(w.vertex(j))]);
    }
    return w;
}

Count cycles_through_vertex(const SimpleGraph& g, Vertex u, const CountOptions& options) {
    return pair_weights(g, u, options).total();
}

CycleListing list_cycles(const SimpleGraph& g, std::size_t limit) {
    CycleListing out;
    const int n = g.order();
    std::vector<Vertex> path;
    std::vector<char> visited(n, 0);
    for (int r = 0; r < n && !out.truncated; ++r) {
        visited[r] = 1;
        path.assign(1, r);
        auto dfs = [&](auto&& self, Vertex v) -> void {
            for (Vertex w : g.neighbors(v)) {
                if (out.truncated)
                    return;
                if (w <= r || visited[w])
                    continue;
                path.push_back(w);
                if (path.size() >= 3 && g.adjacent(w, r) && w > path[1]) {
                    if (out.cycles.size() == limit) {
                        out.truncated = true;
                        return;
                    }
                    out.cycles.push_back(path);
                }
                visited[w] = 1;
                self(self, w);
                visited[w] = 0;
                path.pop_back();
            }
        };
        dfs(dfs, r);
        visited[r] = 0;
    }
    return out;
}

} // namespace cyclemax
