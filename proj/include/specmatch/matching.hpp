#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "specmatch/graph.hpp"
#include "specmatch/half_integer.hpp"

namespace specmatch {

// Subset-enumeration ceiling for the deficiency oracle; callers who accept
// the cost may raise it (hard limit 63 from the mask width).
inline constexpr int kDefaultBruteForceCap = 20;

// Fractional matching with weights in {0, 1/2, 1}, stored in half-units and
// aligned with the graph's edge list. weight_halves[i] belongs to edges()[i].
struct HalfIntegralMatching {
    std::vector<int> weight_halves;
    HalfInt total;
};

// Exact validity: per-vertex load <= 1 (i.e. <= 2 half-units) and the
// declared total equals the sum of weights.
inline bool is_valid_fractional_matching(const Graph& g, const HalfIntegralMatching& m) {
    if (m.weight_halves.size() != g.edges().size()) return false;
    std::vector<std::int64_t> load(static_cast<std::size_t>(g.n()), 0);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < m.weight_halves.size(); ++i) {
        const int w = m.weight_halves[i];
        if (w < 0 || w > 2) return false;
        sum += w;
        load[static_cast<std::size_t>(g.edges()[i].first)] += w;
        load[static_cast<std::size_t>(g.edges()[i].second)] += w;
    }
    for (std::int64_t l : load) {
        if (l > 2) return false;
    }
    return sum == m.total.halves;
}

namespace detail {

// Hopcroft-Karp on an explicit 2-coloring (color 0 = left). Returns mate[],
// -1 for unmatched. Deterministic: adjacency lists are sorted.
inline std::vector<int> hopcroft_karp(const Graph& g, const std::vector<std::int8_t>& color) {
    const int n = g.n();
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));

    auto bfs = [&]() {
        queue.clear();
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != 0) continue;
            if (mate[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = 0;
                queue.push_back(v);
            } else {
                dist[static_cast<std::size_t>(v)] = kInf;
            }
        }
        bool reachable_free = false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int u : g.neighbors(v)) {
                const int w = mate[static_cast<std::size_t>(u)];
                if (w == -1) {
                    reachable_free = true;
                } else if (dist[static_cast<std::size_t>(w)] == kInf) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable_free;
    };

    auto dfs = [&](auto&& self, int v) -> bool {
        for (int u : g.neighbors(v)) {
            const int w = mate[static_cast<std::size_t>(u)];
            if (w == -1 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] + 1 &&
                            self(self, w))) {
                mate[static_cast<std::size_t>(v)] = u;
                mate[static_cast<std::size_t>(u)] = v;
                return true;
            }
        }
        dist[static_cast<std::size_t>(v)] = kInf;
        return false;
    };

    while (bfs()) {
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] == 0 && mate[static_cast<std::size_t>(v)] == -1) {
                dfs(dfs, v);
            }
        }
    }
    return mate;
}

}  // namespace detail

struct BipartiteMatching {
    int size = 0;
    std::vector<Edge> edges;
};

// Maximum matching of a bipartite graph (Hopcroft-Karp); the input may be
// disconnected. Throws on an odd cycle.
inline BipartiteMatching max_matching_bipartite(const Graph& g) {
    auto color = detail::two_coloring(g);
    if (!color) throw std::invalid_argument("max_matching_bipartite: graph is not bipartite");
    const auto mate = detail::hopcroft_karp(g, *color);
    BipartiteMatching out;
    for (int v = 0; v < g.n(); ++v) {
        if (mate[static_cast<std::size_t>(v)] > v) {
            out.edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
        }
    }
    out.size = static_cast<int>(out.edges.size());
    return out;
}

struct FractionalMatching {
    HalfInt value;
    HalfIntegralMatching cert;
};

// Exact fractional matching number via the bipartite double cover: a maximum
// matching of the cover has size 2*alpha*_f, and folding its edges back (one
// half-unit per matched copy) yields a half-integral certificate of that
// value. No floating point and no LP anywhere in the computation.
inline FractionalMatching fractional_matching_number(const Graph& g) {
    const int n = g.n();
    const Graph cover = bipartite_double_cover(g);
    std::vector<std::int8_t> color(static_cast<std::size_t>(2 * n), 0);
    for (int v = n; v < 2 * n; ++v) color[static_cast<std::size_t>(v)] = 1;
    const auto mate = detail::hopcroft_karp(cover, color);

    FractionalMatching out;
    out.cert.weight_halves.assign(g.edges().size(), 0);
    std::int64_t matched = 0;
    for (int v = 0; v < n; ++v) {
        const int u = mate[static_cast<std::size_t>(v)];
        if (u == -1) continue;
        ++matched;
        ++out.cert.weight_halves[static_cast<std::size_t>(g.edge_index(v, u - n))];
    }
    out.value = HalfInt{matched};
    out.cert.total = out.value;
    return out;
}

// Vertex set S maximizing def*(S) = i(G-S) - |S|, with i(G-S) alongside.
struct DeficiencyWitness {
    VertexSet s;
    int isolated = 0;
    int deficiency = 0;
};

// Exhaustive maximizer of i(G-S) - |S| over all subsets S. Ties break toward
// smaller |S|, then the lexicographically smallest vertex sequence, so the
// witness is deterministic and testable.
inline DeficiencyWitness max_deficiency_bruteforce(const Graph& g,
                                                   int size_cap = kDefaultBruteForceCap) {
    const int n = g.n();
    if (n > size_cap || n > 63)
        throw std::invalid_argument("max_deficiency_bruteforce: graph too large for exhaustive enumeration");

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    // For equal-size sets, the lexicographically smaller vertex sequence is
    // the one owning the lowest differing bit.
    auto lex_before = [](std::uint64_t a, std::uint64_t b) {
        const std::uint64_t diff = a ^ b;
        const std::uint64_t low = diff & (~diff + 1);
        return (a & low) != 0;
    };

    int best_def = std::numeric_limits<int>::min();
    int best_iso = 0;
    int best_size = 0;
    std::uint64_t best_mask = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        int iso = 0;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v & 1) == 0 && (adj[static_cast<std::size_t>(v)] & ~mask) == 0) ++iso;
        }
        const int size = std::popcount(mask);
        const int def = iso - size;
        if (def > best_def || (def == best_def && size < best_size) ||
            (def == best_def && size == best_size && lex_before(mask, best_mask))) {
            best_def = def;
            best_iso = iso;
            best_size = size;
            best_mask = mask;
        }
    }

    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
        if (best_mask >> v & 1) members.push_back(v);
    }
    return DeficiencyWitness{VertexSet(std::move(members)), best_iso, best_def};
}

// Fractional Berge-Tutte: alpha*_f(G) = (n - def*(G)) / 2, compared exactly
// in half-units with both sides computed by independent routes.
inline bool berge_tutte_crosscheck(const Graph& g, int size_cap = kDefaultBruteForceCap) {
    const auto alpha = fractional_matching_number(g).value;
    const auto witness = max_deficiency_bruteforce(g, size_cap);
    return alpha.halves == static_cast<std::int64_t>(g.n()) - witness.deficiency;
}

inline bool has_fractional_perfect_matching(const Graph& g) {
    return fractional_matching_number(g).value.halves == g.n();
}

}  // namespace specmatch
