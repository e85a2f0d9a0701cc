#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specmatch/rng.hpp"

namespace specmatch {

// Normalized undirected edge: first < second.
using Edge = std::pair<int, int>;

// Edge-list parse failure; carries the 1-based line number of the offender.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Undirected simple graph on vertices 0..n-1. Immutable once constructed;
// safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates simplicity: rejects loops, duplicate edges, out-of-range
    // endpoints. Edge order is normalized and sorted.
    static Graph from_edges(int n, std::vector<Edge> edges) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("Graph: duplicate edge");
        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : g.edges_) {
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    // Index of a normalized edge within edges(); -1 if absent.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Sorted duplicate-free vertex subset. Range validation against a particular
// graph happens at the operation taking (graph, set).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
            throw std::invalid_argument("VertexSet: duplicate member");
        if (!members_.empty() && members_.front() < 0)
            throw std::invalid_argument("VertexSet: negative vertex");
    }

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> members_;
};

struct Bipartition {
    VertexSet side_a;
    VertexSet side_b;
};

namespace detail {

inline void check_subset(const Graph& g, const VertexSet& s, const char* who) {
    if (!s.empty() && s.members().back() >= g.n())
        throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

// Strict "u v" scan: decimal digits, one space, decimal digits, nothing else.
inline std::optional<std::pair<long, long>> scan_int_pair(std::string_view line) {
    const char* begin = line.data();
    const char* end = begin + line.size();
    long a = 0;
    long b = 0;
    auto r1 = std::from_chars(begin, end, a);
    if (r1.ec != std::errc() || r1.ptr == begin || r1.ptr == end || *r1.ptr != ' ') return std::nullopt;
    const char* second = r1.ptr + 1;
    auto r2 = std::from_chars(second, end, b);
    if (r2.ec != std::errc() || r2.ptr == second || r2.ptr != end) return std::nullopt;
    if (a < 0 || b < 0) return std::nullopt;
    return std::pair{a, b};
}

// Per-component 2-coloring; nullopt when any component has an odd cycle.
// Color of the smallest vertex of each component is 0.
inline std::optional<std::vector<std::int8_t>> two_coloring(const Graph& g) {
    std::vector<std::int8_t> color(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] =
                        static_cast<std::int8_t>(1 - color[static_cast<std::size_t>(v)]);
                    queue.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

}  // namespace detail

// Canonical interchange format: header "n m", then one "u v" line per edge.
// Decimal ASCII, single spaces, LF endings, no trailing whitespace.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto pos = text.find('\n');
        if (pos == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, pos));
        text.remove_prefix(pos + 1);
    }
    // A trailing LF leaves one empty tail piece; drop it.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();

    if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");
    auto header = detail::scan_int_pair(lines[0]);
    if (!header) throw ParseError(1, "malformed header line, expected \"n m\"");
    const long n = header->first;
    const long m = header->second;
    if (n > 50'000'000) throw ParseError(1, "vertex count too large");
    if (static_cast<long>(lines.size()) - 1 < m)
        throw ParseError(static_cast<int>(lines.size()) + 1,
                         "missing edge line, expected " + std::to_string(m) + " edges");
    if (static_cast<long>(lines.size()) - 1 > m)
        throw ParseError(static_cast<int>(m) + 2, "unexpected extra line");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<Edge> seen;  // kept sorted for duplicate detection
    seen.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        const int line_no = static_cast<int>(i) + 2;
        auto uv = detail::scan_int_pair(lines[static_cast<std::size_t>(i) + 1]);
        if (!uv) throw ParseError(line_no, "malformed edge line, expected \"u v\"");
        auto [u, v] = *uv;
        if (u >= n || v >= n) throw ParseError(line_no, "vertex out of range");
        if (u == v) throw ParseError(line_no, "loop");
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        auto it = std::lower_bound(seen.begin(), seen.end(), e);
        if (it != seen.end() && *it == e) throw ParseError(line_no, "duplicate edge");
        seen.insert(it, e);
        edges.push_back(e);
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

inline int min_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (v == 0 || d < best) best = d;
    }
    return best;
}

inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
    std::vector<VertexSet> result;
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = true;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (int u : g.neighbors(queue[head])) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                }
            }
        }
        result.emplace_back(VertexSet(queue));
    }
    return result;
}

inline bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return components(g).size() == 1;
}

inline int isolated_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0) ++count;
    }
    return count;
}

struct DeletionResult {
    Graph graph;
    // original_ids[new_vertex] = vertex id in the input graph; order preserving.
    std::vector<int> original_ids;
};

inline DeletionResult delete_vertices(const Graph& g, const VertexSet& s) {
    detail::check_subset(g, s, "delete_vertices");
    DeletionResult out;
    std::vector<int> new_id(static_cast<std::size_t>(g.n()), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (!s.contains(v)) {
            new_id[static_cast<std::size_t>(v)] = static_cast<int>(out.original_ids.size());
            out.original_ids.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        int nu = new_id[static_cast<std::size_t>(u)];
        int nv = new_id[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.original_ids.size()), std::move(edges));
    return out;
}

// Unique 2-coloring of a connected bipartite graph; the side containing
// vertex 0 is side_a. nullopt when an odd cycle exists. Disconnected input is
// an error: callers must establish connectivity first.
inline std::optional<Bipartition> bipartition_of(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("bipartition_of: graph is disconnected");
    auto color = detail::two_coloring(g);
    if (!color) return std::nullopt;
    std::vector<int> a;
    std::vector<int> b;
    for (int v = 0; v < g.n(); ++v) {
        ((*color)[static_cast<std::size_t>(v)] == 0 ? a : b).push_back(v);
    }
    return Bipartition{VertexSet(std::move(a)), VertexSet(std::move(b))};
}

// Graph on two copies {v, v+n} of V with cross edges {u, v+n}, {v, u+n} per
// original edge. Always bipartite with sides 0..n-1 and n..2n-1.
inline Graph bipartite_double_cover(const Graph& g) {
    const int n = g.n();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    return Graph::from_edges(2 * n, std::move(edges));
}

// Connected simple graph with min degree >= d, deterministic in (n, d, seed).
// A uniform spanning tree (Aldous-Broder walk on K_n) guarantees
// connectivity; shuffled non-edges are then added until the degree floor
// holds. Reaching the complete graph satisfies any feasible d, so
// termination is by construction.
inline Graph random_connected_min_degree(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || n < d + 1)
        throw std::invalid_argument("random_connected_min_degree: infeasible parameters");

    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::mt19937_64 rng(attempt == 0 ? seed
                                         : detail::splitmix64(seed + static_cast<std::uint64_t>(attempt)));
        std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                           std::vector<bool>(static_cast<std::size_t>(n), false));
        std::vector<Edge> edges;
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        auto add_edge = [&](int u, int v) {
            adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
            edges.emplace_back(std::min(u, v), std::max(u, v));
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        };

        // Uniform spanning tree of K_n by first-entrance random walk.
        std::vector<bool> visited(static_cast<std::size_t>(n), false);
        int current = static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(n)));
        visited[static_cast<std::size_t>(current)] = true;
        int seen = 1;
        std::int64_t steps = 0;
        const std::int64_t step_cap = 200LL * n * n + 1000;
        while (seen < n && steps < step_cap) {
            int next = static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(n - 1)));
            if (next >= current) ++next;
            if (!visited[static_cast<std::size_t>(next)]) {
                visited[static_cast<std::size_t>(next)] = true;
                add_edge(current, next);
                ++seen;
            }
            current = next;
            ++steps;
        }
        if (seen < n) continue;  // pathological seed; reseed and retry

        int deficient = 0;
        for (int v = 0; v < n; ++v) {
            if (deg[static_cast<std::size_t>(v)] < d) ++deficient;
        }
        if (deficient > 0) {
            std::vector<Edge> non_edges;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                        non_edges.emplace_back(u, v);
                }
            }
            detail::shuffle(non_edges, rng);
            for (const auto& [u, v] : non_edges) {
                if (deficient == 0) break;
                adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
                adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
                edges.emplace_back(u, v);
                if (++deg[static_cast<std::size_t>(u)] == d) --deficient;
                if (++deg[static_cast<std::size_t>(v)] == d) --deficient;
            }
        }
        if (deficient == 0) return Graph::from_edges(n, std::move(edges));
    }
    throw std::runtime_error("random_connected_min_degree: retry budget exhausted");
}

}  // namespace specmatch
