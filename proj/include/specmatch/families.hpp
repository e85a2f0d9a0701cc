#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "specmatch/graph.hpp"
#include "specmatch/half_integer.hpp"

namespace specmatch {

// Parameters of the extremal family: the uniform degree d of the large side
// and the side-size gap k. The ring generator additionally splits k into a
// per-block surplus m and block count c with k = m*c.
struct FamilyParams {
    int d = 0;
    int k = 0;
    std::optional<int> m;
    std::optional<int> c;

    static FamilyParams ring(int d, int m, int c) {
        if (d < 1 || m < 1 || c < 1) throw std::invalid_argument("FamilyParams: invalid ring parameters");
        return FamilyParams{d, m * c, m, c};
    }
};

enum class MembershipFailure {
    not_connected,
    not_bipartite,
    a_side_not_regular,
    b_side_not_regular,
    size_gap_mismatch,
};

inline const char* to_string(MembershipFailure f) {
    switch (f) {
        case MembershipFailure::not_connected: return "not connected";
        case MembershipFailure::not_bipartite: return "not bipartite";
        case MembershipFailure::a_side_not_regular: return "A-side not d-regular";
        case MembershipFailure::b_side_not_regular: return "B-side not regular";
        case MembershipFailure::size_gap_mismatch: return "size gap mismatch";
    }
    return "unknown";
}

// Decision record: when is_member, (d_found, k_found) are the inferred family
// parameters and bipartition holds side_a = A (the larger side).
struct MembershipReport {
    bool is_member = false;
    std::optional<Bipartition> bipartition;
    std::optional<int> d_found;
    std::optional<int> k_found;
    std::optional<MembershipFailure> failure_reason;
};

inline Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gen_complete_bipartite: sides must be nonempty");
    if (static_cast<std::int64_t>(a) * b > 50'000'000)
        throw std::invalid_argument("gen_complete_bipartite: parameters too large");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    }
    return Graph::from_edges(a + b, std::move(edges));
}

// Ring of c blocks, each a copy of K_{d,d+m} with parts X_i (size d) and
// Y_i (size d+m). Block i loses the edge between the first vertices of its
// parts and gains an edge from y_i0 to x_{i+1}0 (index mod c), restoring all
// degrees. The result is a connected member of H(d, m*c): every Y-vertex has
// degree d, every X-vertex degree d+m, and |∪Y| = |∪X| + m*c.
//
// Block i occupies vertices [i*(2d+m), (i+1)*(2d+m)): X_i first, then Y_i.
// For c = 1 the added edge coincides with the deleted one, giving exactly
// K_{d,d+m}. d = 1 with c >= 2 is rejected: deleting an edge of K_{1,1+m}
// strands a vertex.
inline Graph gen_ring_blocks(int d, int m, int c) {
    if (d < 1 || m < 1 || c < 1) throw std::invalid_argument("gen_ring_blocks: parameters must be positive");
    if (d < 2 && c >= 2)
        throw std::invalid_argument("gen_ring_blocks: d must be at least 2 when using multiple blocks");
    const std::int64_t block = 2LL * d + m;
    if (block * c > 10'000'000)
        throw std::invalid_argument("gen_ring_blocks: parameters too large");
    const int stride = static_cast<int>(block);
    const int n = stride * c;
    std::vector<Edge> edges;
    for (int i = 0; i < c; ++i) {
        const int base = i * stride;
        const int y0 = base + d;
        for (int x = 0; x < d; ++x) {
            for (int y = 0; y < d + m; ++y) {
                if (x == 0 && y == 0) continue;  // the deleted edge (x_i0, y_i0)
                edges.emplace_back(base + x, base + d + y);
            }
        }
        const int next_x0 = ((i + 1) % c) * stride;
        edges.emplace_back(std::min(y0, next_x0), std::max(y0, next_x0));
    }
    return Graph::from_edges(n, std::move(edges));
}

namespace detail {

// Unique degree over a vertex set; nullopt when mixed.
inline std::optional<int> uniform_degree(const Graph& g, const VertexSet& side) {
    std::optional<int> deg;
    for (int v : side.members()) {
        const int d = g.degree(v);
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

}  // namespace detail

// Decides membership in H(d,k) for some (d,k): connected, bipartite, larger
// (or equal) side A uniformly of degree d, B uniformly of a single degree,
// k = |A| - |B| >= 0. k = 0 (d-regular bipartite) counts as a member even
// though the construction's parameters are stated positive; the equality
// edge case needs it.
inline MembershipReport membership_report(const Graph& g) {
    MembershipReport report;
    if (g.n() == 0 || !is_connected(g)) {
        report.failure_reason = MembershipFailure::not_connected;
        return report;
    }
    const auto bp = bipartition_of(g);
    if (!bp) {
        report.failure_reason = MembershipFailure::not_bipartite;
        return report;
    }
    // A is the larger side; side_a of the 2-coloring wins ties.
    const bool a_first = bp->side_a.size() >= bp->side_b.size();
    const VertexSet& a = a_first ? bp->side_a : bp->side_b;
    const VertexSet& b = a_first ? bp->side_b : bp->side_a;
    report.bipartition = Bipartition{a, b};
    if (b.empty()) {
        // Single-vertex graph: a gap with no B side to carry it.
        report.failure_reason = MembershipFailure::size_gap_mismatch;
        return report;
    }
    const auto deg_a = detail::uniform_degree(g, a);
    if (!deg_a) {
        report.failure_reason = MembershipFailure::a_side_not_regular;
        return report;
    }
    const auto deg_b = detail::uniform_degree(g, b);
    if (!deg_b) {
        report.failure_reason = MembershipFailure::b_side_not_regular;
        return report;
    }
    report.is_member = true;
    report.d_found = *deg_a;
    report.k_found = a.size() - b.size();
    return report;
}

// Lemma value alpha*_f = (n - k)/2 for family members.
inline HalfInt expected_fractional_matching(const FamilyParams& params, int n) {
    if (n <= params.k)
        throw std::invalid_argument("expected_fractional_matching: need n > k");
    if ((n - params.k) % 2 != 0)
        throw std::invalid_argument("expected_fractional_matching: n - k must be even");
    return HalfInt{n - params.k};
}

// Lemma value lambda1 = d*sqrt(1 + 2k/(n-k)) for family members.
inline double expected_lambda1(const FamilyParams& params, int n) {
    if (n <= params.k) throw std::invalid_argument("expected_lambda1: need n > k");
    const double k = static_cast<double>(params.k);
    const double nn = static_cast<double>(n);
    return params.d * std::sqrt(1.0 + 2.0 * k / (nn - k));
}

}  // namespace specmatch
