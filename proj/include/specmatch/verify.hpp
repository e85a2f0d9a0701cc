#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specmatch/families.hpp"
#include "specmatch/graph.hpp"
#include "specmatch/half_integer.hpp"
#include "specmatch/matching.hpp"
#include "specmatch/spectral.hpp"

namespace specmatch {

// Equality detection is deliberately looser than the spectral tolerance:
// bound values are O(n) with residuals around 1e-10, so 1e-6 leaves a wide
// margin against false negatives while the exhaustive small-graph corpus
// guards against false positives.
inline constexpr double kEqualityTol = 1e-6;

// Per-graph record of the main bound alpha*_f >= n d^2 / (lambda1^2 + d^2)
// and its equality parameter k* = n (lambda1^2 - d^2) / (lambda1^2 + d^2).
// bound == (n - k_star)/2 holds algebraically.
struct VerificationReport {
    int n = 0;
    int d = 0;
    SpectralEstimate lambda1;
    HalfInt alpha_f;
    double bound = 0.0;
    double slack = 0.0;
    double k_star = 0.0;
    bool equality_flag = false;
    std::optional<MembershipReport> membership;
    bool regular_case = false;
};

inline VerificationReport check_theorem_bound(const Graph& g, double tol = kDefaultSpectralTol) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("check_theorem_bound: graph has no edges");
    if (!is_connected(g))
        throw std::invalid_argument("check_theorem_bound: graph is disconnected");

    VerificationReport r;
    r.n = g.n();
    r.d = min_degree(g);
    r.lambda1 = spectral_radius(g, tol);
    r.alpha_f = fractional_matching_number(g).value;

    const double n = static_cast<double>(r.n);
    const double d = static_cast<double>(r.d);
    const double lam = r.lambda1.value;
    const double denom = lam * lam + d * d;
    r.bound = n * d * d / denom;
    r.k_star = n * (lam * lam - d * d) / denom;
    r.slack = r.alpha_f.to_double() - r.bound;
    r.equality_flag = r.slack <= kEqualityTol;
    r.regular_case = std::abs(lam - d) <= kEqualityTol + r.lambda1.residual;
    r.membership = membership_report(g);
    return r;
}

// Worst-case sensitivity of the bound to the spectral estimate, used to
// inflate comparison tolerances: |d bound / d lambda| = 2 n lambda d^2 /
// (lambda^2 + d^2)^2 evaluated at the estimate.
inline double bound_residual(const VerificationReport& r) {
    const double n = static_cast<double>(r.n);
    const double d = static_cast<double>(r.d);
    const double lam = r.lambda1.value;
    const double denom = lam * lam + d * d;
    return 2.0 * n * lam * d * d / (denom * denom) * r.lambda1.residual;
}

// alpha*_f >= bound within tol, after propagating the spectral residual
// through the bound formula.
inline bool bound_holds(const VerificationReport& r, double tol = kEqualityTol) {
    return r.alpha_f.to_double() >= r.bound - tol - bound_residual(r);
}

// Contrapositive of the main lemma at the tight k = n - 2 alpha*_f:
// lambda1 >= d sqrt(1 + 2k/(n-k)) - tol. Here n - k = 2 alpha*_f > 0
// because the graph has an edge.
inline bool check_lemma_contrapositive(const VerificationReport& r, double tol = kEqualityTol) {
    const std::int64_t k = r.n - r.alpha_f.halves;
    const double threshold =
        r.d * std::sqrt(1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(r.alpha_f.halves));
    return r.lambda1.value + r.lambda1.residual >= threshold - tol;
}

inline bool check_lemma_contrapositive(const Graph& g, double tol = kEqualityTol) {
    return check_lemma_contrapositive(check_theorem_bound(g), tol);
}

// Proof-chain check on the bipartite witness subgraph H spanned by the
// S-to-T edges, where T is the set of isolated vertices of G-S:
//   lambda1(G) >= lambda1(H) >= a/sqrt(st) >= d sqrt(t/s),
// with a = |E(H)|. The last link is the exact integer fact a >= d t (every
// T-vertex keeps its full degree inside H); the others are checked with
// certified spectral estimates and the quotient closed form.
inline bool witness_chain_check(const Graph& g, const VertexSet& s, double tol = kEqualityTol) {
    detail::check_subset(g, s, "witness_chain_check");
    if (s.empty()) throw std::invalid_argument("witness_chain_check: S is empty");

    const auto deletion = delete_vertices(g, s);
    std::vector<int> t_members;
    for (int v = 0; v < deletion.graph.n(); ++v) {
        if (deletion.graph.degree(v) == 0) t_members.push_back(deletion.original_ids[static_cast<std::size_t>(v)]);
    }
    if (t_members.empty())
        throw std::invalid_argument("witness_chain_check: G-S has no isolated vertices");
    const VertexSet t(std::move(t_members));

    // H lives on S ∪ T (relabeled order-preserving), keeping S-T edges only.
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(s.size() + t.size()));
    std::vector<int> new_id(static_cast<std::size_t>(g.n()), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (s.contains(v) || t.contains(v)) {
            new_id[static_cast<std::size_t>(v)] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    }
    std::vector<Edge> h_edges;
    std::vector<int> s_new;
    std::vector<int> t_new;
    for (int v : keep) {
        if (s.contains(v)) s_new.push_back(new_id[static_cast<std::size_t>(v)]);
        else t_new.push_back(new_id[static_cast<std::size_t>(v)]);
    }
    for (const auto& [u, v] : g.edges()) {
        const bool u_in_s = s.contains(u);
        const bool v_in_s = s.contains(v);
        if ((u_in_s && t.contains(v)) || (v_in_s && t.contains(u))) {
            h_edges.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]);
        }
    }
    const Graph h = Graph::from_edges(static_cast<int>(keep.size()), std::move(h_edges));

    const std::int64_t a = h.edge_count();
    const std::int64_t s_size = s.size();
    const std::int64_t t_size = t.size();
    const int d = min_degree(g);
    if (a < d * t_size) return false;  // exact integer leg: a >= d t

    const double spectral_tol = std::min(kDefaultSpectralTol, tol / 4.0);
    const auto lam_g = spectral_radius(g, spectral_tol);
    const auto lam_h = spectral_radius(h, spectral_tol);
    const auto q = quotient_matrix(h, {VertexSet(s_new), VertexSet(t_new)});
    const double q_lambda = quotient_lambda1(q);  // a / sqrt(s t)
    const double dt_form = d * std::sqrt(static_cast<double>(t_size) / static_cast<double>(s_size));

    const bool interlace = lam_h.value - lam_h.residual <= lam_g.value + lam_g.residual + tol;
    const bool quotient_leg = q_lambda <= lam_h.value + lam_h.residual + tol;
    const bool degree_leg = dt_form <= q_lambda + tol;
    return interlace && quotient_leg && degree_leg;
}

// Equality characterization of the main bound: equality with k* rounding to
// an integer k >= 1 must coincide with membership in H(d,k); membership with
// k >= 1 must force equality. k* near 0 (connected regular graphs) achieves
// equality without bipartiteness, so those cases route to an anomaly channel
// instead of asserting membership.
inline bool check_equality_characterization(const VerificationReport& r) {
    const double rounded = std::round(r.k_star);
    const bool k_is_integer = std::abs(r.k_star - rounded) <= kEqualityTol;
    const auto k = static_cast<std::int64_t>(std::llround(r.k_star));

    if (r.equality_flag) {
        if (r.regular_case || (k_is_integer && k == 0)) {
            return true;  // anomaly channel: equality at k* ~ 0
        }
        if (!k_is_integer) return false;
        if (!r.membership || !r.membership->is_member) return false;
        if (r.membership->d_found != r.d) return false;
        if (static_cast<std::int64_t>(*r.membership->k_found) != k) return false;
    }
    if (r.membership && r.membership->is_member && *r.membership->k_found >= 1 &&
        !r.equality_flag) {
        return false;
    }
    return true;
}

inline bool check_equality_characterization(const Graph& g, double tol = kDefaultSpectralTol) {
    return check_equality_characterization(check_theorem_bound(g, tol));
}

// True when a report landed in the k* ~ 0 equality channel the theorem's
// characterization does not cover.
inline bool equality_anomaly(const VerificationReport& r) {
    return r.equality_flag && r.regular_case;
}

struct EqualityHit {
    std::string digest;
    VerificationReport report;
};

// Aggregate of a fuzz run. violations counts failed checks; zero on a
// correct implementation, since the theorem is proved.
struct CampaignSummary {
    std::int64_t trials = 0;
    std::int64_t violations = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    std::vector<EqualityHit> equality_hits;
    std::uint64_t seed = 0;
};

// FNV-1a over the canonical edge list; stable graph identifier for reports.
inline std::string graph_digest(const Graph& g) {
    const std::string bytes = serialize_edge_list(g);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

struct FuzzParams {
    int n_max = 0;
    int d_min = 1;
    int d_max = 1;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    int bruteforce_cap = kDefaultBruteForceCap;
};

// Seeded campaign over random connected min-degree graphs: every trial runs
// the bound check and the lemma contrapositive, plus the Berge-Tutte
// crosscheck when the graph is small enough to enumerate. Deterministic for
// fixed parameters.
inline CampaignSummary fuzz_campaign(const FuzzParams& p) {
    if (p.trials < 1) throw std::invalid_argument("fuzz_campaign: trials must be at least 1");
    if (p.d_min < 0 || p.d_min > p.d_max)
        throw std::invalid_argument("fuzz_campaign: invalid degree range");
    if (p.n_max < p.d_max + 1)
        throw std::invalid_argument("fuzz_campaign: n_max too small for the degree range");

    CampaignSummary summary;
    summary.trials = p.trials;
    summary.seed = p.seed;

    std::mt19937_64 master(p.seed);
    for (std::int64_t trial = 0; trial < p.trials; ++trial) {
        const int d = p.d_min + static_cast<int>(detail::bounded(
                                    master, static_cast<std::uint64_t>(p.d_max - p.d_min + 1)));
        const int n_lo = std::max(2, d + 1);
        const int n = n_lo + static_cast<int>(detail::bounded(
                                 master, static_cast<std::uint64_t>(p.n_max - n_lo + 1)));
        const std::uint64_t graph_seed = master();
        const Graph g = random_connected_min_degree(n, d, graph_seed);

        const auto report = check_theorem_bound(g);
        if (!bound_holds(report, kEqualityTol)) ++summary.violations;
        if (!check_lemma_contrapositive(report, kEqualityTol)) ++summary.violations;
        if (n <= p.bruteforce_cap && !berge_tutte_crosscheck(g, p.bruteforce_cap))
            ++summary.violations;

        summary.worst_slack = std::min(summary.worst_slack, report.slack);
        if (report.equality_flag) {
            summary.equality_hits.push_back(EqualityHit{graph_digest(g), report});
        }
    }
    return summary;
}

}  // namespace specmatch
