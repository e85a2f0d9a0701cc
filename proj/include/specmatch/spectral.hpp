#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "specmatch/graph.hpp"
#include "specmatch/rational.hpp"

namespace specmatch {

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr std::int64_t kPowerIterationCap = 1'000'000;

// Largest adjacency eigenvalue with a certified error bound:
// |value - lambda1| <= residual.
struct SpectralEstimate {
    double value = 0.0;
    double residual = 0.0;
    std::int64_t iterations = 0;
};

namespace detail {

// Certified power iteration on the shifted operator M = base + I, where base
// is symmetric nonnegative and given by its action y = apply(x). The shift
// makes every connected block primitive (bipartite blocks oscillate without
// it), so the iterate converges from the all-ones start. Each step brackets
// lambda_max(base) between the Rayleigh quotient (lower, symmetry) and the
// Collatz-Wielandt max ratio (upper, nonnegativity); both bounds are valid
// every iteration, so the returned residual is certified rather than
// heuristic.
template <typename Apply>
SpectralEstimate bracketed_power_iteration(int n, Apply&& apply, double tol,
                                           std::int64_t iteration_cap) {
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    double best_lower = -std::numeric_limits<double>::infinity();
    double best_upper = std::numeric_limits<double>::infinity();
    for (std::int64_t it = 1; it <= iteration_cap; ++it) {
        apply(x, y);  // y = base * x
        double dot_xy = 0.0;
        double dot_xx = 0.0;
        double max_ratio = -std::numeric_limits<double>::infinity();
        double max_abs = 0.0;
        for (int i = 0; i < n; ++i) {
            const double xi = x[static_cast<std::size_t>(i)];
            const double yi = y[static_cast<std::size_t>(i)] + xi;  // (base + I) x
            y[static_cast<std::size_t>(i)] = yi;
            dot_xy += xi * yi;
            dot_xx += xi * xi;
            max_ratio = std::max(max_ratio, yi / xi);
            max_abs = std::max(max_abs, yi);
        }
        best_lower = std::max(best_lower, dot_xy / dot_xx - 1.0);
        best_upper = std::min(best_upper, max_ratio - 1.0);
        if (best_upper - best_lower <= 2.0 * tol) {
            return SpectralEstimate{(best_upper + best_lower) / 2.0,
                                    std::max(0.0, (best_upper - best_lower) / 2.0), it};
        }
        for (double& v : y) v /= max_abs;
        x.swap(y);
    }
    throw std::runtime_error("power iteration did not converge within the iteration cap");
}

}  // namespace detail

// Certified spectral radius lambda1(g). Edgeless graphs return 0 exactly;
// callers treat the d = 0 case separately.
inline SpectralEstimate spectral_radius(const Graph& g, double tol = kDefaultSpectralTol) {
    if (tol <= 0.0) throw std::invalid_argument("spectral_radius: tol must be positive");
    if (g.edge_count() == 0) return SpectralEstimate{0.0, 0.0, 0};
    return detail::bracketed_power_iteration(
        g.n(),
        [&g](const std::vector<double>& x, std::vector<double>& y) {
            for (int v = 0; v < g.n(); ++v) {
                double acc = 0.0;
                for (int u : g.neighbors(v)) acc += x[static_cast<std::size_t>(u)];
                y[static_cast<std::size_t>(v)] = acc;
            }
        },
        tol, kPowerIterationCap);
}

// Quotient of a vertex partition. Entries stay exact: b(i,j) is the average
// number of neighbours in cell j of a vertex in cell i, held as the integer
// ordered-pair count over the cell size.
class QuotientMatrix {
public:
    int size() const { return static_cast<int>(cell_sizes_.size()); }
    int cell_size(int i) const { return cell_sizes_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& cell_sizes() const { return cell_sizes_; }

    // Sum over v in cell i of |N(v) ∩ cell j|.
    std::int64_t pair_count(int i, int j) const {
        return counts_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
    }

    Rational entry(int i, int j) const {
        return Rational(pair_count(i, j), cell_size(i));
    }

    friend QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& cells);

private:
    std::vector<int> cell_sizes_;
    std::vector<std::vector<std::int64_t>> counts_;
};

namespace detail {

// cell_of[v] for a full partition of V(g); throws unless cells are nonempty,
// disjoint, and cover every vertex.
inline std::vector<int> partition_index(const Graph& g, const std::vector<VertexSet>& cells) {
    std::vector<int> cell_of(static_cast<std::size_t>(g.n()), -1);
    int covered = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].empty()) throw std::invalid_argument("partition has an empty cell");
        check_subset(g, cells[i], "partition");
        for (int v : cells[i].members()) {
            if (cell_of[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("partition cells overlap");
            cell_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
            ++covered;
        }
    }
    if (covered != g.n()) throw std::invalid_argument("partition does not cover all vertices");
    return cell_of;
}

}  // namespace detail

inline QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& cells) {
    const auto cell_of = detail::partition_index(g, cells);
    QuotientMatrix q;
    const auto s = cells.size();
    q.cell_sizes_.resize(s);
    for (std::size_t i = 0; i < s; ++i) q.cell_sizes_[i] = cells[i].size();
    q.counts_.assign(s, std::vector<std::int64_t>(s, 0));
    for (int v = 0; v < g.n(); ++v) {
        const auto iv = static_cast<std::size_t>(cell_of[static_cast<std::size_t>(v)]);
        for (int u : g.neighbors(v)) {
            ++q.counts_[iv][static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
        }
    }
    return q;
}

// Largest eigenvalue of the quotient. The 2x2 anti-diagonal case (bipartite
// quotient) is the closed form sqrt(b01*b10); the general case runs the same
// certified iteration as spectral_radius on the symmetrized similar matrix
// D^{1/2} B D^{-1/2}, which shares the quotient's spectrum.
inline double quotient_lambda1(const QuotientMatrix& q) {
    const int s = q.size();
    if (s == 0) throw std::invalid_argument("quotient_lambda1: empty matrix");
    if (s == 1) return q.entry(0, 0).to_double();
    if (s == 2 && q.pair_count(0, 0) == 0 && q.pair_count(1, 1) == 0) {
        return std::sqrt((q.entry(0, 1) * q.entry(1, 0)).to_double());
    }
    std::vector<std::vector<double>> sym(static_cast<std::size_t>(s),
                                         std::vector<double>(static_cast<std::size_t>(s), 0.0));
    bool any = false;
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            const auto c = q.pair_count(i, j);
            if (c != 0) any = true;
            sym[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<double>(c) /
                std::sqrt(static_cast<double>(q.cell_size(i)) * static_cast<double>(q.cell_size(j)));
        }
    }
    if (!any) return 0.0;
    return detail::bracketed_power_iteration(
               s,
               [&sym, s](const std::vector<double>& x, std::vector<double>& y) {
                   for (int i = 0; i < s; ++i) {
                       double acc = 0.0;
                       for (int j = 0; j < s; ++j)
                           acc += sym[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                  x[static_cast<std::size_t>(j)];
                       y[static_cast<std::size_t>(i)] = acc;
                   }
               },
               1e-12, kPowerIterationCap)
        .value;
}

// True iff every vertex sees exactly its cell's row of the quotient matrix;
// checked in exact integer arithmetic.
inline bool is_equitable(const Graph& g, const std::vector<VertexSet>& cells) {
    const auto cell_of = detail::partition_index(g, cells);
    const auto q = quotient_matrix(g, cells);
    const int s = q.size();
    std::vector<std::int64_t> row(static_cast<std::size_t>(s), 0);
    for (int v = 0; v < g.n(); ++v) {
        const int iv = cell_of[static_cast<std::size_t>(v)];
        std::fill(row.begin(), row.end(), 0);
        for (int u : g.neighbors(v)) ++row[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
        for (int j = 0; j < s; ++j) {
            // |N(v) ∩ V_j| == b(iv,j)  <=>  count * |V_iv| == pair_count
            if (row[static_cast<std::size_t>(j)] * q.cell_size(iv) != q.pair_count(iv, j))
                return false;
        }
    }
    return true;
}

// Perron-Frobenius monotonicity check: h must be a spanning subgraph of g
// (same vertex set, edge subset). True iff lambda1(h) <= lambda1(g) + 2*tol
// with both sides certified to tol.
inline bool check_monotonicity(const Graph& g, const Graph& h, double tol = kDefaultSpectralTol) {
    if (h.n() != g.n())
        throw std::invalid_argument("check_monotonicity: vertex sets differ");
    for (const auto& [u, v] : h.edges()) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("check_monotonicity: h is not a subgraph of g");
    }
    const auto lg = spectral_radius(g, tol);
    const auto lh = spectral_radius(h, tol);
    return lh.value <= lg.value + 2.0 * tol;
}

// Induced-subgraph variant: keep exactly the given vertices.
inline bool check_monotonicity(const Graph& g, const VertexSet& keep,
                               double tol = kDefaultSpectralTol) {
    detail::check_subset(g, keep, "check_monotonicity");
    std::vector<int> drop;
    for (int v = 0; v < g.n(); ++v) {
        if (!keep.contains(v)) drop.push_back(v);
    }
    const Graph h = delete_vertices(g, VertexSet(std::move(drop))).graph;
    const auto lg = spectral_radius(g, tol);
    const auto lh = spectral_radius(h, tol);
    return lh.value <= lg.value + 2.0 * tol;
}

}  // namespace specmatch
