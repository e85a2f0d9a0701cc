#pragma once

#include <json.hpp>

#include "specmatch/families.hpp"
#include "specmatch/matching.hpp"
#include "specmatch/spectral.hpp"
#include "specmatch/verify.hpp"

namespace specmatch {

// JSON views of the report types. Field names are part of the CLI contract;
// nlohmann keeps object keys sorted, so output is deterministic.

inline nlohmann::json to_json(const SpectralEstimate& e) {
    return {{"value", e.value}, {"residual", e.residual}, {"iterations", e.iterations}};
}

inline nlohmann::json to_json(const MembershipReport& m) {
    nlohmann::json j;
    j["is_member"] = m.is_member;
    j["d_found"] = m.d_found ? nlohmann::json(*m.d_found) : nlohmann::json();
    j["k_found"] = m.k_found ? nlohmann::json(*m.k_found) : nlohmann::json();
    j["failure_reason"] =
        m.failure_reason ? nlohmann::json(to_string(*m.failure_reason)) : nlohmann::json();
    if (m.bipartition) {
        j["side_a"] = m.bipartition->side_a.members();
        j["side_b"] = m.bipartition->side_b.members();
    } else {
        j["side_a"] = nullptr;
        j["side_b"] = nullptr;
    }
    return j;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["lambda1"] = to_json(r.lambda1);
    j["alpha_f"] = r.alpha_f.str();
    j["bound"] = r.bound;
    j["slack"] = r.slack;
    j["k_star"] = r.k_star;
    j["equality"] = r.equality_flag;
    j["membership"] = r.membership ? to_json(*r.membership) : nlohmann::json();
    j["regular_case"] = r.regular_case;
    return j;
}

inline nlohmann::json to_json(const DeficiencyWitness& w) {
    return {{"witness", w.s.members()}, {"isolated", w.isolated}, {"deficiency", w.deficiency}};
}

// Certificate as an edge -> half-unit weight list; zero-weight edges are kept
// so the certificate is total over E(g).
inline nlohmann::json cert_to_json(const Graph& g, const HalfIntegralMatching& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.weight_halves.size(); ++i) {
        entries.push_back({{"u", g.edges()[i].first},
                           {"v", g.edges()[i].second},
                           {"halves", m.weight_halves[i]}});
    }
    return {{"edges", entries}, {"total", m.total.str()}};
}

inline nlohmann::json to_json(const CampaignSummary& s) {
    nlohmann::json hits = nlohmann::json::array();
    for (const auto& hit : s.equality_hits) {
        hits.push_back({{"digest", hit.digest}, {"report", to_json(hit.report)}});
    }
    return {{"trials", s.trials},
            {"violations", s.violations},
            {"worst_slack", s.worst_slack},
            {"equality_hits", hits},
            {"seed", s.seed}};
}

}  // namespace specmatch
