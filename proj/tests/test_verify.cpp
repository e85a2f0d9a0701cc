#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "specmatch/json_report.hpp"
#include "specmatch/verify.hpp"
#include "support/testgraphs.hpp"

using namespace specmatch;
using testsupport::complete_graph;
using testsupport::cycle_graph;
using testsupport::path_graph;
using testsupport::petersen_graph;

TEST_CASE("check_theorem_bound on known graphs") {
    SECTION("K23: equality with membership (2,1)") {
        const auto r = check_theorem_bound(gen_complete_bipartite(2, 3));
        REQUIRE(r.n == 5);
        REQUIRE(r.d == 2);
        REQUIRE(r.alpha_f == HalfInt{4});
        REQUIRE(r.bound == Catch::Approx(2.0).margin(1e-9));
        REQUIRE(std::abs(r.slack) <= 1e-8);
        REQUIRE(r.equality_flag);
        REQUIRE(!r.regular_case);
        REQUIRE(r.membership->is_member);
        REQUIRE(r.membership->d_found == 2);
        REQUIRE(r.membership->k_found == 1);
        REQUIRE(std::abs(r.k_star - 1.0) <= 1e-8);
    }
    SECTION("K3: regular equality, the k=0 anomaly") {
        const auto r = check_theorem_bound(complete_graph(3));
        REQUIRE(r.alpha_f == HalfInt{3});
        REQUIRE(r.bound == Catch::Approx(1.5).margin(1e-9));
        REQUIRE(r.equality_flag);
        REQUIRE(r.regular_case);
        REQUIRE(equality_anomaly(r));
        REQUIRE(!r.membership->is_member);
    }
    SECTION("P3: d=1 boundary, equality with membership (1,1)") {
        const auto r = check_theorem_bound(path_graph(3));
        REQUIRE(r.d == 1);
        REQUIRE(std::abs(r.lambda1.value - std::sqrt(2.0)) <= 1e-9);
        REQUIRE(r.alpha_f == HalfInt{2});
        REQUIRE(r.bound == Catch::Approx(1.0).margin(1e-9));
        REQUIRE(r.equality_flag);
        REQUIRE(r.membership->is_member);
        REQUIRE(r.membership->d_found == 1);
        REQUIRE(r.membership->k_found == 1);
    }
    SECTION("bound identity bound == (n - k_star)/2") {
        for (const Graph& g : {gen_complete_bipartite(2, 3), petersen_graph(), cycle_graph(7),
                               complete_graph(5), gen_ring_blocks(3, 2, 2)}) {
            const auto r = check_theorem_bound(g);
            REQUIRE(std::abs(r.bound - (r.n - r.k_star) / 2.0) <= 1e-12);
            REQUIRE(bound_holds(r));
        }
    }
    SECTION("preconditions") {
        REQUIRE_THROWS_AS(check_theorem_bound(Graph::from_edges(4, {{0, 1}, {2, 3}})),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(check_theorem_bound(Graph::from_edges(2, {})), std::invalid_argument);
    }
}

TEST_CASE("check_lemma_contrapositive is tight on the sharpness witnesses") {
    SECTION("K23: threshold sqrt(6) met with equality") {
        REQUIRE(check_lemma_contrapositive(gen_complete_bipartite(2, 3)));
        const auto r = check_theorem_bound(gen_complete_bipartite(2, 3));
        const double threshold = 2.0 * std::sqrt(1.0 + 2.0 * 1.0 / 4.0);
        REQUIRE(std::abs(r.lambda1.value - threshold) <= 1e-8);
    }
    SECTION("C6: k=0, threshold d") {
        REQUIRE(check_lemma_contrapositive(cycle_graph(6)));
        const auto r = check_theorem_bound(cycle_graph(6));
        REQUIRE(std::abs(r.lambda1.value - 2.0) <= 1e-8);
    }
    SECTION("K13: k=2, threshold sqrt(3)") {
        const Graph star = gen_complete_bipartite(1, 3);
        REQUIRE(check_lemma_contrapositive(star));
        const auto r = check_theorem_bound(star);
        REQUIRE(r.n - r.alpha_f.halves == 2);
        REQUIRE(std::abs(r.lambda1.value - std::sqrt(3.0)) <= 1e-8);
    }
}

TEST_CASE("witness_chain_check") {
    SECTION("K23 with S = the 2-side: all links tight at sqrt(6)") {
        REQUIRE(witness_chain_check(gen_complete_bipartite(2, 3), VertexSet({0, 1}), 1e-8));
    }
    SECTION("K13 with S = center") {
        REQUIRE(witness_chain_check(gen_complete_bipartite(1, 3), VertexSet({0}), 1e-8));
    }
    SECTION("C4 minus one vertex leaves no isolated vertices") {
        REQUIRE_THROWS_AS(witness_chain_check(cycle_graph(4), VertexSet({0}), 1e-6),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(witness_chain_check(cycle_graph(4), VertexSet(std::vector<int>{}), 1e-6),
                          std::invalid_argument);
    }
    SECTION("brute-force witnesses of small graphs pass the chain") {
        for (int n = 2; n <= 6; ++n) {
            testsupport::for_each_connected_graph(n, [](const Graph& g) {
                const auto w = max_deficiency_bruteforce(g);
                if (w.s.empty() || w.isolated == 0) return;
                REQUIRE(witness_chain_check(g, w.s, 1e-6));
            });
        }
    }
}

TEST_CASE("check_equality_characterization") {
    SECTION("generated family members satisfy both directions") {
        for (int d = 2; d <= 3; ++d) {
            for (int c = 1; c <= 3; ++c) {
                REQUIRE(check_equality_characterization(gen_ring_blocks(d, 1, c)));
            }
        }
        REQUIRE(check_equality_characterization(gen_complete_bipartite(2, 3)));
    }
    SECTION("Petersen routes to the anomaly channel") {
        const auto r = check_theorem_bound(petersen_graph());
        REQUIRE(r.alpha_f == HalfInt{10});
        REQUIRE(std::abs(r.lambda1.value - 3.0) <= 1e-9);
        REQUIRE(r.equality_flag);
        REQUIRE(r.regular_case);
        REQUIRE(equality_anomaly(r));
        REQUIRE(check_equality_characterization(petersen_graph()));
    }
    SECTION("a corrupted report fails the characterization") {
        auto r = check_theorem_bound(gen_complete_bipartite(2, 3));
        r.membership->k_found = 2;  // equality holds but membership parameters disagree
        REQUIRE(!check_equality_characterization(r));
    }
}

TEST_CASE("bound identity and zero violations over the small exhaustive corpus") {
    for (int n = 2; n <= 5; ++n) {
        testsupport::for_each_connected_graph(n, [](const Graph& g) {
            const auto r = check_theorem_bound(g);
            REQUIRE(std::abs(r.bound - (r.n - r.k_star) / 2.0) <= 1e-12);
            REQUIRE(bound_holds(r));
            REQUIRE(check_lemma_contrapositive(r));
        });
    }
}

TEST_CASE("fuzz_campaign") {
    SECTION("clean run, deterministic, zero violations") {
        const FuzzParams params{.n_max = 12, .d_min = 1, .d_max = 3, .trials = 60, .seed = 99};
        const auto s1 = fuzz_campaign(params);
        const auto s2 = fuzz_campaign(params);
        REQUIRE(s1.violations == 0);
        REQUIRE(s1.trials == 60);
        REQUIRE(s1.worst_slack == s2.worst_slack);
        REQUIRE(s1.equality_hits.size() == s2.equality_hits.size());
        REQUIRE(to_json(s1).dump() == to_json(s2).dump());
    }
    SECTION("invalid parameters") {
        REQUIRE_THROWS_AS(fuzz_campaign(FuzzParams{.n_max = 10, .d_min = 1, .d_max = 2, .trials = 0, .seed = 1}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(fuzz_campaign(FuzzParams{.n_max = 2, .d_min = 2, .d_max = 4, .trials = 5, .seed = 1}),
                          std::invalid_argument);
    }
}

TEST_CASE("report JSON shape is stable") {
    const auto r = check_theorem_bound(gen_complete_bipartite(2, 3));
    const auto j = to_json(r);
    REQUIRE(j.at("alpha_f") == "4/2");
    REQUIRE(j.at("n") == 5);
    REQUIRE(j.at("d") == 2);
    REQUIRE(j.at("equality") == true);
    REQUIRE(j.at("lambda1").contains("value"));
    REQUIRE(j.at("lambda1").contains("residual"));
    REQUIRE(j.at("lambda1").contains("iterations"));
    REQUIRE(j.at("membership").at("is_member") == true);
    REQUIRE(j.contains("bound"));
    REQUIRE(j.contains("slack"));
    REQUIRE(j.contains("k_star"));
    REQUIRE(j.contains("regular_case"));
}
