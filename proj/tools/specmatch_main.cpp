// Command-line front end: analyze graphs, generate family members, verify
// the theorem checks, run fuzz campaigns, and invoke the brute-force oracle.
//
// Exit codes: 0 success, 1 verification violation, 2 usage/parse error,
// 3 precondition violation (e.g. disconnected input).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "specmatch/json_report.hpp"
#include "specmatch/specmatch.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

void emit_json(const nlohmann::json& j, const std::string& path) {
    write_output(j.dump(2) + "\n", path);
}

struct Preconditioned {
    specmatch::Graph graph;
};

// Shared analyze/verify front: parse, then enforce the theorem's hypotheses.
// Returns nullopt after printing a diagnostic; *exit_code is set.
std::optional<Preconditioned> load_connected(const std::string& path, int* exit_code) {
    specmatch::Graph g;
    try {
        g = specmatch::parse_edge_list(read_file(path));
    } catch (const specmatch::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        *exit_code = kExitUsage;
        return std::nullopt;
    }
    if (g.n() == 0 || !specmatch::is_connected(g)) {
        std::cerr << "precondition violation: graph is disconnected\n";
        *exit_code = kExitPrecondition;
        return std::nullopt;
    }
    if (g.edge_count() == 0) {
        std::cerr << "precondition violation: graph has no edges\n";
        *exit_code = kExitPrecondition;
        return std::nullopt;
    }
    return Preconditioned{std::move(g)};
}

int cmd_analyze(const std::string& input, double tol, const std::string& output) {
    int code = kExitOk;
    auto pre = load_connected(input, &code);
    if (!pre) return code;
    const auto report = specmatch::check_theorem_bound(pre->graph, tol);
    emit_json(specmatch::to_json(report), output);
    return kExitOk;
}

int cmd_verify(const std::string& input, double tol, int cap, bool inject_corrupt,
               const std::string& output) {
    int code = kExitOk;
    auto pre = load_connected(input, &code);
    if (!pre) return code;
    const specmatch::Graph& g = pre->graph;

    auto report = specmatch::check_theorem_bound(g, tol);
    if (inject_corrupt) {
        // Test-only hook: pull the certified value below the bound so the
        // violation path is reachable.
        report.alpha_f.halves -= 2;
        report.slack = report.alpha_f.to_double() - report.bound;
    }

    nlohmann::json checks;
    bool ok = true;
    const bool bound_ok = specmatch::bound_holds(report);
    const bool contra_ok = specmatch::check_lemma_contrapositive(report);
    const bool equality_ok = specmatch::check_equality_characterization(report);
    checks["bound"] = bound_ok;
    checks["contrapositive"] = contra_ok;
    checks["equality_characterization"] = equality_ok;
    ok = bound_ok && contra_ok && equality_ok;
    if (g.n() <= cap) {
        const bool bt = specmatch::berge_tutte_crosscheck(g, cap);
        checks["berge_tutte"] = bt;
        ok = ok && bt;
    } else {
        checks["berge_tutte"] = nullptr;
    }

    nlohmann::json j;
    j["report"] = specmatch::to_json(report);
    j["checks"] = checks;
    j["anomaly"] = specmatch::equality_anomaly(report);
    emit_json(j, output);
    return ok ? kExitOk : kExitViolation;
}

int cmd_oracle(const std::string& input, int cap, const std::string& output) {
    specmatch::Graph g;
    try {
        g = specmatch::parse_edge_list(read_file(input));
    } catch (const specmatch::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (g.n() > cap) {
        std::cerr << "error: graph has " << g.n() << " vertices, above the brute-force cap of "
                  << cap << "\n";
        return kExitUsage;
    }
    const auto fm = specmatch::fractional_matching_number(g);
    const auto witness = specmatch::max_deficiency_bruteforce(g, cap);
    const specmatch::HalfInt bt{static_cast<std::int64_t>(g.n()) - witness.deficiency};

    nlohmann::json j;
    j["alpha_f"] = fm.value.str();
    j["witness"] = witness.s.members();
    j["isolated"] = witness.isolated;
    j["deficiency"] = witness.deficiency;
    j["berge_tutte_alpha"] = bt.str();
    j["agree"] = fm.value == bt;
    emit_json(j, output);
    return kExitOk;
}

int cmd_fuzz(const specmatch::FuzzParams& params, const std::string& output) {
    const auto summary = specmatch::fuzz_campaign(params);
    emit_json(specmatch::to_json(summary), output);
    return summary.violations > 0 ? kExitViolation : kExitOk;
}

int cmd_gen(const specmatch::Graph& g, const specmatch::FamilyParams& params,
            const std::string& output) {
    // Provenance note on stderr keeps stdout machine-consumable.
    std::ostringstream note;
    note << "expected alpha_f = " << specmatch::expected_fractional_matching(params, g.n()).str()
         << "\n"
         << "expected lambda1 = " << std::setprecision(17)
         << specmatch::expected_lambda1(params, g.n()) << "\n";
    std::cerr << note.str();
    write_output(specmatch::serialize_edge_list(g), output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral-radius / fractional-matching toolkit"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    double tol = specmatch::kDefaultSpectralTol;
    int cap = specmatch::kDefaultBruteForceCap;
    bool inject_corrupt = false;

    auto* analyze = app.add_subcommand("analyze", "report lambda1, alpha*_f, and the bound");
    analyze->add_option("input", input, "edge-list file")->required();
    analyze->add_option("--tol", tol, "spectral tolerance");
    analyze->add_option("-o,--output", output, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run all theorem checks");
    verify->add_option("input", input, "edge-list file")->required();
    verify->add_option("--tol", tol, "spectral tolerance");
    verify->add_option("--cap", cap, "brute-force vertex cap");
    verify->add_option("-o,--output", output, "output path (default stdout)");
    verify->add_flag("--inject-corrupt-report", inject_corrupt)->group("");  // test-only

    auto* oracle = app.add_subcommand("oracle", "brute-force Berge-Tutte oracle");
    oracle->add_option("input", input, "edge-list file")->required();
    oracle->add_option("--cap", cap, "brute-force vertex cap");
    oracle->add_option("-o,--output", output, "output path (default stdout)");

    auto* gen = app.add_subcommand("gen", "generate family members");
    gen->require_subcommand(1);
    int gen_a = 0;
    int gen_b = 0;
    auto* kab = gen->add_subcommand("kab", "complete bipartite K_{a,b}");
    kab->add_option("-a", gen_a, "first side size")->required();
    kab->add_option("-b", gen_b, "second side size")->required();
    kab->add_option("-o,--output", output, "output path (default stdout)");
    int ring_d = 0;
    int ring_m = 0;
    int ring_c = 0;
    auto* ring = gen->add_subcommand("ring", "ring of blocks, member of H(d, m*c)");
    ring->add_option("-d", ring_d, "A-side degree")->required();
    ring->add_option("-m", ring_m, "per-block surplus")->required();
    ring->add_option("-c", ring_c, "block count")->required();
    ring->add_option("-o,--output", output, "output path (default stdout)");

    auto* fuzz = app.add_subcommand("fuzz", "seeded verification campaign");
    int n_max = 0;
    int d_min = 1;
    int d_max = 5;
    std::int64_t trials = 0;
    std::uint64_t seed = 42;
    fuzz->add_option("--n-max", n_max, "maximum vertex count")->required();
    fuzz->add_option("--d-min", d_min, "minimum degree floor");
    fuzz->add_option("--d-max", d_max, "maximum degree floor");
    fuzz->add_option("--trials", trials, "number of trials")->required();
    fuzz->add_option("--seed", seed, "campaign seed");
    fuzz->add_option("--cap", cap, "brute-force vertex cap");
    fuzz->add_option("-o,--output", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(input, tol, output);
        if (verify->parsed()) return cmd_verify(input, tol, cap, inject_corrupt, output);
        if (oracle->parsed()) return cmd_oracle(input, cap, output);
        if (fuzz->parsed()) {
            return cmd_fuzz(specmatch::FuzzParams{n_max, d_min, d_max, trials, seed, cap}, output);
        }
        if (gen->parsed()) {
            if (kab->parsed()) {
                const auto g = specmatch::gen_complete_bipartite(gen_a, gen_b);
                const specmatch::FamilyParams params{std::min(gen_a, gen_b),
                                                     std::abs(gen_a - gen_b)};
                return cmd_gen(g, params, output);
            }
            const auto g = specmatch::gen_ring_blocks(ring_d, ring_m, ring_c);
            return cmd_gen(g, specmatch::FamilyParams::ring(ring_d, ring_m, ring_c), output);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
