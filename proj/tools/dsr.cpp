// Command-line front end: construct extremal graphs, compute distance
// spectral radii and fractional matching numbers, test factor existence, and
// run the theorem verification harness.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dsr/extremal.hpp"
#include "dsr/graph.hpp"
#include "dsr/graph6.hpp"
#include "dsr/matching.hpp"
#include "dsr/spectral.hpp"
#include "dsr/verify.hpp"

namespace {

using nlohmann::json;

// Reproducibility default; every randomized subcommand uses it unless --seed
// is given.
constexpr std::uint64_t kDefaultSeed = 42;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapability = 3;

struct GraphInput {
    std::string path;
    std::string g6;

    dsr::Graph load() const {
        if (!g6.empty()) return dsr::from_graph6(g6);
        if (path.empty()) throw dsr::parse_error("no graph input: pass --in FILE or --g6 STRING");
        std::ifstream in(path);
        if (!in) throw dsr::parse_error("cannot open input file: " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line.substr(0, 2) == ">>") continue;
            return dsr::from_graph6(line);
        }
        throw dsr::parse_error("no graph6 line found in " + path);
    }
};

dsr::Family parse_family(const std::string& f) {
    if (f == "A" || f == "a") return dsr::Family::A;
    if (f == "B" || f == "b") return dsr::Family::B;
    throw dsr::parse_error("family must be A or B");
}

std::string render_fraction(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

void print_report(const dsr::VerificationReport& r, const std::string& format) {
    if (format == "plain") {
        for (const auto& c : r.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (expected=" << c.expected
                      << ", observed=" << c.observed << ")\n";
        for (const auto& g6 : r.counterexamples) std::cout << "COUNTEREXAMPLE " << g6 << "\n";
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.theorem << "\n";
    } else {
        std::cout << r.to_json().dump(2) << "\n";
    }
}

// Tabular sweep row for family graphs: spectral values from both routes plus
// combinatorial invariants where the caps allow.
void emit_csv_rows(dsr::Family family, int n, int delta, int k, int s_lo, int s_hi) {
    std::cout << "n,delta,k,s,mu_quotient,mu_full,alpha_f_times2,factor_flags\n";
    for (int s = s_lo; s <= s_hi; ++s) {
        dsr::ExtremalParams p{family, n, s, k};
        if (!p.valid()) continue;
        double root = dsr::extremal_radius_by_root(p);
        std::ostringstream row;
        row.precision(12);
        row << n << "," << delta << "," << k << "," << s << "," << root << ",";
        if (n <= 500) row << dsr::distance_spectral_radius(dsr::extremal_graph(p)).radius;
        row << ",";
        if (n <= dsr::kExhaustiveCap) {
            dsr::Graph g = dsr::extremal_graph(p);
            row << dsr::fractional_matching_number(g).twice_value << ",";
            row << "k2ck=" << (dsr::has_k2_ck_factor(g) ? 1 : 0)
                << ";star=" << (dsr::has_star_factor(g, std::max(k, 2)) ? 1 : 0);
        } else {
            row << ",";
        }
        std::cout << row.str() << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"distance spectral radius, fractional matchings and factors"};
    app.require_subcommand(1);

    std::string family_str = "A";
    int n = 0, s = 1, k = 1, delta = 1, samples = 100;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "json";
    std::string theorem, kind;
    std::string method = "power";
    GraphInput input;
    dsr::VerifyOptions vopt;

    auto add_graph_input = [&](CLI::App* cmd) {
        cmd->add_option("--in", input.path, "newline-delimited graph6 file (first graph is used)");
        cmd->add_option("--g6", input.g6, "inline graph6 string");
    };

    auto* construct = app.add_subcommand("construct", "emit an extremal graph as graph6");
    construct->add_option("--family", family_str)->required();
    construct->add_option("--n", n)->required();
    construct->add_option("--s", s)->required();
    construct->add_option("--k", k)->required();

    auto* radius = app.add_subcommand("radius", "distance spectral radius");
    add_graph_input(radius);
    radius->add_option("--method", method)->check(CLI::IsMember({"power", "quotient"}));
    radius->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));

    auto* alphaf = app.add_subcommand("alphaf", "fractional matching number");
    add_graph_input(alphaf);
    alphaf->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));

    auto* factor = app.add_subcommand("factor", "factor existence");
    add_graph_input(factor);
    factor->add_option("--kind", kind)->required()->check(CLI::IsMember({"k2ck", "star"}));
    factor->add_option("--k", k, "max star size for --kind star");
    factor->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));

    auto* verify = app.add_subcommand("verify", "run a theorem-level verification");
    verify->add_option("--theorem", theorem)
        ->required()
        ->check(CLI::IsMember({"fm", "fpm", "k2ck", "star", "quotient", "edgemono", "mono-s"}));
    verify->add_option("--n", n);
    verify->add_option("--delta", delta);
    verify->add_option("--k", k);
    verify->add_option("--family", family_str);
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "plain"}));
    verify->add_option("--eq-tol", vopt.eq_tol);
    verify->add_option("--strict-margin", vopt.strict_margin);
    verify->add_option("--edge-margin", vopt.edge_margin);

    auto* search = app.add_subcommand("search", "randomized counterexample search");
    search->add_option("--theorem", theorem)
        ->required()
        ->check(CLI::IsMember({"fm", "fpm", "k2ck", "star"}));
    search->add_option("--n", n)->required();
    search->add_option("--delta", delta)->required();
    search->add_option("--k", k);
    search->add_option("--samples", samples);
    search->add_option("--seed", seed);
    search->add_option("--format", format)->check(CLI::IsMember({"json", "plain"}));
    search->add_option("--strict-margin", vopt.strict_margin);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json err = {{"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return kExitUsage;
    }

    if (*construct) {
        dsr::ExtremalParams p{parse_family(family_str), n, s, k};
        std::cout << dsr::to_graph6(dsr::extremal_graph(p)) << "\n";
        return kExitPass;
    }

    if (*radius) {
        dsr::Graph g = input.load();
        dsr::SpectralResult res;
        if (method == "power") {
            res = dsr::distance_spectral_radius(g);
        } else {
            auto st = dsr::detect_extremal(g);
            if (!st)
                throw std::invalid_argument(
                    "quotient method requires a K_s v (K_a + b K_1) shaped graph");
            std::vector<std::vector<int>> blocks(st->clique_size > 0 ? 3 : 2);
            int hub = st->hub_count, a = st->clique_size;
            int gn = g.order();
            for (int v = 0; v < gn; ++v) {
                if (g.degree(v) == gn - 1)
                    blocks[0].push_back(v);
                else if (a > 0 && g.degree(v) > hub)
                    blocks[1].push_back(v);
                else
                    blocks.back().push_back(v);
            }
            auto q = dsr::quotient_matrix(dsr::all_pairs_distances(g), blocks);
            if (!q.equitable) throw std::invalid_argument("degree partition is not equitable");
            res = dsr::quotient_spectral_radius(q);
        }
        if (format == "plain") {
            std::cout.precision(15);
            std::cout << "mu=" << res.radius << " iterations=" << res.iterations
                      << " residual=" << res.residual << "\n";
        } else {
            json out = {{"radius", res.radius},
                        {"iterations", res.iterations},
                        {"residual", res.residual},
                        {"method", method}};
            std::cout << out.dump(2) << "\n";
        }
        return kExitPass;
    }

    if (*alphaf) {
        dsr::Graph g = input.load();
        auto def = dsr::max_deficiency(g);
        int twice = g.order() - def.value;
        if (format == "plain") {
            std::cout << "twice_alpha_f=" << twice << " alpha_f=" << render_fraction(twice)
                      << " witness=" << dsr::verify_detail::show(def.witness) << "\n";
        } else {
            json out = {{"twice_alpha_f", twice},
                        {"alpha_f", render_fraction(twice)},
                        {"deficiency", def.value},
                        {"witness", def.witness}};
            std::cout << out.dump(2) << "\n";
        }
        return kExitPass;
    }

    if (*factor) {
        dsr::Graph g = input.load();
        bool has;
        int weight = 1;
        if (kind == "k2ck") {
            has = dsr::has_k2_ck_factor(g);
        } else {
            weight = k;
            has = dsr::has_star_factor(g, k);
        }
        json out = {{"kind", kind}, {"has_factor", has}};
        if (kind == "star") out["k"] = k;
        if (!has) {
            auto def = dsr::max_weighted_deficiency(g, weight);
            out["violating_set"] = def.witness;
            out["isolated_minus_weighted_size"] = def.value;
        }
        if (format == "plain") {
            std::cout << "has_factor=" << (has ? "true" : "false");
            if (!has) std::cout << " violating_set=" << out["violating_set"].dump();
            std::cout << "\n";
        } else {
            std::cout << out.dump(2) << "\n";
        }
        return kExitPass;
    }

    dsr::VerificationReport report;
    if (*verify) {
        dsr::Family fam = parse_family(family_str);
        if (theorem == "fm")
            report = dsr::verify_sharpness(dsr::Theorem::FM, n, delta, k, vopt);
        else if (theorem == "fpm")
            report = dsr::verify_sharpness(dsr::Theorem::FPM, n, delta, k, vopt);
        else if (theorem == "k2ck")
            report = dsr::verify_sharpness(dsr::Theorem::K2CK, n, delta, k, vopt);
        else if (theorem == "star")
            report = dsr::verify_sharpness(dsr::Theorem::STAR, n, delta, k, vopt);
        else if (theorem == "quotient")
            report = dsr::verify_quotient_equality({fam, n, delta, k}, vopt);
        else if (theorem == "edgemono")
            report = dsr::verify_edge_monotonicity(n, samples, seed, vopt);
        else
            report = dsr::verify_monotonicity_in_s(fam, n, delta, k, vopt);
        report.params["tolerances"] = {{"eq_tol", vopt.eq_tol},
                                       {"strict_margin", vopt.strict_margin},
                                       {"edge_margin", vopt.edge_margin}};
        if (format == "csv") {
            int s_hi = theorem == "mono-s"
                           ? (fam == dsr::Family::A ? (n - k - 1) / 2 : (n - 2) / (k + 1))
                           : delta;
            emit_csv_rows(fam, n, delta, theorem == "k2ck" || theorem == "fpm" ? 1 : k, delta,
                          s_hi);
        } else {
            print_report(report, format);
        }
        return report.pass ? kExitPass : kExitFail;
    }

    if (*search) {
        dsr::Theorem t = theorem == "fm"     ? dsr::Theorem::FM
                         : theorem == "fpm"  ? dsr::Theorem::FPM
                         : theorem == "k2ck" ? dsr::Theorem::K2CK
                                             : dsr::Theorem::STAR;
        report = dsr::search_counterexamples(t, n, delta, k, samples, seed, vopt);
        report.params["tolerances"] = {{"strict_margin", vopt.strict_margin}};
        print_report(report, format);
        return report.pass ? kExitPass : kExitFail;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dsr::capability_error& e) {
        std::cerr << json{{"error", {{"type", "capability"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kExitCapability;
    } catch (const dsr::parse_error& e) {
        std::cerr << json{{"error", {{"type", "parse"}, {"message", e.what()}}}}.dump() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", {{"type", "invalid-parameter"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump() << "\n";
        return kExitFail;
    }
}
