// Command-line front end: builds solutions on either family, verifies them,
// and emits JSON reports, CSV plot data and parameter-grid surveys.
//
// Exit codes: 0 verification passed, 1 verification failed, 2 usage error,
// 3 inconsistent kappa system, 4 positivity failed.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "kym/cym.hpp"
#include "kym/json_report.hpp"
#include "kym/verifier.hpp"

namespace {

using namespace kym;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitPositivity = 4;

Rational parse_rational_or_exit(const std::string& text, const std::string& flag) {
    const auto r = Rational::parse(text);
    if (!r) {
        std::cerr << "error: " << flag << " expects a rational \"p/q\" or integer, got \""
                  << text << "\"\n";
        std::exit(kExitUsage);
    }
    return *r;
}

QuadratureOptions quadrature_options_from_env() {
    QuadratureOptions opts;
    if (const char* tol = std::getenv("CYM_QUAD_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(tol, &end);
        if (end != tol && v > 0) opts.rel_tol = v;
    }
    return opts;
}

void write_output(const nlohmann::json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        std::exit(kExitUsage);
    }
    out << text;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv_profile(const std::string& path, const RunManifest& manifest,
                       const CymProblem& prob, const PoleSum& F, int samples) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(kExitUsage);
    }
    out << "# command: " << manifest.command << "\n";
    out << "# parameters: " << manifest.parameters << "\n";
    out << "# version: " << manifest.version << "\n";
    out << "# timestamp: " << manifest.timestamp << "\n";
    out << "# input_hash: " << manifest.input_hash << "\n";
    out << "z,F,Scal,FA_norm_sq\n";
    PoleSum scal;
    {
        PoleSum second = F.derivative().derivative();
        for (std::size_t i = 0; i < prob.xs.size(); ++i) {
            scal += PoleSum::pole(prob.xs[i], 1, Rational(2) * prob.ss[i] * prob.xs[i]);
            second = second.divide_linear(prob.xs[i]);
        }
        scal -= second;
    }
    for (int i = 0; i < samples; ++i) {
        const double z = -1.0 + 2.0 * i / (samples - 1);
        out << fmt_double(z) << "," << fmt_double(eval_double(F, z)) << ","
            << fmt_double(eval_double(scal, z)) << ","
            << fmt_double(eval_double(prob.fa_norm_sq, z)) << "\n";
    }
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += " ";
        s += argv[i];
    }
    return s;
}

// ---------------------------------------------------------------------------
// surface

struct SurfaceFlags {
    int k = 0, kprime = 0, k1 = 0, k2 = 0, genus = 0;
    std::string out, csv;
    int samples = 101;
};

int run_surface(const SurfaceFlags& flags, const RunManifest& manifest,
                const std::vector<Rational>& eps, std::optional<int> cym_samples) {
    SurfaceConfig cfg;
    cfg.k = flags.k;
    cfg.kprime = flags.kprime;
    cfg.k1 = flags.k1;
    cfg.k2 = flags.k2;
    cfg.genus = flags.genus;
    SurfaceSolution sol;
    try {
        cfg.validate();
        sol = build_surface_solution(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const VerificationReport verification = verify_solution(sol);
    std::optional<MinimalityReport> minimality;
    if (cym_samples) {
        minimality = minimality_report(sol, eps, *cym_samples, quadrature_options_from_env());
    }
    write_output(solution_report(manifest, sol, verification, minimality), flags.out);
    if (!flags.csv.empty())
        write_csv_profile(flags.csv, manifest, make_cym_problem(sol), sol.F, flags.samples);
    return verification.overall ? kExitPass : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// threefold

struct ThreefoldFlags {
    std::string x1, x2, s1, s2;
    std::string a, b, kappa2;
    int k1 = 0, k2 = 0;  // 0 = pick the minimal consistent degree
    std::string out, csv;
    int samples = 101;
};

// Minimal-|k| degree consistent with sign(k) = sign(x) and an integer
// genus h = 1 - s k / 2 >= 0.
std::optional<int> minimal_degree(const Rational& x, const Rational& s) {
    const int sign = x.sign();
    for (int mag = 1; mag <= 64; ++mag) {
        const int k = sign * mag;
        const Rational h = Rational(1) - s * Rational(static_cast<long>(k)) / Rational(2);
        if (h.is_integer() && h.sign() >= 0) return k;
    }
    return std::nullopt;
}

int run_threefold(const ThreefoldFlags& flags, const RunManifest& manifest,
                  const std::vector<Rational>& eps, std::optional<int> cym_samples) {
    ThreefoldConfig cfg;
    cfg.x1 = parse_rational_or_exit(flags.x1, "--x1");
    cfg.x2 = parse_rational_or_exit(flags.x2, "--x2");
    cfg.s1 = parse_rational_or_exit(flags.s1, "--s1");
    cfg.s2 = parse_rational_or_exit(flags.s2, "--s2");
    if (!flags.a.empty()) cfg.a = parse_rational_or_exit(flags.a, "--a");
    if (!flags.b.empty()) cfg.b = parse_rational_or_exit(flags.b, "--b");
    if (flags.k1 != 0) cfg.k1 = flags.k1;
    else cfg.k1 = minimal_degree(cfg.x1, cfg.s1);
    if (flags.k2 != 0) cfg.k2 = flags.k2;
    else cfg.k2 = minimal_degree(cfg.x2, cfg.s2);
    std::optional<Rational> kappa2_choice;
    if (!flags.kappa2.empty()) kappa2_choice = parse_rational_or_exit(flags.kappa2, "--kappa2");

    ThreefoldSolution sol;
    try {
        cfg.validate();
        const KappaSolution ks = solve_kappa_system(cfg.x1, cfg.x2, cfg.s1, cfg.s2);
        if (std::holds_alternative<KappaInconsistent>(ks)) {
            write_output(inconsistent_report(manifest, cfg), flags.out);
            return kExitInconsistent;
        }
        if (const auto* fam = std::get_if<KappaFamily>(&ks)) {
            if (!kappa2_choice) {
                std::cerr << "error: one-parameter family (kappa1 = "
                          << fam->kappa1_intercept.str() << " + " << fam->kappa1_slope.str()
                          << " * kappa2); supply --kappa2\n";
                return kExitUsage;
            }
            sol = build_threefold_solution(cfg, *kappa2_choice);
        } else if (kappa2_choice) {
            sol = build_threefold_solution(cfg, *kappa2_choice);
        } else {
            sol = build_threefold_solution(cfg);
        }
    } catch (const InconsistentSystem&) {
        write_output(inconsistent_report(manifest, cfg), flags.out);
        return kExitInconsistent;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const VerificationReport verification = verify_solution(sol);
    std::optional<MinimalityReport> minimality;
    if (cym_samples && cfg.a && cfg.b) {
        minimality = minimality_report(sol, eps, *cym_samples, quadrature_options_from_env());
    }
    write_output(solution_report(manifest, sol, verification, minimality), flags.out);
    if (!flags.csv.empty()) {
        CymProblem prob;
        if (cfg.a && cfg.b) {
            prob = make_cym_problem(sol);
        } else {
            prob.family = Family::threefold;
            prob.xs = {cfg.x1, cfg.x2};
            prob.ss = {cfg.s1, cfg.s2};
        }
        write_csv_profile(flags.csv, manifest, prob, sol.F, flags.samples);
    }
    if (!verification.overall) {
        if (!sol.positivity_holds && verification.only_failure_is("positivity"))
            return kExitPositivity;
        return kExitVerifyFail;
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// survey

struct SurveyFlags {
    std::string x1_min, x1_max, x1_step;
    std::string x2_min, x2_max, x2_step;
    std::string s1, s2;
    std::string out;
};

struct SurveyRow {
    Rational x1, x2;
    std::string classification;
    std::string kappa2;
    int kappa2_sign = 0;
    bool valid = false;
};

SurveyRow survey_point(const Rational& x1, const Rational& x2, const Rational& s1,
                       const Rational& s2) {
    SurveyRow row;
    row.x1 = x1;
    row.x2 = x2;
    const Rational one{1};
    if (x1.is_zero() || x2.is_zero() || !(x1.abs() < one) || !(x2.abs() < one) || x1 == x2 ||
        !(s1 * x1 < Rational(2)) || !(s2 * x2 < Rational(2)))
        return row;  // outside the admissible range; skipped
    row.valid = true;
    const KappaSolution ks = solve_kappa_system(x1, x2, s1, s2);
    if (std::holds_alternative<KappaInconsistent>(ks)) {
        row.classification = "inconsistent";
        return row;
    }
    if (std::holds_alternative<KappaFamily>(ks)) {
        row.classification = "family";
        row.kappa2 = "free";
        return row;
    }
    const auto& u = std::get<KappaUnique>(ks);
    row.kappa2 = u.kappa2.str();
    row.kappa2_sign = u.kappa2.sign();
    ThreefoldConfig cfg;
    cfg.x1 = x1;
    cfg.x2 = x2;
    cfg.s1 = s1;
    cfg.s2 = s2;
    const ThreefoldSolution sol = build_threefold_solution_with_kappas(cfg, u.kappa1, u.kappa2);
    row.classification = sol.positivity_holds ? "unique+positive" : "unique+nonpositiveF";
    return row;
}

int run_survey(const SurveyFlags& flags, const RunManifest& manifest) {
    const Rational x1_min = parse_rational_or_exit(flags.x1_min, "--x1-min");
    const Rational x1_max = parse_rational_or_exit(flags.x1_max, "--x1-max");
    const Rational x1_step = parse_rational_or_exit(flags.x1_step, "--x1-step");
    const Rational x2_min = parse_rational_or_exit(flags.x2_min, "--x2-min");
    const Rational x2_max = parse_rational_or_exit(flags.x2_max, "--x2-max");
    const Rational x2_step = parse_rational_or_exit(flags.x2_step, "--x2-step");
    const Rational s1 = parse_rational_or_exit(flags.s1, "--s1");
    const Rational s2 = parse_rational_or_exit(flags.s2, "--s2");
    if (x1_step.sign() <= 0 || x2_step.sign() <= 0 || x1_max < x1_min || x2_max < x2_min) {
        std::cerr << "error: bad grid bounds\n";
        return kExitUsage;
    }

    std::vector<std::pair<Rational, Rational>> grid;
    for (Rational x1 = x1_min; x1 <= x1_max; x1 += x1_step)
        for (Rational x2 = x2_min; x2 <= x2_max; x2 += x2_step) grid.emplace_back(x1, x2);

    std::vector<SurveyRow> rows(grid.size());
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> futures;
    const std::size_t chunk = (grid.size() + workers - 1) / std::max<std::size_t>(1, workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(grid.size(), lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [&grid, &rows, &s1, &s2, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i)
                rows[i] = survey_point(grid[i].first, grid[i].second, s1, s2);
        }));
    }
    for (auto& f : futures) f.get();

    std::size_t emitted = 0;
    std::ostringstream csv;
    csv << "# command: " << manifest.command << "\n";
    csv << "# parameters: " << manifest.parameters << "\n";
    csv << "# version: " << manifest.version << "\n";
    csv << "# timestamp: " << manifest.timestamp << "\n";
    csv << "# input_hash: " << manifest.input_hash << "\n";
    csv << "x1,x2,classification,kappa2,kappa2_sign\n";
    for (const auto& row : rows) {
        if (!row.valid) continue;
        csv << row.x1.str() << "," << row.x2.str() << "," << row.classification << ","
            << row.kappa2 << "," << row.kappa2_sign << "\n";
        ++emitted;
    }
    if (emitted == 0) {
        std::cerr << "error: empty grid (no admissible points)\n";
        return kExitUsage;
    }
    if (flags.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(flags.out);
        if (!out) {
            std::cerr << "error: cannot open " << flags.out << "\n";
            return kExitUsage;
        }
        out << csv.str();
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupled Kahler-Yang-Mills solutions on ruled manifolds: "
                 "construction, exact verification, and CYM minimality checks"};
    app.require_subcommand(1);
    const std::string args_joined = join_args(argc, argv);

    SurfaceFlags sf;
    ThreefoldFlags tf;
    SurveyFlags vf;
    std::vector<std::string> eps_raw;
    int cym_samples = 64;

    CLI::App* surface = app.add_subcommand("surface", "ruled-surface family solution + report");
    surface->add_option("--k", sf.k, "degree of the line bundle on the base")->required();
    surface->add_option("--kprime", sf.kprime, "fiber-size parameter k'")->required();
    surface->add_option("--k1", sf.k1, "curvature parameter a = k1")->required();
    surface->add_option("--k2", sf.k2, "curvature parameter (b = k2(2k+k')k'/k^2)")->required();
    surface->add_option("--genus", sf.genus, "genus of the base curve")->required();
    surface->add_option("--out", sf.out, "write the JSON report here instead of stdout");
    surface->add_option("--csv", sf.csv, "write z,F,Scal,FA_norm_sq samples to this CSV");
    surface->add_option("--samples", sf.samples, "CSV sample count")->check(CLI::Range(2, 1000000));

    CLI::App* threefold =
        app.add_subcommand("threefold", "projective-bundle-over-a-product solution + report");
    threefold->add_option("--x1", tf.x1, "rational x1, 0 < |x1| < 1")->required();
    threefold->add_option("--x2", tf.x2, "rational x2, 0 < |x2| < 1")->required();
    threefold->add_option("--s1", tf.s1, "base scalar-curvature parameter s1")->required();
    threefold->add_option("--s2", tf.s2, "base scalar-curvature parameter s2")->required();
    threefold->add_option("--a", tf.a, "curvature-form parameter a");
    threefold->add_option("--b", tf.b, "curvature-form parameter b (nonzero)");
    threefold->add_option("--kappa2", tf.kappa2, "kappa2 choice on the family branch");
    threefold->add_option("--k1", tf.k1, "line-bundle degree over the first factor");
    threefold->add_option("--k2", tf.k2, "line-bundle degree over the second factor");
    threefold->add_option("--out", tf.out, "write the JSON report here instead of stdout");
    threefold->add_option("--csv", tf.csv, "write z,F,Scal,FA_norm_sq samples to this CSV");
    threefold->add_option("--samples", tf.samples, "CSV sample count")
        ->check(CLI::Range(2, 1000000));

    CLI::App* survey = app.add_subcommand("survey", "classify the kappa system over an (x1, x2) grid");
    survey->add_option("--x1-min", vf.x1_min)->required();
    survey->add_option("--x1-max", vf.x1_max)->required();
    survey->add_option("--x1-step", vf.x1_step)->required();
    survey->add_option("--x2-min", vf.x2_min)->required();
    survey->add_option("--x2-max", vf.x2_max)->required();
    survey->add_option("--x2-step", vf.x2_step)->required();
    survey->add_option("--s1", vf.s1)->required();
    survey->add_option("--s2", vf.s2)->required();
    survey->add_option("--out", vf.out, "write the CSV here instead of stdout");

    CLI::App* cym = app.add_subcommand("cym", "CYM minimality report for a solution");
    CLI::App* cym_surface = cym->add_subcommand("surface", "surface-family parameters");
    cym_surface->add_option("--k", sf.k)->required();
    cym_surface->add_option("--kprime", sf.kprime)->required();
    cym_surface->add_option("--k1", sf.k1)->required();
    cym_surface->add_option("--k2", sf.k2)->required();
    cym_surface->add_option("--genus", sf.genus)->required();
    cym_surface->add_option("--out", sf.out);
    CLI::App* cym_threefold = cym->add_subcommand("threefold", "threefold-family parameters");
    cym_threefold->add_option("--x1", tf.x1)->required();
    cym_threefold->add_option("--x2", tf.x2)->required();
    cym_threefold->add_option("--s1", tf.s1)->required();
    cym_threefold->add_option("--s2", tf.s2)->required();
    cym_threefold->add_option("--a", tf.a)->required();
    cym_threefold->add_option("--b", tf.b)->required();
    cym_threefold->add_option("--kappa2", tf.kappa2);
    cym_threefold->add_option("--k1", tf.k1);
    cym_threefold->add_option("--k2", tf.k2);
    cym_threefold->add_option("--out", tf.out);
    cym->add_option("--eps", eps_raw, "perturbation sizes (rationals)");
    cym->add_option("--samples", cym_samples, "quadrature panels (>= 16)");
    cym->require_subcommand(1);
    cym_surface->fallthrough();
    cym_threefold->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (surface->parsed()) {
            return run_surface(sf, make_manifest("surface", args_joined), {}, std::nullopt);
        }
        if (threefold->parsed()) {
            return run_threefold(tf, make_manifest("threefold", args_joined), {}, std::nullopt);
        }
        if (survey->parsed()) {
            return run_survey(vf, make_manifest("survey", args_joined));
        }
        if (cym->parsed()) {
            if (cym_samples < 16) {
                std::cerr << "error: --samples must be >= 16\n";
                return kExitUsage;
            }
            std::vector<Rational> eps;
            for (const auto& raw : eps_raw) eps.push_back(parse_rational_or_exit(raw, "--eps"));
            if (eps.empty()) eps = {Rational(1, 100), Rational(1, 10)};
            if (cym_surface->parsed())
                return run_surface(sf, make_manifest("cym surface", args_joined), eps,
                                   cym_samples);
            return run_threefold(tf, make_manifest("cym threefold", args_joined), eps,
                                 cym_samples);
        }
    } catch (const QuadratureNotConverged& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
