#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "padic/json_io.hpp"
#include "padic/verify.hpp"

using namespace padic;
using nlohmann::json;

namespace {

struct RunConfig {
    long p = 3;
    int precision = 30;
    long terms = 0;  // 0 = auto from precision
    std::uint64_t seed = 0;
    std::string r = "1";
    std::string x = "0";
    long m = 1;
    std::string format = "table";
    std::string out;

    PrimeContext context() const { return PrimeContext(p, precision); }
    long window(const PrimeContext& ctx) const {
        return terms > 0 ? terms : default_window(ctx);
    }
};

cpp_rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return cpp_rational(cpp_int(s));
    return cpp_rational(cpp_int(s.substr(0, slash)),
                        cpp_int(s.substr(slash + 1)));
}

/// spec := q | one | g | f | beta:<k> | T(spec) | S^<m>(spec)
MahlerSeries parse_function(const std::string& spec, const PrimeContext& ctx,
                            long N, const cpp_rational& r) {
    if (spec == "q") return q_series(ctx, N);
    if (spec == "one" || spec == "1")
        return constant_series(ctx, cpp_int(1), N);
    if (spec == "g") return g_series(ctx, GammaParameter(ctx, r), N);
    if (spec == "f") return f_r_series(ctx, GammaParameter(ctx, r), N);
    if (spec.rfind("beta:", 0) == 0)
        return beta_series(ctx, std::stol(spec.substr(5)), N);
    if (spec.rfind("T(", 0) == 0 && spec.back() == ')')
        return transform_T(
                   parse_function(spec.substr(2, spec.size() - 3), ctx, N, r),
                   N)
            .image;
    if (spec.rfind("S^", 0) == 0) {
        auto open = spec.find('(');
        if (open != std::string::npos && spec.back() == ')') {
            long m = std::stol(spec.substr(2, open - 2));
            return iterate_S(
                parse_function(spec.substr(open + 1, spec.size() - open - 2),
                               ctx, N, r),
                m);
        }
    }
    throw std::invalid_argument("unknown function spec: " + spec);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream os(cfg.out);
    if (!os) throw std::runtime_error("cannot write " + cfg.out);
    os << text << "\n";
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2)); }

std::string report_table(const std::vector<VerificationReport>& rs) {
    std::ostringstream os;
    os << "identity | samples | min_residual | required | pass\n";
    for (const auto& r : rs) {
        os << r.identity << " | " << r.samples << " | ";
        if (r.min_residual_valuation >= kValInf)
            os << "inf";
        else
            os << r.min_residual_valuation;
        os << " | " << r.required_valuation << " | "
           << (r.pass ? "yes" : "no") << "\n";
    }
    return os.str();
}

int emit_reports(const RunConfig& cfg,
                 const std::vector<VerificationReport>& rs) {
    if (cfg.format == "json")
        emit_json(cfg, io::reports_to_json(rs));
    else
        emit(cfg, report_table(rs));
    return all_pass(rs) ? 0 : 1;
}

std::vector<VerificationReport> run_suite(const std::string& suite,
                                          const PrimeContext& ctx,
                                          std::uint64_t seed) {
    if (suite == "sigma") return verify::sigma_suite(ctx, seed);
    if (suite == "gamma") return verify::gamma_suite(ctx, seed);
    if (suite == "measures") return verify::measures_suite(ctx, seed);
    if (suite == "ode") return verify::ode_suite(ctx, seed);
    if (suite == "all") return verify::all_suites(ctx, seed);
    throw std::invalid_argument("unknown suite: " + suite);
}

void emit_series(const RunConfig& cfg, const MahlerSeries& f) {
    if (cfg.format == "csv")
        emit(cfg, io::series_to_csv(f));
    else
        emit_json(cfg, io::series_to_json(f));
}

BoundedPowerSeries parse_coeff_list(const PrimeContext& ctx,
                                    const std::string& arg) {
    // inline "a,b,c" (integers or a/b rationals) or a path to a power
    // series JSON file
    BoundedPowerSeries G{ctx, {}, kValInf};
    if (std::ifstream is{arg}) {
        json j;
        is >> j;
        return io::power_series_from_json(j);
    }
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        G.coeffs.push_back(Scalar::from_rational(ctx, parse_rational(tok)));
        G.bound_valuation = val_min(G.bound_valuation,
                                    G.coeffs.back().valuation_lower_bound());
    }
    if (G.coeffs.empty())
        throw std::invalid_argument("de solve: empty coefficient list");
    return G;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"p-adic Mahler-series calculus"};
    app.require_subcommand(1);
    app.add_option("--p", cfg.p, "prime")->envname("PADIC_P");
    app.add_option("--precision", cfg.precision, "absolute precision digits")
        ->envname("PADIC_PRECISION");
    app.add_option("--terms", cfg.terms, "truncation window (0 = auto)")
        ->envname("PADIC_TERMS");
    app.add_option("--seed", cfg.seed, "sweep seed")->envname("PADIC_SEED");
    app.add_option("--r", cfg.r, "parameter r (rational a/b in 1 + pZ_p)")
        ->envname("PADIC_R");
    app.add_option("--x", cfg.x, "evaluation point (rational a/b in Z_p)")
        ->envname("PADIC_X");
    app.add_option("--m", cfg.m, "iteration count / shift")
        ->envname("PADIC_M");
    app.add_option("--format", cfg.format, "output format: json|csv|table")
        ->envname("PADIC_FORMAT");
    app.add_option("--out", cfg.out, "output path (default stdout)")
        ->envname("PADIC_OUT");

    std::string fspec = "q", aspec = "q", bspec = "one", route = "diagonal";
    std::string suite = "all", coeffs;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a function at x");
    eval_cmd->add_option("--f", fspec, "q|one|g|f|gamma_bar|beta:<k>|T(...)|S^<m>(...)");

    auto* sigma_cmd = app.add_subcommand("sigma", "the automorphism S");
    sigma_cmd->require_subcommand(1);
    auto* sigma_apply = sigma_cmd->add_subcommand("apply", "S(f)");
    auto* sigma_inv = sigma_cmd->add_subcommand("inv", "S^{-1}(f)");
    auto* sigma_iter = sigma_cmd->add_subcommand("iterate", "S^m(f)");
    auto* sigma_rec =
        sigma_cmd->add_subcommand("recurrence", "a_n = n a_{n-1} + f(n)");
    for (auto* c : {sigma_apply, sigma_inv, sigma_iter, sigma_rec})
        c->add_option("--f", fspec, "function spec");

    auto* gamma_cmd =
        app.add_subcommand("gamma", "incomplete Gamma interpolant");
    auto* gamma_verify =
        gamma_cmd->add_subcommand("verify", "oracle comparison sweep");

    auto* pair_cmd = app.add_subcommand("pair", "the bilinear pairing");
    pair_cmd->add_option("--a", aspec, "left function spec");
    pair_cmd->add_option("--b", bspec, "right function spec");
    pair_cmd->add_option("--route", route, "diagonal|integral|star_eval");

    auto* star_cmd = app.add_subcommand("star", "binomial convolution");
    star_cmd->add_option("--a", aspec, "left function spec");
    star_cmd->add_option("--b", bspec, "right function spec");

    auto* transform_cmd =
        app.add_subcommand("transform", "integral transform T");
    transform_cmd->add_option("--f", fspec, "function spec");

    auto* de_cmd = app.add_subcommand("de", "linear differential equation");
    auto* de_solve = de_cmd->add_subcommand("solve", "solve F' + F = G");
    de_solve->add_option("--coeffs", coeffs, "inline list a,b,c or JSON file")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify", "invariant sweeps");
    verify_cmd->add_option("--suite", suite, "sigma|gamma|measures|ode|all");
    auto* verify_measures =
        app.add_subcommand("verify-measures", "alias of verify --suite measures");

    auto* export_cmd = app.add_subcommand("export", "write series or reports");
    export_cmd->add_option("--f", fspec, "function spec to export");
    auto* export_suite_opt =
        export_cmd->add_option("--suite", suite, "export this suite's reports");

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough(true);
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough(true);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        PrimeContext ctx = cfg.context();
        long N = cfg.window(ctx);
        cpp_rational r = parse_rational(cfg.r);
        Scalar x = Scalar::from_rational(ctx, parse_rational(cfg.x));

        if (*eval_cmd) {
            Scalar v = fspec == "gamma_bar"
                           ? gamma_bar_eval(ctx, GammaParameter(ctx, r), x, N)
                           : eval(parse_function(fspec, ctx, N, r), x);
            emit_json(cfg, io::scalar_to_json(v));
            return 0;
        }
        if (*sigma_cmd) {
            MahlerSeries f = parse_function(fspec, ctx, N, r);
            if (*sigma_apply) emit_series(cfg, apply_S(f));
            if (*sigma_inv) emit_series(cfg, inv_S(f));
            if (*sigma_iter) emit_series(cfg, iterate_S(f, cfg.m));
            if (*sigma_rec) {
                json vals = json::array();
                for (const Scalar& a : solve_factorial_recurrence(f, cfg.m))
                    vals.push_back(io::scalar_to_json(a));
                emit_json(cfg, vals);
            }
            return 0;
        }
        if (*gamma_cmd) {
            if (*gamma_verify)
                return emit_reports(cfg,
                                    verify::gamma_suite(ctx, cfg.seed));
            emit_json(cfg, io::scalar_to_json(gamma_bar_eval(
                               ctx, GammaParameter(ctx, r), x, N)));
            return 0;
        }
        if (*pair_cmd) {
            PairRoute rt = route == "integral"  ? PairRoute::integral
                           : route == "star_eval" ? PairRoute::star_eval
                                                  : PairRoute::diagonal;
            if (route != "diagonal" && route != "integral" &&
                route != "star_eval")
                throw std::invalid_argument("unknown route: " + route);
            emit_json(cfg, io::scalar_to_json(
                               pair(parse_function(aspec, ctx, N, r),
                                    parse_function(bspec, ctx, N, r), rt)));
            return 0;
        }
        if (*star_cmd) {
            emit_series(cfg, star(parse_function(aspec, ctx, N, r),
                                  parse_function(bspec, ctx, N, r)));
            return 0;
        }
        if (*transform_cmd) {
            TransformImage t =
                transform_T(parse_function(fspec, ctx, N, r), N);
            json j;
            j["schema_version"] = io::kSchemaVersion;
            j["image"] = io::series_to_json(t.image);
            j["basis"] = json::array();
            for (const Scalar& b : t.basis)
                j["basis"].push_back(io::scalar_to_json(b));
            val_t c = transform_consistency(t);
            j["consistency_residual_valuation"] =
                c >= kValInf ? json("inf") : json(c);
            emit_json(cfg, j);
            return 0;
        }
        if (*de_cmd) {
            DESolution sol = solve_linear_de(parse_coeff_list(ctx, coeffs));
            json j;
            j["schema_version"] = io::kSchemaVersion;
            j["F"] = io::power_series_to_json(sol.F);
            j["residual_window"] = sol.residual_window;
            j["min_residual_valuation"] =
                sol.min_residual_valuation >= kValInf
                    ? json("inf")
                    : json(sol.min_residual_valuation);
            j["coeff_valuation_bound"] = sol.coeff_valuation_bound;
            emit_json(cfg, j);
            return 0;
        }
        if (*verify_measures)
            return emit_reports(cfg, verify::measures_suite(ctx, cfg.seed));
        if (*verify_cmd)
            return emit_reports(cfg, run_suite(suite, ctx, cfg.seed));
        if (*export_cmd) {
            if (*export_suite_opt)
                return emit_reports(cfg, run_suite(suite, ctx, cfg.seed));
            if (fspec == "h1") {
                emit_json(cfg, io::power_series_to_json(h_one(ctx, N)));
                return 0;
            }
            emit_series(cfg, parse_function(fspec, ctx, N, r));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
