// Command-line front end: verdicts, falsification runs, order tables, lemma
// suites and the consolidated reproduction table. Exit codes are part of the
// interface; see README.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subord/config.hpp"
#include "subord/contact.hpp"
#include "subord/examples.hpp"
#include "subord/expression.hpp"
#include "subord/gft.hpp"
#include "subord/report.hpp"
#include "subord/suites.hpp"

using namespace subord;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;    // violation / counterexample / suite failure
constexpr int kExitVacuous = 2;    // inconclusive / vacuous
constexpr int kExitUsage = 3;      // malformed input

struct GlobalOpts {
    std::string config_path;
    std::string out_path;
    RunConfig cfg;
};

void finish(ReportDoc& doc, const GlobalOpts& g) {
    std::cout << doc.render_table();
    if (!g.out_path.empty()) doc.write(g.out_path);
}

int cmd_admissible(const GlobalOpts& g, const std::string& example, int n, double beta, double M) {
    ExampleCase ex = example_case(example, n, beta, M);
    ReportDoc doc("admissible", g.cfg.to_json());
    doc.add_row({{"name", "case " + ex.id},
                 {"psi", "structured"},
                 {"map", ex.map.describe()},
                 {"omega", ex.omega.describe()},
                 {"n", ex.n},
                 {"beta", ex.beta}});

    int exit_code = kExitOk;
    try {
        const AdmissibilityVerdict v =
            check_admissible(ex.psi, ex.omega, ex.map, ex.n, ex.beta, g.cfg.search);
        doc.add_row({{"name", "verdict"}, {"verdict", verdict_to_json(v)},
                     {"pass", v.admissible()}});
        if (ex.omega_is_disk) {
            const double rstar = sharp_disk_radius(ex.psi, ex.map, ex.n, ex.beta, g.cfg.search);
            doc.add_check("sharp disk radius R*", rstar, ex.closed_form(), 1e-6);
        }
        switch (v.status) {
            case AdmissibleStatus::AdmissibleExact:
            case AdmissibleStatus::AdmissibleNumeric: exit_code = kExitOk; break;
            case AdmissibleStatus::Violation: exit_code = kExitFinding; break;
            case AdmissibleStatus::Inconclusive: exit_code = kExitVacuous; break;
        }
    } catch (const not_admissible_error& e) {
        doc.add_check(std::string("not admissible: ") + e.what(), false);
        exit_code = kExitFinding;
    }
    finish(doc, g);
    return exit_code;
}

int cmd_falsify(const GlobalOpts& g, const std::string& example, int n, double beta, double M,
                long samples, double shrink) {
    ExampleCase ex = example_case(example, n, beta, M);
    FalsifyOptions opts;
    opts.conclusion_shrink = shrink;
    opts.degree = g.cfg.degree;
    opts.threads = g.cfg.threads;
    const FalsificationReport rep = falsify_implication(ex.psi, ex.omega, ex.map, ex.spec, samples,
                                                        g.cfg.seed, g.cfg.grid, opts);

    ReportDoc doc("falsify", g.cfg.to_json());
    doc.add_row({{"name", "case " + ex.id}, {"map", ex.map.describe()},
                 {"omega", ex.omega.describe()}, {"n", ex.n}, {"beta", ex.beta},
                 {"samples", samples}, {"shrink_conclusion", shrink}});
    doc.add_row({{"name", "falsification"}, {"report", falsification_to_json(rep)},
                 {"pass", rep.counterexamples.empty() && !rep.vacuous()}});
    finish(doc, g);

    if (!rep.counterexamples.empty()) return kExitFinding;
    if (rep.vacuous()) return kExitVacuous;
    return kExitOk;
}

int cmd_order(const GlobalOpts& g, const std::string& theorem, double a2, bool sweep,
              int sweep_count, bool verify) {
    ReportDoc doc("order", g.cfg.to_json());
    std::vector<double> values;
    if (sweep) {
        const double hi = (theorem == "5.3") ? 2.0 : 1.0;
        for (int i = 0; i <= sweep_count; ++i) values.push_back(hi * i / sweep_count);
    } else {
        values.push_back(a2);
    }

    for (double b : values) {
        if (theorem == "5.1") {
            const OrderResult r = starlike_order_of_convex(b);
            doc.add_row({{"name", "alpha(|a2|)"}, {"a2", b}, {"alpha", r.alpha},
                         {"residual", r.residual}, {"pass", r.residual < 1e-10}});
            std::printf("%.6f  %.12f\n", b, r.alpha);
        } else if (theorem == "5.2") {
            const double alpha = sqrt_deriv_order(b);
            doc.add_row({{"name", "alpha(|a2|)"}, {"a2", b}, {"alpha", alpha}, {"pass", true}});
            std::printf("%.6f  %.12f\n", b, alpha);
        } else if (theorem == "5.3") {
            const double alpha = sqrt_ratio_order(b);
            doc.add_row({{"name", "alpha(|a2|)"}, {"a2", b}, {"alpha", alpha}, {"pass", true}});
            std::printf("%.6f  %.12f\n", b, alpha);
        } else {
            std::cerr << "unknown theorem id: " << theorem << " (use 5.1, 5.2, 5.3)\n";
            return kExitUsage;
        }
    }

    if (verify) {
        const OrderTheorem which = (theorem == "5.1")   ? OrderTheorem::StarlikeOrder
                                   : (theorem == "5.2") ? OrderTheorem::SqrtDeriv
                                                        : OrderTheorem::SqrtRatio;
        const cplx phases[] = {cplx(1.0), std::polar(1.0, 0.25 * 3.141592653589793)};
        for (double cmag : {0.25, 0.5, 0.75, 1.0}) {
            for (const cplx& ph : phases) {
                const cplx c = cmag * ph;
                for (ConvexKind kind : {ConvexKind::HalfplaneType, ConvexKind::LogType}) {
                    const FamilyMember fm = (which == OrderTheorem::SqrtRatio)
                                                ? starlike_family(kind, c)
                                                : convex_family(kind, c);
                    const OrderVerification v = verify_order_theorem(which, fm.f);
                    doc.add_row({{"name", fm.name + " corpus"}, {"c", {c.real(), c.imag()}},
                                 {"verify", order_verification_to_json(v)}, {"pass", v.pass}});
                }
            }
        }
    }

    finish(doc, g);
    return doc.all_pass() ? kExitOk : kExitFinding;
}

int cmd_lemma(const GlobalOpts& g, const std::string& which, long trials,
              const std::string& function_expr, const std::string& z0_expr) {
    ReportDoc doc("lemma", g.cfg.to_json());

    if (!function_expr.empty()) {
        // Spot check of the interior-maximum data on an explicit function.
        const Series f = parse_series_expression(function_expr, g.cfg.degree);
        const cplx z0 = parse_complex_expression(z0_expr.empty() ? "0.5" : z0_expr);
        const ContactReport rep = verify_interior_max(f, z0);
        doc.add_row({{"name", "interior max at z0"}, {"function", function_expr},
                     {"report", contact_to_json(rep)}, {"pass", rep.pass}});
        finish(doc, g);
        return rep.pass ? kExitOk : kExitFinding;
    }

    auto add = [&](const std::string& name, const SuiteResult& r) {
        doc.add_row({{"name", name}, {"trials", r.trials}, {"failures", r.failures},
                     {"skipped", r.skipped}, {"worst_margin", r.worst_margin}, {"note", r.note},
                     {"pass", r.all_pass()}});
    };

    const std::uint64_t seed = g.cfg.seed;
    if (which == "schwarz" || which == "1.1") {
        add("schwarz bound", schwarz_bound_suite(trials, seed, g.cfg.grid));
        add("schwarz extremal", schwarz_extremal_suite(trials, seed + 1));
    } else if (which == "2.1") {
        add("interior max", interior_max_suite(trials, seed));
    } else if (which == "2.2") {
        add("boundary contact", boundary_contact_suite(trials, seed));
    } else if (which == "2.3") {
        add("max modulus growth", max_modulus_growth_suite(trials, seed));
    } else if (which == "2.4") {
        add("min Re", min_re_suite(trials, seed));
    } else if (which == "all") {
        add("schwarz bound", schwarz_bound_suite(trials, seed, g.cfg.grid));
        add("schwarz extremal", schwarz_extremal_suite(trials, seed + 1));
        add("interior max", interior_max_suite(trials, seed + 2));
        add("boundary contact", boundary_contact_suite(trials, seed + 3));
        add("max modulus growth", max_modulus_growth_suite(trials, seed + 4));
        add("min Re", min_re_suite(trials, seed + 5));
    } else {
        std::cerr << "unknown lemma id: " << which << " (use schwarz, 2.1, 2.2, 2.3, 2.4, all)\n";
        return kExitUsage;
    }
    finish(doc, g);
    return doc.all_pass() ? kExitOk : kExitFinding;
}

int cmd_reproduce(const GlobalOpts& g) {
    ReportDoc doc("reproduce", g.cfg.to_json());

    // Sharp constants against their closed forms.
    for (int n : {1, 2, 3}) {
        for (double M : {0.5, 1.0, 2.0}) {
            for (double frac : {0.25, 0.5, 1.0}) {
                const double beta = frac * M;
                ExampleCase ex = example_case("4.1", n, beta, M);
                const double rstar = sharp_disk_radius(ex.psi, ex.map, n, beta, g.cfg.search);
                char name[96];
                std::snprintf(name, sizeof name, "case 4.1 R* (n=%d, M=%g, beta=%g)", n, M, beta);
                doc.add_check(name, rstar, ex.closed_form(), 1e-6);
            }
        }
    }
    for (double beta : {0.5, 1.0, 2.0}) {
        ExampleCase ex = example_case("4.2", 1, beta, 1.0);
        char name[64];
        std::snprintf(name, sizeof name, "case 4.2 R* (beta=%g)", beta);
        doc.add_check(name, sharp_disk_radius(ex.psi, ex.map, 1, beta, g.cfg.search),
                      ex.closed_form(), 1e-6);
    }
    for (double beta : {0.25, 0.5, 1.0}) {
        ExampleCase ex = example_case("4.5", 2, beta, 1.0);
        char name[64];
        std::snprintf(name, sizeof name, "case 4.5 R* (beta=%g)", beta);
        doc.add_check(name, sharp_disk_radius(ex.psi, ex.map, 2, beta, g.cfg.search),
                      ex.closed_form(), 1e-6);
    }

    // Admissibility threshold decisions.
    for (const char* id : {"4.3", "4.4"}) {
        for (double beta : {0.5, 1.0, 2.0}) {
            ExampleCase ex = example_case(id, 1, beta, 1.0);
            const double threshold = ex.closed_form();
            for (int nn = 1; nn <= 3; ++nn) {
                const AdmissibilityVerdict v =
                    check_admissible(ex.psi, ex.omega, ex.map, nn, beta, g.cfg.search);
                const bool expect = nn + 1e-12 >= threshold;
                char name[96];
                std::snprintf(name, sizeof name, "case %s decision (n=%d, beta=%g)", id, nn, beta);
                doc.add_check(name, v.admissible() == expect,
                              {{"verdict", verdict_to_json(v)}, {"threshold", threshold}});
            }
        }
    }

    // Order formulas and their special values.
    doc.add_check("order 5.1 alpha(1)", starlike_order_of_convex(1.0).alpha, 0.5, 1e-10);
    doc.add_check("order 5.1 alpha(0)", starlike_order_of_convex(0.0).alpha,
                  (std::sqrt(5.0) - 1.0) / 2.0, 1e-10);
    doc.add_check("order 5.2 alpha(1)", sqrt_deriv_order(1.0), 0.5, 1e-12);
    doc.add_check("order 5.2 alpha(0)", sqrt_deriv_order(0.0), 2.0 / 3.0, 1e-12);
    doc.add_check("order 5.3 alpha(2)", sqrt_ratio_order(2.0), 0.5, 1e-12);
    doc.add_check("order 5.3 alpha(0)", sqrt_ratio_order(0.0), 2.0 / 3.0, 1e-12);

    {
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double b = 2.0 * i / 100.0;
            worst = std::max(worst, std::abs(sqrt_ratio_order(b) - sqrt_deriv_order(b / 2.0)));
        }
        doc.add_check("order cross-identity max|a_5.8(b) - a_5.4(b/2)|", worst, 0.0, 1e-12);
    }
    {
        bool decreasing = true;
        double prev = starlike_order_of_convex(0.0).alpha;
        for (int i = 1; i <= 50; ++i) {
            const double cur = starlike_order_of_convex(i / 50.0).alpha;
            if (!(cur < prev)) decreasing = false;
            prev = cur;
        }
        doc.add_check("order 5.1 strictly decreasing", decreasing);
    }

    finish(doc, g);
    return doc.all_pass() ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "numerical toolkit for second-order differential subordination with fixed initial "
        "coefficient"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "JSON config file (default: $SUBORD_CONFIG)");
    app.add_option("--out", g.out_path, "write the JSON report here");
    std::uint64_t seed_flag = 0;
    bool seed_set = false;
    app.add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& v) { seed_flag = v; seed_set = true; }, "master seed");
    int degree_flag = 0;
    app.add_option("--degree", degree_flag, "series truncation degree");
    int threads_flag = -1;
    app.add_option("--threads", threads_flag, "worker threads (0 = hardware)");

    std::string example = "4.1";
    int n = 1;
    double beta = 1.0, M = 1.0;
    long samples = 1000;
    double shrink = 1.0;

    auto* adm = app.add_subcommand("admissible", "admissibility verdict for a built-in case");
    adm->add_option("--example", example, "case id: 4.1 .. 4.5")->required();
    adm->add_option("--n", n, "class index n");
    adm->add_option("--beta", beta, "fixed coefficient magnitude");
    adm->add_option("--M", M, "disk radius (case 4.1)");

    auto* fal = app.add_subcommand("falsify", "sampled falsification run for a built-in case");
    fal->add_option("--example", example, "case id: 4.1 .. 4.5")->required();
    fal->add_option("--n", n, "class index n");
    fal->add_option("--beta", beta, "fixed coefficient magnitude");
    fal->add_option("--M", M, "disk radius (case 4.1)");
    fal->add_option("--samples", samples, "sample count");
    fal->add_option("--shrink-conclusion", shrink, "negative control: shrink factor in (0,1]");

    std::string theorem = "5.1";
    double a2 = 1.0;
    bool sweep = false, verify = false;
    int sweep_count = 20;
    auto* ord = app.add_subcommand("order", "order-of-starlikeness formulas");
    ord->add_option("--theorem", theorem, "5.1, 5.2 or 5.3")->required();
    ord->add_option("--a2", a2, "second-coefficient magnitude");
    ord->add_flag("--sweep", sweep, "tabulate over the full |a2| range");
    ord->add_option("--sweep-count", sweep_count, "sweep resolution");
    ord->add_flag("--verify", verify, "run the explicit family corpus");

    std::string which = "all";
    long trials = 200;
    std::string function_expr, z0_expr;
    auto* lem = app.add_subcommand("lemma", "contact-lemma property suites");
    lem->add_option("--which", which, "schwarz, 2.1, 2.2, 2.3, 2.4 or all");
    lem->add_option("--trials", trials, "trials per suite");
    lem->add_option("--function", function_expr, "explicit series expression, e.g. \"z^2\"");
    lem->add_option("--z0", z0_expr, "contact point expression, e.g. \"0.7*exp(i*pi/3)\"");

    app.add_subcommand("reproduce", "consolidated constant-reproduction table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        g.cfg = RunConfig::load(g.config_path);
        if (seed_set) g.cfg.seed = seed_flag;
        if (degree_flag > 0) g.cfg.degree = degree_flag;
        if (threads_flag >= 0) g.cfg.threads = threads_flag;
        g.cfg.validate();

        if (app.got_subcommand("admissible")) return cmd_admissible(g, example, n, beta, M);
        if (app.got_subcommand("falsify"))
            return cmd_falsify(g, example, n, beta, M, samples, shrink);
        if (app.got_subcommand("order"))
            return cmd_order(g, theorem, a2, sweep, sweep_count, verify);
        if (app.got_subcommand("lemma")) return cmd_lemma(g, which, trials, function_expr, z0_expr);
        if (app.got_subcommand("reproduce")) return cmd_reproduce(g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFinding;
    }
    return kExitUsage;
}
