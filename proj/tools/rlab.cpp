// Command-line front end for the exact sequence laboratory.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rlab/elliptic.hpp"
#include "rlab/hankel.hpp"
#include "rlab/oeis.hpp"
#include "rlab/orthopoly.hpp"
#include "rlab/parallel.hpp"
#include "rlab/recurrences.hpp"
#include "rlab/repro.hpp"
#include "rlab/riordan.hpp"
#include "rlab/somos.hpp"

using namespace rlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string g_format = "text";

bool records() { return g_format == "records"; }

Series series_arg(const std::string& text) {
    SequenceWindow w = parse_sequence(text);
    if (w.empty()) throw IoError("empty series argument");
    return Series(std::move(w));
}

std::string no_spaces(std::string s) {
    std::erase(s, ' ');
    return s;
}

void print_series(const std::string& label, const Series& s) {
    if (records())
        std::cout << "kind=series label=" << label << " order=" << s.order()
                  << " coeffs=" << no_spaces(format_sequence(s.coeffs())) << "\n";
    else
        std::cout << label << ": " << format_series(s) << "\n";
}

void print_window(const std::string& label, const SequenceWindow& w) {
    if (records())
        std::cout << "kind=window label=" << label
                  << " terms=" << no_spaces(format_sequence(w)) << "\n";
    else
        std::cout << label << ": " << format_sequence(w) << "\n";
}

int print_report(const ConjectureReport& rep) {
    std::cout << (records() ? format_report_records(rep) : format_report(rep));
    return rep.all_passed() ? kExitOk : kExitVerificationFailure;
}

std::vector<Rational> rational_list(const std::string& text) {
    return parse_sequence(text);
}

// "1,2;0;1/2,3" -> cartesian product of the per-position choice lists
std::vector<std::vector<Rational>> parse_grid(const std::string& text) {
    std::vector<std::vector<Rational>> axes;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) axes.push_back(parse_sequence(part));
    std::vector<std::vector<Rational>> points{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<Rational>> next;
        for (const auto& base : points)
            for (const auto& v : axis) {
                auto p = base;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        points = std::move(next);
    }
    return points;
}

// ---- subcommand bodies ----

int run_series(const std::string& op, const std::string& p, const std::string& q,
               const std::string& a, const std::string& b, const std::string& cc,
               std::size_t order) {
    // coefficient lists are read as exact polynomials and zero-extended
    // to --order when shorter
    auto padded = [order](const std::string& text) {
        SequenceWindow w = parse_sequence(text);
        if (w.empty()) throw IoError("empty series argument");
        std::size_t n = std::max(order, w.size() - 1);
        return Series::polynomial(w, n);
    };
    if (op == "catalan") {
        print_series("catalan", catalan_gf(order));
        return kExitOk;
    }
    if (op == "solve-quadratic") {
        QuadraticGF quad{padded(a), padded(b), padded(cc)};
        print_series("solution", solve_quadratic_gf(quad, order));
        return kExitOk;
    }
    Series sp = padded(p);
    if (op == "revert") {
        print_series("revert", series_revert(sp));
        return kExitOk;
    }
    if (op == "sqrt") {
        print_series("sqrt", series_sqrt(sp));
        return kExitOk;
    }
    Series sq = padded(q);
    if (op == "mul") print_series("product", sp * sq);
    else if (op == "div") print_series("quotient", sp / sq);
    else if (op == "compose") print_series("composition", series_compose(sp, sq));
    else throw CLI::ValidationError("unknown series op " + op);
    return kExitOk;
}

int run_riordan(const std::string& op, const std::string& g, const std::string& f,
                const std::string& h, std::size_t n, const std::string& r,
                const std::string& t, std::size_t k) {
    if (op == "binomial") {
        print_series("transform", binomial_transform(series_arg(h), parse_rational(r)));
        return kExitOk;
    }
    if (op == "invert") {
        print_series("transform", invert_transform(series_arg(h), parse_rational(t)));
        return kExitOk;
    }
    if (op == "prepend1") {
        print_series("transform", prepend_one_gf(series_arg(h)));
        return kExitOk;
    }
    if (op == "aerate") {
        print_series("transform", aerate(series_arg(h), k));
        return kExitOk;
    }
    if (op == "pseudo-involution") {
        bool ok = pseudo_involution_check(series_arg(g), n);
        std::cout << (ok ? "pseudo-involution: yes" : "pseudo-involution: no") << "\n";
        return kExitOk;
    }
    RiordanPair pair(series_arg(g), series_arg(f));
    if (op == "matrix") {
        std::cout << format_matrix(riordan_matrix(pair, n));
    } else if (op == "apply") {
        print_series("image", riordan_apply(pair, series_arg(h)));
    } else if (op == "inverse") {
        RiordanPair inv = riordan_inverse(pair);
        print_series("g", inv.g());
        print_series("f", inv.f());
    } else {
        throw CLI::ValidationError("unknown riordan op " + op);
    }
    return kExitOk;
}

int run_recur(const std::string& family, const std::string& params, std::size_t depth,
              bool with_gf, bool convert) {
    auto ps = rational_list(params);
    auto need = [&](std::size_t k) {
        if (ps.size() != k)
            throw CLI::ValidationError("family " + family + " needs " + std::to_string(k) +
                                       " parameters");
    };
    SequenceWindow seq;
    std::optional<Series> gf;
    if (family == "r2") {
        need(3);
        Recurrence2Spec s{ps[0], ps[1], ps[2]};
        seq = iterate_recurrence(s, depth);
        if (with_gf) gf = gf_recurrence2(s, depth);
    } else if (family == "r3") {
        need(5);
        Recurrence3Spec s{ps[0], ps[1], ps[2], ps[3], ps[4]};
        seq = iterate_recurrence(s, depth);
        if (with_gf) gf = gf_recurrence3(s, depth);
        if (convert) {
            auto r5 = params_to_riordan(s);
            print_window("riordan-params", {r5.a, r5.b, r5.c, r5.d, r5.m});
        }
    } else if (family == "r4") {
        need(7);
        Recurrence4Spec s{ps[0], ps[1], ps[2], ps[3], ps[4], ps[5], ps[6]};
        seq = iterate_recurrence(s, depth);
        if (with_gf) gf = gf_recurrence4(s, depth);
        if (convert) {
            auto r7 = params_to_riordan(s);
            print_window("riordan-params", {r7.a, r7.b, r7.c, r7.d, r7.e, r7.f, r7.m});
        }
    } else if (family == "full") {
        if (ps.size() != 3 && ps.size() != 4)
            throw CLI::ValidationError("family full needs r,s,t[,p]");
        FullConvolutionSpec s{ps[0], ps[1], ps[2],
                              ps.size() == 4 ? std::optional<Rational>(ps[3]) : std::nullopt};
        seq = iterate_recurrence(s, depth);
        if (with_gf) gf = gf_full_convolution(s, depth);
    } else {
        throw CLI::ValidationError("unknown family " + family + " (r2|r3|r4|full)");
    }
    print_window("iteration", seq);
    if (gf) {
        print_series("closed-form", *gf);
        if (window_of(*gf) != seq) {
            std::cout << "closed-form DISAGREES with iteration\n";
            return kExitVerificationFailure;
        }
        std::cout << "closed-form matches iteration\n";
    }
    return kExitOk;
}

int run_hankel(const std::string& seq, long depth) {
    SequenceWindow a = parse_sequence(seq);
    SequenceWindow h =
        depth >= 0 ? hankel_transform(a, static_cast<std::size_t>(depth)) : hankel_transform(a);
    print_window("hankel", h);
    return kExitOk;
}

int run_jfrac(const std::string& op, const std::string& seq, const std::string& alphas,
              const std::string& betas, const std::string& mu0, std::size_t order) {
    if (op == "from-moments") {
        auto ext = jfraction_from_moments(parse_sequence(seq));
        print_window("alphas", ext.jf.alphas);
        print_window("betas", ext.jf.betas);
        std::cout << "mu0: " << to_string(ext.jf.mu0) << "\n";
        if (ext.singular_delta)
            std::cout << "singular hankel block at n = " << *ext.singular_delta
                      << " (extraction stopped)\n";
        return kExitOk;
    }
    JFraction j{parse_sequence(alphas), parse_sequence(betas), parse_rational(mu0)};
    if (op == "to-series") {
        print_series("expansion", jfraction_to_series(j, order));
        return kExitOk;
    }
    if (op == "heilermann") {
        print_window("hankel", heilermann_hankel(j, order));
        return kExitOk;
    }
    throw CLI::ValidationError("unknown jfrac op " + op);
}

int run_curve(const std::string& curve, const std::string& point, std::size_t order,
              std::size_t multiples) {
    auto cs = rational_list(curve);
    if (cs.size() != 5) throw CLI::ValidationError("--curve needs a1,a2,a3,a4,a6");
    CurveSpec e(cs[0], cs[1], cs[2], cs[3], cs[4]);
    std::cout << "discriminant: " << to_string(e.discriminant())
              << (e.is_singular() ? " (singular)" : "") << "\n";
    CurvePoint p = CurvePoint::affine(rat(0), rat(0));
    if (!point.empty()) {
        auto xy = rational_list(point);
        if (xy.size() != 2) throw CLI::ValidationError("--point needs x,y");
        p = CurvePoint::affine(xy[0], xy[1]);
    }
    if (!e.contains(p)) throw PointNotOnCurve();

    CoordinateTable table = point_multiples(e, p, multiples);
    std::string xs = "x(nP):", ys = "y(nP):", zs = "y/x:  ";
    for (const auto& row : table.rows) {
        xs += " " + to_string(row.x);
        ys += " " + to_string(row.y);
        zs += " " + (row.ratio ? to_string(*row.ratio) : std::string("-"));
    }
    std::cout << xs << "\n" << ys << "\n" << zs << "\n";
    if (table.truncated_at)
        std::cout << "table truncated: " << *table.truncated_at << "P is at infinity\n";

    if (!p.infinity)
        print_window("psi", division_polynomial_values(e, p, multiples));

    try {
        print_series("moment-gf", curve_moment_gf(e, p, order));
    } catch (const Error& err) {
        std::cout << "moment-gf: not computable (" << err.what() << ")\n";
    }
    try {
        PipelineResult pipe = curve_pipeline(e, order);
        print_series("f", pipe.f.truncated(order));
        print_series("f1", pipe.f1.truncated(order));
        print_series("a", pipe.a);
        print_window("hankel(a)", pipe.hankel);
    } catch (const Error& err) {
        std::cout << "pipeline: not computable (" << err.what() << ")\n";
    }
    return kExitOk;
}

int run_somos(const std::string& op, const std::string& seq, const std::string& alpha,
              const std::string& beta) {
    SequenceWindow e = parse_sequence(seq);
    if (op == "detect") {
        auto det = detect_somos4(e);
        if (std::holds_alternative<NoWitness>(det)) {
            std::cout << "no witness; first violation at index "
                      << std::get<NoWitness>(det).first_violation << "\n";
            return kExitVerificationFailure;
        }
        const auto& w = std::get<SomosWitness>(det);
        std::cout << "somos4 witness: alpha=" << to_string(w.alpha)
                  << " beta=" << to_string(w.beta)
                  << " window=[" << w.window_begin << ".." << w.window_end << "]"
                  << (w.degenerate ? " (degenerate family; canonical representative)" : "")
                  << "\n";
        return kExitOk;
    }
    if (op == "verify") {
        auto claim = verify_somos4(e, parse_rational(alpha), parse_rational(beta));
        ConjectureReport rep;
        rep.family = "somos4";
        rep.params = "alpha=" + alpha + ", beta=" + beta;
        rep.claims.push_back(claim);
        return print_report(rep);
    }
    throw CLI::ValidationError("unknown somos op " + op);
}

int run_conjecture(const std::string& family, const std::string& params,
                   const std::string& grid, std::size_t depth) {
    std::vector<std::vector<Rational>> points;
    if (!grid.empty()) points = parse_grid(grid);
    else points.push_back(rational_list(params));

    std::map<std::string, Somos4Family> somos_families{
        {"catalan-schroeder-somos", Somos4Family::CatalanSchroeder},
        {"third-shifted-somos", Somos4Family::ThirdOrderShifted},
        {"third-pq-somos", Somos4Family::ThirdOrderPQ},
        {"cubic-somos", Somos4Family::CubicNumerator},
        {"curve-family-somos", Somos4Family::CurveFamily},
        {"full-somos", Somos4Family::FullConvolution},
        {"full-p-somos", Somos4Family::FullConvolutionP}};
    std::map<std::string, HankelFormulaFamily> hankel_families{
        {"catalan-schroeder-hankel", HankelFormulaFamily::CatalanSchroeder},
        {"alpha-hankel", HankelFormulaFamily::AlphaQuadratic},
        {"beta-hankel", HankelFormulaFamily::BetaQuadratic},
        {"quartic-hankel", HankelFormulaFamily::QuarticAB}};

    std::vector<ConjectureReport> reports(points.size());
    auto run_point = [&](std::size_t i) {
        if (auto it = somos_families.find(family); it != somos_families.end()) {
            reports[i] = verify_somos_conjecture(it->second, points[i], depth);
        } else if (auto jt = hankel_families.find(family); jt != hankel_families.end()) {
            reports[i] = verify_hankel_formula_conjectures(jt->second, points[i], depth);
        } else if (family == "general-curve") {
            if (points[i].size() != 3)
                throw Error("general-curve needs parameters a,b,c");
            reports[i] =
                general_formula_check(points[i][0], points[i][1], points[i][2], 2 * depth);
        } else {
            throw Error("unknown conjecture family " + family);
        }
    };
    // grid points are independent pure computations: fan out
    try {
        parallel_for(points.size(), run_point);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    bool all = true;
    for (const auto& rep : reports) {
        all = all && rep.all_passed();
        std::cout << (records() ? format_report_records(rep) : format_report(rep));
    }
    std::cout << (all ? "all points verified\n" : "counterexamples reported above\n");
    return all ? kExitOk : kExitVerificationFailure;
}

int run_repro(const std::string& golden_dir) {
    auto report = repro_run(builtin_repro_cases(), load_golden_dir(golden_dir));
    for (const auto& o : report.outcomes) {
        if (records())
            std::cout << "case=" << o.name << " ref=\"" << o.ref << "\" status="
                      << to_label(o.status)
                      << (o.diff.empty() ? "" : " diff=\"" + o.diff + "\"") << "\n";
        else
            std::cout << "[" << to_label(o.status) << "] " << o.name << " (" << o.ref << ")"
                      << (o.diff.empty() ? "" : ": " + o.diff) << "\n";
    }
    for (const auto& name : report.unmatched_golden)
        std::cout << "[FAIL] golden case without computation: " << name << "\n";
    for (const auto& name : report.unmatched_cases)
        std::cout << "[FAIL] computation without golden file: " << name << "\n";
    std::cout << report.outcomes.size() << " cases run\n";
    return report.all_passed() ? kExitOk : kExitVerificationFailure;
}

int run_oeis(const std::string& seq, const std::string& path, std::size_t min_match) {
    std::string dbpath = path;
    if (dbpath.empty()) {
        const char* env = std::getenv("RLAB_OEIS_PATH");
        if (env) dbpath = env;
    }
    if (dbpath.empty())
        throw CLI::ValidationError("no database: pass --oeis or set RLAB_OEIS_PATH");
    OeisDatabase db = oeis_load(dbpath);
    if (db.skipped_lines)
        std::cout << "skipped " << db.skipped_lines << " malformed lines\n";
    auto matches = oeis_identify(db, parse_sequence(seq), min_match);
    for (const auto& m : matches)
        std::cout << m.id << " offset " << m.offset << "\n";
    if (matches.empty()) std::cout << "no matches\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit: recurrences, Riordan arrays, Hankel/Somos "
                 "analysis, elliptic-curve sequence pipelines"};
    app.require_subcommand(1);
    app.add_option("--format", g_format, "output format: text|records")
        ->check(CLI::IsMember({"text", "records"}));

    std::string op, p, q, a, b, cc, g, f, h, r, t, seq, alphas, betas, mu0, family, params,
        grid, curve, point, alpha, beta, golden = "data/golden", oeis_path;
    std::size_t order = 10, n = 6, k = 2, depth = 8, multiples = 7, min_match = 6;
    long hdepth = -1;
    bool with_gf = false, convert = false;

    auto* s_series = app.add_subcommand("series", "truncated power series operations");
    s_series->add_option("op", op)->required();
    s_series->add_option("--p", p, "first series, comma-separated coefficients");
    s_series->add_option("--q", q, "second series");
    s_series->add_option("--a", a, "quadratic coefficient a");
    s_series->add_option("--b", b, "quadratic coefficient b");
    s_series->add_option("--c", cc, "quadratic coefficient c");
    s_series->add_option("--order", order);

    auto* s_rior = app.add_subcommand("riordan", "Riordan pairs and transforms");
    s_rior->add_option("op", op)->required();
    s_rior->add_option("--g", g);
    s_rior->add_option("--f", f);
    s_rior->add_option("--input", h, "series the operation acts on");
    s_rior->add_option("-n,--dim", n);
    s_rior->add_option("--r", r);
    s_rior->add_option("--t", t);
    s_rior->add_option("--k", k);

    auto* s_recur = app.add_subcommand("recur", "convolution recurrence families");
    s_recur->add_option("--family", family)->required();
    s_recur->add_option("--params", params)->required();
    s_recur->add_option("--depth", depth);
    s_recur->add_flag("--gf", with_gf, "also expand and cross-check the closed form");
    s_recur->add_flag("--convert", convert, "print the Riordan parameter conversion");

    auto* s_hankel = app.add_subcommand("hankel", "exact Hankel transform");
    s_hankel->add_option("--seq", seq)->required();
    s_hankel->add_option("--depth", hdepth);

    auto* s_jfrac = app.add_subcommand("jfrac", "Jacobi continued fractions");
    s_jfrac->add_option("op", op)->required();
    s_jfrac->add_option("--seq", seq);
    s_jfrac->add_option("--alphas", alphas);
    s_jfrac->add_option("--betas", betas);
    s_jfrac->add_option("--mu0", mu0, "leading coefficient")->default_val("1");
    s_jfrac->add_option("--order", order);

    auto* s_curve = app.add_subcommand("curve", "Weierstrass curve pipelines");
    s_curve->add_option("--curve", curve, "a1,a2,a3,a4,a6")->required();
    s_curve->add_option("--point", point, "x,y (default 0,0)");
    s_curve->add_option("--order", order);
    s_curve->add_option("--multiples", multiples);

    auto* s_somos = app.add_subcommand("somos", "Somos-4 detection and verification");
    s_somos->add_option("op", op)->required();
    s_somos->add_option("--seq", seq)->required();
    s_somos->add_option("--alpha", alpha);
    s_somos->add_option("--beta", beta);

    auto* s_conj = app.add_subcommand("conjecture", "batch conjecture verification");
    s_conj->add_option("family", family)->required();
    s_conj->add_option("--params", params);
    s_conj->add_option("--grid", grid, "semicolon-separated per-parameter value lists");
    s_conj->add_option("--depth", depth);

    auto* s_repro = app.add_subcommand("repro", "run the golden reproduction suite");
    s_repro->add_option("--golden", golden, "golden file directory");

    auto* s_oeis = app.add_subcommand("oeis", "identify a window in a stripped-format file");
    s_oeis->add_option("--seq", seq)->required();
    s_oeis->add_option("--oeis", oeis_path, "stripped file (default $RLAB_OEIS_PATH)");
    s_oeis->add_option("--min-match", min_match);

    CLI11_PARSE(app, argc, argv);

    try {
        if (s_series->parsed()) return run_series(op, p, q, a, b, cc, order);
        if (s_rior->parsed()) return run_riordan(op, g, f, h, n, r, t, k);
        if (s_recur->parsed()) return run_recur(family, params, depth, with_gf, convert);
        if (s_hankel->parsed()) return run_hankel(seq, hdepth);
        if (s_jfrac->parsed()) return run_jfrac(op, seq, alphas, betas, mu0, order);
        if (s_curve->parsed()) return run_curve(curve, point, order, multiples);
        if (s_somos->parsed()) return run_somos(op, seq, alpha, beta);
        if (s_conj->parsed()) return run_conjecture(family, params, grid, depth);
        if (s_repro->parsed()) return run_repro(golden);
        if (s_oeis->parsed()) return run_oeis(seq, oeis_path, min_match);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
