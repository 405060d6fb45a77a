#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rlab/elliptic.hpp"
#include "rlab/errors.hpp"
#include "rlab/hankel.hpp"
#include "rlab/recurrences.hpp"
#include "rlab/report.hpp"
#include "rlab/riordan.hpp"
#include "rlab/sequence.hpp"

namespace rlab {

// A named computation whose output is compared against a golden window.
struct ReproCase {
    std::string name;
    std::function<SequenceWindow()> compute;
};

// Golden file: `name: <id>`, `ref: <source tag>`, `expect: <comma list>`.
struct GoldenCase {
    std::string name;
    std::string ref;
    SequenceWindow expect;
};

inline GoldenCase load_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    GoldenCase out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw IoError("bad golden line in " + path);
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        while (!val.empty() && (val.front() == ' ' || val.front() == '\t')) val.erase(val.begin());
        if (key == "name") out.name = val;
        else if (key == "ref") out.ref = val;
        else if (key == "expect") out.expect = parse_sequence(val);
        else throw IoError("unknown golden key '" + key + "' in " + path);
    }
    if (out.name.empty()) throw IoError("golden case without name: " + path);
    if (out.ref.empty()) throw IoError("golden case without ref tag: " + path);
    if (out.expect.empty()) throw IoError("golden case without expected window: " + path);
    return out;
}

inline std::vector<GoldenCase> load_golden_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw IoError("golden directory missing: " + dir);
    std::vector<GoldenCase> out;
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".golden") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) out.push_back(load_golden_file(p.string()));
    return out;
}

namespace repro_detail {

inline SequenceWindow take(SequenceWindow w, std::size_t n) {
    if (w.size() > n) w.resize(n);
    return w;
}

inline CurveSpec fib_curve() { return CurveSpec(rat(-1), rat(-2), rat(1), rat(1), rat(0)); }
inline CurveSpec walk_curve() { return CurveSpec(rat(-3), rat(0), rat(-1), rat(-1), rat(0)); }
inline CurveSpec fam_m3_curve() { return CurveSpec(rat(4), rat(-4), rat(1), rat(-3), rat(0)); }
inline CurveSpec fam_t0_curve() { return CurveSpec(rat(4), rat(-1), rat(1), rat(0), rat(0)); }
inline CurvePoint origin() { return CurvePoint::affine(rat(0), rat(0)); }

inline SequenceWindow rec2(long p, long s, long t, std::size_t n) {
    return iterate_recurrence(Recurrence2Spec{rat(p), rat(s), rat(t)}, n);
}
inline SequenceWindow rec3(long p, long q, long r, long s, long t, std::size_t n) {
    return iterate_recurrence(Recurrence3Spec{rat(p), rat(q), rat(r), rat(s), rat(t)}, n);
}
inline SequenceWindow rec4(long p, long q, long s, long u, long v, long w, long t,
                           std::size_t n) {
    return iterate_recurrence(
        Recurrence4Spec{rat(p), rat(q), rat(s), rat(u), rat(v), rat(w), rat(t)}, n);
}
inline SequenceWindow shifted(SequenceWindow a) {
    return SequenceWindow(a.begin() + 1, a.end());
}
inline SequenceWindow negated(SequenceWindow a) {
    for (auto& v : a) v = -v;
    return a;
}

// the scaled-numerator quadratic family member
inline SequenceWindow alpha_member(long alpha, std::size_t n) {
    Series den = Series::polynomial({1, -1, -1}, n);
    Series num = Series::polynomial({rat(1), rat(-1), rat(-alpha)}, n);
    RiordanPair pair(num / den, (Series::monomial(2, Rational(1), n) * num) / (den * den));
    return window_of(riordan_apply(pair, catalan_gf(n)));
}

inline SequenceWindow quartic_member(long alpha, std::size_t n) {
    Series den = Series::polynomial({1, -1, -1, -1}, n);
    Series num = Series::polynomial({rat(1), rat(-1), rat(-1), rat(-alpha)}, n);
    RiordanPair pair(num / den, (Series::monomial(3, Rational(1), n) * num) / (den * den));
    return window_of(riordan_apply(pair, catalan_gf(n)));
}

inline SequenceWindow rna_related(std::size_t n) {
    Series den = Series::polynomial({1, -1, -1}, n);
    Series num = Series::polynomial({1, -1}, n);
    RiordanPair pair(num / den, (Series::monomial(3, Rational(1), n) * num) / (den * den));
    return window_of(riordan_apply(pair, catalan_gf(n)));
}

}  // namespace repro_detail

// The reproduction registry: every printed window the library is expected
// to regenerate, keyed by the golden-file names under data/golden/.
inline std::vector<ReproCase> builtin_repro_cases() {
    using namespace repro_detail;
    std::vector<ReproCase> cases;
    auto add = [&](std::string name, std::function<SequenceWindow()> fn) {
        cases.push_back({std::move(name), std::move(fn)});
    };

    add("motivating-atilde", [] { return window_of(curve_moment_gf(fib_curve(), origin(), 10)); });
    add("motivating-a", [] { return take(window_of(curve_pipeline(fib_curve(), 10).a), 11); });
    add("motivating-hankel", [] { return take(curve_pipeline(fib_curve(), 20).hankel, 11); });
    add("motivating-psi",
        [] { return division_polynomial_values(fib_curve(), origin(), 12); });
    add("catalan", [] { return window_of(catalan_gf(9)); });
    add("schroeder-large", [] { return rec2(2, 3, 1, 9); });
    add("schroeder-little", [] { return rec2(1, 3, 2, 9); });
    add("cs-a111", [] { return rec2(1, 1, 1, 12); });
    add("cs-a112", [] { return rec2(1, 1, 2, 11); });
    add("cs-a211-hankel", [] { return hankel_transform(rec2(2, 1, 1, 12)); });
    add("cs-a1m1m1",
        [] { return window_of(gf_recurrence2(Recurrence2Spec{rat(1), rat(-1), rat(-1)}, 10)); });
    add("third-a086581", [] { return rec3(1, 2, 2, 1, 1, 10); });
    add("third-motzkin", [] { return rec3(1, 2, 1, 2, 1, 10); });
    add("third-a025272", [] { return rec3(1, 2, 2, 2, 1, 10); });
    add("third-a025272-shift-hankel",
        [] { return hankel_transform(shifted(rec3(1, 2, 2, 2, 1, 22))); });
    add("third-signed1", [] { return rec3(-1, 2, -2, -1, -1, 11); });
    add("third-signed1-hankel", [] { return hankel_transform(rec3(-1, 2, -2, -1, -1, 11)); });
    add("third-signed2", [] { return rec3(-1, -2, 2, -1, -1, 11); });
    add("third-signed2-hankel", [] { return hankel_transform(rec3(-1, -2, 2, -1, -1, 11)); });
    add("third-alpha1-seq", [] { return take(alpha_member(1, 12), 13); });
    add("third-alpha1-hankel", [] { return hankel_transform(alpha_member(1, 17), 8); });
    add("third-alpham1-seq", [] { return take(alpha_member(-1, 12), 13); });
    add("third-alpham1-hankel", [] { return hankel_transform(alpha_member(-1, 13), 6); });
    add("fourth-a004149", [] { return rec4(1, 1, 2, 1, 1, 1, 1, 12); });
    add("fourth-a162985", [] { return rec4(1, 2, 3, 1, 1, 1, 1, 11); });
    add("fourth-a023431", [] { return rec4(1, 1, 2, 1, 0, 2, 1, 15); });
    add("fourth-a004148", [] { return rec4(1, 2, 4, 1, 1, 2, 1, 12); });
    add("fourth-rna-related", [] { return take(rna_related(12), 13); });
    add("fourth-rna-related-hankel", [] { return hankel_transform(rna_related(21), 10); });
    add("fourth-1362221", [] { return rec4(1, 3, 6, 1, 2, 2, 1, 11); });
    add("fourth-1362221-hankel", [] { return hankel_transform(rec4(1, 3, 6, 1, 2, 2, 1, 18), 9); });
    add("fourth-anbn-m1-seq", [] { return take(quartic_member(-1, 15), 16); });
    add("fourth-anbn-m1-hankel", [] { return hankel_transform(quartic_member(-1, 21), 10); });
    add("fourth-bn", [] {
        SequenceWindow out;
        for (long v : quartic_bn_window(12)) out.push_back(rat(v));
        return out;
    });
    add("conv-doubly-aerated", [] { return rec4(0, 0, 2, 0, 0, 3, 1, 17); });
    add("conv-doubly-aerated-hankel",
        [] { return hankel_transform(rec4(0, 0, 2, 0, 0, 3, 1, 20)); });
    add("walkthrough-a", [] { return take(window_of(curve_pipeline(walk_curve(), 10).a), 11); });
    add("walkthrough-hankel", [] { return take(curve_pipeline(walk_curve(), 21).hankel, 11); });
    add("walkthrough-ym",
        [] { return window_of(solve_curve_for_y(walk_curve(), 10).first); });
    add("walkthrough-yp",
        [] { return window_of(solve_curve_for_y(walk_curve(), 10).second); });
    add("walkthrough-g-hankel", [] {
        Series yp = solve_curve_for_y(walk_curve(), 24).second;
        Series g(std::vector<Rational>(yp.coeffs().begin() + 2, yp.coeffs().end()));
        return take(hankel_transform(window_of(g)), 7);
    });
    add("walkthrough-binom2", [] {
        return take(window_of(binomial_transform(curve_pipeline(walk_curve(), 11).a, rat(2))), 12);
    });
    add("family-atilde",
        [] { return window_of(curve_moment_gf(fam_m3_curve(), origin(), 14)); });
    add("family-a", [] { return take(window_of(curve_pipeline(fam_m3_curve(), 10).a), 11); });
    add("family-hankel", [] { return take(curve_pipeline(fam_m3_curve(), 21).hankel, 11); });
    add("family-t0-a", [] { return take(window_of(curve_pipeline(fam_t0_curve(), 10).a), 11); });
    add("family-t0-hankel", [] { return take(curve_pipeline(fam_t0_curve(), 17).hankel, 9); });
    add("general-c1-anchor",
        [] { return take(window_of(curve_moment_gf(fib_curve(), origin(), 8)), 9); });
    return cases;
}

struct ReproOutcome {
    std::string name;
    std::string ref;
    CheckStatus status = CheckStatus::Pass;
    std::string diff;
};

struct ReproReport {
    std::vector<ReproOutcome> outcomes;
    std::vector<std::string> unmatched_golden;  // golden files with no computation
    std::vector<std::string> unmatched_cases;   // computations with no golden file

    bool all_passed() const {
        if (!unmatched_golden.empty() || !unmatched_cases.empty()) return false;
        for (const auto& o : outcomes)
            if (o.status != CheckStatus::Pass) return false;
        return true;
    }
};

inline ReproReport repro_run(const std::vector<ReproCase>& cases,
                             const std::vector<GoldenCase>& golden) {
    ReproReport report;
    std::map<std::string, const GoldenCase*> by_name;
    for (const auto& g : golden) by_name[g.name] = &g;
    std::map<std::string, bool> used;
    for (const auto& c : cases) {
        auto it = by_name.find(c.name);
        if (it == by_name.end()) {
            report.unmatched_cases.push_back(c.name);
            continue;
        }
        used[c.name] = true;
        const GoldenCase& g = *it->second;
        ReproOutcome out{c.name, g.ref, CheckStatus::Pass, ""};
        SequenceWindow got = c.compute();
        if (got.size() < g.expect.size()) {
            out.status = CheckStatus::Fail;
            out.diff = "produced only " + std::to_string(got.size()) + " of " +
                       std::to_string(g.expect.size()) + " terms";
        } else {
            for (std::size_t i = 0; i < g.expect.size(); ++i)
                if (got[i] != g.expect[i]) {
                    out.status = CheckStatus::Fail;
                    out.diff = "index " + std::to_string(i) + ": got " + to_string(got[i]) +
                               ", expected " + to_string(g.expect[i]);
                    break;
                }
        }
        report.outcomes.push_back(std::move(out));
    }
    for (const auto& g : golden)
        if (!used.count(g.name)) report.unmatched_golden.push_back(g.name);
    return report;
}

}  // namespace rlab
