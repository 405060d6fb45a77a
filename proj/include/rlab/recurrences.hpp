#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "rlab/errors.hpp"
#include "rlab/hankel.hpp"
#include "rlab/report.hpp"
#include "rlab/riordan.hpp"
#include "rlab/sequence.hpp"
#include "rlab/series.hpp"
#include "rlab/somos.hpp"

namespace rlab {

// a_0 = 1, a_1 = p; a_n = s a_{n-1} + t sum_{k=0}^{n-3} a_{k+1} a_{n-k-2}.
struct Recurrence2Spec {
    Rational p, s, t;
};

// a_0 = 1, a_1 = p, a_2 = q;
// a_n = r a_{n-1} + s a_{n-2} + t sum_{k=1}^{n-3} a_k a_{n-k-2}.
struct Recurrence3Spec {
    Rational p, q, r, s, t;
};

// a_0 = 1, a_1 = p, a_2 = q, a_3 = s;
// a_n = u a_{n-1} + v a_{n-2} + w a_{n-3} + t sum_{k=1}^{n-4} a_k a_{n-k-3}.
struct Recurrence4Spec {
    Rational p, q, s, u, v, w, t;
};

// a_0 = 1, a_1 = p (default r);
// a_n = r a_{n-1} + s a_{n-2} + t sum_{i=0}^{n-2} a_i a_{n-2-i}  (n > 1).
struct FullConvolutionSpec {
    Rational r, s, t;
    std::optional<Rational> p;
    Rational a1() const { return p ? *p : r; }
};

// ---- direct iteration: the oracle every closed form answers to ----

inline SequenceWindow iterate_recurrence(const Recurrence2Spec& spec, std::size_t n) {
    SequenceWindow a{Rational(1)};
    if (n >= 1) a.push_back(spec.p);
    for (std::size_t m = 2; m <= n; ++m) {
        Rational v = spec.s * a[m - 1];
        Rational conv;
        for (std::size_t k = 0; k + 3 <= m; ++k) conv += a[k + 1] * a[m - k - 2];
        a.push_back(v + spec.t * conv);
    }
    return a;
}

inline SequenceWindow iterate_recurrence(const Recurrence3Spec& spec, std::size_t n) {
    SequenceWindow a{Rational(1)};
    if (n >= 1) a.push_back(spec.p);
    if (n >= 2) a.push_back(spec.q);
    for (std::size_t m = 3; m <= n; ++m) {
        Rational v = spec.r * a[m - 1] + spec.s * a[m - 2];
        Rational conv;
        for (std::size_t k = 1; k + 3 <= m; ++k) conv += a[k] * a[m - k - 2];
        a.push_back(v + spec.t * conv);
    }
    return a;
}

inline SequenceWindow iterate_recurrence(const Recurrence4Spec& spec, std::size_t n) {
    SequenceWindow a{Rational(1)};
    if (n >= 1) a.push_back(spec.p);
    if (n >= 2) a.push_back(spec.q);
    if (n >= 3) a.push_back(spec.s);
    for (std::size_t m = 4; m <= n; ++m) {
        Rational v = spec.u * a[m - 1] + spec.v * a[m - 2] + spec.w * a[m - 3];
        Rational conv;
        for (std::size_t k = 1; k + 4 <= m; ++k) conv += a[k] * a[m - k - 3];
        a.push_back(v + spec.t * conv);
    }
    return a;
}

inline SequenceWindow iterate_recurrence(const FullConvolutionSpec& spec, std::size_t n) {
    SequenceWindow a{Rational(1)};
    if (n >= 1) a.push_back(spec.a1());
    for (std::size_t m = 2; m <= n; ++m) {
        Rational v = spec.r * a[m - 1] + spec.s * a[m - 2];
        Rational conv;
        for (std::size_t i = 0; i + 2 <= m; ++i) conv += a[i] * a[m - 2 - i];
        a.push_back(v + spec.t * conv);
    }
    return a;
}

// ---- quadratic data A u^2 + B u + C = 0 for each family ----
// D = -B is the Riordan denominator; the pair (C/D, t x^m C/D^2) applied
// to the Catalan series gives the same solution.

struct RecurrenceQuadratic {
    QuadraticGF q;
    std::size_t xpow;  // valuation of A = t x^m
};

inline RecurrenceQuadratic quadratic_of(const Recurrence2Spec& s, std::size_t n) {
    return {{Series::monomial(1, s.t, n),
             Series::polynomial({Rational(-1), s.s - 2 * s.t}, n),
             Series::polynomial({Rational(1), s.p - s.s + s.t}, n)},
            1};
}

inline RecurrenceQuadratic quadratic_of(const Recurrence3Spec& s, std::size_t n) {
    return {{Series::monomial(2, s.t, n),
             Series::polynomial({Rational(-1), s.r, s.s - 2 * s.t}, n),
             Series::polynomial({Rational(1), s.p - s.r, s.q - s.p * s.r - s.s + s.t}, n)},
            2};
}

inline RecurrenceQuadratic quadratic_of(const Recurrence4Spec& s, std::size_t n) {
    return {{Series::monomial(3, s.t, n),
             Series::polynomial({Rational(-1), s.u, s.v, s.w - 2 * s.t}, n),
             Series::polynomial({Rational(1), s.p - s.u, s.q - s.p * s.u - s.v,
                                 s.s + s.t - s.w - s.q * s.u - s.p * s.v},
                                n)},
            3};
}

inline RecurrenceQuadratic quadratic_of(const FullConvolutionSpec& s, std::size_t n) {
    return {{Series::monomial(2, s.t, n),
             Series::polynomial({Rational(-1), s.r, s.s}, n),
             Series::polynomial({Rational(1), s.a1() - s.r}, n)},
            2};
}

// Riordan pair (C/D, t x^m C/D^2) of a family's quadratic data.
template <class Spec>
RiordanPair riordan_pair_of(const Spec& spec, std::size_t order) {
    auto rq = quadratic_of(spec, order);
    Series d = -rq.q.b;
    Series g = rq.q.c / d;
    Series f = (rq.q.a * rq.q.c) / (d * d);
    return RiordanPair(std::move(g), std::move(f));
}

// Radical route (-B - sqrt(B^2 - 4AC)) / (2A), dividing out the x^m
// valuation of A explicitly. Used as the second algebraic route in tests.
inline Series gf_quadratic_radical(const RecurrenceQuadratic& rq, std::size_t order) {
    std::size_t n = order + rq.xpow;
    Series a = Series::polynomial(rq.q.a.coeffs(), n);
    Series b = Series::polynomial(rq.q.b.coeffs(), n);
    Series c = Series::polynomial(rq.q.c.coeffs(), n);
    Series disc = b * b - rat(4) * (a * c);
    Series num = -b - series_sqrt(disc);
    Series lead = shift_down(a, rq.xpow) * rat(2);
    return shift_down(num, rq.xpow) / lead;
}

namespace detail {
template <class Spec>
Series gf_of(const Spec& spec, std::size_t order) {
    auto rq = quadratic_of(spec, order);
    if (spec.t == 0)  // degenerate: the recurrence is linear, gf rational
        return rq.q.c / (-rq.q.b);
    return solve_quadratic_gf(rq.q, order);
}
}  // namespace detail

inline Series gf_recurrence2(const Recurrence2Spec& s, std::size_t order) {
    return detail::gf_of(s, order);
}
inline Series gf_recurrence3(const Recurrence3Spec& s, std::size_t order) {
    return detail::gf_of(s, order);
}
inline Series gf_recurrence4(const Recurrence4Spec& s, std::size_t order) {
    return detail::gf_of(s, order);
}
inline Series gf_full_convolution(const FullConvolutionSpec& s, std::size_t order) {
    return detail::gf_of(s, order);
}

// ---- parameter conversions ----

// ((1+ax+bx^2)/(1+cx+dx^2), m x^2 (1+ax+bx^2)/(1+cx+dx^2)^2) . c(x)
struct RiordanParams5 {
    Rational a, b, c, d, m;
    friend bool operator==(const RiordanParams5&, const RiordanParams5&) = default;
};

// ((1+ax+bx^2+cx^3)/(1+dx+ex^2+fx^3), m x^3 (...) / (...)^2) . c(x)
struct RiordanParams7 {
    Rational a, b, c, d, e, f, m;
    friend bool operator==(const RiordanParams7&, const RiordanParams7&) = default;
};

inline RiordanParams5 params_to_riordan(const Recurrence3Spec& s) {
    return {s.p - s.r, s.q - s.p * s.r - s.s + s.t, -s.r, -s.s + 2 * s.t, s.t};
}

inline Recurrence3Spec riordan_to_params(const RiordanParams5& r) {
    return {r.a - r.c, -r.a * r.c + r.b + r.c * r.c - r.d + r.m, -r.c, -r.d + 2 * r.m, r.m};
}

inline RiordanParams7 params_to_riordan(const Recurrence4Spec& s) {
    return {s.p - s.u, s.q - s.p * s.u - s.v, s.s + s.t - s.w - s.q * s.u - s.p * s.v,
            -s.u, -s.v, -(s.w - 2 * s.t), s.t};
}

inline Recurrence4Spec riordan_to_params(const RiordanParams7& r) {
    return {r.a - r.d,
            -r.a * r.d + r.b + r.d * r.d - r.e,
            r.a * (r.d * r.d - r.e) + r.c - r.b * r.d - r.d * r.d * r.d +
                2 * r.d * r.e - r.f + r.m,
            -r.d,
            -r.e,
            -r.f + 2 * r.m,
            r.m};
}

// ---- conjecture verification ----

namespace detail {
inline long floor_sq_quarter(long n) { return (n * n) / 4; }
inline long choose2(long n) { return n * (n - 1) / 2; }

inline ClaimResult compare_windows(std::string name, const SequenceWindow& got,
                                   const SequenceWindow& want) {
    ClaimResult out;
    out.name = std::move(name);
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
        WindowCheck wc{i, CheckStatus::Pass, ""};
        if (got[i] != want[i]) {
            wc.status = CheckStatus::Fail;
            wc.note = to_string(got[i]) + " != " + to_string(want[i]);
            if (!out.first_failure) out.first_failure = i;
        }
        out.windows.push_back(wc);
    }
    out.status = out.first_failure ? CheckStatus::Fail : CheckStatus::Pass;
    return out;
}
}  // namespace detail

enum class Somos4Family {
    CatalanSchroeder,   // h(a_n(p,s,t)):     ((pst)^2, (pt)^3 (pt - s^2))
    ThirdOrderShifted,  // h(a_{n+1}/p):      ((pt)^2, -t^2 (p^2 s + pqr - q^2))
    ThirdOrderPQ,       // a_n(p,q,1,q-p+1,1): (p^2, p^3 - pq + q^2 - p^2(1+q))
    CubicNumerator,     // 1/(1-x-ax^2) c(x^3/(1-x-ax^2)^2): (1, -a)
    CurveFamily,        // E_t pullback gf:    (1, t^2 + 3t + 1)
    FullConvolution,    // full conv:          ((pt)^2, t^2 (t+s)^2 - r^2 t^3), p = a_1
    FullConvolutionP,   // ((pt)^2, t^2((t+s)^2 - p^2 s + prs + prt - 2p^2 t))
};

inline const char* family_name(Somos4Family f) {
    switch (f) {
        case Somos4Family::CatalanSchroeder: return "catalan-schroeder";
        case Somos4Family::ThirdOrderShifted: return "third-order-shifted";
        case Somos4Family::ThirdOrderPQ: return "third-order-pq";
        case Somos4Family::CubicNumerator: return "cubic-numerator";
        case Somos4Family::CurveFamily: return "curve-family";
        case Somos4Family::FullConvolution: return "full-convolution";
        case Somos4Family::FullConvolutionP: return "full-convolution-p";
    }
    return "?";
}

// Builds the family's sequence, takes its Hankel transform to `depth`,
// and checks the asserted (alpha, beta) Somos-4 law on every window.
inline ConjectureReport verify_somos_conjecture(Somos4Family family,
                                                const std::vector<Rational>& params,
                                                std::size_t depth) {
    if (depth < 5) throw InsufficientDepth("Somos-4 window needs depth >= 5");
    auto need = [&](std::size_t k) {
        if (params.size() != k) throw Error("family expects a different parameter count");
    };
    std::size_t terms = 2 * depth;  // h_0..h_depth needs 2*depth+1 terms
    SequenceWindow seq;
    Rational alpha, beta;
    switch (family) {
        case Somos4Family::CatalanSchroeder: {
            need(3);
            const auto &p = params[0], &s = params[1], &t = params[2];
            seq = iterate_recurrence(Recurrence2Spec{p, s, t}, terms);
            alpha = pow_rational(p * s * t, 2);
            beta = pow_rational(p * t, 3) * (p * t - s * s);
            break;
        }
        case Somos4Family::ThirdOrderShifted: {
            need(5);
            const auto &p = params[0], &q = params[1], &r = params[2], &s = params[3],
                       &t = params[4];
            if (p == 0) throw Error("shifted family needs p != 0");
            auto a = iterate_recurrence(Recurrence3Spec{p, q, r, s, t}, terms + 1);
            seq.assign(a.begin() + 1, a.end());
            for (auto& v : seq) v /= p;
            alpha = pow_rational(p * t, 2);
            beta = -t * t * (p * p * s + p * q * r - q * q);
            break;
        }
        case Somos4Family::ThirdOrderPQ: {
            need(2);
            const auto &p = params[0], &q = params[1];
            seq = iterate_recurrence(Recurrence3Spec{p, q, Rational(1), q - p + 1, Rational(1)},
                                     terms);
            alpha = p * p;
            beta = p * p * p - p * q + q * q - p * p * (1 + q);
            break;
        }
        case Somos4Family::CubicNumerator: {
            need(1);
            const auto& a = params[0];
            Series den = Series::polynomial({Rational(1), Rational(-1), -a}, terms);
            RiordanPair pair(Series::constant(Rational(1), terms) / den,
                             shift_up(Series::constant(Rational(1), terms), 3).truncated(terms) /
                                 (den * den));
            seq = window_of(riordan_apply(pair, catalan_gf(terms)));
            alpha = 1;
            beta = -a;
            break;
        }
        case Somos4Family::CurveFamily: {
            need(1);
            const auto& t = params[0];
            Series num = Series::polynomial({Rational(1), 2 * t + 5}, terms);
            Series den = Series::polynomial({Rational(1), 2 * (t + 3), (t + 2) * (t + 3)}, terms);
            RiordanPair pair(num / den, shift_up(num, 3).truncated(terms) / (den * den));
            seq = window_of(riordan_apply(pair, catalan_gf(terms)));
            alpha = 1;
            beta = t * t + 3 * t + 1;
            break;
        }
        case Somos4Family::FullConvolution: {
            need(3);
            const auto &r = params[0], &s = params[1], &t = params[2];
            FullConvolutionSpec spec{r, s, t, std::nullopt};
            seq = iterate_recurrence(spec, terms);
            alpha = pow_rational(spec.a1() * t, 2);
            beta = t * t * (t + s) * (t + s) - r * r * t * t * t;
            break;
        }
        case Somos4Family::FullConvolutionP: {
            need(4);
            const auto &p = params[0], &r = params[1], &s = params[2], &t = params[3];
            seq = iterate_recurrence(FullConvolutionSpec{r, s, t, p}, terms);
            alpha = pow_rational(p * t, 2);
            beta = t * t *
                   ((t + s) * (t + s) - p * p * s + p * r * s + p * r * t - 2 * p * p * t);
            break;
        }
    }
    SequenceWindow h = hankel_transform(seq, depth);
    ConjectureReport report;
    report.family = family_name(family);
    report.params = format_sequence(params);
    auto claim = verify_somos4(h, alpha, beta);
    claim.detail = "hankel: " + format_sequence(SequenceWindow(
                       h.begin(), h.begin() + std::min<std::size_t>(h.size(), 7))) +
                   (h.size() > 7 ? ", ..." : "");
    report.claims.push_back(std::move(claim));
    return report;
}

enum class HankelFormulaFamily {
    CatalanSchroeder,  // h_n = t^C(n,2) p^C(n+1,2) [x^n] (1-px)/(1-sx+ptx^2)
    AlphaQuadratic,    // h_n = (2-a)^floor((n+1)^2/4) [x^n] (1+x)(1+(a-2)x^2)/(1-3x^2-(a-2)x^4)
    BetaQuadratic,     // reformulation with beta = a_2
    QuarticAB,         // h_n = A_n(a) (2-a)^{B_n}
};

inline const char* family_name(HankelFormulaFamily f) {
    switch (f) {
        case HankelFormulaFamily::CatalanSchroeder: return "catalan-schroeder-hankel";
        case HankelFormulaFamily::AlphaQuadratic: return "alpha-quadratic-hankel";
        case HankelFormulaFamily::BetaQuadratic: return "beta-quadratic-hankel";
        case HankelFormulaFamily::QuarticAB: return "quartic-anbn-hankel";
    }
    return "?";
}

// B_n window for the quartic family: [x^n] x(1-x+2x^2-2x^3+3x^4-3x^5+x^6)
// / ((1-x)^2 (1-x^3)).
inline std::vector<long> quartic_bn_window(std::size_t n) {
    Series num = Series::polynomial({0, 1, -1, 2, -2, 3, -3, 1}, n);
    Series d1 = Series::polynomial({1, -1}, n);
    Series b = num / (d1 * d1 * Series::polynomial({1, 0, 0, -1}, n));
    std::vector<long> out;
    for (std::size_t i = 0; i <= n; ++i) out.push_back(b[i].get_num().get_si());
    return out;
}

// Evaluates the conjectured closed-form Hankel transform and compares it
// with the determinant transform, window by window.
inline ConjectureReport verify_hankel_formula_conjectures(HankelFormulaFamily family,
                                                          const std::vector<Rational>& params,
                                                          std::size_t depth) {
    if (depth < 2) throw InsufficientDepth("need depth >= 2");
    auto need = [&](std::size_t k) {
        if (params.size() != k) throw Error("family expects a different parameter count");
    };
    std::size_t terms = 2 * depth;
    SequenceWindow seq, formula;
    switch (family) {
        case HankelFormulaFamily::CatalanSchroeder: {
            need(3);
            const auto &p = params[0], &s = params[1], &t = params[2];
            seq = iterate_recurrence(Recurrence2Spec{p, s, t}, terms);
            Series w = Series::polynomial({Rational(1), -p}, depth) /
                       Series::polynomial({Rational(1), -s, p * t}, depth);
            for (std::size_t n = 0; n <= depth; ++n) {
                long ln = static_cast<long>(n);
                formula.push_back(pow_rational(t, detail::choose2(ln)) *
                                  pow_rational(p, detail::choose2(ln + 1)) * w[n]);
            }
            break;
        }
        case HankelFormulaFamily::AlphaQuadratic: {
            need(1);
            const auto& a = params[0];
            Series den = Series::polynomial({Rational(1), Rational(-1), Rational(-1)}, terms);
            Series num = Series::polynomial({Rational(1), Rational(-1), -a}, terms);
            RiordanPair pair(num / den, (Series::monomial(2, Rational(1), terms) * num) / (den * den));
            seq = window_of(riordan_apply(pair, catalan_gf(terms)));
            Series w = (Series::polynomial({Rational(1), Rational(1)}, depth) *
                        Series::polynomial({Rational(1), Rational(0), a - 2}, depth)) /
                       Series::polynomial({Rational(1), Rational(0), Rational(-3), Rational(0),
                                           -(a - 2)},
                                          depth);
            for (std::size_t n = 0; n <= depth; ++n)
                formula.push_back(pow_rational(2 - a, detail::floor_sq_quarter(static_cast<long>(n) + 1)) * w[n]);
            break;
        }
        case HankelFormulaFamily::BetaQuadratic: {
            need(1);
            const auto& b = params[0];
            seq = iterate_recurrence(
                Recurrence3Spec{Rational(0), b, Rational(1), Rational(3), Rational(1)}, terms);
            Series w = (Series::polynomial({Rational(1), Rational(1)}, depth) *
                        Series::polynomial({Rational(1), Rational(0), -b}, depth)) /
                       Series::polynomial({Rational(1), Rational(0), Rational(-3), Rational(0), b},
                                          depth);
            for (std::size_t n = 0; n <= depth; ++n)
                formula.push_back(pow_rational(b, detail::floor_sq_quarter(static_cast<long>(n) + 1)) * w[n]);
            break;
        }
        case HankelFormulaFamily::QuarticAB: {
            need(1);
            const auto& a = params[0];
            Series den = Series::polynomial({Rational(1), Rational(-1), Rational(-1), Rational(-1)},
                                            terms);
            Series num = Series::polynomial({Rational(1), Rational(-1), Rational(-1), -a}, terms);
            RiordanPair pair(num / den, (Series::monomial(3, Rational(1), terms) * num) / (den * den));
            seq = window_of(riordan_apply(pair, catalan_gf(terms)));
            std::vector<Rational> anum{Rational(1), Rational(0), a - 2,     -(a - 2), Rational(0),
                                       4 * a - 5,   Rational(0), Rational(0), -(a - 1) * (a - 2)};
            std::vector<Rational> aden{Rational(1), Rational(0), Rational(0), Rational(3),
                                       Rational(0), Rational(0), -(a - 2)};
            Series an = rational_series(anum, aden, depth);
            auto bn = quartic_bn_window(depth);
            for (std::size_t n = 0; n <= depth; ++n)
                formula.push_back(an[n] * pow_rational(2 - a, bn[n]));
            break;
        }
    }
    SequenceWindow h = hankel_transform(seq, depth);
    ConjectureReport report;
    report.family = family_name(family);
    report.params = format_sequence(params);
    auto claim = detail::compare_windows("closed-form == determinant", h, formula);
    claim.detail = "hankel: " + format_sequence(SequenceWindow(
                       h.begin(), h.begin() + std::min<std::size_t>(h.size(), 7))) +
                   (h.size() > 7 ? ", ..." : "");
    report.claims.push_back(std::move(claim));
    return report;
}

}  // namespace rlab
