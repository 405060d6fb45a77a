#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/rational.hpp"

namespace rlab {

// Formal power series truncated at an explicit order N: coefficients
// c_0..c_N. Binary operations truncate to the minimum order of their
// inputs, so a declared order is always backed by exact coefficients.
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw InsufficientOrder("series needs c_0");
    }

    static Series constant(const Rational& v, std::size_t order) {
        Series s(order);
        s.coeffs_[0] = v;
        return s;
    }

    static Series identity(std::size_t order) {  // the series x
        return monomial(1, Rational(1), order);
    }

    static Series monomial(std::size_t k, const Rational& c, std::size_t order) {
        Series s(order);
        if (k <= order) s.coeffs_[k] = c;
        return s;
    }

    // Polynomial with the given low-degree coefficients, zero-padded to order.
    static Series polynomial(std::initializer_list<long> low, std::size_t order) {
        Series s(order);
        std::size_t i = 0;
        for (long v : low) {
            if (i > order) break;
            s.coeffs_[i++] = rat(v);
        }
        return s;
    }

    static Series polynomial(const std::vector<Rational>& low, std::size_t order) {
        Series s(order);
        for (std::size_t i = 0; i < low.size() && i <= order; ++i) s.coeffs_[i] = low[i];
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }

    Series truncated(std::size_t new_order) const {
        if (new_order >= order()) return *this;
        return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    // Smallest index with nonzero coefficient; order()+1 for the zero series.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return coeffs_.size();
    }

    bool is_zero() const { return valuation() == coeffs_.size(); }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> coeffs_;
};

inline std::size_t common_order(const Series& p, const Series& q) {
    return std::min(p.order(), q.order());
}

inline Series operator+(const Series& p, const Series& q) {
    std::size_t n = common_order(p, q);
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) r[i] = p[i] + q[i];
    return r;
}

inline Series operator-(const Series& p, const Series& q) {
    std::size_t n = common_order(p, q);
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) r[i] = p[i] - q[i];
    return r;
}

inline Series operator-(const Series& p) {
    Series r(p.order());
    for (std::size_t i = 0; i <= p.order(); ++i) r[i] = -p[i];
    return r;
}

inline Series operator*(const Series& p, const Rational& c) {
    Series r(p.order());
    for (std::size_t i = 0; i <= p.order(); ++i) r[i] = p[i] * c;
    return r;
}

inline Series operator*(const Rational& c, const Series& p) { return p * c; }

// Cauchy product, truncated to the shared order.
inline Series operator*(const Series& p, const Series& q) {
    std::size_t n = common_order(p, q);
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational acc;
        for (std::size_t k = 0; k <= i; ++k) acc += p[k] * q[i - k];
        r[i] = acc;
    }
    return r;
}

inline Series series_mul(const Series& p, const Series& q) { return p * q; }

inline Series operator/(const Series& p, const Series& q) {
    if (q[0] == 0) throw ZeroConstantTerm("series division");
    std::size_t n = common_order(p, q);
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational acc = p[i];
        for (std::size_t k = 1; k <= i; ++k) acc -= q[k] * r[i - k];
        r[i] = acc / q[0];
    }
    return r;
}

inline Series series_div(const Series& p, const Series& q) { return p / q; }

// p(q(x)) for q with q(0) = 0, by Horner over truncated series.
inline Series series_compose(const Series& p, const Series& q) {
    if (q[0] != 0) throw NonzeroConstantInner("composition");
    std::size_t n = common_order(p, q);
    Series qn = q.truncated(n);
    Series r(n);
    for (std::size_t i = n + 1; i-- > 0;) {
        r = r * qn;
        r[0] += p[i];
    }
    return r;
}

inline Series derivative(const Series& p) {
    if (p.order() == 0) return Series(0);
    Series r(p.order() - 1);
    for (std::size_t i = 1; i <= p.order(); ++i) r[i - 1] = p[i] * rat(static_cast<long>(i));
    return r;
}

// Multiply by x^k; the result order grows by k (all coefficients exact).
inline Series shift_up(const Series& p, std::size_t k) {
    Series r(p.order() + k);
    for (std::size_t i = 0; i <= p.order(); ++i) r[i + k] = p[i];
    return r;
}

// Divide by x^k; requires the first k coefficients to vanish.
inline Series shift_down(const Series& p, std::size_t k) {
    if (p.order() + 1 <= k) throw InsufficientOrder("shift_down");
    for (std::size_t i = 0; i < k; ++i)
        if (p[i] != 0) throw Error("shift_down: not divisible by x^k");
    Series r(p.order() - k);
    for (std::size_t i = 0; i <= r.order(); ++i) r[i] = p[i + k];
    return r;
}

// Expansion of a polynomial quotient num/den to the given order (den(0) != 0).
inline Series rational_series(const std::vector<Rational>& num,
                              const std::vector<Rational>& den, std::size_t order) {
    return Series::polynomial(num, order) / Series::polynomial(den, order);
}

// Compositional inverse of f (f(0) = 0, f'(0) != 0) by Newton iteration
// with doubling precision: w <- w - (f(w) - x)/f'(w).
inline Series series_revert(const Series& f) {
    if (f.order() < 1 || f[0] != 0 || f[1] == 0) throw NotRevertible();
    std::size_t n = f.order();
    Series fp = derivative(f);  // order n-1; zero-padding below is harmless
    Series w = Series::monomial(1, Rational(1) / f[1], 1);
    std::size_t prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec + 1, n);
        // the error term has valuation > prec/2, so the padded top
        // coefficients of the slope never reach the correction prefix
        Series wx = Series::polynomial(w.coeffs(), prec);
        Series err = series_compose(f.truncated(prec), wx) - Series::identity(prec);
        Series slope = series_compose(Series::polynomial(fp.coeffs(), prec), wx);
        w = wx - err / slope;
    }
    return w;
}

// Square root with positive constant term, by Newton iteration
// s <- (s + p/s)/2 seeded with the exact root of p(0).
inline Series series_sqrt(const Series& p) {
    auto s0 = sqrt_rational(p[0]);
    if (!s0 || *s0 == 0) throw NonSquareConstant("series_sqrt");
    std::size_t n = p.order();
    Series s = Series::constant(*s0, 0);
    std::size_t prec = 0;
    while (prec < n) {
        prec = std::min(2 * prec + 1, n);
        Series sx = Series::polynomial(s.coeffs(), prec);
        s = (sx + p.truncated(prec) / sx) * rat(1, 2);
    }
    return s;
}

// Catalan generating function c(x) = (1 - sqrt(1-4x))/(2x); c = 1 + x c^2.
inline Series catalan_gf(std::size_t order) {
    Series c(order);
    Rational cur(1);
    for (std::size_t i = 0; i <= order; ++i) {
        c[i] = cur;
        long n = static_cast<long>(i);
        cur = cur * rat(2 * (2 * n + 1), n + 2);
    }
    return c;
}

// Coefficients (a, b, c) of a u^2 + b u + c = 0 over the series ring.
struct QuadraticGF {
    Series a, b, c;
};

// The branch of a u^2 + b u + c = 0 that is finite at x = 0, via the
// Catalan substitution u = (-c/b) c(ac/b^2). When ac/b^2 has a nonzero
// constant term the Catalan factor is expanded through its closed form,
// which needs 1 - 4ac/b^2 to have a rational square root at 0.
inline Series solve_quadratic_gf(const QuadraticGF& q, std::size_t order) {
    if (q.b[0] == 0) throw ZeroLinearCoefficient();
    std::size_t n = std::min({q.a.order(), q.b.order(), q.c.order(), order});
    Series a = q.a.truncated(n), b = q.b.truncated(n), c = q.c.truncated(n);
    Series h = (a * c) / (b * b);
    Series cat(n);
    if (h[0] == 0) {
        cat = series_compose(catalan_gf(n), h);
    } else {
        Series disc = Series::constant(Rational(1), n) - h * rat(4);
        auto root = sqrt_rational(disc[0]);
        if (!root || *root == 0)
            throw BranchUndefined("1 - 4ac/b^2 has no usable rational root at 0");
        cat = (Series::constant(Rational(1), n) - series_sqrt(disc)) / (h * rat(2));
    }
    return (-c / b) * cat;
}

// Plain-text line format: "order; c0, c1, ..., cN".
inline std::string format_series(const Series& s) {
    std::ostringstream out;
    out << s.order() << ";";
    for (std::size_t i = 0; i <= s.order(); ++i)
        out << (i ? ", " : " ") << to_string(s[i]);
    return out.str();
}

inline Series parse_series(std::string_view line) {
    auto semi = line.find(';');
    if (semi == std::string_view::npos) throw IoError("series line needs 'order; coeffs'");
    std::size_t order = 0;
    try {
        order = std::stoul(std::string(line.substr(0, semi)));
    } catch (const std::exception&) {
        throw IoError("bad series order field");
    }
    std::vector<Rational> coeffs;
    std::string rest(line.substr(semi + 1));
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        coeffs.push_back(parse_rational(tok));
    }
    if (coeffs.size() != order + 1) throw IoError("series coefficient count mismatch");
    return Series(std::move(coeffs));
}

}  // namespace rlab
