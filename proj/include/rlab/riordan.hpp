#pragma once

#include <cstddef>
#include <utility>

#include "rlab/errors.hpp"
#include "rlab/matrix.hpp"
#include "rlab/series.hpp"

namespace rlab {

// A (possibly stretched) Riordan pair (g, f): g(0) != 0, f(0) = 0. The
// associated lower-triangular matrix has entries T(n,k) = [x^n] g f^k.
class RiordanPair {
public:
    RiordanPair(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
        if (g_[0] == 0) throw ZeroConstantTerm("Riordan g(0) must be nonzero");
        if (f_[0] != 0) throw NonzeroConstantInner("Riordan f(0) must vanish");
    }

    const Series& g() const { return g_; }
    const Series& f() const { return f_; }
    std::size_t order() const { return common_order(g_, f_); }

    // Stretched pairs (f'(0) = 0) have no inverse in the Riordan group.
    bool stretched() const { return f_.order() < 1 || f_[1] == 0; }

private:
    Series g_, f_;
};

inline RiordanPair riordan_identity(std::size_t order) {
    return RiordanPair(Series::constant(Rational(1), order), Series::identity(order));
}

inline RatMatrix riordan_matrix(const RiordanPair& p, std::size_t n) {
    if (p.order() < n) throw InsufficientOrder("riordan_matrix needs series order >= n");
    RatMatrix m(n + 1, n + 1);
    Series col = p.g().truncated(n);
    Series f = p.f().truncated(n);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i <= n; ++i) m.at(i, k) = col[i];
        if (k < n) col = col * f;
    }
    return m;
}

// Fundamental theorem action: (g, f) . h = g(x) h(f(x)).
inline Series riordan_apply(const RiordanPair& p, const Series& h) {
    std::size_t n = std::min(p.order(), h.order());
    return p.g().truncated(n) * series_compose(h.truncated(n), p.f().truncated(n));
}

// Group law: (g1, f1)(g2, f2) = (g1 * g2(f1), f2(f1)).
inline RiordanPair riordan_mul(const RiordanPair& p, const RiordanPair& q) {
    std::size_t n = std::min(p.order(), q.order());
    Series f1 = p.f().truncated(n);
    return RiordanPair(p.g().truncated(n) * series_compose(q.g().truncated(n), f1),
                       series_compose(q.f().truncated(n), f1));
}

inline RiordanPair riordan_inverse(const RiordanPair& p) {
    if (p.stretched()) throw StretchedNotInvertible();
    std::size_t n = p.order();
    Series fbar = series_revert(p.f().truncated(n));
    Series ginv = Series::constant(Rational(1), n) / series_compose(p.g().truncated(n), fbar);
    return RiordanPair(std::move(ginv), std::move(fbar));
}

// True iff (g, x g) times the sign diagonal S = diag((-1)^k) squares to
// the identity up to dimension n.
inline bool pseudo_involution_check(const Series& g, std::size_t n) {
    if (g[0] != 1) throw ZeroConstantTerm("pseudo-involution needs g(0) = 1");
    if (g.order() < n) throw InsufficientOrder("pseudo_involution_check");
    RiordanPair p(g.truncated(n), shift_up(g, 1).truncated(n));
    RatMatrix ms = riordan_matrix(p, n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 1; j <= n; j += 2) ms.at(i, j) = -ms.at(i, j);
    return ms * ms == RatMatrix::identity(n + 1);
}

// r-th binomial transform: g -> (1/(1-rx)) g(x/(1-rx)); term n is
// sum_k C(n,k) r^(n-k) a_k.
inline Series binomial_transform(const Series& a, const Rational& r) {
    std::size_t n = a.order();
    Series one = Series::constant(Rational(1), n);
    Series den = one - Series::monomial(1, r, n);
    Series inv = one / den;
    return inv * series_compose(a, Series::identity(n) * inv);
}

// INVERT(t): g -> g / (1 - t x g).
inline Series invert_transform(const Series& a, const Rational& t) {
    std::size_t n = a.order();
    Series den = Series::constant(Rational(1), n) - (Series::identity(n) * a) * t;
    return a / den;
}

// g -> 1/(1 - x - x^2 g): prepends 1 to the sequence's Hankel transform.
inline Series prepend_one_gf(const Series& g) {
    std::size_t n = g.order();
    Series den = Series::constant(Rational(1), n) - Series::identity(n) -
                 shift_up(g, 2).truncated(n);
    return Series::constant(Rational(1), n) / den;
}

// Interleaves k-1 zeros between consecutive coefficients.
inline Series aerate(const Series& a, std::size_t k) {
    if (k == 0) throw Error("aerate needs k >= 1");
    if (k == 1) return a;
    Series out(a.order() * k);
    for (std::size_t i = 0; i <= a.order(); ++i) out[i * k] = a[i];
    return out;
}

}  // namespace rlab
