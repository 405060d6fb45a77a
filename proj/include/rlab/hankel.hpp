#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/matrix.hpp"
#include "rlab/sequence.hpp"
#include "rlab/series.hpp"

namespace rlab {

// Exact determinant: clear each column by its denominator LCM, then run
// fraction-free Bareiss elimination over the integers.
inline Rational exact_determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale(1);
    for (std::size_t j = 0; j < n; ++j) {
        Integer l(1);
        for (std::size_t i = 0; i < n; ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) {
            Rational v = m.at(i, j) * Rational(l);
            a[i][j] = v.get_num();  // den is 1 by construction
        }
        scale *= l;
    }
    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return Rational(0);
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

inline RatMatrix hankel_matrix(const SequenceWindow& a, std::size_t n) {
    if (a.size() < 2 * n + 1) throw InsufficientTerms("hankel_matrix");
    RatMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) m.at(i, j) = a[i + j];
    return m;
}

// h_n = det |a_{i+j}| for 0 <= i,j <= n. With m+1 input terms the full
// transform h_0..h_{floor(m/2)} is produced.
inline SequenceWindow hankel_transform(const SequenceWindow& a) {
    if (a.empty()) throw InsufficientTerms("hankel_transform");
    SequenceWindow h;
    for (std::size_t n = 0; 2 * n + 1 <= a.size(); ++n)
        h.push_back(exact_determinant(hankel_matrix(a, n)));
    return h;
}

inline SequenceWindow hankel_transform(const SequenceWindow& a, std::size_t n) {
    if (a.size() < 2 * n + 1) throw InsufficientTerms("hankel_transform to depth n");
    SequenceWindow h;
    for (std::size_t k = 0; k <= n; ++k)
        h.push_back(exact_determinant(hankel_matrix(a, k)));
    return h;
}

// Jacobi continued fraction mu0/(1 - a0 x - b1 x^2/(1 - a1 x - ...)).
struct JFraction {
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
    Rational mu0{1};
};

struct JFractionExtraction {
    JFraction jf;
    // Index of the first vanishing leading Hankel determinant, when one
    // stopped the extraction early.
    std::optional<std::size_t> singular_delta;
};

// alpha_n = D'_n/D_n - D'_{n-1}/D_{n-1}, beta_n = D_{n-2} D_n / D_{n-1}^2,
// where D_n is the leading (n+1)x(n+1) Hankel minor and D'_n the same with
// the last column index bumped from n to n+1.
inline JFractionExtraction jfraction_from_moments(const SequenceWindow& a) {
    if (a.empty()) throw InsufficientTerms("moments need a_0");
    std::size_t m = a.size() - 1;
    if (a[0] == 0) {
        JFractionExtraction out;
        out.jf.mu0 = 0;
        out.singular_delta = 0;
        return out;
    }
    auto delta = [&](std::size_t n) {
        RatMatrix h(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) h.at(i, j) = a[i + j];
        return exact_determinant(h);
    };
    auto delta_prime = [&](std::size_t n) {
        RatMatrix h(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) h.at(i, j) = a[i + j];
            h.at(i, n) = a[i + n + 1];
        }
        return exact_determinant(h);
    };
    std::size_t max_alpha = m >= 1 ? (m - 1) / 2 : 0;
    std::size_t max_beta = m / 2;
    JFractionExtraction out;
    out.jf.mu0 = a[0];
    std::vector<Rational> d{delta(0)};  // d[n] = D_n
    std::vector<Rational> dp;           // dp[n] = D'_n, needs mu_{2n+1}
    if (m >= 1) {
        dp.push_back(delta_prime(0));
        out.jf.alphas.push_back(dp[0] / d[0]);
    }
    for (std::size_t n = 1; n <= max_beta; ++n) {
        Rational dn = delta(n);
        if (dn == 0) {
            out.singular_delta = n;
            break;
        }
        d.push_back(dn);
        out.jf.betas.push_back((n >= 2 ? d[n - 2] : Rational(1)) * d[n] / (d[n - 1] * d[n - 1]));
        if (n <= max_alpha) {
            dp.push_back(delta_prime(n));
            out.jf.alphas.push_back(dp[n] / d[n] - dp[n - 1] / d[n - 1]);
        }
    }
    return out;
}

// Expansion of the finite continued fraction, exact at every order: the
// given levels are the whole object, with the deepest level terminating.
// Betas may run one level past the alphas (coefficient x^{2k} needs
// beta_k but not alpha_k); the missing trailing alpha is taken as 0.
inline Series jfraction_to_series(const JFraction& j, std::size_t order) {
    if (j.alphas.empty()) throw InsufficientDepth("J-fraction needs alpha_0");
    if (j.betas.size() + 1 < j.alphas.size())
        throw InsufficientDepth("level k >= 1 needs beta_k");
    std::size_t depth = std::max(j.alphas.size(), j.betas.size() + 1);
    Series level = Series::constant(Rational(1), order);
    for (std::size_t k = depth; k-- > 0;) {
        Series next = Series::constant(Rational(1), order);
        if (k < j.alphas.size())
            next = next - Series::monomial(1, j.alphas[k], order);
        if (k + 1 < depth)
            next = next - Series::monomial(2, j.betas[k], order) / level;
        level = std::move(next);
    }
    return Series::constant(j.mu0, order) / level;
}

// Heilermann: h_n = mu0^(n+1) prod_{k=1..n} beta_k^(n+1-k); the Hankel
// transform read off the J-fraction alone.
inline SequenceWindow heilermann_hankel(const JFraction& j, std::size_t n) {
    if (n > j.betas.size()) throw InsufficientDepth("heilermann_hankel");
    SequenceWindow h;
    for (std::size_t m = 0; m <= n; ++m) {
        Rational v = pow_rational(j.mu0, static_cast<long>(m) + 1);
        for (std::size_t k = 1; k <= m; ++k)
            v *= pow_rational(j.betas[k - 1], static_cast<long>(m + 1 - k));
        h.push_back(v);
    }
    return h;
}

// Verifies that (x g(x) - y g(y))/(x - y) has x^i y^j coefficient a_{i+j}
// for i, j <= n, by synthetic bivariate division.
inline bool bivariate_hankel_gf_check(const Series& g, std::size_t n) {
    if (g.order() < 2 * n) throw InsufficientOrder("bivariate check needs order >= 2n");
    std::size_t deg = 2 * n + 1;
    // numerator N(x,y) = x g(x) - y g(y); quotient Q solves N = (x-y) Q
    auto N = [&](std::size_t i, std::size_t j) -> Rational {
        if (j == 0 && i >= 1) return g[i - 1];
        if (i == 0 && j >= 1) return -g[j - 1];
        return Rational(0);
    };
    std::vector<std::vector<Rational>> q(deg, std::vector<Rational>(deg));
    for (std::size_t i = 0; i + 1 < deg + 1 && i < deg; ++i) q[i][0] = N(i + 1, 0);
    for (std::size_t j = 1; j < deg; ++j)
        for (std::size_t i = 0; i + j < deg; ++i)
            q[i][j] = N(i + 1, j) + (i + 1 < deg ? q[i + 1][j - 1] : Rational(0));
    // remainder rows: N(0, j) must equal -Q(0, j-1)
    for (std::size_t j = 1; j < deg; ++j)
        if (N(0, j) != -q[0][j - 1]) return false;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            if (q[i][j] != g[i + j]) return false;
    return true;
}

}  // namespace rlab
