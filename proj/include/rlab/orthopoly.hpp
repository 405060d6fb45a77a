#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/hankel.hpp"
#include "rlab/matrix.hpp"
#include "rlab/riordan.hpp"
#include "rlab/series.hpp"

namespace rlab {

// Monic three-term recurrence p_{n+1}(x) = (x - alpha_n) p_n(x) - beta_n p_{n-1}(x),
// p_0 = 1, p_1 = x - alpha_0.
struct ThreeTermRecurrence {
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
};

inline ThreeTermRecurrence three_term_from_jfraction(const JFraction& j) {
    return {j.alphas, j.betas};
}

inline ThreeTermRecurrence constant_recurrence(const Rational& alpha, const Rational& beta,
                                               std::size_t depth) {
    return {std::vector<Rational>(depth, alpha), std::vector<Rational>(depth, beta)};
}

// Row n holds the coefficients of p_n; unit diagonal.
inline RatMatrix coefficient_array(const ThreeTermRecurrence& r, std::size_t n) {
    if (n >= 1 && (r.alphas.size() < n || (n >= 2 && r.betas.size() < n - 1)))
        throw InsufficientDepth("coefficient_array");
    RatMatrix m(n + 1, n + 1);
    m.at(0, 0) = 1;
    if (n >= 1) {
        m.at(1, 0) = -r.alphas[0];
        m.at(1, 1) = 1;
    }
    for (std::size_t row = 2; row <= n; ++row)
        for (std::size_t k = 0; k <= row; ++k) {
            Rational v = k >= 1 ? m.at(row - 1, k - 1) : Rational(0);
            v -= r.alphas[row - 1] * m.at(row - 1, k);
            v -= r.betas[row - 2] * m.at(row - 2, k);
            m.at(row, k) = v;
        }
    return m;
}

// Inverse of the coefficient array; its first column is the moment
// sequence of the recurrence.
inline RatMatrix moment_matrix(const ThreeTermRecurrence& r, std::size_t n) {
    return inverse(coefficient_array(r, n));
}

// P = M^{-1} M-shifted-up, computed on finite truncations: the top-left
// n x n block of M inverts against rows 1..n. Tridiagonal exactly when M
// is the moment matrix of a three-term recurrence.
inline RatMatrix production_matrix(const RatMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 2) throw SingularMatrix("production_matrix");
    std::size_t n = m.rows() - 1;
    RatMatrix head = inverse(m.block(0, 0, n, n));
    RatMatrix shifted = m.block(1, 0, n, n + 1);
    return head * shifted;
}

// Riordan matrix of ((1 - lambda x - mu x^2)/(1 + rx + sx^2), x/(1 + rx + sx^2)):
// the coefficient array of generalized Chebyshev polynomials of the
// second kind. With lambda = mu = 0 it matches the constant (r, s)
// three-term recurrence.
inline RatMatrix chebyshev_riordan_array(const Rational& r, const Rational& s,
                                         const Rational& lambda, const Rational& mu,
                                         std::size_t n) {
    Series den = Series::polynomial({Rational(1), r, s}, n);
    Series num = Series::polynomial({Rational(1), -lambda, -mu}, n);
    RiordanPair pair(num / den, Series::identity(n) / den);
    return riordan_matrix(pair, n);
}

}  // namespace rlab
