#include <catch2/catch_amalgamated.hpp>

#include "rlab/elliptic.hpp"
#include "rlab/orthopoly.hpp"

#include "oracles.hpp"

using namespace rlab;

namespace {
RatMatrix from_rows(const std::vector<std::vector<const char*>>& rows) {
    std::size_t n = rows.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = parse_rational(rows[i][j]);
    return m;
}

const CurvePoint origin = CurvePoint::affine(rat(0), rat(0));

// Q_n(x) = N_n - lambda N_{n-1} - mu N_{n-2} where N satisfies
// N_{n+1} = (x - r) N_n - s N_{n-1}: the normalized Chebyshev-U oracle.
std::vector<std::vector<Rational>> chebyshev_oracle(const Rational& r, const Rational& s,
                                                    const Rational& lambda,
                                                    const Rational& mu, std::size_t n) {
    std::vector<std::vector<Rational>> N{{Rational(1)}, {-r, Rational(1)}};
    for (std::size_t k = 2; k <= n; ++k) {
        std::vector<Rational> next(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
            Rational v = i >= 1 ? N[k - 1][i - 1] : Rational(0);
            if (i < N[k - 1].size()) v -= r * N[k - 1][i];
            if (i < N[k - 2].size()) v -= s * N[k - 2][i];
            next[i] = v;
        }
        N.push_back(std::move(next));
    }
    std::vector<std::vector<Rational>> Q;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Rational> q(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
            q[i] = N[k][i];
            if (k >= 1 && i < N[k - 1].size()) q[i] -= lambda * N[k - 1][i];
            if (k >= 2 && i < N[k - 2].size()) q[i] -= mu * N[k - 2][i];
        }
        Q.push_back(std::move(q));
    }
    return Q;
}
}  // namespace

TEST_CASE("coefficient_array basics") {
    ThreeTermRecurrence zero{std::vector<Rational>(6, Rational(0)),
                             std::vector<Rational>(5, Rational(0))};
    CHECK(coefficient_array(zero, 6) == RatMatrix::identity(7));

    CHECK_THROWS_AS(coefficient_array(ThreeTermRecurrence{{rat(1)}, {}}, 3),
                    InsufficientDepth);

    // constant (3, 2) recurrence matches the Riordan array
    // (1/(1+3x+2x^2), x/(1+3x+2x^2))
    RatMatrix lhs = coefficient_array(constant_recurrence(rat(3), rat(2), 6), 6);
    CHECK(lhs == chebyshev_riordan_array(rat(3), rat(2), rat(0), rat(0), 6));
}

TEST_CASE("Fibonacci-curve coefficient and moment matrices") {
    CurveSpec e(rat(-1), rat(-2), rat(1), rat(1), rat(0));
    auto r = three_term_from_jfraction(curve_jfraction(e, origin, 7));
    RatMatrix arr = coefficient_array(r, 6);
    RatMatrix want = from_rows({{"1"},
                                {"1", "1"},
                                {"3/2", "1/2", "1"},
                                {"1", "7/3", "2/3", "1"},
                                {"8/5", "7/5", "17/5", "3/5", "1"},
                                {"1", "31/8", "17/8", "35/8", "5/8", "1"},
                                {"21/13", "31/13", "95/13", "35/13", "70/13", "8/13", "1"}});
    CHECK(arr == want);

    RatMatrix mom = moment_matrix(r, 6);
    RatMatrix mwant = from_rows({{"1"},
                                 {"-1", "1"},
                                 {"-1", "-1/2", "1"},
                                 {"2", "-2", "-2/3", "1"},
                                 {"2", "3/2", "-3", "-3/5", "1"},
                                 {"-5", "5", "8/3", "-4", "-5/8", "1"},
                                 {"-5", "-9/2", "9", "3", "-5", "-8/13", "1"}});
    CHECK(mom == mwant);
    CHECK(arr * mom == RatMatrix::identity(7));

    // first column of the moment matrix is the moment sequence
    Series ser = jfraction_to_series(curve_jfraction(e, origin, 7), 6);
    for (std::size_t i = 0; i <= 6; ++i) CHECK(mom.at(i, 0) == ser[i]);

    // scaling each row by its denominator lcm yields the integer matrix
    // with row sums F_{n+1} F_{n+2}
    std::vector<std::vector<long>> integer_rows{
        {1},          {1, 1},           {3, 1, 2},           {3, 7, 2, 3},
        {8, 7, 17, 3, 5}, {8, 31, 17, 35, 5, 8}, {21, 31, 95, 35, 70, 8, 13}};
    for (std::size_t i = 0; i <= 6; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j <= i; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), arr.at(i, j).get_den().get_mpz_t());
        Rational sum;
        for (std::size_t j = 0; j <= i; ++j) {
            Rational scaled = arr.at(i, j) * Rational(l);
            CHECK(scaled == rat(integer_rows[i][j]));
            sum += scaled;
        }
        CHECK(sum == Rational(oracle::fibonacci(static_cast<long>(i) + 1) *
                              oracle::fibonacci(static_cast<long>(i) + 2)));
    }
}

TEST_CASE("family-curve matrices and production matrix") {
    CurveSpec e(rat(4), rat(-4), rat(1), rat(-3), rat(0));
    auto r = three_term_from_jfraction(curve_jfraction(e, origin, 8));
    RatMatrix arr = coefficient_array(r, 6);
    // the (5,3) entry is 33: forced by the inverse pair and the moment column
    RatMatrix want = from_rows({{"1"},
                                {"1", "1"},
                                {"-1", "-1", "1"},
                                {"0", "-1", "-2", "1"},
                                {"-2", "3/2", "8", "-11/2", "1"},
                                {"9", "-9", "-35", "33", "-10", "1"},
                                {"-9", "15", "82/3", "-57", "107/3", "-29/3", "1"}});
    CHECK(arr == want);

    RatMatrix mom = moment_matrix(r, 7);
    RatMatrix mwant = from_rows({{"1"},
                                 {"-1", "1"},
                                 {"0", "1", "1"},
                                 {"-1", "3", "2", "1"},
                                 {"-2", "7", "3", "11/2", "1"},
                                 {"-5", "15", "-1", "22", "10", "1"},
                                 {"-10", "24", "-30", "147/2", "61", "29/3", "1"}});
    CHECK(mom.block(0, 0, 7, 7) == mwant);

    RatMatrix prod = production_matrix(mom);
    CHECK(prod.rows() == 7);
    CHECK(prod.cols() == 8);
    RatMatrix pwant = from_rows({{"-1", "1"},
                                 {"-1", "2", "1"},
                                 {"0", "1", "1", "1"},
                                 {"0", "0", "-2", "7/2", "1"},
                                 {"0", "0", "0", "-1/4", "9/2", "1"},
                                 {"0", "0", "0", "0", "-6", "-1/3", "1"},
                                 {"0", "0", "0", "0", "0", "5/9", "38/15"}});
    CHECK(prod.block(0, 0, 7, 7) == pwant);
    // diagonal/subdiagonal carry the curve data: alpha_n and beta_n
    for (std::size_t i = 0; i < 7; ++i) CHECK(prod.at(i, i) == r.alphas[i]);
    for (std::size_t i = 1; i < 7; ++i) CHECK(prod.at(i, i - 1) == r.betas[i - 1]);
}

TEST_CASE("singular inputs are rejected") {
    RatMatrix z(3, 3);
    CHECK_THROWS_AS(inverse(z), SingularMatrix);
    CHECK_THROWS_AS(production_matrix(RatMatrix(1, 1)), SingularMatrix);
    RatMatrix rect(2, 3);
    CHECK_THROWS_AS(inverse(rect), SingularMatrix);
}

TEST_CASE("production matrix properties") {
    CHECK(production_matrix(RatMatrix::identity(5)) ==
          RatMatrix::identity(5).block(1, 0, 4, 5));

    ThreeTermRecurrence c = constant_recurrence(rat(2), rat(3), 7);
    RatMatrix prod = production_matrix(moment_matrix(c, 6));
    CHECK(prod.is_tridiagonal());
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(prod.at(i, i) == 2);
        CHECK(prod.at(i, i + 1) == 1);
        if (i) CHECK(prod.at(i, i - 1) == 3);
    }

    oracle::Rng rng(113);
    ThreeTermRecurrence rr;
    for (int i = 0; i < 7; ++i) {
        rr.alphas.push_back(rng.rational(-3, 3, 2));
        rr.betas.push_back(rng.nonzero_rational(-3, 3, 2));
    }
    RatMatrix mom = moment_matrix(rr, 7);
    RatMatrix prod2 = production_matrix(mom);
    CHECK(prod2.is_tridiagonal());
    for (std::size_t i = 0; i + 1 < 7; ++i) {
        CHECK(prod2.at(i, i) == rr.alphas[i]);
        CHECK(prod2.at(i, i + 1) == 1);
        if (i) CHECK(prod2.at(i, i - 1) == rr.betas[i - 1]);
    }

    // moment Hankel transform equals the Heilermann product
    Series moments = jfraction_to_series(JFraction{rr.alphas, rr.betas, rat(1)}, 10);
    CHECK(hankel_transform(window_of(moments), 5) ==
          heilermann_hankel(JFraction{rr.alphas, rr.betas, rat(1)}, 5));
}

TEST_CASE("Schroeder moments") {
    // coefficient array ((1/(1+2x), x/(1+3x+2x^2)) = chebyshev array with
    // (r, s, lambda, mu) = (3, 2, -1, 0); inverse first column: large Schroeder
    RatMatrix arr = chebyshev_riordan_array(rat(3), rat(2), rat(-1), rat(0), 6);
    Series g = Series::constant(Rational(1), 6) / Series::polynomial({1, 2}, 6);
    Series f = Series::identity(6) / Series::polynomial({1, 3, 2}, 6);
    CHECK(arr == riordan_matrix(RiordanPair(g, f), 6));
    RatMatrix inv = inverse(arr);
    SequenceWindow sch = parse_sequence("1,2,6,22,90,394,1806");
    for (std::size_t i = 0; i <= 6; ++i) CHECK(inv.at(i, 0) == sch[i]);

    // little Schroeder: (1/(1+x), x/(1+3x+2x^2)); the numerator
    // (1+3x+2x^2)/(1+x) = 1+2x forces (lambda, mu) = (-2, 0)
    RatMatrix arr2 = chebyshev_riordan_array(rat(3), rat(2), rat(-2), rat(0), 6);
    RatMatrix inv2 = inverse(arr2);
    SequenceWindow lsch = parse_sequence("1,1,3,11,45,197,903");
    for (std::size_t i = 0; i <= 6; ++i) CHECK(inv2.at(i, 0) == lsch[i]);
}

TEST_CASE("chebyshev arrays against the recurrence oracle") {
    // plain Chebyshev-U prefix at (r, s) = (0, 1)
    RatMatrix u = chebyshev_riordan_array(rat(0), rat(1), rat(0), rat(0), 4);
    CHECK(u.at(1, 0) == 0);
    CHECK(u.at(1, 1) == 1);
    CHECK(u.at(2, 0) == -1);
    CHECK(u.at(2, 1) == 0);
    CHECK(u.at(2, 2) == 1);

    oracle::Rng rng(127);
    for (int rep = 0; rep < 4; ++rep) {
        Rational r = rng.rational(-3, 3, 2), s = rng.rational(-3, 3, 2);
        Rational lambda = rng.rational(-2, 2, 2), mu = rng.rational(-2, 2, 2);
        RatMatrix arr = chebyshev_riordan_array(r, s, lambda, mu, 6);
        auto q = chebyshev_oracle(r, s, lambda, mu, 6);
        for (std::size_t i = 0; i <= 6; ++i)
            for (std::size_t j = 0; j <= i; ++j) CHECK(arr.at(i, j) == q[i][j]);
    }
}
