#include <catch2/catch_amalgamated.hpp>

#include "rlab/hankel.hpp"
#include "rlab/riordan.hpp"

#include "oracles.hpp"

using namespace rlab;

namespace {
// (1/(1-x), x/(1-x)^2): the array with entries C(n+k, 2k)
RiordanPair schroeder_pair(std::size_t n) {
    Series one = Series::constant(Rational(1), n);
    Series den = Series::polynomial({1, -1}, n);
    return RiordanPair(one / den, Series::identity(n) / (den * den));
}

RiordanPair random_pair(oracle::Rng& rng, std::size_t n) {
    Series g = rng.series(n);
    g[0] = rng.nonzero_rational();
    Series f = rng.series(n);
    f[0] = 0;
    f[1] = rng.nonzero_rational();
    return RiordanPair(g, f);
}
}  // namespace

TEST_CASE("pair validation and stretched flag") {
    CHECK_THROWS_AS(RiordanPair(Series::identity(4), Series::identity(4)), ZeroConstantTerm);
    CHECK_THROWS_AS(RiordanPair(Series::constant(Rational(1), 4),
                                Series::constant(Rational(1), 4)),
                    NonzeroConstantInner);
    CHECK(!schroeder_pair(6).stretched());
    RiordanPair st(Series::constant(Rational(1), 6), Series::monomial(2, Rational(1), 6));
    CHECK(st.stretched());
    CHECK_THROWS_AS(riordan_inverse(st), StretchedNotInvertible);
}

TEST_CASE("riordan_matrix") {
    RatMatrix m = riordan_matrix(schroeder_pair(4), 4);
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t k = 0; k <= 4; ++k)
            CHECK(m.at(i, k) ==
                  Rational(binomial(static_cast<long>(i + k), 2 * static_cast<long>(k))));

    CHECK(riordan_matrix(riordan_identity(5), 5) == RatMatrix::identity(6));

    // stretched array from (1/(1-x^3), x^2/(1-x^3)^2)
    std::size_t n = 6;
    Series den = Series::polynomial({1, 0, 0, -1}, n);
    RiordanPair st(Series::constant(Rational(1), n) / den,
                   Series::monomial(2, Rational(1), n) / (den * den));
    RatMatrix s = riordan_matrix(st, 6);
    CHECK(s.at(2, 1) == 1);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(s.at(0, k) == 0);
    CHECK(s.is_lower_triangular());

    CHECK_THROWS_AS(riordan_matrix(schroeder_pair(3), 5), InsufficientOrder);
}

TEST_CASE("riordan_apply reproduces Schroeder numbers") {
    std::size_t n = 9;
    Series large = riordan_apply(schroeder_pair(n), catalan_gf(n));
    CHECK(window_of(large) ==
          parse_sequence("1,2,6,22,90,394,1806,8558,41586,206098"));

    // (c(x) + c(-x))/2 fed through the same array gives the little Schroeder numbers
    Series c = catalan_gf(n);
    Series even(n);
    for (std::size_t i = 0; i <= n; i += 2) even[i] = c[i];
    Series little = riordan_apply(schroeder_pair(n), even);
    CHECK(window_of(little) ==
          parse_sequence("1,1,3,11,45,197,903,4279,20793,103049"));

    oracle::Rng rng(5);
    Series h = rng.series(n);
    CHECK(riordan_apply(riordan_identity(n), h) == h);
}

TEST_CASE("FTRA matches matrix-vector action") {
    oracle::Rng rng(23);
    std::size_t n = 10;
    for (int rep = 0; rep < 5; ++rep) {
        RiordanPair p = random_pair(rng, n);
        Series h = rng.series(n);
        Series lhs = riordan_apply(p, h);
        RatMatrix m = riordan_matrix(p, n);
        for (std::size_t i = 0; i <= n; ++i) {
            Rational acc;
            for (std::size_t k = 0; k <= n; ++k) acc += m.at(i, k) * h[k];
            CHECK(lhs[i] == acc);
        }
    }
}

TEST_CASE("group law") {
    std::size_t n = 8;
    Series one = Series::constant(Rational(1), n);
    Series den = Series::polynomial({1, -1}, n);
    RiordanPair pascal(one / den, Series::identity(n) / den);
    RiordanPair sq = riordan_mul(pascal, pascal);
    CHECK(sq.g() == one / Series::polynomial({1, -2}, n));
    CHECK(sq.f() == Series::identity(n) / Series::polynomial({1, -2}, n));

    oracle::Rng rng(31);
    for (int rep = 0; rep < 4; ++rep) {
        RiordanPair p = random_pair(rng, n);
        RiordanPair q = random_pair(rng, n);
        RiordanPair r = random_pair(rng, n);
        CHECK(riordan_matrix(riordan_mul(p, q), n) ==
              riordan_matrix(p, n) * riordan_matrix(q, n));
        RiordanPair pq_r = riordan_mul(riordan_mul(p, q), r);
        RiordanPair p_qr = riordan_mul(p, riordan_mul(q, r));
        CHECK(pq_r.g() == p_qr.g());
        CHECK(pq_r.f() == p_qr.f());
        CHECK(riordan_mul(p, riordan_identity(n)).g() == p.g());
        RiordanPair inv = riordan_inverse(p);
        RiordanPair id1 = riordan_mul(p, inv);
        RiordanPair id2 = riordan_mul(inv, p);
        CHECK(id1.g() == Series::constant(Rational(1), n));
        CHECK(id1.f() == Series::identity(n));
        CHECK(id2.g() == Series::constant(Rational(1), n));
        CHECK(id2.f() == Series::identity(n));
    }
}

TEST_CASE("riordan_inverse of Schroeder-type array round-trips") {
    std::size_t n = 8;
    Series one = Series::constant(Rational(1), n);
    Series den = Series::polynomial({1, 1}, n);
    RiordanPair p(one / den, Series::identity(n) / (den * den));
    RiordanPair pi = riordan_inverse(p);
    RiordanPair prod = riordan_mul(p, pi);
    CHECK(prod.g() == one);
    CHECK(prod.f() == Series::identity(n));
    CHECK(riordan_inverse(riordan_identity(n)).g() == one);
}

TEST_CASE("binomial_transform") {
    Series a(window_of(Series(parse_sequence("1,-1,3,-8,22,-59"))));
    CHECK(window_of(binomial_transform(a, rat(2))) == parse_sequence("1,1,3,6,14,33"));

    Series ones = Series::constant(Rational(1), 4) / Series::polynomial({1, -1}, 4);
    CHECK(window_of(binomial_transform(ones, rat(1))) == parse_sequence("1,2,4,8,16"));

    oracle::Rng rng(37);
    Series b = rng.series(10);
    CHECK(binomial_transform(b, rat(0)) == b);
    CHECK(binomial_transform(binomial_transform(b, rat(3)), rat(-3)) == b);
    // term n is sum_k C(n,k) r^{n-k} a_k
    Series bt = binomial_transform(b, rat(2));
    for (std::size_t n = 0; n <= 10; ++n) {
        Rational acc;
        for (std::size_t k = 0; k <= n; ++k)
            acc += Rational(binomial(static_cast<long>(n), static_cast<long>(k))) *
                   pow_rational(rat(2), static_cast<long>(n - k)) * b[k];
        CHECK(bt[n] == acc);
    }
}

TEST_CASE("invert_transform") {
    oracle::Rng rng(41);
    Series a = rng.series(10);
    CHECK(invert_transform(a, rat(0)) == a);
    CHECK(invert_transform(invert_transform(a, rat(2)), rat(-2)) == a);

    Series geom = Series::constant(Rational(1), 4) / Series::polynomial({1, -1}, 4);
    CHECK(window_of(invert_transform(geom, rat(1))) == parse_sequence("1,2,4,8,16"));
}

TEST_CASE("prepend_one_gf") {
    Series zero(6);
    CHECK(window_of(prepend_one_gf(zero)) == parse_sequence("1,1,1,1,1,1,1"));

    oracle::Rng rng(43);
    for (int rep = 0; rep < 5; ++rep) {
        Series g = rng.series(12);
        auto h = hankel_transform(window_of(g));
        auto h1 = hankel_transform(window_of(prepend_one_gf(g)));
        CHECK(h1[0] == 1);
        for (std::size_t i = 0; i + 1 < h1.size() && i < h.size(); ++i)
            CHECK(h1[i + 1] == h[i]);
    }
}

TEST_CASE("aerate") {
    Series evens(Series(parse_sequence("1,2,14,132")));
    CHECK(window_of(aerate(evens, 2)) == parse_sequence("1,0,2,0,14,0,132"));
    Series s(Series(parse_sequence("1,2,6,22")));
    CHECK(aerate(s, 1) == s);
    CHECK(window_of(aerate(s, 3)) == parse_sequence("1,0,0,2,0,0,6,0,0,22"));
}

TEST_CASE("pseudo_involution_check") {
    // (1/(1-x), x/(1-x)) is the binomial-coefficient array: a pseudo-involution
    std::size_t n = 8;
    Series ones = Series::constant(Rational(1), 20) / Series::polynomial({1, -1}, 20);
    CHECK(pseudo_involution_check(ones, n));
    CHECK_FALSE(pseudo_involution_check(catalan_gf(20), n));
    CHECK_FALSE(pseudo_involution_check(Series::polynomial({1, 1}, 20), n));
    CHECK_THROWS_AS(pseudo_involution_check(Series::polynomial({2, 1}, 20), 4),
                    ZeroConstantTerm);
}

TEST_CASE("hankel invariance under binomial and invert transforms") {
    oracle::Rng rng(47);
    for (int rep = 0; rep < 6; ++rep) {
        Series a(rng.integer_window(13));
        Rational r = rng.rational(-3, 3, 2);
        Rational t = rng.rational(-3, 3, 2);
        auto h = hankel_transform(window_of(a));
        CHECK(hankel_transform(window_of(binomial_transform(a, r))) == h);
        CHECK(hankel_transform(window_of(invert_transform(a, t))) == h);
    }
}

TEST_CASE("J-fraction shift laws") {
    oracle::Rng rng(53);
    Series a(rng.integer_window(15, -3, 3));
    a[0] = 1;
    auto base = jfraction_from_moments(window_of(a));
    if (!base.singular_delta) {
        Rational r = rat(2), t = rat(-3);
        auto bt = jfraction_from_moments(window_of(binomial_transform(a, r)));
        REQUIRE(!bt.singular_delta);
        CHECK(bt.jf.betas == base.jf.betas);
        for (std::size_t i = 0; i < base.jf.alphas.size(); ++i)
            CHECK(bt.jf.alphas[i] == base.jf.alphas[i] + r);
        auto iv = jfraction_from_moments(window_of(invert_transform(a, t)));
        REQUIRE(!iv.singular_delta);
        CHECK(iv.jf.betas == base.jf.betas);
        CHECK(iv.jf.alphas[0] == base.jf.alphas[0] + t);
        for (std::size_t i = 1; i < base.jf.alphas.size(); ++i)
            CHECK(iv.jf.alphas[i] == base.jf.alphas[i]);
    }
}

TEST_CASE("closed-form entries of the two-parameter array") {
    // T(n,k) = m^k sum_j C(k+1,j) C(n+k-j, 2k) a^j (-b)^(n-k-j), with the
    // combinatorial convention C(m, r) = 0 for m < 0; no row-0 correction
    // term is needed.
    std::size_t n = 6;
    for (auto [a, b, m] : {std::array<long, 3>{2, 3, 1}, {1, -2, 2}, {0, 1, 3}}) {
        Series num = Series::polynomial({rat(1), rat(a)}, n);
        Series den = Series::polynomial({rat(1), rat(b)}, n);
        RiordanPair p(num / den, (Series::monomial(1, rat(m), n) * num) / (den * den));
        RatMatrix mat = riordan_matrix(p, n);
        for (long i = 0; i <= static_cast<long>(n); ++i)
            for (long k = 0; k <= static_cast<long>(n); ++k) {
                Rational acc;
                for (long j = 0; j <= k + 1; ++j)
                    acc += Rational(binomial(k + 1, j)) * Rational(binomial(i + k - j, 2 * k)) *
                           pow_rational(rat(a), j) *
                           (i - k - j >= 0 ? pow_rational(rat(-b), i - k - j) : Rational(0));
                CHECK(mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) ==
                      acc * pow_rational(rat(m), k));
            }
    }
}
