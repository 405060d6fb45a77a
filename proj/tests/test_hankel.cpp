#include <catch2/catch_amalgamated.hpp>

#include "rlab/hankel.hpp"
#include "rlab/riordan.hpp"

#include "oracles.hpp"

using namespace rlab;

TEST_CASE("exact_determinant") {
    CHECK(exact_determinant(RatMatrix::identity(5)) == 1);

    RatMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 2;
    CHECK(exact_determinant(m) == 1);

    oracle::Rng rng(101);
    for (int rep = 0; rep < 8; ++rep) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.integer(1, 5));
        RatMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) = rng.rational(-4, 4, 3);
        CHECK(exact_determinant(r) == oracle::cofactor_det(r));
    }

    // zero pivot needing a row swap
    RatMatrix z(3, 3);
    z.at(0, 1) = 1;
    z.at(1, 0) = 1;
    z.at(2, 2) = 1;
    CHECK(exact_determinant(z) == -1);
}

TEST_CASE("hankel_transform") {
    CHECK(hankel_transform(parse_sequence("1,1,2,5,14,42,132")) ==
          parse_sequence("1,1,1,1"));
    CHECK(hankel_transform(parse_sequence("1,-1,-1,2,2,-5,-5,14,14")) ==
          parse_sequence("1,-2,-3,5,8"));
    CHECK(hankel_transform(parse_sequence("7,7,7,7,7")) == parse_sequence("7,0,0"));
    CHECK_THROWS_AS(hankel_transform(parse_sequence("1,2,3"), 2), InsufficientTerms);
}

TEST_CASE("jfraction_from_moments on classical sequences") {
    auto motzkin = jfraction_from_moments(parse_sequence("1,1,2,4,9,21,51,127"));
    CHECK(!motzkin.singular_delta);
    CHECK(motzkin.jf.alphas == parse_sequence("1,1,1,1"));
    CHECK(motzkin.jf.betas == parse_sequence("1,1,1"));

    auto large = jfraction_from_moments(parse_sequence("1,2,6,22,90,394,1806"));
    CHECK(large.jf.alphas == parse_sequence("2,3,3"));
    CHECK(large.jf.betas == parse_sequence("2,2,2"));

    auto little = jfraction_from_moments(parse_sequence("1,1,3,11,45,197,903"));
    CHECK(little.jf.alphas == parse_sequence("1,3,3"));
    CHECK(little.jf.betas == parse_sequence("2,2,2"));

    // vanishing leading minor: 1,1,1,... has D_1 = 0
    auto sing = jfraction_from_moments(parse_sequence("1,1,1,1,1"));
    REQUIRE(sing.singular_delta);
    CHECK(*sing.singular_delta == 1);
    CHECK(sing.jf.alphas.size() == 1);
    CHECK(sing.jf.betas.empty());

    // degenerate windows
    auto single = jfraction_from_moments(parse_sequence("7"));
    CHECK(single.jf.mu0 == 7);
    CHECK(single.jf.alphas.empty());
    CHECK(single.jf.betas.empty());
    auto zero0 = jfraction_from_moments(parse_sequence("0,1,2"));
    REQUIRE(zero0.singular_delta);
    CHECK(*zero0.singular_delta == 0);
    CHECK_THROWS_AS(jfraction_from_moments(SequenceWindow{}), InsufficientTerms);
}

TEST_CASE("jfraction_to_series") {
    JFraction aer{parse_sequence("0,0,0,0"), parse_sequence("1,1,1"), rat(1)};
    CHECK(window_of(jfraction_to_series(aer, 6)) == parse_sequence("1,0,1,0,2,0,5"));

    JFraction sch{parse_sequence("2,3,3,3"), parse_sequence("2,2,2"), rat(1)};
    CHECK(window_of(jfraction_to_series(sch, 7)) ==
          parse_sequence("1,2,6,22,90,394,1806,8558"));

    JFraction geom{parse_sequence("3"), {}, rat(1)};
    CHECK(window_of(jfraction_to_series(geom, 4)) == parse_sequence("1,3,9,27,81"));

    CHECK_THROWS_AS(jfraction_to_series(JFraction{{}, {}, rat(1)}, 3), InsufficientDepth);
    CHECK_THROWS_AS(jfraction_to_series(JFraction{parse_sequence("1,1"), {}, rat(1)}, 3),
                    InsufficientDepth);
}

TEST_CASE("moment extraction round-trips") {
    for (const char* seq :
         {"1,1,2,4,9,21,51,127", "1,2,6,22,90,394,1806", "1,1,3,11,45,197,903"}) {
        SequenceWindow a = parse_sequence(seq);
        auto ext = jfraction_from_moments(a);
        REQUIRE(!ext.singular_delta);
        Series back = jfraction_to_series(ext.jf, a.size() - 1);
        CHECK(window_of(back) == a);
    }
}

TEST_CASE("heilermann_hankel") {
    JFraction two{parse_sequence("0,0,0,0"), parse_sequence("2,2,2"), rat(1)};
    CHECK(heilermann_hankel(two, 3) == parse_sequence("1,2,8,64"));

    JFraction ones{parse_sequence("0,0,0,0"), parse_sequence("1,1,1"), rat(1)};
    CHECK(heilermann_hankel(ones, 3) == parse_sequence("1,1,1,1"));

    CHECK_THROWS_AS(heilermann_hankel(two, 4), InsufficientDepth);

    oracle::Rng rng(59);
    for (int rep = 0; rep < 6; ++rep) {
        JFraction j;
        j.mu0 = 1;
        for (int i = 0; i < 6; ++i) j.alphas.push_back(rng.rational(-3, 3, 2));
        for (int i = 0; i < 5; ++i) j.betas.push_back(rng.nonzero_rational(-3, 3, 2));
        Series g = jfraction_to_series(j, 10);
        CHECK(hankel_transform(window_of(g), 5) == heilermann_hankel(j, 5));
    }
}

TEST_CASE("bivariate_hankel_gf_check") {
    Series ones = Series::constant(Rational(1), 8) / Series::polynomial({1, -1}, 8);
    CHECK(bivariate_hankel_gf_check(ones, 4));
    CHECK(bivariate_hankel_gf_check(catalan_gf(8), 4));

    oracle::Rng rng(61);
    Series p = rng.series(6);
    CHECK(bivariate_hankel_gf_check(p, 3));
    CHECK_THROWS_AS(bivariate_hankel_gf_check(p, 4), InsufficientOrder);
}
