#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rlab {

// Exact arbitrary-precision rational scalar. mpq_class keeps values
// canonical (reduced, positive denominator), which is the invariant
// everything downstream relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

// Prints as "p/q", denominator omitted when 1.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

// r^e for integer e; negative e requires r != 0. 0^0 = 1.
inline Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), k);
    if (e < 0) {
        if (num == 0) throw std::domain_error("0 raised to negative power");
        Rational out(den, num);
        out.canonicalize();
        return out;
    }
    return Rational(num, den);  // reduced since r was
}

// Exact nonnegative square root when r is the square of a rational.
inline std::optional<Rational> sqrt_rational(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    Integer num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

}  // namespace rlab
