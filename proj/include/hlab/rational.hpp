#pragma once

#include <cctype>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hlab {

// Base class for every error raised by the engines.
class error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (expressions, rational strings, documents).
class parse_error : public error
{
  public:
    parse_error(const std::string& what, std::size_t position = npos)
        : error(position == npos ? what : what + " at position " + std::to_string(position)), position_(position)
    {
    }

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    std::size_t position_;
};

// mpq_class keeps itself canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw error("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "+p", "p/q" with optional surrounding whitespace.
inline Rational parse_rational(std::string_view text)
{
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) {
        --e;
    }
    const std::string_view s = text.substr(b, e - b);
    if (s.empty()) {
        throw parse_error("empty rational literal");
    }
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        ++i;
    }
    const std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
    }
    if (i == num_begin) {
        throw parse_error("malformed rational literal '" + std::string(s) + "'", b + i);
    }
    std::string num(s.substr(0, i));
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') {
            throw parse_error("malformed rational literal '" + std::string(s) + "'", b + i);
        }
        const std::size_t den_begin = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        if (i == den_begin || i != s.size()) {
            throw parse_error("malformed rational literal '" + std::string(s) + "'", b + i);
        }
        den = std::string(s.substr(den_begin));
    }
    const Integer d(den);
    if (d == 0) {
        throw parse_error("zero denominator in '" + std::string(s) + "'");
    }
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational abs_of(const Rational& q) { return abs(q); }

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rational pow_of(const Rational& base, unsigned long e)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

// Exact rational closed interval; lo == hi for exact values.
struct RationalInterval {
    Rational lo;
    Rational hi;

    [[nodiscard]] Rational width() const { return Rational(hi - lo); }
    [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    [[nodiscard]] double midpoint() const { return Rational((lo + hi) / 2).get_d(); }
    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RationalInterval& iv)
    {
        return os << '[' << iv.lo.get_str() << ", " << iv.hi.get_str() << ']';
    }
};

// Enclosure of sqrt(x) for x >= 0 with width <= 2^-bits; exact for perfect squares.
inline RationalInterval sqrt_enclosure(const Rational& x, unsigned bits = 48)
{
    if (x < 0) {
        throw error("square root of a negative rational");
    }
    // sqrt(p/q) = sqrt(p*q) / q
    const Integer pq = x.get_num() * x.get_den();
    if (mpz_perfect_square_p(pq.get_mpz_t()) != 0) {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), pq.get_mpz_t());
        Rational r(s, x.get_den());
        r.canonicalize();
        return {r, r};
    }
    Integer scaled = pq;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Integer den = x.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rational lo(s, den);
    Rational hi(Integer(s + 1), den);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

} // namespace hlab
