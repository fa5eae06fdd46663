#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"
#include "roots.hpp"

namespace hlab {

// Scalars feeding the Euler-characteristic bounds. K is the curvature
// bound (sec <= -K), C the commutator norm, c_n the dimensional constant
// (always user-supplied), a_n = ∫ c1(L)^n.
struct BoundsInput {
    int n = 0;
    Rational K;
    Rational C;
    Rational c_n;
    Rational a_n;
    std::vector<Rational> chi_p;
    std::vector<std::optional<MPolynomial>> hilbert;

    void validate() const
    {
        if (n < 1) {
            throw error("bounds: dimension n must be >= 1");
        }
        if (K <= 0) {
            throw error("bounds: K must be positive");
        }
        if (c_n <= 0) {
            throw error("bounds: c_n must be positive");
        }
        if (C < 0) {
            throw error("bounds: C must be nonnegative");
        }
    }
};

namespace detail {

inline void require_positive_C(const BoundsInput& b, const char* what)
{
    b.validate();
    if (b.C == 0) {
        throw error(std::string(what) + " is undefined for C = 0 (flat curvature)");
    }
}

inline Rational integer_power(const Rational& x, int n) { return pow_of(x, static_cast<unsigned long>(n)); }

} // namespace detail

// Δ^order P with ΔP(m) = P(m+1) - P(m).
inline MPolynomial forward_difference(const MPolynomial& p, int order)
{
    if (order < 0) {
        throw error("forward difference order must be >= 0");
    }
    MPolynomial out = p;
    for (int i = 0; i < order && !out.is_zero(); ++i) {
        out = out.taylor_shift(1) - out;
    }
    return out;
}

// Least m in [m0, m0 + k n] with P(m) >= a_n k^n / 2^(n-1), where n = deg P
// and a_n = n! * leading coefficient.
inline Integer lemma44_search(const MPolynomial& p, const Integer& m0, int k)
{
    const int n = p.degree();
    if (n < 1) {
        throw error("lemma44_search needs deg P >= 1");
    }
    if (k < 0) {
        throw error("lemma44_search needs k >= 0");
    }
    const Rational a = p.leading() * Rational(factorial(static_cast<unsigned long>(n)));
    if (!is_integer(a) || a <= 0) {
        throw error("lemma44_search needs n! * leading coefficient to be a positive integer, got " + a.get_str());
    }
    const Rational threshold = a * detail::integer_power(Rational(k), n) / Rational(Integer(1) << (n - 1));
    const Integer last = m0 + Integer(k) * n;
    for (Integer m = m0; m <= last; ++m) {
        if (p(Rational(m)) < 0) {
            throw error("lemma44_search precondition failed: P(" + m.get_str() + ") < 0");
        }
    }
    for (Integer m = m0; m <= last; ++m) {
        if (p(Rational(m)) >= threshold) {
            return m;
        }
    }
    throw error("lemma44_search found no m in [" + m0.get_str() + ", " + last.get_str() +
                "]; the numerical-polynomial hypothesis is violated");
}

// First candidate (in list order) with |P| >= Lval. Such a candidate must
// exist once the list has 2 n Lval + 1 distinct entries, n = deg P.
inline Integer lemma42_search(const MPolynomial& p, const std::vector<Integer>& candidates, const Integer& lval)
{
    if (p.degree() < 1) {
        throw error("lemma42_search needs a non-constant polynomial");
    }
    const std::set<Integer> distinct(candidates.begin(), candidates.end());
    if (distinct.size() != candidates.size()) {
        throw error("lemma42_search candidates must be distinct");
    }
    for (const auto& m : candidates) {
        if (abs(p(Rational(m))) >= Rational(lval)) {
            return m;
        }
    }
    const Integer needed = 2 * Integer(p.degree()) * lval + 1;
    if (Integer(static_cast<unsigned long>(candidates.size())) < needed) {
        throw error("lemma42_search candidate list too short: have " + std::to_string(candidates.size()) + ", need " +
                    needed.get_str());
    }
    throw error("lemma42_search found no candidate with |P| >= " + lval.get_str() + "; P is not integer-valued");
}

inline Rational root_isolation_width() { return Rational(1) / Rational(Integer(1) << 20); }

struct RootReport {
    std::vector<RootInterval> Z_p;
    Rational m_p;
    Rational C_plus;
    Rational C_minus;
};

// Real roots of P - χ. m_p, C± are certified upper bounds taken from the
// isolating interval endpoints; an empty root set gives 0.
inline RootReport root_report(const MPolynomial& p, const Rational& chi)
{
    const MPolynomial q = p - MPolynomial::constant(chi);
    if (q.is_zero()) {
        throw error("root_report: P - chi is the zero polynomial");
    }
    RootReport rep;
    rep.Z_p = isolate_real_roots(q, root_isolation_width());
    for (const auto& iv : rep.Z_p) {
        rep.m_p = std::max(rep.m_p, iv.magnitude_bound());
        if (iv.lo >= 0 && iv.hi > 0) {
            rep.C_plus = std::max(rep.C_plus, iv.hi);
        } else if (iv.hi <= 0 && iv.lo < 0) {
            rep.C_minus = std::max(rep.C_minus, Rational(-iv.lo));
        }
    }
    return rep;
}

// (n+1) + floor(c_n K / (n C))
inline Integer bound_T4(const BoundsInput& b)
{
    detail::require_positive_C(b, "bound_T4");
    return Integer(b.n + 1) + floor_of(b.c_n * b.K / (Rational(b.n) * b.C));
}

// 3 + |∫c1²(L)| floor(c_n K / C)², surfaces only.
inline Rational bound_T2(const BoundsInput& b, const Rational& c1sq)
{
    if (b.n != 2) {
        throw error("bound_T2 applies to surfaces (n = 2), got n = " + std::to_string(b.n));
    }
    detail::require_positive_C(b, "bound_T2");
    const Rational f(floor_of(b.c_n * b.K / b.C));
    return 3 + abs(c1sq) * f * f;
}

struct BoundValue {
    Rational value;
    bool degenerate = false; // a_n = 0: only the trivial bound is available
};

inline BoundValue bound_T5(const BoundsInput& b, const Rational& m_p)
{
    detail::require_positive_C(b, "bound_T5");
    const Rational trivial(b.n + 1);
    if (b.a_n == 0) {
        return {trivial, true};
    }
    const Rational x = b.c_n * b.K - b.C * m_p;
    const int s = sgn(floor_of(x));
    const Rational f(floor_of(x / (2 * b.C * b.n)));
    const Rational expr = trivial + 2 * abs(b.a_n) * s * detail::integer_power(abs(f), b.n);
    return {std::max(trivial, expr), false};
}

inline BoundValue bound_C1(const BoundsInput& b, const Rational& c_pm)
{
    detail::require_positive_C(b, "bound_C1");
    if (b.c_n * b.K < b.C * c_pm) {
        throw error("bound_C1 hypothesis c_n K >= C C^± fails: " + Rational(b.c_n * b.K).get_str() + " < " +
                    Rational(b.C * c_pm).get_str());
    }
    if (b.a_n == 0) {
        return {1, true};
    }
    const Rational f(floor_of((b.c_n * b.K - b.C * c_pm) / (2 * b.C * b.n)));
    return {2 * abs(b.a_n) * detail::integer_power(abs(f), b.n) + 1, false};
}

struct EThetaInterval {
    RationalInterval lower; // enclosure of sqrt(c_n / (n C ((-1)^n χ - n)))
    RationalInterval upper; // enclosure of sqrt(n / K)
    bool consistent = true; // lower endpoint does not exceed upper endpoint
};

inline EThetaInterval e_theta_interval(const BoundsInput& b, const Integer& chi)
{
    detail::require_positive_C(b, "e_theta_interval");
    const Integer s = b.n % 2 == 0 ? chi : Integer(-chi);
    if (s <= b.n) {
        throw error("e_theta_interval needs (-1)^n chi > n, got " + s.get_str());
    }
    EThetaInterval out;
    out.lower = sqrt_enclosure(b.c_n / (Rational(b.n) * b.C * Rational(s - b.n)), 48);
    out.upper = sqrt_enclosure(Rational(b.n) / b.K, 48);
    out.consistent = out.lower.lo <= out.upper.hi;
    return out;
}

struct T4ChainReport {
    Integer N;
    Integer m_tilde;
    Rational chi_p;
    Rational difference;   // P(m̃) - χ^p
    Integer bound;         // N + 1
    bool untwisted = true; // bound holds for (-1)^{n-p} χ^p(X); else for χ^p(X, L^{m̃})
    bool degenerate = false;
};

// N = floor(c_n K / (n C)); scan m ∈ [-nN, nN] for |P(m) - χ^p| >= N and
// read off which alternative of the theorem the data certifies.
inline T4ChainReport t4_chain(const BoundsInput& b, const MPolynomial& p, int pindex)
{
    detail::require_positive_C(b, "t4_chain");
    if (p.degree() < 1) {
        throw error("t4_chain: the Hilbert polynomial is constant");
    }
    if (pindex < 0 || pindex > b.n) {
        throw error("t4_chain: p must lie in [0, n]");
    }
    T4ChainReport rep;
    rep.chi_p = p(0);
    if (static_cast<std::size_t>(pindex) < b.chi_p.size() && b.chi_p[static_cast<std::size_t>(pindex)] != rep.chi_p) {
        throw error("t4_chain: chi_p[" + std::to_string(pindex) + "] = " +
                    b.chi_p[static_cast<std::size_t>(pindex)].get_str() + " disagrees with P(0) = " + rep.chi_p.get_str());
    }
    rep.N = floor_of(b.c_n * b.K / (Rational(b.n) * b.C));
    rep.degenerate = rep.N == 0;
    const Integer reach = Integer(b.n) * rep.N;
    std::vector<Integer> window;
    for (Integer m = -reach; m <= reach; ++m) {
        window.push_back(m);
    }
    const MPolynomial shifted = p - MPolynomial::constant(rep.chi_p);
    rep.m_tilde = lemma42_search(shifted, window, rep.N);
    rep.difference = shifted(Rational(rep.m_tilde));
    const int sign = (b.n - pindex + 1) % 2 == 0 ? 1 : -1;
    rep.untwisted = Rational(sign * rep.difference) >= Rational(rep.N);
    rep.bound = rep.N + 1;
    return rep;
}

} // namespace hlab
