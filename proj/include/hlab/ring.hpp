#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hlab {

struct Generator {
    std::string name;
    int weight = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

// Generator alphabet plus the truncation weight n (complex dimension).
// Terms of total weight > n are identically zero in the ring.
class RingSpec
{
  public:
    RingSpec(std::vector<Generator> generators, int truncation)
        : generators_(std::move(generators)), truncation_(truncation)
    {
        if (truncation_ < 1) {
            throw error("ring truncation must be >= 1");
        }
        std::set<std::string> seen;
        for (const auto& g : generators_) {
            if (g.name.empty()) {
                throw error("empty generator name");
            }
            if (g.weight < 1) {
                throw error("generator '" + g.name + "' must have positive weight");
            }
            if (!seen.insert(g.name).second) {
                throw error("duplicate generator name '" + g.name + "'");
            }
        }
    }

    [[nodiscard]] const std::vector<Generator>& generators() const noexcept { return generators_; }
    [[nodiscard]] std::size_t size() const noexcept { return generators_.size(); }
    [[nodiscard]] int truncation() const noexcept { return truncation_; }

    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const
    {
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (generators_[i].name == name) {
                return i;
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

  private:
    std::vector<Generator> generators_;
    int truncation_;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

inline RingSpecPtr make_ring(std::vector<Generator> generators, int truncation)
{
    return std::make_shared<const RingSpec>(std::move(generators), truncation);
}

// Exponent multi-index with its cached total weight. The order is
// graded-lexicographic: lower weight first, then larger exponent of an
// earlier generator first (c1^2 < c1*c2 < c2 for weights 1, 1, 2...).
struct Monomial {
    int weight = 0;
    std::vector<int> exponents;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        if (a.weight != b.weight) {
            return a.weight < b.weight;
        }
        return a.exponents > b.exponents;
    }
};

inline std::string monomial_to_string(const Monomial& m, const RingSpec& spec)
{
    std::string out;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += spec.generators()[i].name;
        if (m.exponents[i] > 1) {
            out += '^' + std::to_string(m.exponents[i]);
        }
    }
    return out.empty() ? "1" : out;
}

class GradedElement;
GradedElement multiply(const GradedElement& a, const GradedElement& b, bool* dropped);

// Truncated polynomial in the generators of a RingSpec with exact
// rational coefficients.
class GradedElement
{
  public:
    using Terms = std::map<Monomial, Rational>;

    explicit GradedElement(RingSpecPtr spec) : spec_(std::move(spec))
    {
        if (!spec_) {
            throw error("null ring spec");
        }
    }

    static GradedElement constant(RingSpecPtr spec, const Rational& value)
    {
        GradedElement r(std::move(spec));
        r.add_term(r.unit_monomial(), value);
        return r;
    }

    static GradedElement generator(RingSpecPtr spec, const std::string& name)
    {
        const auto idx = spec->index_of(name);
        if (!idx) {
            throw error("unknown generator '" + name + "'");
        }
        GradedElement r(spec);
        Monomial m = r.unit_monomial();
        m.exponents[*idx] = 1;
        m.weight = spec->generators()[*idx].weight;
        r.add_term(m, Rational(1));
        return r;
    }

    // Monomial with the given exponents (zero if it exceeds the truncation).
    static GradedElement monomial(RingSpecPtr spec, const std::vector<int>& exponents, const Rational& coeff = 1)
    {
        if (exponents.size() != spec->size()) {
            throw error("exponent vector length does not match ring");
        }
        GradedElement r(spec);
        Monomial m{0, exponents};
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] < 0) {
                throw error("negative exponent");
            }
            m.weight += exponents[i] * spec->generators()[i].weight;
        }
        r.add_term(m, coeff);
        return r;
    }

    [[nodiscard]] const RingSpecPtr& spec() const noexcept { return spec_; }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] int truncation() const noexcept { return spec_->truncation(); }

    [[nodiscard]] Monomial unit_monomial() const { return Monomial{0, std::vector<int>(spec_->size(), 0)}; }

    [[nodiscard]] Rational constant_term() const
    {
        const auto it = terms_.find(unit_monomial());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] Rational coefficient(const Monomial& m) const
    {
        const auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Returns false when the term was refused because of its weight.
    bool add_term(const Monomial& m, const Rational& c)
    {
        if (m.weight > spec_->truncation()) {
            return false;
        }
        if (c == 0) {
            return true;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
        return true;
    }

    [[nodiscard]] GradedElement component(int k) const
    {
        if (k < 0 || k > spec_->truncation()) {
            throw error("graded component " + std::to_string(k) + " out of range [0, " +
                        std::to_string(spec_->truncation()) + "]");
        }
        GradedElement r(spec_);
        for (const auto& [m, c] : terms_) {
            if (m.weight == k) {
                r.terms_.emplace(m, c);
            }
        }
        return r;
    }

    [[nodiscard]] bool is_homogeneous(int k) const
    {
        for (const auto& [m, c] : terms_) {
            if (m.weight != k) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool same_ring(const GradedElement& other) const
    {
        return spec_ == other.spec_ || *spec_ == *other.spec_;
    }

    void require_same_ring(const GradedElement& other) const
    {
        if (!same_ring(other)) {
            throw error("ring spec mismatch");
        }
    }

    GradedElement& operator+=(const GradedElement& o)
    {
        require_same_ring(o);
        for (const auto& [m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    GradedElement& operator-=(const GradedElement& o)
    {
        require_same_ring(o);
        for (const auto& [m, c] : o.terms_) {
            add_term(m, Rational(-c));
        }
        return *this;
    }

    GradedElement& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    GradedElement& operator/=(const Rational& s)
    {
        if (s == 0) {
            throw error("division by zero");
        }
        for (auto& [m, c] : terms_) {
            c /= s;
        }
        return *this;
    }

    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator-(GradedElement a)
    {
        for (auto& [m, c] : a.terms_) {
            c = -c;
        }
        return a;
    }
    friend GradedElement operator*(const GradedElement& a, const GradedElement& b)
    {
        return multiply(a, b, nullptr);
    }
    friend GradedElement operator*(GradedElement a, const Rational& s) { return a *= s; }
    friend GradedElement operator*(const Rational& s, GradedElement a) { return a *= s; }
    friend GradedElement operator/(GradedElement a, const Rational& s) { return a /= s; }

    friend bool operator==(const GradedElement& a, const GradedElement& b)
    {
        return a.same_ring(b) && a.terms_ == b.terms_;
    }

    [[nodiscard]] std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            const Rational mag = abs(c);
            if (first) {
                os << (negative ? "-" : "");
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            const bool unit = m.weight == 0 && m == unit_monomial();
            if (unit) {
                os << (is_integer(mag) ? mag.get_str() : "(" + mag.get_str() + ")");
                continue;
            }
            if (mag != 1) {
                os << (is_integer(mag) ? mag.get_str() : "(" + mag.get_str() + ")") << '*';
            }
            os << monomial_to_string(m, *spec_);
        }
        return os.str();
    }

  private:
    friend GradedElement multiply(const GradedElement& a, const GradedElement& b, bool* dropped);

    RingSpecPtr spec_;
    Terms terms_;
};

// Truncated product; *dropped is set when some nonzero product term
// exceeded the truncation weight.
inline GradedElement multiply(const GradedElement& a, const GradedElement& b, bool* dropped)
{
    a.require_same_ring(b);
    GradedElement r(a.spec_);
    const int n = a.truncation();
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.weight + mb.weight > n) {
                if (dropped != nullptr) {
                    *dropped = true;
                }
                continue;
            }
            Monomial m{ma.weight + mb.weight, ma.exponents};
            for (std::size_t i = 0; i < m.exponents.size(); ++i) {
                m.exponents[i] += mb.exponents[i];
            }
            r.add_term(m, Rational(ca * cb));
        }
    }
    return r;
}

inline GradedElement power(const GradedElement& x, unsigned k, bool* dropped = nullptr)
{
    GradedElement r = GradedElement::constant(x.spec(), 1);
    GradedElement base = x;
    while (k > 0) {
        if ((k & 1U) != 0) {
            r = multiply(r, base, dropped);
        }
        k >>= 1U;
        if (k > 0) {
            base = multiply(base, base, dropped);
        }
    }
    return r;
}

inline GradedElement graded_component(const GradedElement& x, int k) { return x.component(k); }

// Sum_{k=0}^{n} x^k / k!; x must be nilpotent (no constant term).
inline GradedElement exp(const GradedElement& x)
{
    if (x.constant_term() != 0) {
        throw error("exp requires an element with zero constant term");
    }
    GradedElement result = GradedElement::constant(x.spec(), 1);
    GradedElement term = result;
    for (int k = 1; k <= x.truncation(); ++k) {
        term = term * x / Rational(k);
        if (term.is_zero()) {
            break;
        }
        result += term;
    }
    return result;
}

inline GradedElement log(const GradedElement& u)
{
    if (u.constant_term() != 1) {
        throw error("log requires an element with constant term 1");
    }
    const GradedElement x = u - GradedElement::constant(u.spec(), 1);
    GradedElement result(u.spec());
    GradedElement term = GradedElement::constant(u.spec(), 1);
    for (int k = 1; k <= u.truncation(); ++k) {
        term = term * x;
        if (term.is_zero()) {
            break;
        }
        result += (k % 2 == 1 ? term : -term) / Rational(k);
    }
    return result;
}

namespace detail {

inline void require_common_ring(const std::vector<GradedElement>& xs)
{
    for (std::size_t i = 1; i < xs.size(); ++i) {
        xs[0].require_same_ring(xs[i]);
    }
}

} // namespace detail

// Newton identities: from e_1..e_n to p_1..p_n. Missing e_k (bundle rank
// below n) are taken as zero; extra entries beyond n are ignored.
inline std::vector<GradedElement> power_sums_from_elementary(const std::vector<GradedElement>& e, int n,
                                                             const RingSpecPtr& spec)
{
    detail::require_common_ring(e);
    if (!e.empty()) {
        e.front().require_same_ring(GradedElement(spec));
    }
    std::vector<GradedElement> ek;
    ek.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        ek.push_back(static_cast<std::size_t>(k) < e.size() ? e[static_cast<std::size_t>(k)] : GradedElement(spec));
    }
    std::vector<GradedElement> p;
    p.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        GradedElement pk = ek[static_cast<std::size_t>(k - 1)] * Rational(k % 2 == 1 ? k : -k);
        for (int i = 1; i < k; ++i) {
            const GradedElement t = ek[static_cast<std::size_t>(i - 1)] * p[static_cast<std::size_t>(k - i - 1)];
            if (i % 2 == 1) {
                pk += t;
            } else {
                pk -= t;
            }
        }
        p.push_back(std::move(pk));
    }
    return p;
}

inline std::vector<GradedElement> power_sums_from_elementary(const std::vector<GradedElement>& e, int n)
{
    if (e.empty()) {
        throw error("power_sums_from_elementary needs at least one class to fix the ring");
    }
    return power_sums_from_elementary(e, n, e.front().spec());
}

// Inverse Newton identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
// Returns e_1..e_n; the inputs may carry constant terms.
inline std::vector<GradedElement> elementary_from_power_sums(const std::vector<GradedElement>& p, int n)
{
    if (p.size() < static_cast<std::size_t>(n) || p.empty()) {
        throw error("elementary_from_power_sums needs n power sums");
    }
    detail::require_common_ring(p);
    const RingSpecPtr& spec = p.front().spec();
    std::vector<GradedElement> e;
    e.reserve(static_cast<std::size_t>(n) + 1);
    e.push_back(GradedElement::constant(spec, 1));
    for (int k = 1; k <= n; ++k) {
        GradedElement acc(spec);
        for (int i = 1; i <= k; ++i) {
            const GradedElement t = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i - 1)];
            if (i % 2 == 1) {
                acc += t;
            } else {
                acc -= t;
            }
        }
        e.push_back(acc / Rational(k));
    }
    e.erase(e.begin());
    return e;
}

// One-variable power series truncated at degree n (n + 1 coefficients).
class PowerSeries1
{
  public:
    explicit PowerSeries1(int truncation) : coeffs_(static_cast<std::size_t>(truncation) + 1)
    {
        if (truncation < 0) {
            throw error("negative series truncation");
        }
    }

    PowerSeries1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw error("empty power series");
        }
    }

    [[nodiscard]] int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational& operator[](std::size_t k) { return coeffs_.at(k); }

    friend PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b)
    {
        const int n = std::min(a.truncation(), b.truncation());
        PowerSeries1 r(n);
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; i + j <= n; ++j) {
                r.coeffs_[static_cast<std::size_t>(i + j)] +=
                    a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        return r;
    }

    friend bool operator==(const PowerSeries1&, const PowerSeries1&) = default;

    // Multiplicative inverse, constant term must be nonzero.
    [[nodiscard]] PowerSeries1 inverse() const
    {
        if (coeffs_[0] == 0) {
            throw error("power series with zero constant term is not invertible");
        }
        const int n = truncation();
        PowerSeries1 r(n);
        r.coeffs_[0] = 1 / coeffs_[0];
        for (int k = 1; k <= n; ++k) {
            Rational acc = 0;
            for (int i = 1; i <= k; ++i) {
                acc += coeffs_[static_cast<std::size_t>(i)] * r.coeffs_[static_cast<std::size_t>(k - i)];
            }
            r.coeffs_[static_cast<std::size_t>(k)] = -acc / coeffs_[0];
        }
        return r;
    }

    // log Q for Q(0) = 1, from Q * (log Q)' = Q'.
    [[nodiscard]] PowerSeries1 log() const
    {
        if (coeffs_[0] != 1) {
            throw error("log of a power series requires constant term 1");
        }
        const int n = truncation();
        PowerSeries1 l(n);
        for (int k = 1; k <= n; ++k) {
            Rational acc = Rational(k) * coeffs_[static_cast<std::size_t>(k)];
            for (int i = 1; i < k; ++i) {
                acc -= Rational(i) * l.coeffs_[static_cast<std::size_t>(i)] * coeffs_[static_cast<std::size_t>(k - i)];
            }
            l.coeffs_[static_cast<std::size_t>(k)] = acc / k;
        }
        return l;
    }

    // Coefficients of e^{s t}.
    static PowerSeries1 exponential(int truncation, const Rational& s = 1)
    {
        PowerSeries1 r(truncation);
        Rational term = 1;
        for (int k = 0; k <= truncation; ++k) {
            r.coeffs_[static_cast<std::size_t>(k)] = term;
            term = term * s / (k + 1);
        }
        return r;
    }

  private:
    std::vector<Rational> coeffs_;
};

// t / (1 - e^{-t}) = 1 / ((1 - e^{-t}) / t), the quotient series being
// sum_k (-1)^k t^k / (k+1)!.
inline PowerSeries1 todd_series(int n)
{
    if (n < 1) {
        throw error("todd_series requires n >= 1");
    }
    PowerSeries1 denom(n);
    Rational fact = 1;
    for (int k = 0; k <= n; ++k) {
        fact *= (k + 1);
        denom[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1) / fact;
    }
    return denom.inverse();
}

// prod_i Q(root_i) = exp(sum_k b_k p_k) with log Q = sum_k b_k t^k, where
// p are the power sums p_1..p_n of the roots.
inline GradedElement genus_product(const PowerSeries1& q, const std::vector<GradedElement>& p)
{
    if (p.empty()) {
        throw error("genus_product needs the power sums");
    }
    if (q[0] != 1) {
        throw error("genus_product requires Q(0) = 1");
    }
    detail::require_common_ring(p);
    const RingSpecPtr& spec = p.front().spec();
    const int n = spec->truncation();
    if (q.truncation() < n) {
        throw error("series truncation below ring truncation");
    }
    const PowerSeries1 b = q.log();
    GradedElement s(spec);
    for (int k = 1; k <= n && static_cast<std::size_t>(k) <= p.size(); ++k) {
        s += p[static_cast<std::size_t>(k - 1)] * b[static_cast<std::size_t>(k)];
    }
    return exp(s);
}

} // namespace hlab
