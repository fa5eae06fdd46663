#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "ring.hpp"

namespace hlab {

// Linear functional on weight-n monomials: the Chern-number table that
// realizes integration over X.
class FundamentalClass
{
  public:
    FundamentalClass() = default;
    explicit FundamentalClass(RingSpecPtr spec) : spec_(std::move(spec)) {}

    void assign(const Monomial& m, const Rational& value)
    {
        if (m.weight != spec_->truncation()) {
            throw error("fundamental class key " + monomial_to_string(m, *spec_) + " does not have weight " +
                        std::to_string(spec_->truncation()));
        }
        values_[m] = value;
    }

    void assign(const GradedElement& monomial, const Rational& value)
    {
        if (monomial.terms().size() != 1 || monomial.terms().begin()->second != 1) {
            throw error("fundamental class key must be a single monomial with coefficient 1");
        }
        assign(monomial.terms().begin()->first, value);
    }

    [[nodiscard]] const RingSpecPtr& spec() const noexcept { return spec_; }
    [[nodiscard]] const std::map<Monomial, Rational>& values() const noexcept { return values_; }

    [[nodiscard]] const Rational* find(const Monomial& m) const
    {
        const auto it = values_.find(m);
        return it == values_.end() ? nullptr : &it->second;
    }

    friend bool operator==(const FundamentalClass&, const FundamentalClass&) = default;

  private:
    RingSpecPtr spec_;
    std::map<Monomial, Rational> values_;
};

// Applies the functional to the weight-n component; lower weights integrate to 0.
inline Rational integrate(const GradedElement& x, const FundamentalClass& f)
{
    if (!f.spec() || !(*f.spec() == *x.spec())) {
        throw error("fundamental class belongs to a different ring");
    }
    const int n = x.truncation();
    Rational total = 0;
    for (const auto& [m, c] : x.terms()) {
        if (m.weight != n) {
            continue;
        }
        const Rational* v = f.find(m);
        if (v == nullptr) {
            throw error("fundamental class has no value for monomial " + monomial_to_string(m, *x.spec()));
        }
        total += c * *v;
    }
    return total;
}

struct ManifoldData {
    RingSpecPtr spec;
    std::vector<GradedElement> chern; // c_1(X) .. c_n(X)
    FundamentalClass fclass;

    ManifoldData(RingSpecPtr s, std::vector<GradedElement> c, FundamentalClass f)
        : spec(std::move(s)), chern(std::move(c)), fclass(std::move(f))
    {
        const int n = spec->truncation();
        if (chern.size() != static_cast<std::size_t>(n)) {
            throw error("manifold needs exactly n = " + std::to_string(n) + " Chern classes");
        }
        for (int i = 0; i < n; ++i) {
            const auto& ci = chern[static_cast<std::size_t>(i)];
            if (!(*ci.spec() == *spec)) {
                throw error("Chern class in a different ring");
            }
            if (!ci.is_homogeneous(i + 1)) {
                throw error("c_" + std::to_string(i + 1) + "(X) is not homogeneous of weight " + std::to_string(i + 1));
            }
        }
    }

    [[nodiscard]] int dimension() const noexcept { return spec->truncation(); }
};

struct BundleData {
    RingSpecPtr spec;
    int rank = 1;
    std::vector<GradedElement> chern; // c_1(E) .. c_r(E), trailing zeros allowed

    BundleData(RingSpecPtr s, int r, std::vector<GradedElement> c) : spec(std::move(s)), rank(r), chern(std::move(c))
    {
        if (rank < 1) {
            throw error("bundle rank must be positive");
        }
        if (chern.size() > static_cast<std::size_t>(rank)) {
            throw error("bundle has more Chern classes than its rank");
        }
        for (std::size_t j = 0; j < chern.size(); ++j) {
            if (!(*chern[j].spec() == *spec)) {
                throw error("bundle Chern class in a different ring");
            }
            if (!chern[j].is_homogeneous(static_cast<int>(j) + 1)) {
                throw error("c_" + std::to_string(j + 1) + "(E) is not homogeneous of weight " + std::to_string(j + 1));
            }
        }
        while (chern.size() < static_cast<std::size_t>(rank)) {
            chern.emplace_back(spec);
        }
    }

    static BundleData trivial(RingSpecPtr spec, int rank) { return BundleData(std::move(spec), rank, {}); }

    static BundleData line(const GradedElement& c1) { return BundleData(c1.spec(), 1, {c1}); }

    // L^{⊗m} for a line bundle: c_1 scales by m.
    [[nodiscard]] BundleData tensor_power(const Rational& m) const
    {
        if (rank != 1) {
            throw error("tensor_power is defined for line bundles only");
        }
        return BundleData(spec, 1, {chern[0] * m});
    }
};

using KCoefficients = std::vector<Rational>;

namespace detail {

inline std::vector<GradedElement> manifold_power_sums(const ManifoldData& x)
{
    return power_sums_from_elementary(x.chern, x.dimension(), x.spec);
}

} // namespace detail

inline GradedElement todd_class(const ManifoldData& x)
{
    return genus_product(todd_series(x.dimension()), detail::manifold_power_sums(x));
}

// rank + sum_{k>=1} p_k(E) / k!
inline GradedElement chern_character(const BundleData& e)
{
    const int n = e.spec->truncation();
    const auto p = power_sums_from_elementary(e.chern, n, e.spec);
    GradedElement ch = GradedElement::constant(e.spec, e.rank);
    Rational fact = 1;
    for (int k = 1; k <= n; ++k) {
        fact *= k;
        ch += p[static_cast<std::size_t>(k - 1)] / fact;
    }
    return ch;
}

// ch(Ω^{p,0}) for p = 0..n as e_p(e^{-γ_1}, .., e^{-γ_n}).
inline std::vector<GradedElement> ch_hodge_sheaves(const ManifoldData& x)
{
    const int n = x.dimension();
    const auto p = detail::manifold_power_sums(x);
    // q_k = sum_i e^{-k γ_i} = n + sum_j (-k)^j p_j / j!
    std::vector<GradedElement> q;
    for (int k = 1; k <= n; ++k) {
        GradedElement qk = GradedElement::constant(x.spec, n);
        Rational coef = 1;
        for (int j = 1; j <= n; ++j) {
            coef = coef * Rational(-k) / j;
            qk += p[static_cast<std::size_t>(j - 1)] * coef;
        }
        q.push_back(std::move(qk));
    }
    auto e = elementary_from_power_sums(q, n);
    e.insert(e.begin(), GradedElement::constant(x.spec, 1));
    return e;
}

inline GradedElement ch_hodge_sheaf(const ManifoldData& x, int p)
{
    if (p < 0 || p > x.dimension()) {
        throw error("Hodge sheaf index p = " + std::to_string(p) + " out of range [0, n]");
    }
    return ch_hodge_sheaves(x)[static_cast<std::size_t>(p)];
}

namespace detail {

inline void require_integral(const Rational& v, int p)
{
    if (!is_integer(v)) {
        throw error("chi^" + std::to_string(p) + " = " + to_string(v) +
                    " is not an integer: inconsistent Chern data");
    }
}

} // namespace detail

// χ^p for p = 0..n without the integrality validation.
inline std::vector<Rational> hrr_values(const ManifoldData& x, const BundleData& e)
{
    const GradedElement base = todd_class(x) * chern_character(e);
    std::vector<Rational> out;
    for (const auto& h : ch_hodge_sheaves(x)) {
        out.push_back(integrate(base * h, x.fclass));
    }
    return out;
}

inline Rational chi_p(const ManifoldData& x, const BundleData& e, int p)
{
    if (p < 0 || p > x.dimension()) {
        throw error("p = " + std::to_string(p) + " out of range [0, n]");
    }
    const Rational v = integrate(todd_class(x) * ch_hodge_sheaf(x, p) * chern_character(e), x.fclass);
    detail::require_integral(v, p);
    return v;
}

inline YPolynomial chi_y_unchecked(const ManifoldData& x, const BundleData& e) { return YPolynomial(hrr_values(x, e)); }

inline YPolynomial chi_y(const ManifoldData& x, const BundleData& e)
{
    const auto values = hrr_values(x, e);
    for (std::size_t p = 0; p < values.size(); ++p) {
        detail::require_integral(values[p], static_cast<int>(p));
    }
    return YPolynomial(values);
}

// Re-expansion of χ_y about y = -1: K_j is the coefficient of (y+1)^j.
inline KCoefficients k_coefficients(const YPolynomial& chi, int n)
{
    const YPolynomial shifted = chi.taylor_shift(Rational(-1));
    KCoefficients k(static_cast<std::size_t>(std::max(n, shifted.degree()) + 1));
    for (std::size_t j = 0; j < k.size(); ++j) {
        k[j] = shifted.coeff(static_cast<int>(j));
    }
    return k;
}

inline KCoefficients k_coefficients(const YPolynomial& chi) { return k_coefficients(chi, chi.degree()); }

// -(rank/2) n c_n[X] + <c_{n-1}(X) c_1(E), X>
inline Rational k1_closed_form(const ManifoldData& x, const BundleData& e)
{
    const int n = x.dimension();
    const GradedElement cn1 =
        n == 1 ? GradedElement::constant(x.spec, 1) : x.chern[static_cast<std::size_t>(n - 2)];
    const GradedElement c1e = e.chern.empty() ? GradedElement(x.spec) : e.chern[0];
    return Rational(-Rational(e.rank) * n / 2) * integrate(x.chern.back(), x.fclass) + integrate(cn1 * c1e, x.fclass);
}

inline bool k1_formula_check(const ManifoldData& x, const BundleData& e)
{
    const auto k = k_coefficients(chi_y_unchecked(x, e), x.dimension());
    return k[1] == k1_closed_form(x, e);
}

// rank K_2(X) - <c1(X) c1(E) / 2, X> + <(c1(E)^2 - 2 c2(E)) / 2, X> on surfaces.
inline Rational k2_surface_closed_form(const ManifoldData& x, const BundleData& e)
{
    if (x.dimension() != 2) {
        throw error("the K_2 surface formula requires n = 2");
    }
    const auto kx = k_coefficients(chi_y_unchecked(x, BundleData::trivial(x.spec, 1)), 2);
    const GradedElement& c1x = x.chern[0];
    const GradedElement& c1e = e.chern[0];
    const GradedElement c2e = e.chern.size() > 1 ? e.chern[1] : GradedElement(x.spec);
    const GradedElement ch2 = (c1e * c1e - c2e * Rational(2)) / Rational(2);
    return Rational(e.rank) * kx[2] - integrate(c1x * c1e, x.fclass) / 2 + integrate(ch2, x.fclass);
}

inline bool k2_surface_formula_check(const ManifoldData& x, const BundleData& e)
{
    const Rational closed = k2_surface_closed_form(x, e);
    const auto k = k_coefficients(chi_y_unchecked(x, e), 2);
    return k[2] == closed;
}

// P^{(p)}(m) = sum_i a_i m^i with a_i = ∫ [td ch(Ω^p)]_{n-i} c_1(L)^i / i!.
inline MPolynomial hilbert_polynomial(const ManifoldData& x, const BundleData& l, int p)
{
    if (l.rank != 1) {
        throw error("hilbert_polynomial requires a line bundle (rank 1)");
    }
    const int n = x.dimension();
    if (p < 0 || p > n) {
        throw error("p = " + std::to_string(p) + " out of range [0, n]");
    }
    const GradedElement base = todd_class(x) * ch_hodge_sheaf(x, p);
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    GradedElement c1_power = GradedElement::constant(x.spec, 1);
    Rational fact = 1;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            c1_power = c1_power * l.chern[0];
            fact *= i;
        }
        a[static_cast<std::size_t>(i)] = integrate(base.component(n - i) * c1_power, x.fclass) / fact;
    }
    return MPolynomial(std::move(a));
}

struct InequalityCheck {
    bool holds = false;
    Rational lhs; // (-1)^{n+j} K_j(X,E)
    Rational rhs; // sum_{p=j}^{n} C(p, j)
};

inline InequalityCheck chern_inequality_check(const ManifoldData& x, const BundleData& e, int j)
{
    const int n = x.dimension();
    if (j < 0 || j > n) {
        throw error("j = " + std::to_string(j) + " out of range [0, n]");
    }
    const auto k = k_coefficients(chi_y_unchecked(x, e), n);
    InequalityCheck r;
    r.lhs = ((n + j) % 2 == 0 ? 1 : -1) * k[static_cast<std::size_t>(j)];
    r.rhs = 0;
    for (int p = j; p <= n; ++p) {
        r.rhs += Rational(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(j)));
    }
    r.holds = r.lhs >= r.rhs;
    return r;
}

} // namespace hlab
