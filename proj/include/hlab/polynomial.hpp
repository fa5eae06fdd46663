#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hlab {

// Printing traits: the variable letter and whether terms print from the
// leading coefficient down.
struct YVariable {
    static constexpr char name = 'y';
    static constexpr bool descending = false;
};

struct MVariable {
    static constexpr char name = 'm';
    static constexpr bool descending = true;
};

struct XVariable {
    static constexpr char name = 'x';
    static constexpr bool descending = true;
};

// Dense univariate polynomial over the rationals; trailing zero
// coefficients are always trimmed, so the zero polynomial is empty.
template <typename Var>
class UnivariatePolynomial
{
  public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    UnivariatePolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static UnivariatePolynomial constant(const Rational& c) { return UnivariatePolynomial({c}); }
    static UnivariatePolynomial variable() { return UnivariatePolynomial({Rational(0), Rational(1)}); }

    [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    [[nodiscard]] Rational coeff(int i) const
    {
        return i >= 0 && static_cast<std::size_t>(i) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(i)] : Rational(0);
    }

    [[nodiscard]] Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    [[nodiscard]] Rational operator()(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    [[nodiscard]] int sign_at(const Rational& x) const { return sgn((*this)(x)); }

    [[nodiscard]] UnivariatePolynomial derivative() const
    {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            d.push_back(coeffs_[i] * static_cast<long>(i));
        }
        return UnivariatePolynomial(std::move(d));
    }

    // Coefficients of P(x + a) in powers of x (exact Taylor shift).
    [[nodiscard]] UnivariatePolynomial taylor_shift(const Rational& a) const
    {
        std::vector<Rational> c = coeffs_;
        const std::size_t n = c.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = n - 1; j > i; --j) {
                c[j - 1] += a * c[j];
            }
        }
        return UnivariatePolynomial(std::move(c));
    }

    // P(s * x)
    [[nodiscard]] UnivariatePolynomial scale_argument(const Rational& s) const
    {
        std::vector<Rational> c = coeffs_;
        Rational f = 1;
        for (auto& x : c) {
            x *= f;
            f *= s;
        }
        return UnivariatePolynomial(std::move(c));
    }

    [[nodiscard]] UnivariatePolynomial monic() const
    {
        if (is_zero()) {
            return *this;
        }
        const Rational lc = leading();
        std::vector<Rational> c = coeffs_;
        for (auto& x : c) {
            x /= lc;
        }
        return UnivariatePolynomial(std::move(c));
    }

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }

    UnivariatePolynomial& operator*=(const Rational& s)
    {
        for (auto& c : coeffs_) {
            c *= s;
        }
        trim();
        return *this;
    }

    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a) { return a *= Rational(-1); }
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& s) { return a *= s; }
    friend UnivariatePolynomial operator*(const Rational& s, UnivariatePolynomial a) { return a *= s; }

    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return UnivariatePolynomial(std::move(c));
    }

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

    // Euclidean division; returns (quotient, remainder).
    [[nodiscard]] std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& d) const
    {
        if (d.is_zero()) {
            throw error("polynomial division by zero");
        }
        std::vector<Rational> rem = coeffs_;
        const int dd = d.degree();
        std::vector<Rational> quot(std::max(0, degree() - dd + 1));
        for (int k = degree(); k >= dd; --k) {
            const Rational c = rem[static_cast<std::size_t>(k)] / d.leading();
            quot[static_cast<std::size_t>(k - dd)] = c;
            if (c == 0) {
                continue;
            }
            for (int j = 0; j <= dd; ++j) {
                rem[static_cast<std::size_t>(k - dd + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        rem.resize(static_cast<std::size_t>(std::max(0, std::min(degree() + 1, dd))));
        return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
    }

    [[nodiscard]] std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        std::vector<int> order;
        for (int i = 0; i <= degree(); ++i) {
            order.push_back(i);
        }
        if (Var::descending) {
            std::reverse(order.begin(), order.end());
        }
        std::ostringstream os;
        bool first = true;
        for (const int i : order) {
            const Rational& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) {
                continue;
            }
            const Rational mag = abs(c);
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            const std::string mag_text = is_integer(mag) ? mag.get_str() : "(" + mag.get_str() + ")";
            if (i == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1) {
                os << mag_text;
            }
            os << Var::name;
            if (i > 1) {
                os << '^' << i;
            }
        }
        return os.str();
    }

  private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

template <typename Var>
UnivariatePolynomial<Var> polynomial_gcd(UnivariatePolynomial<Var> a, UnivariatePolynomial<Var> b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

using YPolynomial = UnivariatePolynomial<YVariable>;
using MPolynomial = UnivariatePolynomial<MVariable>;
using XPolynomial = UnivariatePolynomial<XVariable>;

} // namespace hlab
