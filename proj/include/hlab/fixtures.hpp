#pragma once

// Builtin manifolds with closed-form Chern data.

#include <vector>

#include "genus.hpp"
#include "ring.hpp"

namespace hlab {

// ℂP^n: c(X) = (1+h)^{n+1}, ∫h^n = 1.
inline ManifoldData projective_space(int n)
{
    const auto spec = make_ring({{"h", 1}}, n);
    std::vector<GradedElement> c;
    for (int i = 1; i <= n; ++i) {
        c.push_back(GradedElement::monomial(spec, {i}, Rational(binomial(n + 1, i))));
    }
    FundamentalClass f(spec);
    f.assign(GradedElement::monomial(spec, {n}), 1);
    return ManifoldData(spec, c, f);
}

// Degree-d hypersurface in ℂP^{n+1}: c(X) = (1+h)^{n+2} / (1+dh), ∫h^n = d.
inline ManifoldData hypersurface(int n, int d)
{
    const auto spec = make_ring({{"h", 1}}, n);
    std::vector<Rational> total(n + 1);
    for (int i = 0; i <= n; ++i) {
        Rational acc = 0;
        for (int k = 0; k <= i; ++k) {
            acc += Rational(binomial(n + 2, k)) * pow_of(Rational(-d), i - k);
        }
        total[i] = acc;
    }
    std::vector<GradedElement> c;
    for (int i = 1; i <= n; ++i) {
        c.push_back(GradedElement::monomial(spec, {i}, total[i]));
    }
    FundamentalClass f(spec);
    f.assign(GradedElement::monomial(spec, {n}), d);
    return ManifoldData(spec, c, f);
}

// ℂP^a × ℂP^b with hyperplane classes u, v (u^{a+1} = v^{b+1} = 0 enforced
// through the fundamental class).
inline ManifoldData product_of_projective_spaces(int a, int b)
{
    const int n = a + b;
    const auto spec = make_ring({{"u", 1}, {"v", 1}}, n);
    const GradedElement one = GradedElement::constant(spec, 1);
    GradedElement total = power(one + GradedElement::generator(spec, "u"), a + 1) * power(one + GradedElement::generator(spec, "v"), b + 1);
    std::vector<GradedElement> c;
    for (int i = 1; i <= n; ++i) {
        c.push_back(total.component(i));
    }
    FundamentalClass f(spec);
    for (int i = 0; i <= n; ++i) {
        f.assign(GradedElement::monomial(spec, {i, n - i}), i == a ? 1 : 0);
    }
    return ManifoldData(spec, c, f);
}

} // namespace hlab
