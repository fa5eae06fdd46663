#pragma once

// Self-contained property suite behind `hlab verify`. Deterministic seeds,
// no external data; each property reports pass/fail with a short detail.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "fixtures.hpp"
#include "genus.hpp"
#include "lefschetz.hpp"
#include "ring.hpp"

namespace hlab {

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

class PropertyRng
{
  public:
    explicit PropertyRng(unsigned long seed) : rng_(seed) {}

    Rational rational(int num = 9, int den = 6)
    {
        std::uniform_int_distribution<int> a(-num, num);
        std::uniform_int_distribution<int> b(1, den);
        return make_rational(a(rng_), b(rng_));
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  private:
    std::mt19937_64 rng_;
};

inline void all_monomials(const RingSpec& spec, int k, std::size_t idx, std::vector<int>& cur, int used,
                          std::vector<std::vector<int>>& out)
{
    if (idx == spec.size()) {
        if (used == k) {
            out.push_back(cur);
        }
        return;
    }
    for (int e = 0; used + e * spec.generators()[idx].weight <= k; ++e) {
        cur[idx] = e;
        all_monomials(spec, k, idx + 1, cur, used + e * spec.generators()[idx].weight, out);
    }
    cur[idx] = 0;
}

inline std::vector<std::vector<int>> monomials_of(const RingSpec& spec, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(spec.size(), 0);
    all_monomials(spec, k, 0, cur, 0, out);
    return out;
}

// Formal manifold with free Chern generators x_i and bundle generators e_j,
// random rational Chern numbers.
inline std::pair<ManifoldData, BundleData> random_formal_data(PropertyRng& rng, int n, int rank)
{
    std::vector<Generator> g;
    for (int i = 1; i <= n; ++i) {
        g.push_back({"x" + std::to_string(i), i});
    }
    const int re = std::min(rank, n);
    for (int j = 1; j <= re; ++j) {
        g.push_back({"e" + std::to_string(j), j});
    }
    const auto spec = make_ring(g, n);
    std::vector<GradedElement> cx;
    std::vector<GradedElement> ce;
    for (int i = 1; i <= n; ++i) {
        cx.push_back(GradedElement::generator(spec, "x" + std::to_string(i)));
    }
    for (int j = 1; j <= re; ++j) {
        ce.push_back(GradedElement::generator(spec, "e" + std::to_string(j)));
    }
    FundamentalClass f(spec);
    for (const auto& e : monomials_of(*spec, n)) {
        f.assign(GradedElement::monomial(spec, e), rng.rational());
    }
    return {ManifoldData(spec, cx, f), BundleData(spec, rank, ce)};
}

inline PropertyResult run_property(const std::string& suite, const std::string& name,
                                   const std::function<std::string()>& body)
{
    try {
        const std::string failure = body();
        return {suite, name, failure.empty(), failure};
    } catch (const std::exception& e) {
        return {suite, name, false, std::string("exception: ") + e.what()};
    }
}

} // namespace detail

inline std::vector<PropertyResult> run_property_suite()
{
    using detail::run_property;
    std::vector<PropertyResult> out;

    out.push_back(run_property("ring", "newton round trip", [] {
        detail::PropertyRng rng(1);
        for (int n = 1; n <= 5; ++n) {
            const auto spec = make_ring({{"h", 1}}, n);
            std::vector<GradedElement> e;
            for (int k = 1; k <= n; ++k) {
                e.push_back(GradedElement::monomial(spec, {k}, rng.rational()));
            }
            if (elementary_from_power_sums(power_sums_from_elementary(e, n), n) != e) {
                return "mismatch at n = " + std::to_string(n);
            }
        }
        return std::string();
    }));

    out.push_back(run_property("ring", "exp and log are inverse", [] {
        detail::PropertyRng rng(2);
        const auto spec = make_ring({{"a", 1}, {"b", 2}}, 4);
        for (int t = 0; t < 10; ++t) {
            GradedElement x(spec);
            for (int k = 1; k <= 4; ++k) {
                for (const auto& e : detail::monomials_of(*spec, k)) {
                    x += GradedElement::monomial(spec, e, rng.rational());
                }
            }
            if (log(exp(x)) != x) {
                return std::string("log(exp(x)) != x");
            }
        }
        return std::string();
    }));

    out.push_back(run_property("genus", "chi^p of CP^n is (-1)^p", [] {
        for (int n = 1; n <= 5; ++n) {
            const auto x = projective_space(n);
            const auto chi = chi_y(x, BundleData::trivial(x.spec, 1));
            for (int p = 0; p <= n; ++p) {
                if (chi.coeff(p) != (p % 2 == 0 ? 1 : -1)) {
                    return "n = " + std::to_string(n) + ", p = " + std::to_string(p);
                }
            }
        }
        return std::string();
    }));

    out.push_back(run_property("genus", "Serre symmetry", [] {
        std::vector<ManifoldData> xs;
        for (int n = 1; n <= 4; ++n) {
            xs.push_back(projective_space(n));
            xs.push_back(hypersurface(n, 3));
        }
        xs.push_back(product_of_projective_spaces(1, 2));
        for (const auto& x : xs) {
            const int n = x.dimension();
            const auto chi = chi_y(x, BundleData::trivial(x.spec, 1));
            for (int p = 0; p <= n; ++p) {
                if (chi.coeff(p) != (n % 2 == 0 ? 1 : -1) * chi.coeff(n - p)) {
                    return "fails in dimension " + std::to_string(n);
                }
            }
        }
        return std::string();
    }));

    out.push_back(run_property("genus", "K coefficient closed forms", [] {
        detail::PropertyRng rng(3);
        for (int t = 0; t < 20; ++t) {
            const int n = 1 + t % 3;
            auto [x, e] = detail::random_formal_data(rng, n, 1 + t % 2);
            const auto k = k_coefficients(chi_y_unchecked(x, e), n);
            if (k[0] != Rational(e.rank) * integrate(x.chern.back(), x.fclass)) {
                return std::string("K_0 != rank c_n");
            }
            if (!k1_formula_check(x, e)) {
                return std::string("K_1 closed form");
            }
            if (n == 2 && !k2_surface_formula_check(x, e)) {
                return std::string("K_2 surface formula");
            }
        }
        return std::string();
    }));

    out.push_back(run_property("genus", "flat bundle factorization", [] {
        detail::PropertyRng rng(4);
        for (int n = 1; n <= 4; ++n) {
            auto [x, e] = detail::random_formal_data(rng, n, 1);
            const auto one = chi_y_unchecked(x, BundleData::trivial(x.spec, 1));
            for (int r = 1; r <= 3; ++r) {
                if (chi_y_unchecked(x, BundleData::trivial(x.spec, r)) != one * Rational(r)) {
                    return "n = " + std::to_string(n) + ", r = " + std::to_string(r);
                }
            }
        }
        return std::string();
    }));

    out.push_back(run_property("genus", "Hilbert polynomial of O(1) on CP^n", [] {
        for (int n = 1; n <= 5; ++n) {
            const auto x = projective_space(n);
            const auto P = hilbert_polynomial(x, BundleData::line(GradedElement::generator(x.spec, "h")), 0);
            for (int m = -5; m <= 5; ++m) {
                Rational b = 1;
                for (int i = 1; i <= n; ++i) {
                    b = b * Rational(m + i) / i;
                }
                if (P(m) != b) {
                    return "n = " + std::to_string(n) + ", m = " + std::to_string(m);
                }
            }
        }
        return std::string();
    }));

    out.push_back(run_property("lefschetz", "L and Lambda adjoint", [] {
        for (int n = 1; n <= 3; ++n) {
            const auto L = op_L(n, 2);
            const auto Lam = op_Lambda(n, 2);
            for (std::size_t j = 0; j < L.dimension(); ++j) {
                for (const auto& [i, v] : L.column(j)) {
                    if (Lam.entry(j, i) != v.conj()) {
                        return "entry mismatch at n = " + std::to_string(n);
                    }
                }
            }
        }
        return std::string();
    }));

    out.push_back(run_property("lefschetz", "Lambda = star^-1 L star", [] {
        for (int n = 1; n <= 3; ++n) {
            const auto S = op_star(n, 1);
            if (S.monomial_inverse() * op_L(n, 1) * S != op_Lambda(n, 1)) {
                return "fails at n = " + std::to_string(n);
            }
        }
        return std::string();
    }));

    out.push_back(run_property("lefschetz", "[Lambda, L] = (n-k) id", [] {
        for (int n = 1; n <= 4; ++n) {
            if (!sl2_commutator_check(n, 1)) {
                return "fails at n = " + std::to_string(n);
            }
        }
        return std::string();
    }));

    out.push_back(run_property("lefschetz", "hard Lefschetz bijectivity", [] {
        for (int n = 1; n <= 3; ++n) {
            for (int k = 0; k <= n; ++k) {
                if (!lefschetz_power(n, 1, k).bijective) {
                    return "n = " + std::to_string(n) + ", k = " + std::to_string(k);
                }
            }
        }
        return std::string();
    }));

    out.push_back(run_property("lefschetz", "commutator closed form", [] {
        detail::PropertyRng rng(5);
        for (int t = 0; t < 12; ++t) {
            const int n = 1 + t % 3;
            std::vector<Rational> g;
            for (int j = 0; j < n; ++j) {
                g.push_back(rng.rational());
            }
            const auto spec = CurvatureSpec::diagonal(g);
            const auto m = commutator_matrix(spec);
            const auto closed = closed_form_eigenvalues(g);
            if (!m.is_diagonal()) {
                return std::string("brute-force commutator is not diagonal");
            }
            const auto d = m.diagonal();
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (d[i] != ComplexRational(-closed[i])) {
                    return std::string("eigenvalue mismatch");
                }
            }
            const Rational C = commutator_norm(spec).C.hi;
            for (int s : {-3, 2}) {
                if (commutator_norm(spec.scaled(s)).C.hi != Rational(std::abs(s)) * C) {
                    return std::string("homogeneity");
                }
            }
        }
        return std::string();
    }));

    out.push_back(run_property("bounds", "integer-valued polynomial search", [] {
        detail::PropertyRng rng(6);
        for (int t = 0; t < 40; ++t) {
            const int n = 1 + t % 4;
            // a_n binom(m, n) + sum lower binomials with nonnegative coefficients
            MPolynomial p;
            for (int i = 0; i <= n; ++i) {
                MPolynomial b = MPolynomial::constant(1);
                for (int j = 0; j < i; ++j) {
                    b = b * (MPolynomial::variable() - MPolynomial::constant(j));
                }
                b = b * (Rational(1) / Rational(factorial(static_cast<unsigned long>(i))));
                p = p + b * Rational(i == n ? rng.integer(1, 3) : rng.integer(0, 3));
            }
            const int k = 1 + t % 5;
            const Integer m = lemma44_search(p, 0, k);
            const Rational a = p.leading() * Rational(factorial(static_cast<unsigned long>(n)));
            const Rational thr = a * pow_of(Rational(k), static_cast<unsigned long>(n)) / Rational(Integer(1) << (n - 1));
            if (m < 0 || m > k * n || p(Rational(m)) < thr) {
                return std::string("returned m violates the lemma");
            }
        }
        return std::string();
    }));

    out.push_back(run_property("bounds", "root intervals bracket sign changes", [] {
        detail::PropertyRng rng(7);
        for (int t = 0; t < 30; ++t) {
            std::vector<Rational> c;
            const int deg = 1 + t % 4;
            for (int i = 0; i <= deg; ++i) {
                c.push_back(rng.rational());
            }
            if (c.back() == 0) {
                c.back() = 1;
            }
            const MPolynomial p(c);
            const auto q = square_free_part(p);
            for (const auto& iv : isolate_real_roots(p, root_isolation_width())) {
                if (iv.exact ? q(iv.lo) != 0 : q(iv.lo) * q(iv.hi) >= 0) {
                    return "no sign change for " + p.to_string();
                }
            }
        }
        return std::string();
    }));

    out.push_back(run_property("bounds", "T4 monotone in K and C", [] {
        detail::PropertyRng rng(8);
        for (int t = 0; t < 50; ++t) {
            BoundsInput b;
            b.n = 1 + t % 4;
            b.c_n = abs(rng.rational()) + 1;
            b.K = abs(rng.rational()) + 1;
            b.C = abs(rng.rational()) + 1;
            BoundsInput bk = b;
            bk.K += abs(rng.rational());
            BoundsInput bc = b;
            bc.C += abs(rng.rational());
            if (bound_T4(bk) < bound_T4(b) || bound_T4(bc) > bound_T4(b)) {
                return std::string("monotonicity violated");
            }
        }
        return std::string();
    }));

    return out;
}

} // namespace hlab
