#pragma once

// Shared fixtures and generators for the test suites.

#include <random>
#include <string>
#include <vector>

#include <hlab/fixtures.hpp>
#include <hlab/genus.hpp>
#include <hlab/ring.hpp>

namespace hlab::testing {

inline RingSpecPtr one_generator_ring(int n, const std::string& name = "h")
{
    return make_ring({{name, 1}}, n);
}

// Generators c1..cn with weight i.
inline RingSpecPtr chern_ring(int n, const std::string& prefix = "c")
{
    std::vector<Generator> g;
    for (int i = 1; i <= n; ++i) {
        g.push_back({prefix + std::to_string(i), i});
    }
    return make_ring(g, n);
}

inline GradedElement gen(const RingSpecPtr& spec, const std::string& name)
{
    return GradedElement::generator(spec, name);
}

inline GradedElement cst(const RingSpecPtr& spec, const Rational& q) { return GradedElement::constant(spec, q); }

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 6)
{
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return make_rational(num(rng), den(rng));
}

// All exponent vectors of total weight exactly k.
inline void monomials_of_weight(const RingSpec& spec, int k, std::vector<int>& cur, std::size_t idx,
                                std::vector<std::vector<int>>& out)
{
    if (idx == spec.size()) {
        int w = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            w += cur[i] * spec.generators()[i].weight;
        }
        if (w == k) {
            out.push_back(cur);
        }
        return;
    }
    int used = 0;
    for (std::size_t i = 0; i < idx; ++i) {
        used += cur[i] * spec.generators()[i].weight;
    }
    for (int e = 0; used + e * spec.generators()[idx].weight <= k; ++e) {
        cur[idx] = e;
        monomials_of_weight(spec, k, cur, idx + 1, out);
    }
    cur[idx] = 0;
}

inline std::vector<std::vector<int>> monomials_of_weight(const RingSpec& spec, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(spec.size(), 0);
    monomials_of_weight(spec, k, cur, 0, out);
    return out;
}

inline GradedElement random_element(std::mt19937_64& rng, const RingSpecPtr& spec, bool constant_term = true)
{
    GradedElement x(spec);
    for (int k = constant_term ? 0 : 1; k <= spec->truncation(); ++k) {
        for (const auto& e : monomials_of_weight(*spec, k)) {
            x += GradedElement::monomial(spec, e, random_rational(rng));
        }
    }
    return x;
}

inline GradedElement random_homogeneous(std::mt19937_64& rng, const RingSpecPtr& spec, int k)
{
    GradedElement x(spec);
    for (const auto& e : monomials_of_weight(*spec, k)) {
        x += GradedElement::monomial(spec, e, random_rational(rng));
    }
    return x;
}

inline FundamentalClass random_fundamental_class(std::mt19937_64& rng, const RingSpecPtr& spec)
{
    FundamentalClass f(spec);
    for (const auto& e : monomials_of_weight(*spec, spec->truncation())) {
        f.assign(GradedElement::monomial(spec, e), random_rational(rng));
    }
    return f;
}

// A formal manifold with independent generators x1..xn (weight i) for
// its Chern classes and a bundle with generators e1..er, plus random
// rational Chern numbers on every top-weight monomial.
struct RandomDataset {
    ManifoldData x;
    BundleData e;
};

inline RandomDataset random_dataset(std::mt19937_64& rng, int n, int rank)
{
    std::vector<Generator> g;
    for (int i = 1; i <= n; ++i) {
        g.push_back({"x" + std::to_string(i), i});
    }
    for (int j = 1; j <= std::min(rank, n); ++j) {
        g.push_back({"e" + std::to_string(j), j});
    }
    const auto spec = make_ring(g, n);
    std::vector<GradedElement> cx;
    for (int i = 1; i <= n; ++i) {
        cx.push_back(gen(spec, "x" + std::to_string(i)));
    }
    std::vector<GradedElement> ce;
    for (int j = 1; j <= std::min(rank, n); ++j) {
        ce.push_back(gen(spec, "e" + std::to_string(j)));
    }
    auto f = random_fundamental_class(rng, spec);
    return {ManifoldData(spec, cx, f), BundleData(spec, rank, ce)};
}

} // namespace hlab::testing
