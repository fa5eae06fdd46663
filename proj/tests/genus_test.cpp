#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <hlab/genus.hpp>

#include "support.hpp"

using namespace hlab;
using namespace hlab::testing;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

} // namespace

TEST(Integrate, PicksTopWeight)
{
    const auto cp2 = projective_space(2);
    const auto h = gen(cp2.spec, "h");
    EXPECT_EQ(integrate(h * h, cp2.fclass), 1);
    EXPECT_EQ(integrate(cst(cp2.spec, 1) + h * q(3) + h * h * q(3), cp2.fclass), 3);
    EXPECT_EQ(integrate(todd_class(cp2), cp2.fclass), 1);
}

TEST(Integrate, MissingMonomialIsReported)
{
    const auto spec = chern_ring(2);
    FundamentalClass f(spec);
    f.assign(gen(spec, "c2"), 1);
    try {
        (void)integrate(gen(spec, "c1") * gen(spec, "c1"), f);
        FAIL() << "expected an error";
    } catch (const error& e) {
        EXPECT_NE(std::string(e.what()).find("c1^2"), std::string::npos);
    }
    EXPECT_THROW(f.assign(gen(spec, "c1"), 1), error);
}

TEST(Todd, Examples)
{
    {
        const auto spec = chern_ring(1);
        const ManifoldData x(spec, {gen(spec, "c1")}, FundamentalClass(spec));
        EXPECT_EQ(todd_class(x), cst(spec, 1) + gen(spec, "c1") / q(2));
    }
    {
        const auto spec = chern_ring(2);
        const auto c1 = gen(spec, "c1");
        const auto c2 = gen(spec, "c2");
        const ManifoldData x(spec, {c1, c2}, FundamentalClass(spec));
        EXPECT_EQ(todd_class(x), cst(spec, 1) + c1 / q(2) + (c1 * c1 + c2) / q(12));
        EXPECT_EQ(todd_class(x).component(2), (c1 * c1 + c2) / q(12));
    }
    const auto cp2 = projective_space(2);
    const auto h = gen(cp2.spec, "h");
    EXPECT_EQ(todd_class(cp2), cst(cp2.spec, 1) + h * q(3, 2) + h * h);
}

TEST(ChernCharacter, Examples)
{
    const auto hs = one_generator_ring(2);
    const auto h = gen(hs, "h");
    EXPECT_EQ(chern_character(BundleData::trivial(hs, 3)), cst(hs, 3));
    EXPECT_EQ(chern_character(BundleData::line(h)), cst(hs, 1) + h + h * h / q(2));

    const auto spec = make_ring({{"a", 1}, {"b", 2}}, 2);
    const auto a = gen(spec, "a");
    const auto b = gen(spec, "b");
    EXPECT_EQ(chern_character(BundleData(spec, 2, {a, b})), cst(spec, 2) + a + (a * a - b * q(2)) / q(2));
}

TEST(HodgeSheaf, Examples)
{
    const auto cp2 = projective_space(2);
    const auto h = gen(cp2.spec, "h");
    EXPECT_EQ(ch_hodge_sheaf(cp2, 0), cst(cp2.spec, 1));
    EXPECT_EQ(ch_hodge_sheaf(cp2, 1), cst(cp2.spec, 2) - h * q(3) + h * h * q(3, 2));
    // p = n: canonical bundle, ch = e^{-c1}.
    EXPECT_EQ(ch_hodge_sheaf(cp2, 2), hlab::exp(-cp2.chern[0]));
    EXPECT_THROW((void)ch_hodge_sheaf(cp2, 3), error);
}

TEST(Chi, ProjectivePlane)
{
    const auto cp2 = projective_space(2);
    const auto triv = BundleData::trivial(cp2.spec, 1);
    EXPECT_EQ(chi_p(cp2, triv, 0), 1);
    EXPECT_EQ(chi_p(cp2, triv, 1), -1);
    EXPECT_EQ(chi_p(cp2, triv, 2), 1);
    EXPECT_EQ(chi_y(cp2, triv), YPolynomial({q(1), q(-1), q(1)}));
    EXPECT_EQ(chi_y(cp2, triv).to_string(), "1 - y + y^2");
}

TEST(Chi, NonIntegralIsAnError)
{
    const auto spec = chern_ring(2);
    FundamentalClass f(spec);
    f.assign(gen(spec, "c1") * gen(spec, "c1"), 1);
    f.assign(gen(spec, "c2"), 0);
    const ManifoldData x(spec, {gen(spec, "c1"), gen(spec, "c2")}, f);
    const auto triv = BundleData::trivial(spec, 1);
    EXPECT_THROW((void)chi_p(x, triv, 0), error);
    EXPECT_THROW((void)chi_y(x, triv), error);
    EXPECT_NO_THROW((void)chi_y_unchecked(x, triv));
}

TEST(Chi, EulerCharacteristicAtMinusOne)
{
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 4; ++n) {
        for (int rank = 1; rank <= 3; ++rank) {
            const auto d = random_dataset(rng, n, rank);
            const auto chi = chi_y_unchecked(d.x, d.e);
            EXPECT_EQ(chi(q(-1)), Rational(rank) * integrate(d.x.chern.back(), d.x.fclass));
        }
    }
}

TEST(KCoefficients, ProjectivePlane)
{
    const auto k = k_coefficients(YPolynomial({q(1), q(-1), q(1)}));
    ASSERT_EQ(k.size(), 3U);
    EXPECT_EQ(k[0], 3);
    EXPECT_EQ(k[1], -3);
    EXPECT_EQ(k[2], 1);
}

TEST(KCoefficients, ReproduceSource)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> c;
        for (int i = 0; i < 6; ++i) {
            c.push_back(random_rational(rng));
        }
        const YPolynomial chi(c);
        const auto k = k_coefficients(chi, 5);
        YPolynomial rebuilt;
        YPolynomial base = YPolynomial::constant(1);
        for (const auto& kj : k) {
            rebuilt += base * kj;
            base = base * YPolynomial({q(1), q(1)});
        }
        EXPECT_EQ(rebuilt, chi);
    }
}

TEST(KCoefficients, RemarkFormulas)
{
    std::mt19937_64 rng(19);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto d = random_dataset(rng, n, 1 + trial);
            const auto cn = integrate(d.x.chern.back(), d.x.fclass);
            const auto triv = BundleData::trivial(d.x.spec, 1);
            const auto kx = k_coefficients(chi_y_unchecked(d.x, triv), n);
            EXPECT_EQ(kx[0], cn);
            EXPECT_EQ(kx[1], -Rational(n) * cn / 2);
            const auto ke = k_coefficients(chi_y_unchecked(d.x, d.e), n);
            EXPECT_EQ(ke[0], Rational(d.e.rank) * cn);
            EXPECT_TRUE(k1_formula_check(d.x, d.e));
            EXPECT_TRUE(k1_formula_check(d.x, triv));
        }
    }
    const auto cp2 = projective_space(2);
    const auto o1 = BundleData::line(gen(cp2.spec, "h"));
    EXPECT_TRUE(k1_formula_check(cp2, o1));
    // -(1/2)·2·3 + ∫3h·h
    EXPECT_EQ(k1_closed_form(cp2, o1), Rational(-3) + 3);
}

TEST(KCoefficients, SurfaceFormula)
{
    const auto cp2 = projective_space(2);
    const auto h = gen(cp2.spec, "h");
    EXPECT_TRUE(k2_surface_formula_check(cp2, BundleData::line(h)));
    EXPECT_TRUE(k2_surface_formula_check(cp2, BundleData::trivial(cp2.spec, 2)));
    // Flat: K_2(X,E) = rank K_2(X).
    const auto kx = k_coefficients(chi_y(cp2, BundleData::trivial(cp2.spec, 1)), 2);
    EXPECT_EQ(k2_surface_closed_form(cp2, BundleData::trivial(cp2.spec, 3)), 3 * kx[2]);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = random_dataset(rng, 2, 1 + trial % 3);
        EXPECT_TRUE(k2_surface_formula_check(d.x, d.e));
    }
    EXPECT_THROW((void)k2_surface_formula_check(projective_space(3), BundleData::trivial(projective_space(3).spec, 1)),
                 error);
}

TEST(Hilbert, ProjectivePlaneO1)
{
    const auto cp2 = projective_space(2);
    const auto l = BundleData::line(gen(cp2.spec, "h"));
    const auto p0 = hilbert_polynomial(cp2, l, 0);
    EXPECT_EQ(p0, MPolynomial({q(1), q(3, 2), q(1, 2)}));
    EXPECT_EQ(p0.to_string(), "(1/2)m^2 + (3/2)m + 1");
    for (int p = 0; p <= 2; ++p) {
        const auto poly = hilbert_polynomial(cp2, l, p);
        EXPECT_EQ(poly.coeff(2), Rational(binomial(2, p)) * integrate(l.chern[0] * l.chern[0], cp2.fclass) / 2);
        EXPECT_EQ(poly(0), chi_p(cp2, BundleData::trivial(cp2.spec, 1), p));
        for (int m = -5; m <= 5; ++m) {
            EXPECT_EQ(poly(m), chi_p(cp2, l.tensor_power(m), p)) << "p=" << p << " m=" << m;
        }
    }
    EXPECT_THROW((void)hilbert_polynomial(cp2, BundleData::trivial(cp2.spec, 2), 0), error);
}

TEST(Hilbert, RandomDatasetsMatchDirectHrr)
{
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 4; ++n) {
        const auto d = random_dataset(rng, n, 1);
        for (int p = 0; p <= n; ++p) {
            const auto poly = hilbert_polynomial(d.x, d.e, p);
            for (int m = -5; m <= 5; ++m) {
                EXPECT_EQ(poly(m), hrr_values(d.x, d.e.tensor_power(m))[p]);
            }
        }
    }
}

TEST(Inequality, Examples)
{
    const auto cp2 = projective_space(2);
    const auto triv = BundleData::trivial(cp2.spec, 1);
    const auto j0 = chern_inequality_check(cp2, triv, 0);
    EXPECT_EQ(j0.rhs, 3);
    EXPECT_EQ(j0.lhs, 3);
    EXPECT_TRUE(j0.holds);
    EXPECT_EQ(chern_inequality_check(cp2, triv, 2).rhs, 1);
    // rhs = C(n+1, j+1)
    for (int n = 1; n <= 5; ++n) {
        const auto x = projective_space(n);
        for (int j = 0; j <= n; ++j) {
            const auto r = chern_inequality_check(x, BundleData::trivial(x.spec, 1), j);
            EXPECT_EQ(r.rhs, Rational(binomial(n + 1, j + 1)));
        }
    }
    EXPECT_THROW((void)chern_inequality_check(cp2, triv, 3), error);
}

TEST(GenusProperty, SerreSymmetryOnFixtures)
{
    std::vector<ManifoldData> fixtures;
    for (int n = 1; n <= 6; ++n) {
        fixtures.push_back(projective_space(n));
    }
    for (int d = 1; d <= 5; ++d) {
        fixtures.push_back(hypersurface(2, d));
        fixtures.push_back(hypersurface(3, d));
    }
    fixtures.push_back(product_of_projective_spaces(1, 1));
    fixtures.push_back(product_of_projective_spaces(1, 2));
    fixtures.push_back(product_of_projective_spaces(2, 2));
    for (const auto& x : fixtures) {
        const int n = x.dimension();
        const auto chi = chi_y(x, BundleData::trivial(x.spec, 1));
        for (int p = 0; p <= n; ++p) {
            EXPECT_EQ(chi.coeff(p), (n % 2 == 0 ? 1 : -1) * chi.coeff(n - p));
            EXPECT_TRUE(is_integer(chi.coeff(p)));
        }
    }
    // K3 (quartic surface): χ_y = 2 - 20y + 2y^2.
    EXPECT_EQ(chi_y(hypersurface(2, 4), BundleData::trivial(hypersurface(2, 4).spec, 1)),
              YPolynomial({q(2), q(-20), q(2)}));
}

TEST(GenusProperty, FlatBundleFactorization)
{
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 4; ++n) {
        for (int rank = 1; rank <= 3; ++rank) {
            const auto d = random_dataset(rng, n, 1);
            const auto flat = BundleData::trivial(d.x.spec, rank);
            EXPECT_EQ(chi_y_unchecked(d.x, flat), chi_y_unchecked(d.x, BundleData::trivial(d.x.spec, 1)) * Rational(rank));
        }
    }
}
