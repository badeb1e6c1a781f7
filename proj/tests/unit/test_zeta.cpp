#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "weilzeta/cli/input.hpp"
#include "weilzeta/error.hpp"
#include "weilzeta/hodge.hpp"
#include "weilzeta/variety.hpp"
#include "weilzeta/zeta.hpp"

using namespace weilzeta;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

ZetaFunction elliptic_f5() {
    return ZetaFunction{1, PrimePower(5, 1), {ZPoly{1, -1}, ZPoly{1, -2, 5}, ZPoly{1, -5}}};
}

}  // namespace

TEST(Zeta, ProjectiveLineFromCounts) {
    ZetaFunction z = zeta_from_counts(PrimePower(3, 1), big({4, 10, 28}), {1, 0, 1});
    EXPECT_EQ(z.factors[0], (ZPoly{1, -1}));
    EXPECT_EQ(z.factors[1], (ZPoly{1}));
    EXPECT_EQ(z.factors[2], (ZPoly{1, -3}));
}

TEST(Zeta, EllipticCurveFromNaiveCounts) {
    Field F(5, 1);
    Form f = cli::parse_poly("x1^2*x2 - x0^3 - x0*x2^2");
    auto e = VarietyExpr::plane_curve(f);
    const std::vector<BigInt> counts = count_vector(e, F, 4);
    for (unsigned m = 1; m <= 2; ++m)
        EXPECT_EQ(counts[m - 1], static_cast<unsigned long>(oracle::projective_zeros(2, f, F.extension(m))));
    EXPECT_EQ(counts[0], 4);
    ZetaFunction z = zeta_from_counts(PrimePower(5, 1), counts, {1, 2, 1});
    EXPECT_EQ(z, elliptic_f5());
}

TEST(Zeta, Errors) {
    try {
        zeta_from_counts(PrimePower(2, 1), big({1, 1, 1}), {1, 0, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoRationalFit);
    }
    try {
        zeta_from_counts(PrimePower(3, 1), big({4}), {1, 0, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InsufficientCounts);
    }
    // Counts of P^1 declared as a curve of genus 1 do not fit degrees (2, 2).
    try {
        zeta_from_counts(PrimePower(3, 1), big({4, 10, 28, 82}), {1, 2, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoRationalFit);
    }
}

TEST(Zeta, ExpandCountsExamples) {
    ZetaFunction p2{2, PrimePower(2, 1), {ZPoly{1, -1}, ZPoly{1}, ZPoly{1, -2}, ZPoly{1}, ZPoly{1, -4}}};
    EXPECT_EQ(expand_counts(p2, 1), big({7}));
    EXPECT_EQ(expand_counts(elliptic_f5(), 2), big({4, 32}));
}

TEST(Zeta, NewtonIdentitiesAgreeWithCompanionTraces) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        std::vector<BigInt> c{BigInt(1)};
        const int deg = static_cast<int>(rng() % 7) + 1;
        for (int k = 0; k < deg; ++k) c.emplace_back(static_cast<long>(rng() % 41) - 20);
        if (c.back() == 0) c.back() = 1;
        ZPoly P(c);
        EXPECT_EQ(power_sums(P, 12), oracle::companion_power_sums(P, 12)) << to_string(P);
    }
}

TEST(Zeta, RoundTripRandomWeilPolynomials) {
    // Curves: P_1 = prod over pairs (1 - a t + q t^2) with |a| <= 2 sqrt q.
    std::mt19937_64 rng(29);
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 9u, 25u}) {
        for (int trial = 0; trial < 5; ++trial) {
            const unsigned g = 1 + rng() % 3;
            ZPoly P1{1};
            for (unsigned i = 0; i < g; ++i) {
                long bound = static_cast<long>(2 * std::sqrt(static_cast<double>(q)));
                long a = static_cast<long>(rng() % (2 * bound + 1)) - bound;
                P1 = P1 * ZPoly{BigInt(1), BigInt(-a), BigInt(static_cast<unsigned long>(q))};
            }
            const auto pp = prime_factors(q);
            ZetaFunction z{1, PrimePower(pp[0], static_cast<unsigned>(pp.size())), {ZPoly{1, -1}, P1, ZPoly{BigInt(1), BigInt(-static_cast<long>(q))}}};
            const auto counts = expand_counts(z, 2 + 2 * g);
            ZetaFunction back = zeta_from_counts(z.q, counts, {1, static_cast<long>(2 * g), 1});
            EXPECT_EQ(back, z) << to_string(P1);
            EXPECT_EQ(expand_counts(back, 2 + 2 * g), counts);
        }
    }
}

TEST(Zeta, FunctionalEquation) {
    ZetaFunction p1{1, PrimePower(3, 1), {ZPoly{1, -1}, ZPoly{1}, ZPoly{1, -3}}};
    auto fe = functional_equation_check(p1);
    EXPECT_TRUE(fe.holds);
    EXPECT_EQ(fe.sign, 1);
    EXPECT_EQ(fe.chi_top, 2);
    auto fe_e = functional_equation_check(elliptic_f5());
    EXPECT_TRUE(fe_e.holds);
    EXPECT_EQ(fe_e.sign, 1);
    EXPECT_EQ(fe_e.chi_top, 0);
    ZetaFunction bad = elliptic_f5();
    bad.factors[1] = ZPoly{1, -2, 4};
    EXPECT_FALSE(functional_equation_check(bad).holds);
}

TEST(Zeta, RiemannHypothesisCheck) {
    EXPECT_TRUE(check_weight(ZPoly{1, -2, 5}, 5, 1).ok);
    EXPECT_TRUE(check_weight(ZPoly{1, -4}, 2, 4).ok);
    const auto bad = check_weight(ZPoly{1, -6, 5}, 5, 1);
    EXPECT_FALSE(bad.ok);
    EXPECT_GT(bad.max_relative_deviation, 0.5);
    EXPECT_TRUE(riemann_hypothesis_check(elliptic_f5()).holds());
}

TEST(Zeta, ProductMatchesKunnethCounts) {
    Field F(5, 1);
    auto e = VarietyExpr::plane_curve(cli::parse_poly("x1^2*x2 - x0^3 - x0*x2^2"));
    auto c = VarietyExpr::plane_curve(cli::parse_poly("x0^3 + x1^3 + x2^3"));
    auto ze = zeta_from_counts(PrimePower(5, 1), count_vector(e, F, 4), {1, 2, 1});
    auto zc = zeta_from_counts(PrimePower(5, 1), count_vector(c, F, 4), {1, 2, 1});
    // Kunneth count vector: N_m(X x Y) = N_m(X) N_m(Y).
    const auto ne = expand_counts(ze, 16), nc = expand_counts(zc, 16);
    std::vector<BigInt> prod;
    for (int m = 0; m < 16; ++m) prod.push_back(ne[m] * nc[m]);
    auto zp = zeta_from_counts(PrimePower(5, 1), prod, {1, 4, 6, 4, 1});
    EXPECT_EQ(expand_counts(zp, 16), prod);
    // Direct counts of the product for small m.
    auto v = VarietyExpr::product(e, c);
    for (unsigned m = 1; m <= 3; ++m) EXPECT_EQ(count_points(v, F, m), prod[m - 1]);
    EXPECT_TRUE(functional_equation_check(zp).holds);
    EXPECT_TRUE(riemann_hypothesis_check(zp).holds());
}

TEST(Zeta, ReconstructedFactorsAreNormalized) {
    Field F(2, 1);
    auto klein = VarietyExpr::plane_curve(cli::parse_poly("x0^3*x1 + x1^3*x2 + x2^3*x0"));
    auto z = zeta_from_counts(PrimePower(2, 1), count_vector(klein, F, 8), betti_degrees(klein, hodge_of));
    EXPECT_EQ(z.factors[1], (ZPoly{1, 0, 0, 5, 0, 0, 8}));
    for (const auto& P : z.factors) EXPECT_EQ(P.coeff(0), 1);
}
