#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "weilzeta/abelian/finite.hpp"
#include "weilzeta/abelian/groups.hpp"
#include "weilzeta/abelian/lifting.hpp"
#include "weilzeta/abelian/smith.hpp"
#include "weilzeta/error.hpp"

using namespace weilzeta;
using namespace weilzeta::abelian;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long span) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * span + 1)) - span;
    return m;
}

// Subgroup generated by gens, as a set of mixed-radix indices.
std::set<std::uint64_t> closure(const oracle::Brute& g, const std::vector<std::vector<std::uint64_t>>& gens) {
    std::set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> frontier{0};
    while (!frontier.empty()) {
        const auto x = g.at(frontier.back());
        frontier.pop_back();
        for (const auto& s : gens) {
            std::vector<long long> y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = static_cast<long long>(x[i] + s[i]);
            const auto idx = g.index(y);
            if (seen.insert(idx).second) frontier.push_back(idx);
        }
    }
    return seen;
}

std::set<std::uint64_t> multiples(const oracle::Brute& g, std::uint64_t k) {
    std::set<std::uint64_t> out;
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        const auto x = g.at(i);
        std::vector<long long> y(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) y[j] = static_cast<long long>((x[j] * k) % g.orders[j]);
        out.insert(g.index(y));
    }
    return out;
}

bool meets_only_in_zero(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    for (auto x : a)
        if (x != 0 && b.count(x)) return false;
    return true;
}

}  // namespace

TEST(Smith, Examples) {
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).D, (IntMatrix{{2, 0}, {0, 4}}));
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).D, IntMatrix::identity(3));
    EXPECT_EQ(smith_normal_form(IntMatrix{{0}}).D, (IntMatrix{{0}}));
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 1}, {0, 3}}).invariants(), big({1, 6}));
}

TEST(Smith, RandomProperties) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const IntMatrix m = random_matrix(rng, r, c, 9);
        const SmithForm sf = smith_normal_form(m);
        EXPECT_EQ(sf.U * m * sf.V, sf.D);
        EXPECT_TRUE(is_unimodular(sf.U));
        EXPECT_TRUE(is_unimodular(sf.V));
        const auto inv = sf.invariants();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) EXPECT_EQ(sf.D(i, j), 0);
        for (std::size_t i = 0; i + 1 < inv.size(); ++i) EXPECT_EQ(inv[i + 1] % inv[i], 0);
        // Same invariants after permuting rows and columns.
        std::vector<std::size_t> pr(r), pc(c);
        std::iota(pr.begin(), pr.end(), 0);
        std::iota(pc.begin(), pc.end(), 0);
        std::shuffle(pr.begin(), pr.end(), rng);
        std::shuffle(pc.begin(), pc.end(), rng);
        IntMatrix p(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) p(i, j) = m(pr[i], pc[j]);
        EXPECT_EQ(smith_normal_form(p).invariants(), inv);
        if (r == c) {
            BigInt prod = 1;
            for (const auto& d : inv) prod *= d;
            const BigInt det = abs(determinant(m));
            EXPECT_EQ(inv.size() == r ? prod : BigInt(0), det) << m.to_string();
        }
        const IntMatrix ker = integer_kernel(m);
        EXPECT_EQ(ker.cols(), c - inv.size());
        if (ker.cols()) EXPECT_EQ((m * ker), IntMatrix(r, ker.cols()));
    }
}

TEST(Groups, ParseAndPrint) {
    const AbGroup g = AbGroup::parse("Z^2+Q+Z/6+Q_2/Z_2");
    EXPECT_EQ(g.free_rank, 2u);
    EXPECT_EQ(g.rational_rank, 1u);
    EXPECT_EQ(g.invariant_factors, big({6}));
    EXPECT_EQ(g.cofinite.at(2), 1u);
    EXPECT_EQ(AbGroup::parse(g.to_string()), g);
    EXPECT_EQ(AbGroup::finite(big({4, 6})).invariant_factors, big({2, 12}));
    EXPECT_EQ(AbGroup::finite(big({4, 6})).order(), 24);
    EXPECT_THROW(AbGroup::parse("Z+Q").order(), Error);
}

TEST(Groups, ZValueExamples) {
    const AbGroup Z = AbGroup::make(1, 0, {});
    EXPECT_EQ(z_value(GroupHom(AbGroup::finite(big({4})), AbGroup::finite(big({2})), IntMatrix{{1}})), Rational(2));
    EXPECT_EQ(z_value(GroupHom(Z, Z, IntMatrix{{3}})), Rational(1, 3));
    EXPECT_EQ(z_value(GroupHom(Z, Z, IntMatrix{{1}})), Rational(1));
    try {
        z_value(GroupHom(Z, Z, IntMatrix{{0}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotFinite);
    }
    // Z^2 -> Z, (x, y) -> x: infinite kernel.
    EXPECT_THROW(z_value(GroupHom(AbGroup::make(2, 0, {}), Z, IntMatrix{{1, 0}})), Error);
    // Z/2 -> Z/4 with 1 -> 1 is not well defined.
    EXPECT_THROW(GroupHom(AbGroup::finite(big({2})), AbGroup::finite(big({4})), IntMatrix{{1}}), Error);
}

TEST(Groups, ZValueAgreesWithBruteForce) {
    std::mt19937_64 rng(43);
    auto chain = [&rng]() {
        std::vector<std::uint64_t> o;
        std::uint64_t base = 2 + rng() % 5;
        o.push_back(base);
        if (rng() % 2) o.push_back(base * (1 + rng() % 4));
        return o;
    };
    for (int t = 0; t < 300; ++t) {
        const auto so = chain(), to = chain();
        std::vector<std::vector<long long>> a(to.size(), std::vector<long long>(so.size()));
        IntMatrix m(to.size(), so.size());
        for (std::size_t i = 0; i < to.size(); ++i)
            for (std::size_t j = 0; j < so.size(); ++j) {
                const std::uint64_t step = to[i] / std::gcd(to[i], so[j]);
                a[i][j] = static_cast<long long>(step * (rng() % (to[i] / step + 1)));
                m(i, j) = static_cast<long>(a[i][j]);
            }
        std::vector<BigInt> sb, tb;
        for (auto x : so) sb.emplace_back(static_cast<unsigned long>(x));
        for (auto x : to) tb.emplace_back(static_cast<unsigned long>(x));
        const auto [k, c] = oracle::brute_kernel_cokernel({so}, {to}, a);
        const GroupHom f(AbGroup::finite(sb), AbGroup::finite(tb), m);
        EXPECT_EQ(z_value(f), canonical(Rational(static_cast<unsigned long>(k), static_cast<unsigned long>(c)))) << m.to_string();
        const auto kc = kernel_cokernel(f);
        EXPECT_EQ(kc.kernel_order, static_cast<unsigned long>(k));
        EXPECT_EQ(kc.cokernel_order, static_cast<unsigned long>(c));
    }
}

TEST(Groups, QuotientsAndTate) {
    EXPECT_EQ(quotient_mod_n(AbGroup::parse("Z+Z/6"), 4), AbGroup::finite(big({2, 4})));
    EXPECT_TRUE(quotient_mod_n(AbGroup::parse("Q^3"), 7).is_trivial());
    EXPECT_EQ(torsion_T(AbGroup::parse("Q_2/Z_2")), (std::map<std::uint64_t, unsigned>{{2, 1}}));
    EXPECT_TRUE(torsion_T(AbGroup::parse("Z^3+Z/5")).empty());
}

TEST(Groups, UlmAndDivisible) {
    auto a = ulm_and_divisible(AbGroup::parse("Z+Z/4"));
    EXPECT_TRUE(a.ulm.is_trivial());
    EXPECT_TRUE(a.ulm_equals_divisible);
    auto b = ulm_and_divisible(AbGroup::parse("Q+Z/2"));
    EXPECT_EQ(b.ulm, AbGroup::parse("Q"));
    EXPECT_TRUE(b.tate_trivial);
    EXPECT_TRUE(b.uniquely_divisible);
    EXPECT_TRUE(b.tate_trivial_implies_torsion_free);
    auto c = ulm_and_divisible(AbGroup::parse("Q_3/Z_3"));
    EXPECT_EQ(c.ulm, AbGroup::parse("Q_3/Z_3"));
    EXPECT_FALSE(c.tate_trivial);
    EXPECT_FALSE(c.ulm.is_torsion_free());

    std::mt19937_64 rng(47);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    for (int t = 0; t < 200; ++t) {
        std::vector<BigInt> cyc;
        for (unsigned i = 0, k = rng() % 3; i < k; ++i) cyc.emplace_back(static_cast<unsigned long>(2 + rng() % 30));
        std::map<std::uint64_t, unsigned> cof;
        for (unsigned i = 0, k = rng() % 3; i < k; ++i) cof[primes[rng() % 4]] += 1 + rng() % 2;
        const AbGroup g = AbGroup::make(rng() % 3, rng() % 3, cyc, cof);
        const auto u = ulm_and_divisible(g);
        EXPECT_EQ(u.ulm, u.divisible);
        EXPECT_TRUE(u.ulm.is_divisible());
        EXPECT_TRUE(u.ulm_equals_divisible);
        EXPECT_TRUE(u.quotients_finite);
        EXPECT_TRUE(u.tate_trivial_implies_torsion_free);
        EXPECT_EQ(u.tate_trivial, g.cofinite.empty());
        for (std::uint64_t n = 1; n <= 12; ++n) EXPECT_TRUE(quotient_mod_n(g, n).is_finite());
    }
}

TEST(Groups, Completion) {
    EXPECT_EQ(l_adic_completion(AbGroup::parse("Z^2"), 3), (Completion{2, {}}));
    EXPECT_EQ(l_adic_completion(AbGroup::parse("Z/12"), 2), (Completion{0, big({4})}));
    EXPECT_EQ(l_adic_completion(AbGroup::parse("Q"), 5), Completion{});
    for (unsigned a = 0; a <= 5; ++a)
        for (std::uint64_t l : {2u, 3u, 7u}) {
            const AbGroup g = AbGroup::make(a, 0, {});
            EXPECT_EQ(l_adic_completion(g, l).free_rank, a);
            EXPECT_EQ(quotient_mod_n(g, l).invariant_factors.size(), a);
        }
}

TEST(Groups, CyclicDecomposition) {
    EXPECT_EQ(cyclic_decomposition(IntMatrix{{2, 0}, {0, 6}}), big({2, 6}));
    EXPECT_EQ(cyclic_decomposition(IntMatrix{{2, 1}, {0, 3}}), big({6}));
    try {
        cyclic_decomposition(IntMatrix{{2, 0}, {0, 0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotFinite);
    }
}

TEST(Groups, PairingEmbedding) {
    const auto p = pairing_embedding(IntMatrix{{1, 0}, {0, 2}});
    EXPECT_TRUE(p.injective);
    EXPECT_EQ(p.embedding, (IntMatrix{{1, 0}, {0, 2}}));
    EXPECT_FALSE(pairing_embedding(IntMatrix{{1, 2}, {2, 4}}).injective);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        const IntMatrix phi = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 4, 4);
        const auto e = pairing_embedding(phi);
        // Trivial left kernel <=> an integer kernel of phi^T is empty.
        EXPECT_EQ(e.injective, integer_kernel(phi.transpose()).cols() == 0);
    }
}

TEST(Complement, Examples) {
    FiniteGroup n({4, 2});
    const Complement c = summand_complement(n, {{2, 1}}, 2, 1);
    EXPECT_EQ(c.m_size * c.c_size, 8u);
    try {
        summand_complement(FiniteGroup({2}), {}, 2, 1);
        FAIL();
    } catch (const HypothesisError& e) {
        EXPECT_EQ(e.witness(), (Element{1}));
    }
    try {
        summand_complement(FiniteGroup({4}), {{2}}, 2, 1);
        FAIL();
    } catch (const HypothesisError& e) {
        EXPECT_EQ(e.witness(), (Element{2}));
    }
    EXPECT_THROW(FiniteGroup({64, 128}), Error);
}

TEST(Complement, RandomInstances) {
    std::mt19937_64 rng(59);
    int valid = 0, invalid = 0;
    for (int t = 0; t < 150; ++t) {
        const std::uint64_t l = rng() % 2 ? 2 : 3;
        std::vector<std::uint64_t> orders;
        for (unsigned i = 0, k = 1 + rng() % 3; i < k; ++i) {
            std::uint64_t o = 1;
            for (unsigned e = 0, E = 1 + rng() % 3; e < E; ++e) o *= l;
            if (rng() % 3 == 0) o *= (l == 2 ? 3 : 2);
            orders.push_back(o);
        }
        const oracle::Brute g{orders};
        if (g.size() > 4096) continue;
        const unsigned exp_n = 1 + rng() % 2;
        std::uint64_t ln = 1;
        for (unsigned i = 0; i < exp_n; ++i) ln *= l;
        const auto lnN = multiples(g, ln);

        std::vector<std::vector<std::uint64_t>> gens;
        if (rng() % 2) {
            // Greedy maximal subgroup meeting l^n N trivially.
            std::vector<std::uint64_t> order(g.size());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            for (auto idx : order) {
                auto trial = gens;
                trial.push_back(g.at(idx));
                if (meets_only_in_zero(closure(g, trial), lnN)) gens = trial;
            }
        } else {
            for (unsigned i = 0, k = rng() % 3; i < k; ++i) gens.push_back(g.at(rng() % g.size()));
        }
        const auto m = closure(g, gens);
        try {
            const Complement c = summand_complement(FiniteGroup(orders), gens, l, exp_n);
            ++valid;
            const auto cset = closure(g, c.generators);
            EXPECT_EQ(m.size() * cset.size(), g.size());
            EXPECT_TRUE(meets_only_in_zero(m, cset));
            auto all = gens;
            all.insert(all.end(), c.generators.begin(), c.generators.end());
            EXPECT_EQ(closure(g, all).size(), g.size());
        } catch (const HypothesisError& e) {
            ++invalid;
            const auto& w = e.witness();
            std::vector<long long> wl(w.begin(), w.end());
            const auto widx = g.index(wl);
            const bool meets = widx != 0 && m.count(widx) && lnN.count(widx);
            auto bigger = gens;
            bigger.push_back(w);
            const bool extends = !m.count(widx) && meets_only_in_zero(closure(g, bigger), lnN);
            EXPECT_TRUE(meets || extends) << FiniteGroup::to_string(w);
        }
    }
    EXPECT_GT(valid, 20);
    EXPECT_GT(invalid, 20);
}

TEST(Lifting, Examples) {
    EXPECT_EQ(lift_idempotent(ModMatrix(IntMatrix{{3}}, 9)).value, ModMatrix(IntMatrix{{0}}, 9));
    EXPECT_EQ(lift_idempotent(ModMatrix(IntMatrix{{1}}, 27)).value, ModMatrix(IntMatrix{{1}}, 27));
    try {
        lift_idempotent(ModMatrix(IntMatrix{{2}}, 9));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotIdempotentModP);
    }
    EXPECT_EQ(lift_unit(ModMatrix(IntMatrix{{4}}, 9)), ModMatrix(IntMatrix{{7}}, 9));
    for (long p : {2, 3, 5, 7}) {
        const long p3 = p * p * p;
        EXPECT_EQ(lift_unit(ModMatrix(IntMatrix{{1 + p}}, p3)), ModMatrix(IntMatrix{{1 - p + p * p}}, p3));
    }
    try {
        lift_unit(ModMatrix(IntMatrix{{3}}, 9));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotUnitModP);
    }
    EXPECT_THROW(lift_unit(ModMatrix(IntMatrix{{1}}, 12)), Error);
}

TEST(Lifting, RandomNearIdempotents) {
    std::mt19937_64 rng(61);
    const std::pair<long, unsigned> moduli[] = {{2, 2}, {2, 4}, {2, 6}, {3, 2}, {3, 4}, {5, 2}, {7, 2}};
    for (int t = 0; t < 200; ++t) {
        const auto [p, s] = moduli[rng() % 7];
        long m = 1;
        for (unsigned i = 0; i < s; ++i) m *= p;
        const std::size_t n = 1 + rng() % 3;
        // e = P D P^{-1} with P unitriangular, D a 0/1 diagonal.
        IntMatrix P = IntMatrix::identity(n), Pinv = IntMatrix::identity(n), D(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            D(i, i) = static_cast<long>(rng() % 2);
            for (std::size_t j = i + 1; j < n; ++j) P(i, j) = static_cast<long>(rng() % 5);
        }
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = j; i-- > 0;) {
                BigInt acc = 0;
                for (std::size_t k = i + 1; k <= j; ++k) acc += P(i, k) * Pinv(k, j);
                Pinv(i, j) = -acc;
            }
        ASSERT_EQ(P * Pinv, IntMatrix::identity(n));
        IntMatrix a = P * D * Pinv;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) += p * static_cast<long>(rng() % m);
        const ModMatrix am(a, m);
        const auto lift = lift_idempotent(am);
        EXPECT_EQ(lift.value * lift.value, lift.value);
        EXPECT_TRUE((lift.value - am).reduced(p).is_zero());

        IntMatrix u = random_matrix(rng, n, n, 20);
        if (!inverse_mod_prime(u, static_cast<unsigned long>(p))) continue;
        const ModMatrix um(u, m);
        EXPECT_EQ(um * lift_unit(um), ModMatrix::identity(n, m));
    }
}
