#include <gtest/gtest.h>

#include <random>

#include "weilzeta/finite_field.hpp"
#include "weilzeta/kernels/count_kernel.hpp"

using namespace weilzeta;
using namespace weilzeta::kernels;

namespace {

// Roots of sum c_e x^e by direct Field arithmetic on decoded elements.
std::uint64_t field_roots(const std::vector<Code>& coeffs, const LogTables& t, const Field& F) {
    auto decode = [&](Code c) { return c == t.zero() ? F.zero() : F.element_at(t.exp[static_cast<std::size_t>(c)]); };
    std::uint64_t n = 0;
    for (std::uint64_t i = 0; i < F.order(); ++i) {
        auto x = F.element_at(i);
        auto acc = F.zero();
        for (std::size_t e = 0; e < coeffs.size(); ++e) acc = F.add(acc, F.mul(decode(coeffs[e]), F.pow(x, e)));
        if (F.is_zero(acc)) ++n;
    }
    return n;
}

std::vector<Code> random_coeffs(std::mt19937_64& rng, const LogTables& t, std::size_t deg) {
    std::vector<Code> c(deg + 1);
    for (auto& x : c) x = static_cast<Code>(rng() % (static_cast<std::uint64_t>(t.group_order) + 1));
    return c;
}

}  // namespace

TEST(LogTables, ZechAdditionMatchesField) {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 4}, {3, 3}, {5, 2}, {13, 1}}) {
        Field F(p, k);
        LogTables t = build_log_tables(F);
        auto decode = [&](Code c) { return c == t.zero() ? F.zero() : F.element_at(t.exp[static_cast<std::size_t>(c)]); };
        for (Code a = 0; a <= t.group_order; ++a)
            for (Code b = 0; b <= t.group_order; ++b) {
                ASSERT_EQ(decode(t.add(a, b)), F.add(decode(a), decode(b)));
                ASSERT_EQ(decode(t.mul(a, b)), F.mul(decode(a), decode(b)));
            }
        for (Code a = 0; a <= t.group_order; ++a) EXPECT_EQ(F.add(decode(a), decode(t.neg(a))), F.zero());
    }
}

TEST(CountKernel, ScalarMatchesFieldArithmetic) {
    std::mt19937_64 rng(5);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {7, 1}, {2, 5}}) {
        Field F(p, k);
        LogTables t = build_log_tables(F);
        for (int i = 0; i < 40; ++i) {
            auto c = random_coeffs(rng, t, rng() % 5);
            EXPECT_EQ(count_roots_scalar(c, t), field_roots(c, t, F));
        }
    }
}

TEST(CountKernel, Avx2MatchesScalar) {
    if (!isa_available(Isa::Avx2)) GTEST_SKIP() << "AVX2 not available on this machine";
    std::mt19937_64 rng(17);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 1}, {2, 2}, {3, 1}, {2, 3}, {5, 1}, {7, 2}, {2, 8}, {3, 5}, {101, 1}, {2, 12}, {65537, 1}}) {
        Field F(p, k);
        LogTables t = build_log_tables(F);
        for (int i = 0; i < 60; ++i) {
            auto c = random_coeffs(rng, t, rng() % 8);
            ASSERT_EQ(count_roots_avx2(c, t), count_roots_scalar(c, t)) << "q=" << F.order();
        }
        // Constant zero polynomial: every element is a root.
        std::vector<Code> zero{t.zero(), t.zero()};
        EXPECT_EQ(count_roots_avx2(zero, t), F.order());
    }
}

TEST(CountKernel, DispatchHonorsOverride) {
    EXPECT_TRUE(isa_available(Isa::Scalar));
    Field F(5, 2);
    auto t = cached_log_tables(F);
    std::vector<Code> c{t->from_integer(-1), t->zero(), t->one()};  // x^2 - 1
    EXPECT_EQ(count_roots(c, *t, Isa::Scalar), 2u);
    EXPECT_EQ(count_roots(c, *t), 2u);
    EXPECT_EQ(to_string(Isa::Scalar), "scalar");
}
