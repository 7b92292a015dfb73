#include <gtest/gtest.h>

#include "asmlat/enumeration.hpp"
#include "asmlat/statistics.hpp"
#include "oracles.hpp"

namespace asmlat {
namespace {

const Asm kA = Asm::validate({{0, 0, 1, 0}, {0, 1, -1, 1}, {1, -1, 1, 0}, {0, 1, 0, 0}});
const Asm kB = from_permutation(Permutation::from_images({3, 4, 1, 2}));

TEST(Fraction, Printing) {
    EXPECT_EQ(HalfUnits{7}.to_string(), "7/2");
    EXPECT_EQ(HalfUnits{8}.to_string(), "4");
    EXPECT_EQ(HalfUnits{0}.to_string(), "0");
    EXPECT_EQ(QuarterUnits{-1}.to_string(), "-1/4");
    EXPECT_EQ(QuarterUnits{6}.to_string(), "3/2");
    EXPECT_EQ(HalfUnits::from_integer(3) - HalfUnits{1}, HalfUnits{5});
}

TEST(Statistics, ExampleMatrixA) {
    EXPECT_EQ(inversion_number(kA), 5);
    EXPECT_EQ(dual_inversion_number(kA), 3);
    EXPECT_EQ(minus_count(kA), 2);
    EXPECT_EQ(weak_inversion(kA), HalfUnits{8});
    EXPECT_EQ(beta_weighted(kA), 7);
    EXPECT_EQ(beta_row_weighted(kA), 7);
    EXPECT_EQ(beta_corner(kA), 7);
    const StatRecord expected{5, 3, 2, HalfUnits{8}, 7};
    EXPECT_EQ(stat_record(kA), expected);
}

TEST(Statistics, ExampleMatrixB) {
    EXPECT_EQ(inversion_number(kB), 4);
    EXPECT_EQ(beta(kB), 8);
    EXPECT_EQ(weak_inversion(kB), HalfUnits{8});
}

TEST(Statistics, LongestPermutation) {
    const Asm w0 = from_permutation(Permutation::longest(4));
    EXPECT_EQ(inversion_number(w0), 6);
    EXPECT_EQ(beta_weighted(w0), 10);
    EXPECT_EQ(beta_row_weighted(w0), 10);
    EXPECT_EQ(beta_corner(w0), 10);
}

TEST(Statistics, InversionListOfA) {
    const auto list = inversion_list(kA);
    std::int64_t signed_total = 0;
    std::int64_t weighted = 0;
    for (const auto& inv : list) {
        EXPECT_LT(inv.i, inv.j);
        EXPECT_LT(inv.k, inv.l);
        EXPECT_EQ(inv.sign, kA.at(inv.j, inv.k) * kA.at(inv.i, inv.l));
        EXPECT_NE(inv.sign, 0);
        signed_total += inv.sign;
        weighted += inv.sign * inv.weight();
    }
    EXPECT_EQ(signed_total, 5);
    EXPECT_EQ(weighted, 7);
    EXPECT_TRUE(std::is_sorted(list.begin(), list.end(), [](const Inversion& x, const Inversion& y) {
        return std::tie(x.i, x.j, x.k, x.l) < std::tie(y.i, y.j, y.k, y.l);
    }));
}

TEST(Statistics, IdentityIsBottom) {
    for (int n = 1; n <= 6; ++n) {
        // Every pair of diagonal ones is a dual inversion.
        const StatRecord expected{0, n * (n - 1) / 2, 0, HalfUnits{}, 0};
        EXPECT_EQ(stat_record(identity(n)), expected);
        EXPECT_TRUE(inversion_list(identity(n)).empty());
    }
}

TEST(Statistics, AgreeWithQuadrupleSumsExhaustive) {
    for (int n = 1; n <= 5; ++n) {
        for_each_asm(n, [](const Asm& a) {
            const auto i = oracle::inversions(a);
            const auto b = oracle::column_weighted(a);
            ASSERT_EQ(inversion_number(a), i) << flat_string(a);
            ASSERT_EQ(dual_inversion_number(a), oracle::dual_inversions(a)) << flat_string(a);
            ASSERT_EQ(minus_count(a), oracle::minus_entries(a));
            ASSERT_EQ(beta_weighted(a), b);
            ASSERT_EQ(beta_row_weighted(a), b);
            ASSERT_EQ(beta_corner(a), b);
            ASSERT_EQ(weak_inversion(a).units, 2 * i - oracle::minus_entries(a));
        });
    }
}

TEST(Statistics, PermutationsMatchClassicalCounts) {
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [](const Permutation& w) {
            const Asm a = from_permutation(w);
            ASSERT_EQ(inversion_number(a), w.inversions());
            ASSERT_EQ(beta(a), oracle::permutation_weighted_inversions(w)) << w.to_string();
            ASSERT_EQ(minus_count(a), 0);
        });
    }
}

TEST(LocalWeak, SumsToWeakInversion) {
    for (int n = 1; n <= 5; ++n) {
        for_each_asm(n, [n](const Asm& a) {
            QuarterUnits total{};
            for (int p = 1; p <= n; ++p) {
                for (int q = 1; q <= n; ++q) {
                    const auto h = local_weak_contribution(a, p, q);
                    if (a.at(p, q) == 0) {
                        ASSERT_EQ(h, QuarterUnits{});
                    }
                    total = total + h;
                }
            }
            ASSERT_EQ(total.units, 2 * weak_inversion(a).units) << flat_string(a);
        });
    }
}

TEST(LocalWeak, RejectsOutOfRange) {
    EXPECT_THROW(local_weak_contribution(kA, 0, 1), AsmError);
    EXPECT_THROW(local_weak_contribution(kA, 1, 5), AsmError);
    try {
        local_weak_contribution(kA, 5, 1);
    } catch (const AsmError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
    }
}

}  // namespace
}  // namespace asmlat
