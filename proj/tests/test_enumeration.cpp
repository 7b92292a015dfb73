#include <gtest/gtest.h>

#include <cstdlib>

#include "asmlat/enumeration.hpp"
#include "asmlat/statistics.hpp"
#include "oracles.hpp"

namespace asmlat {
namespace {

TEST(Count, FormulaValues) {
    const std::vector<std::string> expected{"1", "2", "7", "42", "429", "7436", "218348", "10850216"};
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(count_formula(n).get_str(), expected[static_cast<std::size_t>(n - 1)]);
    }
    // Ratio of consecutive terms: (3n+1)! n! / ((2n)! (2n+1)!).
    auto fact = [](unsigned long k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), k);
        return f;
    };
    for (unsigned long n = 1; n < 25; ++n) {
        EXPECT_EQ(count_formula(static_cast<int>(n + 1)) * fact(2 * n) * fact(2 * n + 1),
                  count_formula(static_cast<int>(n)) * fact(3 * n + 1) * fact(n))
            << n;
    }
}

TEST(Count, EnumerationMatchesFormula) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(count_by_enumeration(n))), count_formula(n)) << n;
        EXPECT_EQ(enumerate_asms(n).size(), count_by_enumeration(n));
    }
}

TEST(Count, BranchesPartition) {
    const int n = 5;
    std::uint64_t total = 0;
    for (int first = 1; first <= n; ++first) {
        for_each_asm_in_branch(n, first, [&](const Asm& a) {
            ASSERT_EQ(a.at(1, first), 1);
            ++total;
        });
    }
    EXPECT_EQ(total, 429u);
}

TEST(Enumerate, AscendingOrderAndSmallSizes) {
    const auto two = enumerate_asms(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(flat_string(two[0]), "0,1/1,0");
    EXPECT_EQ(flat_string(two[1]), "1,0/0,1");
    const auto three = enumerate_asms(3);
    ASSERT_EQ(three.size(), 7u);
    EXPECT_EQ(flat_string(three[0]), "0,0,1/0,1,0/1,0,0");
    EXPECT_EQ(flat_string(three[6]), "1,0,0/0,1,0/0,0,1");
    EXPECT_TRUE(std::is_sorted(three.begin(), three.end()));
}

TEST(Guard, ThrowsTooLarge) {
    try {
        enumerate_asms(6, 1000);
        FAIL();
    } catch (const AsmError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
    EXPECT_NO_THROW(check_guard(5, 429));
    EXPECT_THROW(check_guard(5, 428), AsmError);
    EXPECT_THROW(check_permutation_guard(6, 719), AsmError);
    EXPECT_NO_THROW(check_permutation_guard(6, 720));
}

TEST(Guard, EnvironmentOverride) {
    ::setenv("ASMLAT_GUARD", "1234", 1);
    EXPECT_EQ(guard_from_environment(), 1234u);
    ::setenv("ASMLAT_GUARD", "nonsense", 1);
    EXPECT_EQ(guard_from_environment(), kDefaultGuard);
    ::unsetenv("ASMLAT_GUARD");
    EXPECT_EQ(guard_from_environment(), kDefaultGuard);
}

TEST(Permutations, LexicographicOrder) {
    std::vector<std::string> seen;
    for_each_permutation(3, [&](const Permutation& w) { seen.push_back(w.to_string()); });
    EXPECT_EQ(seen, (std::vector<std::string>{"123", "132", "213", "231", "312", "321"}));
}

TEST(Polynomial, Printing) {
    HalfIntPolynomial p;
    EXPECT_EQ(p.to_string(), "0");
    p.add_term(0, 1);
    p.add_term(3, 1);
    p.add_term(2, 2);
    EXPECT_EQ(p.to_string(), "1 + 2*λ + λ^3/2");
    HalfIntPolynomial q(Variable::Q);
    q.add_term(0, 1);
    q.add_term(2, -1);
    q.add_term(4, -2);
    EXPECT_EQ(q.to_string(), "1 - q - 2*q^2");
    EXPECT_EQ(HalfIntPolynomial::monomial(4, -1).to_string(), "-λ^2");
    q.add_term(2, 1);
    EXPECT_EQ(q.coefficient(2), 0);
    EXPECT_EQ(q.to_string(), "1 - 2*q^2");
}

TEST(Polynomial, Arithmetic) {
    const auto one_plus = HalfIntPolynomial::constant(1) + HalfIntPolynomial::monomial(2, 1);
    const auto sq = one_plus * one_plus;
    EXPECT_EQ(sq.to_string(), "1 + 2*λ + λ^2");
    EXPECT_TRUE(sq.is_monic());
    EXPECT_TRUE(sq.is_palindromic());
    EXPECT_EQ(sq.evaluate_at_one(), 4);
    EXPECT_EQ(*sq.top_half_units(), 4);
    EXPECT_EQ(*sq.bottom_half_units(), 0);
    EXPECT_FALSE((sq + HalfIntPolynomial::constant(1)).is_palindromic());
}

TEST(Genfun, SizeThreeStrings) {
    EXPECT_EQ(genfun_stat(3, Stat::I).to_string(), "1 + 2*λ + 3*λ^2 + λ^3");
    EXPECT_EQ(genfun_stat(3, Stat::H).to_string(), "1 + 2*λ + λ^3/2 + 2*λ^2 + λ^3");
    EXPECT_EQ(genfun_stat(3, Stat::Beta).to_string(), "1 + 2*λ + λ^2 + 2*λ^3 + λ^4");
}

TEST(Genfun, WeakInversionSizeFour) {
    EXPECT_EQ(genfun_stat(4, Stat::H).to_string(),
              "1 + 3*λ + 2*λ^3/2 + 6*λ^2 + 6*λ^5/2 + 6*λ^3 + 6*λ^7/2 + 6*λ^4 + 2*λ^9/2 + 3*λ^5 + λ^6");
}

TEST(Genfun, WeakInversionIsMonicAndPalindromic) {
    for (int n = 1; n <= 6; ++n) {
        const auto p = genfun_stat(n, Stat::H);
        EXPECT_TRUE(p.is_monic()) << n;
        EXPECT_TRUE(p.is_palindromic()) << n;
        EXPECT_EQ(*p.top_half_units(), n * (n - 1)) << n;
        EXPECT_EQ(*p.bottom_half_units(), 0);
        EXPECT_EQ(p.evaluate_at_one(), count_formula(n));
    }
}

TEST(Genfun, InversionsOverPermutationsFactor) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(genfun_stat(n, Stat::I, Domain::Permutations), permutation_inversion_product(n)) << n;
    }
}

TEST(Bivariate, SmallCases) {
    EXPECT_EQ(bivariate_genfun(2, BivariatePair::AsmIBeta).to_string(), "1 + λ*q");
    BivariatePolynomial asm_i;
    asm_i.add_term(0, 0, 1);
    asm_i.add_term(2, 1, 2);
    asm_i.add_term(4, 2, 1);
    asm_i.add_term(4, 3, 2);
    asm_i.add_term(6, 4, 1);
    EXPECT_EQ(bivariate_genfun(3, BivariatePair::AsmIBeta), asm_i);
    BivariatePolynomial asm_h;
    asm_h.add_term(0, 0, 1);
    asm_h.add_term(2, 1, 2);
    asm_h.add_term(3, 2, 1);
    asm_h.add_term(4, 3, 2);
    asm_h.add_term(6, 4, 1);
    EXPECT_EQ(bivariate_genfun(3, BivariatePair::AsmHBeta), asm_h);
    BivariatePolynomial perm_i;
    perm_i.add_term(0, 0, 1);
    perm_i.add_term(2, 1, 2);
    perm_i.add_term(4, 3, 2);
    perm_i.add_term(6, 4, 1);
    EXPECT_EQ(bivariate_genfun(3, BivariatePair::PermIBeta), perm_i);
}

TEST(Bivariate, MarginalsAgreeWithUnivariate) {
    for (int n = 1; n <= 5; ++n) {
        const auto b = bivariate_genfun(n, BivariatePair::AsmHBeta);
        EXPECT_EQ(b.at_q_one(), genfun_stat(n, Stat::H));
        EXPECT_EQ(b.evaluate_at_one(), count_formula(n));
    }
}

TEST(SignedIdentity, MatchesProductOracle) {
    for (int n = 1; n <= 6; ++n) {
        const auto r = signed_identity_check(n);
        EXPECT_TRUE(r.equal) << n;
        const auto dense = oracle::signed_product(n);
        HalfIntPolynomial expected(Variable::Q);
        for (std::size_t e = 0; e < dense.size(); ++e) {
            expected.add_term(2 * static_cast<std::int64_t>(e), static_cast<long>(dense[e]));
        }
        EXPECT_EQ(r.lhs, expected) << n;
        EXPECT_EQ(r.rhs, expected) << n;
    }
    EXPECT_EQ(signed_identity_check(3).lhs.to_string(), "1 - 2*q + 2*q^3 - q^4");
}

TEST(MaxWeak, AttainedOnlyAtLongest) {
    for (int n = 1; n <= 5; ++n) {
        const Asm w0 = from_permutation(Permutation::longest(n));
        for_each_asm(n, [&](const Asm& a) {
            const auto h = weak_inversion(a).units;
            ASSERT_GE(h, 0);
            ASSERT_LE(h, n * (n - 1));
            ASSERT_EQ(h == n * (n - 1), a == w0);
        });
    }
}

TEST(Duality, InversionSumIdentity) {
    for (int n = 1; n <= 6; ++n) {
        for_each_asm(n, [n](const Asm& a) {
            ASSERT_EQ(inversion_number(a) + dual_inversion_number(a) - minus_count(a), n * (n - 1) / 2);
            ASSERT_EQ(dual_inversion_number(a), inversion_number(dual(a)));
        });
    }
}

}  // namespace
}  // namespace asmlat
