#pragma once

// Exhaustive generation of all n x n ASMs and the generating polynomials
// built from it. Nothing here is sub-exponential: these are reference
// values obtained by brute force.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "asmlat/asm.hpp"
#include "asmlat/polynomial.hpp"

namespace asmlat {

inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

/// Guard from ASMLAT_GUARD when set to a positive integer, else the default.
std::uint64_t guard_from_environment();

/// prod_{i=0}^{n-1} (3i+1)! / (n+i)!
mpz_class count_formula(int n);

/// Throws TooLarge when count_formula(n) exceeds `guard`.
void check_guard(int n, std::uint64_t guard);

/// Visits every ASM of size n in ascending order (see Asm::operator<=>).
/// Does not consult any guard.
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);

/// Visits the ASMs whose first row has its 1 in column `first_one`, in
/// ascending order. The n branches partition the whole set.
void for_each_asm_in_branch(int n, int first_one, const std::function<void(const Asm&)>& visit);

std::vector<Asm> enumerate_asms(int n, std::uint64_t guard = kDefaultGuard);
std::uint64_t count_by_enumeration(int n, std::uint64_t guard = kDefaultGuard);

/// Visits S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
/// Throws TooLarge when n! exceeds `guard`.
void check_permutation_guard(int n, std::uint64_t guard);

enum class Stat { I, H, Beta };
enum class Domain { Asms, Permutations };

/// sum over the domain of lambda^{stat}; H exponents may be half-integers.
HalfIntPolynomial genfun_stat(int n, Stat stat, Domain domain = Domain::Asms,
                              std::uint64_t guard = kDefaultGuard);

enum class BivariatePair { PermIBeta, AsmIBeta, AsmHBeta };

/// sum of lambda^{I or H} q^{beta} over S_n or the ASMs.
BivariatePolynomial bivariate_genfun(int n, BivariatePair pair, std::uint64_t guard = kDefaultGuard);

struct SignedIdentityResult {
    bool equal = false;
    HalfIntPolynomial lhs{Variable::Q};  // sum_w (-1)^{I(w)} q^{beta(w)}
    HalfIntPolynomial rhs{Variable::Q};  // prod_{k=1}^{n-1} (1 - q^k)^{n-k}
};

SignedIdentityResult signed_identity_check(int n, std::uint64_t guard = kDefaultGuard);

/// prod_{k=1}^{n} (1 + lambda + ... + lambda^{k-1})
HalfIntPolynomial permutation_inversion_product(int n);

}  // namespace asmlat
