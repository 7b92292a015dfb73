#pragma once

// Order structure of the ASM lattice: A <= B iff corner_sum(A) >= corner_sum(B)
// entrywise. Identity is the bottom, the reverse permutation the top.

#include <cstdint>
#include <optional>
#include <vector>

#include "asmlat/asm.hpp"
#include "asmlat/cover_table.hpp"

namespace asmlat {

enum class PosetOrdering { Less, Greater, Equal, Incomparable };

const char* to_string(PosetOrdering o);

/// Throws SizeMismatch for different sizes.
PosetOrdering compare(const Asm& a, const Asm& b);
inline bool less_or_equal(const Asm& a, const Asm& b) {
    const auto o = compare(a, b);
    return o == PosetOrdering::Less || o == PosetOrdering::Equal;
}

struct CoverEdge {
    Asm lower;
    Asm upper;
    int r = 0;  // exchange block occupies rows r, r+1 and columns s, s+1
    int s = 0;
    int type = 0;
    CoverDeltas deltas;
};

/// The cover A <. B if B arises from A by one exchange block, else nullopt.
std::optional<CoverEdge> try_cover(const Asm& a, const Asm& b);

/// All covers above / below, sorted by (r, s).
std::vector<CoverEdge> covers_up(const Asm& a);
std::vector<CoverEdge> covers_down(const Asm& b);

/// Least upper bound: entrywise min of corner sums.
Asm join(const Asm& a, const Asm& b);
/// Greatest lower bound: entrywise max of corner sums.
Asm meet(const Asm& a, const Asm& b);

/// Exactly one descent of w and exactly one descent of w^-1.
bool is_bigrassmannian(const Permutation& w);
/// Bigrassmannian elements of S_n in lexicographic order.
std::vector<Permutation> enumerate_bigrassmannians(int n);

/// Number of bigrassmannian permutations weakly below B. This is the
/// definition of the rank; used to check the closed forms.
std::int64_t beta_poset_oracle(const Asm& b);
/// Same count, against a precomputed bigrassmannian list.
std::int64_t beta_poset_oracle(const Asm& b, const std::vector<Asm>& bigrassmannians);

/// True iff A covers exactly one element.
bool is_join_irreducible(const Asm& a);

/// Length of the chain found by stepping down covers until the identity.
std::int64_t rank_by_chain(const Asm& a);

}  // namespace asmlat
