#pragma once

// Inversion statistics of an ASM: I, I*, N, H and the rank beta.
//
// Half-integers (H) are carried exactly as counts of halves, and the local
// contributions H_pq as counts of quarters. Nothing here uses floating point.

#include <cstdint>
#include <string>
#include <vector>

#include "asmlat/asm.hpp"

namespace asmlat {

/// Exact rational with a fixed denominator: value = units / Denominator.
template <int Denominator>
struct Fraction {
    std::int64_t units = 0;

    static constexpr Fraction from_integer(std::int64_t v) { return {v * Denominator}; }

    friend constexpr Fraction operator+(Fraction a, Fraction b) { return {a.units + b.units}; }
    friend constexpr Fraction operator-(Fraction a, Fraction b) { return {a.units - b.units}; }
    friend constexpr bool operator==(Fraction, Fraction) = default;
    friend constexpr auto operator<=>(Fraction, Fraction) = default;

    /// "7/2", "4", "-1/4"; reduced.
    std::string to_string() const;
};

using HalfUnits = Fraction<2>;
using QuarterUnits = Fraction<4>;

extern template struct Fraction<2>;
extern template struct Fraction<4>;

/// One quadruple (i, j, k, l) with i < j, k < l and a_jk * a_il != 0.
struct Inversion {
    int i, j, k, l;
    int sign;  // a_jk * a_il
    int weight() const noexcept { return l - k; }

    friend bool operator==(const Inversion&, const Inversion&) = default;
};

struct StatRecord {
    std::int64_t inv = 0;       // I
    std::int64_t dual_inv = 0;  // I*
    std::int64_t minus = 0;     // N
    HalfUnits weak{};           // H
    std::int64_t beta = 0;

    friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

/// Nonzero inversions in lexicographic (i, j, k, l) order.
std::vector<Inversion> inversion_list(const Asm& a);

/// I(A) = sum over i<j, k<l of a_jk * a_il.
std::int64_t inversion_number(const Asm& a);
/// I*(A) = sum over i<j, k<l of a_ik * a_jl.
std::int64_t dual_inversion_number(const Asm& a);

/// sum (l - k) a_jk a_il, evaluated term by term over nonzero pairs.
std::int64_t beta_weighted(const Asm& a);
/// sum (j - i) a_jk a_il, the transposed form of the same rank.
std::int64_t beta_row_weighted(const Asm& a);
/// sum (delta_ij - a_ij)(n - i + 1)(n - j + 1); O(n^2).
std::int64_t beta_corner(const Asm& a);
/// Default rank entry point.
inline std::int64_t beta(const Asm& a) { return beta_corner(a); }

/// H(A) = I(A) - N(A)/2.
HalfUnits weak_inversion(const Asm& a);

/// Local share H_pq(A) of the weak inversion number; sums to H(A) over all
/// (p, q). Throws IndexOutOfRange for p or q outside [1, n].
QuarterUnits local_weak_contribution(const Asm& a, int p, int q);

StatRecord stat_record(const Asm& a);

}  // namespace asmlat
