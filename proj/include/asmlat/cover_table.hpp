#pragma once

// The sixteen kinds of covering relation A <. B in the ASM lattice.
//
// A cover changes exactly one 2x2 block at rows r, r+1 and columns s, s+1
// by [[-1, 1], [1, -1]]. The kind is determined by the lower block alone;
// each kind fixes the change in I, N and H.

#include <array>
#include <optional>

namespace asmlat {

using Block = std::array<std::array<int, 2>, 2>;

inline constexpr Block kExchangePattern{{{-1, 1}, {1, -1}}};

/// Changes across a cover, stored as integers: dN2x is twice the change in
/// N/2 (i.e. the change in N) and dH2x is twice the change in H.
struct CoverDeltas {
    int dI = 0;
    int dN2x = 0;
    int dH2x = 0;

    friend constexpr bool operator==(CoverDeltas, CoverDeltas) = default;
};

struct CoverKind {
    int type;        // 1..16
    Block lower;     // block of A
    Block upper;     // block of B = lower + kExchangePattern
    CoverDeltas deltas;
    int dual_type;   // kind of (B*, A*)
};

/// Rows in table order; kCoverKinds[t - 1].type == t.
extern const std::array<CoverKind, 16> kCoverKinds;

const CoverKind& cover_kind(int type);

/// Looks up the kind for a lower block, or nullopt when no row matches.
std::optional<CoverKind> find_cover_kind(const Block& lower);

/// Throws NotAnExchangeBlock unless upper - lower == kExchangePattern and
/// `lower` is one of the sixteen tabulated blocks.
const CoverKind& classify_cover_type(const Block& lower, const Block& upper);

}  // namespace asmlat
