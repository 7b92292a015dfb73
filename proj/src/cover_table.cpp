#include "asmlat/cover_table.hpp"

#include <algorithm>

#include "asmlat/errors.hpp"

namespace asmlat {

namespace {

constexpr Block raise(const Block& b) {
    Block out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out[i][j] = b[i][j] + kExchangePattern[i][j];
        }
    }
    return out;
}

constexpr CoverKind row(int type, Block lower, int dI, int dN2x, int dH2x, int dual_type) {
    return CoverKind{type, lower, raise(lower), CoverDeltas{dI, dN2x, dH2x}, dual_type};
}

}  // namespace

// type, lower block, dI, dN (= 2 * d(N/2)), 2 * dH, dual type
const std::array<CoverKind, 16> kCoverKinds{{
    row(1, {{{1, 0}, {0, 1}}}, 1, 0, 2, 1),
    row(2, {{{1, -1}, {0, 1}}}, 0, -1, 1, 5),
    row(3, {{{1, 0}, {-1, 1}}}, 0, -1, 1, 9),
    row(4, {{{1, -1}, {-1, 1}}}, -1, -2, 0, 13),
    row(5, {{{1, 0}, {0, 0}}}, 1, 1, 1, 2),
    row(6, {{{1, -1}, {0, 0}}}, 0, 0, 0, 6),
    row(7, {{{1, 0}, {-1, 0}}}, 0, 0, 0, 10),
    row(8, {{{1, -1}, {-1, 0}}}, -1, -1, -1, 14),
    row(9, {{{0, 0}, {0, 1}}}, 1, 1, 1, 3),
    row(10, {{{0, -1}, {0, 1}}}, 0, 0, 0, 7),
    row(11, {{{0, 0}, {-1, 1}}}, 0, 0, 0, 11),
    row(12, {{{0, -1}, {-1, 1}}}, -1, -1, -1, 15),
    row(13, {{{0, 0}, {0, 0}}}, 1, 2, 0, 4),
    row(14, {{{0, -1}, {0, 0}}}, 0, 1, -1, 8),
    row(15, {{{0, 0}, {-1, 0}}}, 0, 1, -1, 12),
    row(16, {{{0, -1}, {-1, 0}}}, -1, 0, -2, 16),
}};

const CoverKind& cover_kind(int type) {
    if (type < 1 || type > 16) {
        throw AsmError(ErrorKind::IndexOutOfRange, "cover type " + std::to_string(type));
    }
    return kCoverKinds[static_cast<std::size_t>(type - 1)];
}

std::optional<CoverKind> find_cover_kind(const Block& lower) {
    auto it = std::find_if(kCoverKinds.begin(), kCoverKinds.end(),
                           [&](const CoverKind& k) { return k.lower == lower; });
    if (it == kCoverKinds.end()) {
        return std::nullopt;
    }
    return *it;
}

const CoverKind& classify_cover_type(const Block& lower, const Block& upper) {
    if (raise(lower) != upper) {
        throw AsmError(ErrorKind::NotAnExchangeBlock, "blocks do not differ by [[-1,1],[1,-1]]");
    }
    auto it = std::find_if(kCoverKinds.begin(), kCoverKinds.end(),
                           [&](const CoverKind& k) { return k.lower == lower; });
    if (it == kCoverKinds.end()) {
        throw AsmError(ErrorKind::NotAnExchangeBlock, "block entries leave {-1,0,1}");
    }
    return *it;
}

}  // namespace asmlat
