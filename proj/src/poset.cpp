#include "asmlat/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace asmlat {

const char* to_string(PosetOrdering o) {
    switch (o) {
        case PosetOrdering::Less: return "Less";
        case PosetOrdering::Greater: return "Greater";
        case PosetOrdering::Equal: return "Equal";
        case PosetOrdering::Incomparable: return "Incomparable";
    }
    return "?";
}

namespace {

void require_same_size(const Asm& a, const Asm& b) {
    if (a.size() != b.size()) {
        throw AsmError(ErrorKind::SizeMismatch,
                       "sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

Block block_at(const Asm& a, int r, int s) {
    return Block{{{a.at(r, s), a.at(r, s + 1)}, {a.at(r + 1, s), a.at(r + 1, s + 1)}}};
}

std::size_t flat_index(int n, int i, int j) {
    return static_cast<std::size_t>((i - 1) * n + (j - 1));
}

// Adds sign * kExchangePattern at (r, s) and returns the result if it is an ASM.
std::optional<Asm> exchange(const Asm& a, int r, int s, int sign) {
    const int n = a.size();
    std::vector<Entry> e(a.entries().begin(), a.entries().end());
    for (int di = 0; di < 2; ++di) {
        for (int dj = 0; dj < 2; ++dj) {
            auto& cell = e[flat_index(n, r + di, s + dj)];
            cell = static_cast<Entry>(cell + sign * kExchangePattern[di][dj]);
        }
    }
    if (!satisfies_asm_conditions(n, e)) {
        return std::nullopt;
    }
    return Asm::from_trusted(n, std::move(e));
}

Asm combine_corner_sums(const Asm& a, const Asm& b, bool take_min) {
    require_same_size(a, b);
    const auto ca = corner_sum(a);
    const auto cb = corner_sum(b);
    std::vector<int> out(ca.sums().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = take_min ? std::min(ca.sums()[k], cb.sums()[k]) : std::max(ca.sums()[k], cb.sums()[k]);
    }
    try {
        return from_corner_sum(CornerSumMatrix(a.size(), std::move(out)));
    } catch (const AsmError& e) {
        throw std::logic_error(std::string("lattice operation left the ASM lattice: ") + e.what());
    }
}

}  // namespace

PosetOrdering compare(const Asm& a, const Asm& b) {
    require_same_size(a, b);
    const auto ca = corner_sum(a);
    const auto cb = corner_sum(b);
    bool a_above = false;  // some corner sum of A exceeds B's
    bool b_above = false;
    for (std::size_t k = 0; k < ca.sums().size(); ++k) {
        a_above |= ca.sums()[k] > cb.sums()[k];
        b_above |= ca.sums()[k] < cb.sums()[k];
        if (a_above && b_above) {
            return PosetOrdering::Incomparable;
        }
    }
    if (a_above) {
        return PosetOrdering::Less;
    }
    return b_above ? PosetOrdering::Greater : PosetOrdering::Equal;
}

std::optional<CoverEdge> try_cover(const Asm& a, const Asm& b) {
    require_same_size(a, b);
    const int n = a.size();
    int first_i = 0;
    int first_j = 0;
    int changed = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (a.at(i, j) != b.at(i, j)) {
                if (changed++ == 0) {
                    first_i = i;
                    first_j = j;
                }
            }
        }
    }
    // The first difference in row-major order is the top-left of the block.
    if (changed != 4 || first_i == n || first_j == n) {
        return std::nullopt;
    }
    const int r = first_i;
    const int s = first_j;
    const Block lower = block_at(a, r, s);
    const Block upper = block_at(b, r, s);
    for (int di = 0; di < 2; ++di) {
        for (int dj = 0; dj < 2; ++dj) {
            if (upper[di][dj] - lower[di][dj] != kExchangePattern[di][dj]) {
                return std::nullopt;
            }
        }
    }
    const auto& kind = classify_cover_type(lower, upper);
    return CoverEdge{a, b, r, s, kind.type, kind.deltas};
}

std::vector<CoverEdge> covers_up(const Asm& a) {
    std::vector<CoverEdge> out;
    for (int r = 1; r < a.size(); ++r) {
        for (int s = 1; s < a.size(); ++s) {
            auto kind = find_cover_kind(block_at(a, r, s));
            if (!kind) {
                continue;
            }
            if (auto b = exchange(a, r, s, +1)) {
                out.push_back(CoverEdge{a, std::move(*b), r, s, kind->type, kind->deltas});
            }
        }
    }
    return out;
}

std::vector<CoverEdge> covers_down(const Asm& b) {
    std::vector<CoverEdge> out;
    for (int r = 1; r < b.size(); ++r) {
        for (int s = 1; s < b.size(); ++s) {
            Block lower = block_at(b, r, s);
            for (int di = 0; di < 2; ++di) {
                for (int dj = 0; dj < 2; ++dj) {
                    lower[di][dj] -= kExchangePattern[di][dj];
                }
            }
            auto kind = find_cover_kind(lower);
            if (!kind) {
                continue;
            }
            if (auto a = exchange(b, r, s, -1)) {
                out.push_back(CoverEdge{std::move(*a), b, r, s, kind->type, kind->deltas});
            }
        }
    }
    return out;
}

Asm join(const Asm& a, const Asm& b) {
    return combine_corner_sums(a, b, /*take_min=*/true);
}

Asm meet(const Asm& a, const Asm& b) {
    return combine_corner_sums(a, b, /*take_min=*/false);
}

bool is_bigrassmannian(const Permutation& w) {
    auto descents = [](const Permutation& p) {
        int count = 0;
        for (int i = 1; i < p.size(); ++i) {
            count += p(i) > p(i + 1) ? 1 : 0;
        }
        return count;
    };
    return descents(w) == 1 && descents(w.inverse()) == 1;
}

std::vector<Permutation> enumerate_bigrassmannians(int n) {
    std::vector<Permutation> out;
    std::vector<int> images = Permutation::identity(n).images();
    do {
        auto w = Permutation::from_images(images);
        if (is_bigrassmannian(w)) {
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::int64_t beta_poset_oracle(const Asm& b, const std::vector<Asm>& bigrassmannians) {
    return std::count_if(bigrassmannians.begin(), bigrassmannians.end(),
                         [&](const Asm& v) { return less_or_equal(v, b); });
}

std::int64_t beta_poset_oracle(const Asm& b) {
    std::vector<Asm> bg;
    for (const auto& w : enumerate_bigrassmannians(b.size())) {
        bg.push_back(from_permutation(w));
    }
    return beta_poset_oracle(b, bg);
}

bool is_join_irreducible(const Asm& a) {
    return covers_down(a).size() == 1;
}

std::int64_t rank_by_chain(const Asm& a) {
    const Asm bottom = identity(a.size());
    Asm current = a;
    std::int64_t steps = 0;
    while (current != bottom) {
        auto below = covers_down(current);
        if (below.empty()) {
            throw std::logic_error("non-identity ASM with no lower cover: " + flat_string(current));
        }
        current = std::move(below.front().lower);
        ++steps;
    }
    return steps;
}

}  // namespace asmlat
