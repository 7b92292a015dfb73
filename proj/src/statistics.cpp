#include "asmlat/statistics.hpp"

#include <numeric>

namespace asmlat {

template <int Denominator>
std::string Fraction<Denominator>::to_string() const {
    const std::int64_t g = std::gcd(units, static_cast<std::int64_t>(Denominator));
    const std::int64_t num = units / g;
    const std::int64_t den = Denominator / g;
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

template struct Fraction<2>;
template struct Fraction<4>;

namespace {

struct Nonzero {
    int row, col, value;
};

std::vector<Nonzero> nonzeros(const Asm& a) {
    std::vector<Nonzero> out;
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = 1; j <= a.size(); ++j) {
            if (a.at(i, j) != 0) {
                out.push_back({i, j, a.at(i, j)});
            }
        }
    }
    return out;
}

// Sums f(upper, lower) over pairs of nonzero entries where `upper` = (i, l)
// sits strictly above and strictly right of `lower` = (j, k).
template <typename F>
std::int64_t sum_over_inversion_pairs(const Asm& a, F&& f) {
    const auto nz = nonzeros(a);
    std::int64_t total = 0;
    for (const auto& upper : nz) {
        for (const auto& lower : nz) {
            if (upper.row < lower.row && lower.col < upper.col) {
                total += f(upper, lower);
            }
        }
    }
    return total;
}

}  // namespace

std::vector<Inversion> inversion_list(const Asm& a) {
    const int n = a.size();
    std::vector<Inversion> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
                if (a.at(j, k) == 0) {
                    continue;
                }
                for (int l = k + 1; l <= n; ++l) {
                    if (a.at(i, l) != 0) {
                        out.push_back({i, j, k, l, a.at(j, k) * a.at(i, l)});
                    }
                }
            }
        }
    }
    return out;
}

std::int64_t inversion_number(const Asm& a) {
    // For each (j, k) the partner entries a_il (i < j, l > k) fill the
    // rectangle rows 1..j-1, columns k+1..n, whose sum is (j-1) - C(j-1, k).
    const auto c = corner_sum(a);
    std::int64_t total = 0;
    for (int j = 2; j <= a.size(); ++j) {
        for (int k = 1; k <= a.size(); ++k) {
            if (const int v = a.at(j, k); v != 0) {
                total += v * ((j - 1) - c.at(j - 1, k));
            }
        }
    }
    return total;
}

std::int64_t dual_inversion_number(const Asm& a) {
    // Partners a_ik (i < j, k < l) of a_jl fill rows 1..j-1, columns 1..l-1.
    const auto c = corner_sum(a);
    std::int64_t total = 0;
    for (int j = 2; j <= a.size(); ++j) {
        for (int l = 2; l <= a.size(); ++l) {
            if (const int v = a.at(j, l); v != 0) {
                total += v * c.at(j - 1, l - 1);
            }
        }
    }
    return total;
}

std::int64_t beta_weighted(const Asm& a) {
    return sum_over_inversion_pairs(a, [](const Nonzero& upper, const Nonzero& lower) {
        return static_cast<std::int64_t>(upper.col - lower.col) * upper.value * lower.value;
    });
}

std::int64_t beta_row_weighted(const Asm& a) {
    return sum_over_inversion_pairs(a, [](const Nonzero& upper, const Nonzero& lower) {
        return static_cast<std::int64_t>(lower.row - upper.row) * upper.value * lower.value;
    });
}

std::int64_t beta_corner(const Asm& a) {
    const std::int64_t n = a.size();
    std::int64_t total = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = 1; j <= n; ++j) {
            const std::int64_t delta = (i == j) ? 1 : 0;
            total += (delta - a.at(static_cast<int>(i), static_cast<int>(j))) * (n - i + 1) * (n - j + 1);
        }
    }
    return total;
}

HalfUnits weak_inversion(const Asm& a) {
    return {2 * inversion_number(a) - minus_count(a)};
}

QuarterUnits local_weak_contribution(const Asm& a, int p, int q) {
    const int n = a.size();
    if (p < 1 || p > n || q < 1 || q > n) {
        throw AsmError(ErrorKind::IndexOutOfRange,
                       "position (" + std::to_string(p) + "," + std::to_string(q) + ") outside 1.." +
                           std::to_string(n));
    }
    const int apq = a.at(p, q);
    if (apq == 0) {
        return {0};
    }
    std::int64_t below_left = 0;  // r > p, s < q
    for (int r = p + 1; r <= n; ++r) {
        for (int s = 1; s < q; ++s) {
            below_left += a.at(r, s);
        }
    }
    std::int64_t above_right = 0;  // r < p, s > q
    for (int r = 1; r < p; ++r) {
        for (int s = q + 1; s <= n; ++s) {
            above_right += a.at(r, s);
        }
    }
    std::int64_t column_above = 0;
    for (int r = 1; r < p; ++r) {
        column_above += a.at(r, q);
    }
    std::int64_t row_right = 0;
    for (int s = q + 1; s <= n; ++s) {
        row_right += a.at(p, s);
    }
    // a_pq * (1/2 (below_left + above_right) + 1/4 (column_above + row_right))
    return {apq * (2 * (below_left + above_right) + column_above + row_right)};
}

StatRecord stat_record(const Asm& a) {
    StatRecord s;
    s.inv = inversion_number(a);
    s.dual_inv = dual_inversion_number(a);
    s.minus = minus_count(a);
    s.weak = HalfUnits{2 * s.inv - s.minus};
    s.beta = beta_corner(a);
    return s;
}

}  // namespace asmlat
