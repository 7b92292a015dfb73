#include "asmlat/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>

#include "asmlat/statistics.hpp"

namespace asmlat {

std::uint64_t guard_from_environment() {
    const char* raw = std::getenv("ASMLAT_GUARD");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultGuard;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) {
        return kDefaultGuard;
    }
    return v;
}

mpz_class count_formula(int n) {
    if (n < 1) {
        throw AsmError(ErrorKind::IndexOutOfRange, "size must be positive");
    }
    mpz_class numerator = 1;
    mpz_class denominator = 1;
    mpz_class f;
    for (int i = 0; i < n; ++i) {
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(3 * i + 1));
        numerator *= f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n + i));
        denominator *= f;
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return q;
}

void check_guard(int n, std::uint64_t guard) {
    const mpz_class count = count_formula(n);
    if (count > mpz_class(std::to_string(guard))) {
        throw AsmError(ErrorKind::TooLarge, "size " + std::to_string(n) + " has " + count.get_str() +
                                                " ASMs, above the guard of " + std::to_string(guard));
    }
}

namespace {

// Depth-first fill of the matrix cell by cell. Column prefix sums and the
// running row sum stay in {0, 1}; values are tried in ascending order so the
// output is sorted.
class Generator {
public:
    Generator(int n, const std::function<void(const Asm&)>& visit)
        : n_(n), visit_(visit), cells_(static_cast<std::size_t>(n * n), 0),
          column_(static_cast<std::size_t>(n), 0) {}

    void run_branch(int first_one) {
        std::fill(cells_.begin(), cells_.end(), Entry{0});
        std::fill(column_.begin(), column_.end(), 0);
        cells_[static_cast<std::size_t>(first_one - 1)] = 1;
        column_[static_cast<std::size_t>(first_one - 1)] = 1;
        if (n_ == 1) {
            emit();
            return;
        }
        place(1, 0, 0);
    }

private:
    void emit() { visit_(Asm::from_trusted(n_, cells_)); }

    void place(int row, int col, int row_sum) {
        if (col == n_) {
            if (row_sum != 1) {
                return;
            }
            if (row + 1 == n_) {
                emit();
            } else {
                place(row + 1, 0, 0);
            }
            return;
        }
        const auto idx = static_cast<std::size_t>(row * n_ + col);
        int& c = column_[static_cast<std::size_t>(col)];
        const bool last_row = row + 1 == n_;

        if (c == 1 && row_sum == 1 && !last_row) {
            cells_[idx] = -1;
            c = 0;
            place(row, col + 1, 0);
            c = 1;
        }
        if (!last_row || c == 1) {
            cells_[idx] = 0;
            place(row, col + 1, row_sum);
        }
        if (c == 0 && row_sum == 0) {
            cells_[idx] = 1;
            c = 1;
            place(row, col + 1, 1);
            c = 0;
        }
        cells_[idx] = 0;
    }

    int n_;
    const std::function<void(const Asm&)>& visit_;
    std::vector<Entry> cells_;
    std::vector<int> column_;
};

// Runs one worker per first-row branch and merges the per-branch tallies.
template <typename Key, typename KeyFn>
std::map<Key, std::uint64_t> tally_asms(int n, KeyFn key_of) {
    std::vector<std::map<Key, std::uint64_t>> partial(static_cast<std::size_t>(n));
    {
        std::vector<std::jthread> workers;
        for (int first = 1; first <= n; ++first) {
            workers.emplace_back([&, first] {
                auto& tally = partial[static_cast<std::size_t>(first - 1)];
                for_each_asm_in_branch(n, first, [&](const Asm& a) { ++tally[key_of(a)]; });
            });
        }
    }
    std::map<Key, std::uint64_t> merged;
    for (const auto& p : partial) {
        for (const auto& [k, v] : p) {
            merged[k] += v;
        }
    }
    return merged;
}

template <typename Key, typename KeyFn>
std::map<Key, std::uint64_t> tally_permutations(int n, KeyFn key_of) {
    std::map<Key, std::uint64_t> tally;
    for_each_permutation(n, [&](const Permutation& w) { ++tally[key_of(from_permutation(w))]; });
    return tally;
}

std::int64_t stat_half_units(const Asm& a, Stat stat) {
    switch (stat) {
        case Stat::I: return 2 * inversion_number(a);
        case Stat::H: return weak_inversion(a).units;
        case Stat::Beta: return 2 * beta(a);
    }
    return 0;
}

mpz_class to_mpz(std::uint64_t v) {
    return mpz_class(std::to_string(v));
}

}  // namespace

void for_each_asm_in_branch(int n, int first_one, const std::function<void(const Asm&)>& visit) {
    if (n < 1 || first_one < 1 || first_one > n) {
        throw AsmError(ErrorKind::IndexOutOfRange, "branch " + std::to_string(first_one) + " for size " +
                                                       std::to_string(n));
    }
    Generator(n, visit).run_branch(first_one);
}

void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
    if (n < 1) {
        throw AsmError(ErrorKind::IndexOutOfRange, "size must be positive");
    }
    // Row 1 is a unit vector; e_n sorts first.
    for (int first = n; first >= 1; --first) {
        for_each_asm_in_branch(n, first, visit);
    }
}

std::vector<Asm> enumerate_asms(int n, std::uint64_t guard) {
    check_guard(n, guard);
    std::vector<Asm> out;
    out.reserve(count_formula(n).get_ui());
    for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
    return out;
}

std::uint64_t count_by_enumeration(int n, std::uint64_t guard) {
    check_guard(n, guard);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    {
        std::vector<std::jthread> workers;
        for (int first = 1; first <= n; ++first) {
            workers.emplace_back([&, first] {
                for_each_asm_in_branch(n, first, [&](const Asm&) { ++counts[static_cast<std::size_t>(first - 1)]; });
            });
        }
    }
    std::uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    return total;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
    std::vector<int> images = Permutation::identity(n).images();
    do {
        visit(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

void check_permutation_guard(int n, std::uint64_t guard) {
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k) {
        factorial *= static_cast<std::uint64_t>(k);
        if (factorial > guard) {
            throw AsmError(ErrorKind::TooLarge, "size " + std::to_string(n) +
                                                    " has more permutations than the guard of " +
                                                    std::to_string(guard));
        }
    }
}

HalfIntPolynomial genfun_stat(int n, Stat stat, Domain domain, std::uint64_t guard) {
    auto key = [stat](const Asm& a) { return stat_half_units(a, stat); };
    std::map<std::int64_t, std::uint64_t> tally;
    if (domain == Domain::Asms) {
        check_guard(n, guard);
        tally = tally_asms<std::int64_t>(n, key);
    } else {
        check_permutation_guard(n, guard);
        tally = tally_permutations<std::int64_t>(n, key);
    }
    HalfIntPolynomial out(Variable::Lambda);
    for (const auto& [e, c] : tally) {
        out.add_term(e, to_mpz(c));
    }
    return out;
}

BivariatePolynomial bivariate_genfun(int n, BivariatePair pair, std::uint64_t guard) {
    using Key = std::pair<std::int64_t, std::int64_t>;
    std::map<Key, std::uint64_t> tally;
    switch (pair) {
        case BivariatePair::PermIBeta:
            check_permutation_guard(n, guard);
            tally = tally_permutations<Key>(n, [](const Asm& a) { return Key{2 * inversion_number(a), beta(a)}; });
            break;
        case BivariatePair::AsmIBeta:
            check_guard(n, guard);
            tally = tally_asms<Key>(n, [](const Asm& a) { return Key{2 * inversion_number(a), beta(a)}; });
            break;
        case BivariatePair::AsmHBeta:
            check_guard(n, guard);
            tally = tally_asms<Key>(n, [](const Asm& a) { return Key{weak_inversion(a).units, beta(a)}; });
            break;
    }
    BivariatePolynomial out;
    for (const auto& [k, c] : tally) {
        out.add_term(k.first, k.second, to_mpz(c));
    }
    return out;
}

SignedIdentityResult signed_identity_check(int n, std::uint64_t guard) {
    SignedIdentityResult result;
    result.lhs = bivariate_genfun(n, BivariatePair::PermIBeta, guard).at_lambda_minus_one();

    result.rhs = HalfIntPolynomial::constant(1, Variable::Q);
    for (int k = 1; k <= n - 1; ++k) {
        auto factor = HalfIntPolynomial::constant(1, Variable::Q);
        factor.add_term(2 * k, -1);
        for (int m = 0; m < n - k; ++m) {
            result.rhs = result.rhs * factor;
        }
    }
    result.equal = result.lhs == result.rhs;
    return result;
}

HalfIntPolynomial permutation_inversion_product(int n) {
    auto product = HalfIntPolynomial::constant(1, Variable::Lambda);
    for (int k = 1; k <= n; ++k) {
        HalfIntPolynomial factor(Variable::Lambda);
        for (int e = 0; e < k; ++e) {
            factor.add_term(2 * e, 1);
        }
        product = product * factor;
    }
    return product;
}

}  // namespace asmlat
