#include "asmlat/asm.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace asmlat {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
        case ErrorKind::BadPartialSum: return "BadPartialSum";
        case ErrorKind::BadTotalSum: return "BadTotalSum";
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::NotAPermutation: return "NotAPermutation";
        case ErrorKind::InvalidCornerSums: return "InvalidCornerSums";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NotAnExchangeBlock: return "NotAnExchangeBlock";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

AsmError::AsmError(ErrorKind kind, const std::string& message, std::optional<Position> where)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), where_(where) {}

namespace {

std::string at_text(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

[[noreturn]] void fail_at(ErrorKind kind, int i, int j, const std::string& what) {
    throw AsmError(kind, what + " at " + at_text(i, j), Position{i, j});
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::from_images(std::vector<int> images) {
    const auto n = images.size();
    if (n == 0) {
        throw AsmError(ErrorKind::InvalidPermutation, "empty permutation");
    }
    std::vector<bool> seen(n + 1, false);
    for (int v : images) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
            throw AsmError(ErrorKind::InvalidPermutation,
                           "image " + std::to_string(v) + " is out of range or repeated");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        images[static_cast<std::size_t>(i)] = i + 1;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::longest(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        images[static_cast<std::size_t>(i)] = n - i;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

std::int64_t Permutation::inversions() const {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) {
            count += images_[i] > images_[j] ? 1 : 0;
        }
    }
    return count;
}

std::string Permutation::to_string() const {
    std::string out;
    const bool compact = images_.size() <= 9;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!compact && i > 0) {
            out += ',';
        }
        out += std::to_string(images_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Asm

Asm Asm::validate(const RawMatrix& raw) {
    const int n = static_cast<int>(raw.size());
    if (n == 0) {
        throw AsmError(ErrorKind::NotSquare, "matrix is empty");
    }
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        const auto& row = raw[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != n) {
            throw AsmError(ErrorKind::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                                     std::to_string(row.size()) + " entries, expected " +
                                                     std::to_string(n));
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return validate(n, flat);
}

Asm Asm::validate(int n, std::span<const int> m) {
    if (n <= 0 || m.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw AsmError(ErrorKind::NotSquare, "expected a non-empty square matrix");
    }
    auto cell = [&](int i, int j) { return m[static_cast<std::size_t>((i - 1) * n + (j - 1))]; };

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (cell(i, j) < -1 || cell(i, j) > 1) {
                fail_at(ErrorKind::EntryOutOfRange, i, j, "entry " + std::to_string(cell(i, j)));
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        int total = 0;
        for (int j = 1; j <= n; ++j) {
            total += cell(i, j);
        }
        if (total != 1) {
            throw AsmError(ErrorKind::BadTotalSum,
                           "row " + std::to_string(i) + " sums to " + std::to_string(total),
                           Position{i, n});
        }
    }
    for (int j = 1; j <= n; ++j) {
        int total = 0;
        for (int i = 1; i <= n; ++i) {
            total += cell(i, j);
        }
        if (total != 1) {
            throw AsmError(ErrorKind::BadTotalSum,
                           "column " + std::to_string(j) + " sums to " + std::to_string(total),
                           Position{n, j});
        }
    }
    std::vector<int> column_prefix(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int row_prefix = 0;
        for (int j = 1; j <= n; ++j) {
            row_prefix += cell(i, j);
            int& col = column_prefix[static_cast<std::size_t>(j - 1)];
            col += cell(i, j);
            if (row_prefix < 0 || row_prefix > 1) {
                fail_at(ErrorKind::BadPartialSum, i, j, "row prefix sum " + std::to_string(row_prefix));
            }
            if (col < 0 || col > 1) {
                fail_at(ErrorKind::BadPartialSum, i, j, "column prefix sum " + std::to_string(col));
            }
        }
    }
    std::vector<Entry> entries(m.size());
    std::transform(m.begin(), m.end(), entries.begin(), [](int v) { return static_cast<Entry>(v); });
    return Asm(n, std::move(entries));
}

Asm Asm::from_trusted(int n, std::vector<Entry> row_major) {
    assert(n > 0 && row_major.size() == static_cast<std::size_t>(n * n));
#ifndef NDEBUG
    std::vector<int> widened(row_major.begin(), row_major.end());
    (void)validate(n, widened);
#endif
    return Asm(n, std::move(row_major));
}

RawMatrix Asm::rows() const {
    RawMatrix out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = at(i, j);
        }
    }
    return out;
}

std::strong_ordering operator<=>(const Asm& a, const Asm& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                  b.entries_.begin(), b.entries_.end());
}

std::size_t AsmHash::operator()(const Asm& a) const noexcept {
    // FNV-1a over the entries.
    std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(a.size());
    for (Entry e : a.entries()) {
        h ^= static_cast<std::uint8_t>(e);
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------
// CornerSumMatrix

CornerSumMatrix::CornerSumMatrix(int n, std::vector<int> row_major) : n_(n), sums_(std::move(row_major)) {
    if (n <= 0 || sums_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw AsmError(ErrorKind::NotSquare, "corner-sum table must be a non-empty square");
    }
}

CornerSumMatrix::CornerSumMatrix(const RawMatrix& raw) : n_(static_cast<int>(raw.size())) {
    if (n_ == 0) {
        throw AsmError(ErrorKind::NotSquare, "corner-sum table is empty");
    }
    for (const auto& row : raw) {
        if (static_cast<int>(row.size()) != n_) {
            throw AsmError(ErrorKind::NotSquare, "corner-sum table is not square");
        }
        sums_.insert(sums_.end(), row.begin(), row.end());
    }
}

bool CornerSumMatrix::well_formed() const {
    for (int i = 1; i <= n_; ++i) {
        if (at(i, n_) != i || at(n_, i) != i) {
            return false;
        }
        for (int j = 1; j <= n_; ++j) {
            const int row_step = at(i, j) - at(i, j - 1);
            const int col_step = at(i, j) - at(i - 1, j);
            if (row_step < 0 || row_step > 1 || col_step < 0 || col_step > 1) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Transforms

Asm identity(int n) {
    if (n <= 0) {
        throw AsmError(ErrorKind::NotSquare, "size must be positive");
    }
    std::vector<Entry> e(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) {
        e[static_cast<std::size_t>(i * n + i)] = 1;
    }
    return Asm::from_trusted(n, std::move(e));
}

Asm from_permutation(const Permutation& w) {
    const int n = w.size();
    std::vector<Entry> e(static_cast<std::size_t>(n * n), 0);
    for (int i = 1; i <= n; ++i) {
        e[static_cast<std::size_t>((i - 1) * n + (w(i) - 1))] = 1;
    }
    return Asm::from_trusted(n, std::move(e));
}

bool is_permutation_matrix(const Asm& a) {
    return std::none_of(a.entries().begin(), a.entries().end(), [](Entry v) { return v < 0; });
}

bool satisfies_asm_conditions(int n, std::span<const Entry> m) {
    if (n <= 0 || m.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        return false;
    }
    std::vector<int> column_prefix(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int row_prefix = 0;
        for (int j = 0; j < n; ++j) {
            const int v = m[static_cast<std::size_t>(i * n + j)];
            int& col = column_prefix[static_cast<std::size_t>(j)];
            row_prefix += v;
            col += v;
            if (v < -1 || v > 1 || row_prefix < 0 || row_prefix > 1 || col < 0 || col > 1) {
                return false;
            }
        }
        if (row_prefix != 1) {
            return false;
        }
    }
    return std::all_of(column_prefix.begin(), column_prefix.end(), [](int c) { return c == 1; });
}

Permutation to_permutation(const Asm& a) {
    if (!is_permutation_matrix(a)) {
        throw AsmError(ErrorKind::NotAPermutation,
                       "matrix has " + std::to_string(minus_count(a)) + " entries equal to -1");
    }
    const int n = a.size();
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (a.at(i, j) == 1) {
                images[static_cast<std::size_t>(i - 1)] = j;
            }
        }
    }
    return Permutation::from_images(std::move(images));
}

CornerSumMatrix corner_sum(const Asm& a) {
    const int n = a.size();
    std::vector<int> s(static_cast<std::size_t>(n * n), 0);
    auto get = [&](int i, int j) { return (i == 0 || j == 0) ? 0 : s[static_cast<std::size_t>((i - 1) * n + j - 1)]; };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            s[static_cast<std::size_t>((i - 1) * n + j - 1)] =
                a.at(i, j) + get(i - 1, j) + get(i, j - 1) - get(i - 1, j - 1);
        }
    }
    return CornerSumMatrix(n, std::move(s));
}

Asm from_corner_sum(const CornerSumMatrix& c) {
    if (!c.well_formed()) {
        throw AsmError(ErrorKind::InvalidCornerSums,
                       "table is not monotone with unit steps and borders i, j");
    }
    const int n = c.size();
    std::vector<int> e(static_cast<std::size_t>(n * n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            e[static_cast<std::size_t>((i - 1) * n + j - 1)] =
                c.at(i, j) - c.at(i - 1, j) - c.at(i, j - 1) + c.at(i - 1, j - 1);
        }
    }
    try {
        return Asm::validate(n, e);
    } catch (const AsmError& err) {
        throw AsmError(ErrorKind::InvalidCornerSums, std::string("inverse is not an ASM: ") + err.what());
    }
}

Asm transpose(const Asm& a) {
    const int n = a.size();
    std::vector<Entry> e(static_cast<std::size_t>(n * n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            e[static_cast<std::size_t>((j - 1) * n + i - 1)] = static_cast<Entry>(a.at(i, j));
        }
    }
    return Asm::from_trusted(n, std::move(e));
}

Asm dual(const Asm& a) {
    const int n = a.size();
    std::vector<Entry> e(static_cast<std::size_t>(n * n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            e[static_cast<std::size_t>((i - 1) * n + j - 1)] = static_cast<Entry>(a.at(n + 1 - i, j));
        }
    }
    return Asm::from_trusted(n, std::move(e));
}

int minus_count(const Asm& a) {
    return static_cast<int>(std::count(a.entries().begin(), a.entries().end(), Entry{-1}));
}

std::string flat_string(const Asm& a) {
    std::ostringstream os;
    for (int i = 1; i <= a.size(); ++i) {
        if (i > 1) {
            os << '/';
        }
        for (int j = 1; j <= a.size(); ++j) {
            if (j > 1) {
                os << ',';
            }
            os << a.at(i, j);
        }
    }
    return os.str();
}

}  // namespace asmlat
