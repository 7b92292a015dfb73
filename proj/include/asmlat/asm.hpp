#pragma once

// Alternating sign matrices, permutations and corner-sum matrices.
//
// All public coordinates are 1-based: at(i, j) is the entry in row i,
// column j. Storage is row-major and 0-based internally.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "asmlat/errors.hpp"

namespace asmlat {

using Entry = std::int8_t;
using RawMatrix = std::vector<std::vector<int>>;

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    /// Throws InvalidPermutation unless `images` is a bijection on {1..n}.
    static Permutation from_images(std::vector<int> images);
    static Permutation identity(int n);
    /// The reverse permutation w0(i) = n - i + 1.
    static Permutation longest(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    /// Number of pairs i < j with w(i) > w(j).
    std::int64_t inversions() const;

    /// "3412" when n <= 9, otherwise "10,2,1,...".
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
    std::vector<int> images_;
};

/// An n x n alternating sign matrix. Instances are always valid: the only
/// ways to obtain one are `validate` and the transforms below, which
/// preserve the alternating-sign conditions.
class Asm {
public:
    /// Checks a raw square array. Violations are reported in a fixed order:
    /// shape, then entry range, then full row/column sums, then prefix sums;
    /// inside each phase the first offender in row-major order wins.
    static Asm validate(const RawMatrix& raw);

    /// Same checks as `validate` on a flat row-major buffer.
    static Asm validate(int n, std::span<const int> row_major);

    /// Wraps entries the caller has already proven valid (enumeration and
    /// cover moves). Checked only by assertions in debug builds.
    static Asm from_trusted(int n, std::vector<Entry> row_major);

    int size() const noexcept { return n_; }
    int at(int i, int j) const {
        return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
    }
    std::span<const Entry> entries() const noexcept { return entries_; }
    RawMatrix rows() const;

    friend bool operator==(const Asm&, const Asm&) = default;
    /// Size first, then lexicographic on row-major entries (-1 < 0 < 1).
    friend std::strong_ordering operator<=>(const Asm& a, const Asm& b);

private:
    Asm(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {}
    int n_;
    std::vector<Entry> entries_;
};

struct AsmHash {
    std::size_t operator()(const Asm& a) const noexcept;
};

/// Table of upper-left rectangle sums. at(i, j) accepts i or j == 0 and
/// returns 0 there, which keeps inclusion-exclusion formulas branch-free.
class CornerSumMatrix {
public:
    CornerSumMatrix(int n, std::vector<int> row_major);
    explicit CornerSumMatrix(const RawMatrix& raw);

    int size() const noexcept { return n_; }
    int at(int i, int j) const {
        if (i == 0 || j == 0) {
            return 0;
        }
        return sums_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
    }
    std::span<const int> sums() const noexcept { return sums_; }

    /// Monotone rows and columns with steps in {0,1}, and borders
    /// at(i,n) = i, at(n,j) = j.
    bool well_formed() const;

    friend bool operator==(const CornerSumMatrix&, const CornerSumMatrix&) = default;

private:
    int n_;
    std::vector<int> sums_;
};

Asm identity(int n);
Asm from_permutation(const Permutation& w);
/// Throws NotAPermutation when A contains a -1.
Permutation to_permutation(const Asm& a);
bool is_permutation_matrix(const Asm& a);

/// Non-throwing form of the alternating-sign check on a flat buffer.
bool satisfies_asm_conditions(int n, std::span<const Entry> row_major);

CornerSumMatrix corner_sum(const Asm& a);
/// Throws InvalidCornerSums when `c` is not well formed.
Asm from_corner_sum(const CornerSumMatrix& c);

Asm transpose(const Asm& a);
/// Rows read backwards (w0 * A).
Asm dual(const Asm& a);
/// Number of -1 entries.
int minus_count(const Asm& a);

/// Row-major flattened form "0,1,0/1,-1,1/0,1,0".
std::string flat_string(const Asm& a);

}  // namespace asmlat
