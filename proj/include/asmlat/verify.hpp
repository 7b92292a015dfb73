#pragma once

// One-shot self check: every structural property of the ASM lattice that the
// library relies on, evaluated exhaustively for sizes 1..n_max.

#include <cstdint>
#include <string>
#include <vector>

#include "asmlat/enumeration.hpp"

namespace asmlat {

struct SuiteResult {
    std::string name;
    int top_size = 0;           // largest size actually checked
    std::uint64_t passed = 0;   // at top_size
    std::uint64_t total = 0;
    std::uint64_t passed_all = 0;  // over every size checked
    std::uint64_t total_all = 0;
    std::string first_failure;  // empty when ok

    bool ok() const { return passed_all == total_all; }
};

struct VerifyReport {
    int n_max = 0;
    std::vector<SuiteResult> suites;

    bool all_passed() const;
    /// One line per suite, then a summary line.
    std::string to_string() const;
};

/// Throws TooLarge when n_max exceeds the guard. Suites whose cost grows
/// with pairs or triples of ASMs stop at a fixed smaller size and say so.
VerifyReport verify(int n_max, std::uint64_t guard = kDefaultGuard);

}  // namespace asmlat
