#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asmlat {

enum class ErrorKind {
    NotSquare,
    EntryOutOfRange,
    BadPartialSum,
    BadTotalSum,
    InvalidPermutation,
    NotAPermutation,
    InvalidCornerSums,
    SizeMismatch,
    NotAnExchangeBlock,
    IndexOutOfRange,
    TooLarge,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// 1-based matrix coordinate attached to an error, when one applies.
struct Position {
    int row = 0;
    int col = 0;
};

/// Every domain failure in the library is reported through this type. The
/// message is deterministic so it can be compared in golden tests.
class AsmError : public std::runtime_error {
public:
    AsmError(ErrorKind kind, const std::string& message,
             std::optional<Position> where = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    const std::optional<Position>& where() const noexcept { return where_; }

private:
    ErrorKind kind_;
    std::optional<Position> where_;
};

}  // namespace asmlat
