#pragma once

// Sparse polynomials with exact big-integer coefficients.
//
// Exponents of the first variable are kept in half-units (the stored key is
// twice the exponent) so that lambda^{3/2} is representable exactly.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace asmlat {

enum class Variable { Lambda, Q };

/// Display symbol: "λ" or "q".
const char* symbol(Variable v);
/// ASCII name used in JSON: "lambda" or "q".
const char* json_name(Variable v);

class HalfIntPolynomial {
public:
    using Terms = std::map<std::int64_t, mpz_class>;

    explicit HalfIntPolynomial(Variable var = Variable::Lambda) : var_(var) {}

    static HalfIntPolynomial constant(const mpz_class& c, Variable var = Variable::Lambda);
    /// coeff * var^(half_units / 2)
    static HalfIntPolynomial monomial(std::int64_t half_units, const mpz_class& coeff,
                                      Variable var = Variable::Lambda);

    Variable variable() const noexcept { return var_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(std::int64_t half_units, const mpz_class& coeff);
    /// Coefficient of var^(half_units / 2); zero when absent.
    mpz_class coefficient(std::int64_t half_units) const;

    /// Highest / lowest exponent in half-units; nullopt for the zero polynomial.
    std::optional<std::int64_t> top_half_units() const;
    std::optional<std::int64_t> bottom_half_units() const;

    /// Leading coefficient is 1.
    bool is_monic() const;
    /// Coefficients read the same from both ends of [bottom, top].
    bool is_palindromic() const;
    mpz_class evaluate_at_one() const;

    HalfIntPolynomial& operator+=(const HalfIntPolynomial& other);
    friend HalfIntPolynomial operator+(HalfIntPolynomial a, const HalfIntPolynomial& b) { return a += b; }
    friend HalfIntPolynomial operator*(const HalfIntPolynomial& a, const HalfIntPolynomial& b);
    friend bool operator==(const HalfIntPolynomial& a, const HalfIntPolynomial& b) {
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }

    /// Ascending exponents: "1 + 2*λ + λ^3/2 + 3*λ^2", "1 - q - q^2 + q^3".
    std::string to_string() const;

private:
    Variable var_;
    Terms terms_;
};

/// Polynomial in lambda (half-unit exponents) and q (integer exponents).
class BivariatePolynomial {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;  // (2 * lambda exponent, q exponent)
    using Terms = std::map<Key, mpz_class>;

    const Terms& terms() const noexcept { return terms_; }
    void add_term(std::int64_t lambda_half_units, std::int64_t q_exponent, const mpz_class& coeff);
    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

    mpz_class evaluate_at_one() const;
    /// Substitutes lambda = -1. Requires integer lambda exponents.
    HalfIntPolynomial at_lambda_minus_one() const;
    /// Substitutes q = 1, leaving a polynomial in lambda.
    HalfIntPolynomial at_q_one() const;

    /// "1 + λ*q + 2*λ^2*q^3"
    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace asmlat
