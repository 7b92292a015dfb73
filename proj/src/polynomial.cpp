#include "asmlat/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace asmlat {

const char* symbol(Variable v) {
    return v == Variable::Lambda ? "λ" : "q";
}

const char* json_name(Variable v) {
    return v == Variable::Lambda ? "lambda" : "q";
}

namespace {

// "" for exponent 0, "λ", "λ^3", "λ^3/2".
std::string power(const char* var, std::int64_t half_units) {
    if (half_units == 0) {
        return "";
    }
    if (half_units == 2) {
        return var;
    }
    if (half_units % 2 == 0) {
        return std::string(var) + "^" + std::to_string(half_units / 2);
    }
    return std::string(var) + "^" + std::to_string(half_units) + "/2";
}

// Appends one signed term given its monomial text (possibly empty).
void append_term(std::ostringstream& os, bool first, const mpz_class& coeff, const std::string& mono) {
    const bool negative = sgn(coeff) < 0;
    if (first) {
        os << (negative ? "-" : "");
    } else {
        os << (negative ? " - " : " + ");
    }
    const mpz_class magnitude = abs(coeff);
    if (mono.empty()) {
        os << magnitude.get_str();
    } else if (magnitude == 1) {
        os << mono;
    } else {
        os << magnitude.get_str() << '*' << mono;
    }
}

}  // namespace

HalfIntPolynomial HalfIntPolynomial::constant(const mpz_class& c, Variable var) {
    return monomial(0, c, var);
}

HalfIntPolynomial HalfIntPolynomial::monomial(std::int64_t half_units, const mpz_class& coeff, Variable var) {
    HalfIntPolynomial p(var);
    p.add_term(half_units, coeff);
    return p;
}

void HalfIntPolynomial::add_term(std::int64_t half_units, const mpz_class& coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(half_units, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

mpz_class HalfIntPolynomial::coefficient(std::int64_t half_units) const {
    auto it = terms_.find(half_units);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

std::optional<std::int64_t> HalfIntPolynomial::top_half_units() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

std::optional<std::int64_t> HalfIntPolynomial::bottom_half_units() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

bool HalfIntPolynomial::is_monic() const {
    return !terms_.empty() && terms_.rbegin()->second == 1;
}

bool HalfIntPolynomial::is_palindromic() const {
    if (terms_.empty()) {
        return true;
    }
    const std::int64_t span = *top_half_units() + *bottom_half_units();
    for (const auto& [e, c] : terms_) {
        if (coefficient(span - e) != c) {
            return false;
        }
    }
    return true;
}

mpz_class HalfIntPolynomial::evaluate_at_one() const {
    mpz_class total = 0;
    for (const auto& [e, c] : terms_) {
        total += c;
    }
    return total;
}

HalfIntPolynomial& HalfIntPolynomial::operator+=(const HalfIntPolynomial& other) {
    if (!other.terms_.empty() && !terms_.empty() && other.var_ != var_) {
        throw std::invalid_argument("adding polynomials in different variables");
    }
    if (terms_.empty()) {
        var_ = other.var_;
    }
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

HalfIntPolynomial operator*(const HalfIntPolynomial& a, const HalfIntPolynomial& b) {
    if (!a.terms_.empty() && !b.terms_.empty() && a.var_ != b.var_) {
        throw std::invalid_argument("multiplying polynomials in different variables");
    }
    HalfIntPolynomial out(a.terms_.empty() ? b.var_ : a.var_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

std::string HalfIntPolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(os, first, c, power(symbol(var_), e));
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

void BivariatePolynomial::add_term(std::int64_t lambda_half_units, std::int64_t q_exponent,
                                   const mpz_class& coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(Key{lambda_half_units, q_exponent}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
    for (const auto& [k, c] : other.terms_) {
        add_term(k.first, k.second, c);
    }
    return *this;
}

mpz_class BivariatePolynomial::evaluate_at_one() const {
    mpz_class total = 0;
    for (const auto& [k, c] : terms_) {
        total += c;
    }
    return total;
}

HalfIntPolynomial BivariatePolynomial::at_lambda_minus_one() const {
    HalfIntPolynomial out(Variable::Q);
    for (const auto& [k, c] : terms_) {
        if (k.first % 2 != 0) {
            throw std::domain_error("(-1)^(k/2) is not an integer for odd k");
        }
        const bool odd = (k.first / 2) % 2 != 0;
        out.add_term(2 * k.second, odd ? mpz_class(-c) : c);
    }
    return out;
}

HalfIntPolynomial BivariatePolynomial::at_q_one() const {
    HalfIntPolynomial out(Variable::Lambda);
    for (const auto& [k, c] : terms_) {
        out.add_term(k.first, c);
    }
    return out;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string mono = power(symbol(Variable::Lambda), k.first);
        const std::string qpart = power(symbol(Variable::Q), 2 * k.second);
        if (!mono.empty() && !qpart.empty()) {
            mono += '*';
        }
        mono += qpart;
        append_term(os, first, c, mono);
        first = false;
    }
    return os.str();
}

}  // namespace asmlat
