#pragma once

// Eta quotients c * q^s * prod f_a^b, where f_a = (q^a; q^a)_inf, and the
// small expression language used to write sums of them.
//
// Grammar (whitespace is ignored between tokens):
//
//   expression := [sign] term { sign term }
//   sign       := '+' | '-'
//   term       := factor { ('*' | '/') factor }
//   factor     := integer | 'q' [ '^' integer ] | 'f' integer [ '^' [ '-' ] integer ]
//               | '(' term ')'
//   integer    := digit { digit }
//
// Multiplication must be written with '*'; "2q" is rejected. A divisor may
// only contain f atoms: dividing by an integer or by a power of q is an error.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlab
{

/// c * q^s * prod_a f_a^{b_a}. Factors are keyed by subscript, so the
/// representation is canonical: sorted, merged, zero exponents removed.
class EtaQuotient
{
public:
    EtaQuotient() = default;

    /// Multiplies in f_a^b. Throws std::invalid_argument when a < 1.
    EtaQuotient &times_f(long subscript, long exponent);
    EtaQuotient &times_q(long power);
    EtaQuotient &times_scalar(std::int64_t c);

    std::int64_t coeff() const { return coeff_; }
    long q_power() const { return q_power_; }
    const std::map<long, long> &factors() const { return factors_; }

    /// Product and quotient of two eta quotients.
    friend EtaQuotient operator*(EtaQuotient a, const EtaQuotient &b);
    /// Only valid when the divisor is a pure product of f atoms.
    friend EtaQuotient operator/(EtaQuotient a, const EtaQuotient &b);

    friend bool operator==(const EtaQuotient &, const EtaQuotient &) = default;

private:
    std::int64_t coeff_ = 1;
    long q_power_ = 0;
    std::map<long, long> factors_;
};

/// Sum of eta-quotient terms, in source order.
using EtaExpression = std::vector<EtaQuotient>;

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t position, const std::string &message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position)
    {
    }

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

EtaExpression parse_eta_expression(std::string_view text);

/// Canonical text, e.g. "f9^2/f18 - 2*q*f3*f18^2/(f6*f9)". Parsing the
/// result gives back an equal expression.
std::string to_string(const EtaQuotient &term);
std::string to_string(const EtaExpression &expr);

} // namespace qlab
