#ifndef ZONOTOPAL_RATIONAL_HPP
#define ZONOTOPAL_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zonotopal {

/// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;

/// Dense rational vector (a column of the realized matroid, or a point).
using Vector = std::vector<Rational>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated (bad dimensions, invalid basis, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Parses "p", "-p" or "p/q" with q != 0. Whitespace around the token is ignored.
Rational parse_rational(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

std::string to_string(const Vector& v);

Rational factorial(unsigned n);

/// Exact integer power, exponent >= 0.
Rational power(const Rational& base, unsigned exponent);

Rational dot(const Vector& a, const Vector& b);

}  // namespace zonotopal

#endif
