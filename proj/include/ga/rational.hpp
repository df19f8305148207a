#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ga {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Thrown when two values live over possibility spaces of different size.
struct SpaceMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two independent routes to the same answer disagreed. Always a bug.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Canonical text form: "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

Rational dot(const Vec& a, const Vec& b);

bool is_zero(const Vec& v);

/// Scales v by a positive factor so that it becomes a primitive integer
/// vector (gcd of entries 1). The zero vector is returned unchanged.
Vec primitive(const Vec& v);

/// primitive() followed by flipping the sign so the first nonzero entry is
/// positive. Used for lines, where direction does not matter.
Vec primitive_line(const Vec& v);

/// Rank over the rationals of the given row vectors.
std::size_t rank(std::vector<Vec> rows);

/// Basis of {x : row . x = 0 for all rows}.
std::vector<Vec> kernel_basis(std::vector<Vec> rows, std::size_t dim);

}  // namespace ga
