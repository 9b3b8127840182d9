#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace repcat {

/// Exact scalars. Every construction in the library only needs a field with
/// decidable equality; arbitrary precision rationals are the shipped choice.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& value);

/// Sparse linear combination over some basis, keyed by basis index.
/// Zero coefficients are never stored.
using Element = std::map<std::size_t, Rational>;

void add_term(Element& element, std::size_t basis, const Rational& coefficient);
Element scaled(const Element& element, const Rational& factor);
Element basis_element(std::size_t basis, const Rational& coefficient = 1);

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace repcat
