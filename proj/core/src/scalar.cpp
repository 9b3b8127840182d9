#include "repcat/scalar.hpp"

#include <cctype>

namespace repcat {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_str(10);
}

void add_term(Element& element, std::size_t basis, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = element.try_emplace(basis, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) element.erase(it);
  }
}

Element scaled(const Element& element, const Rational& factor) {
  Element out;
  if (factor == 0) return out;
  for (const auto& [basis, coefficient] : element) out.emplace(basis, coefficient * factor);
  return out;
}

Element basis_element(std::size_t basis, const Rational& coefficient) {
  Element out;
  add_term(out, basis, coefficient);
  return out;
}

}  // namespace repcat
