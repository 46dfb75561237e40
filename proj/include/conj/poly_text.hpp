#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "conj/poly.hpp"
#include "conj/prime_field.hpp"
#include "conj/rational.hpp"

namespace conjprod {

/// A polynomial in x and g with rational coefficients, keyed by
/// (power of x, power of g). This is the parse tree every textual input is
/// reduced to before it is mapped into a concrete coefficient field.
using BivariateTerms = std::map<std::pair<unsigned, unsigned>, Rational>;

/// Parses text such as "3/2*x^4 - x + 7" or "x^2 - (g + g^2)*x + g^3".
/// The variable x is case-insensitive; `allow_generator` admits g. '*' is
/// optional before a variable or parenthesis; '/' divides by constants only.
BivariateTerms parse_terms(std::string_view text, bool allow_generator);

/// Parses a polynomial in x over Q.
Poly<Rational> parse_rational_poly(std::string_view text);

/// Parses a polynomial in x and reduces it into F_p.
Poly<Zp> parse_prime_field_poly(std::string_view text, const PrimeField& field);

/// How a coefficient renders inside a polynomial term.
struct CoeffText {
  bool negative = false;   // printed as a leading "-" / " - "
  std::string magnitude;   // already parenthesised when compound
  bool is_one = false;     // omitted in front of a variable
};

inline CoeffText coeff_text(const Rational& c) {
  return {c.sign() < 0, c.abs().str(), c.abs() == Rational(1)};
}

inline CoeffText coeff_text(const Zp& c) {
  return {false, c.str(), c.residue() == 1};
}

/// Canonical printer: descending powers, "3/2*x^4 - x + 7"; "0" for zero.
template <FieldElement T>
std::string to_text(const Poly<T>& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    const CoeffText c = coeff_text(p[k]);
    if (out.empty()) {
      if (c.negative) out += "-";
    } else {
      out += c.negative ? " - " : " + ";
    }
    if (k == 0) {
      out += c.magnitude;
      continue;
    }
    if (!c.is_one) out += c.magnitude + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace conjprod
