#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "conj/factor_zp.hpp"
#include "conj/poly.hpp"
#include "conj/poly_text.hpp"
#include "conj/prime_field.hpp"

namespace conjprod {

class GFElement;

/// F_p[Y]/(f(Y)) for a monic irreducible f: the field with p^deg(f)
/// elements, generated by α = Y.
class GaloisField {
 public:
  struct Data;

  /// Checks that f is irreducible over F_p; f is made monic.
  static GaloisField create(const ZpPoly& f);

  std::uint64_t characteristic() const;
  int degree() const;
  const ZpPoly& modulus() const;

  GFElement generator() const;
  GFElement zero() const;
  GFElement one() const;
  GFElement from_prime(const Zp& c) const;
  GFElement from_poly(const ZpPoly& p) const;
  /// Element text, a polynomial in g = α with integer coefficients.
  GFElement parse(std::string_view text) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.d_ == b.d_;
  }

 private:
  friend class GFElement;
  explicit GaloisField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class GFElement {
 public:
  GaloisField field() const { return GaloisField(field_); }
  const ZpPoly& value() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool in_prime_field() const { return v_.degree() <= 0; }
  Zp prime_value() const;

  GFElement zero_like() const;
  GFElement one_like() const;
  GFElement from_int(std::int64_t v) const;
  std::uint64_t characteristic() const;

  GFElement inverse() const;
  GFElement pow(const Integer& e) const;
  /// x -> x^p.
  GFElement frobenius() const;
  GFElement frobenius(std::uint64_t k) const;

  GFElement& operator+=(const GFElement& o);
  GFElement& operator-=(const GFElement& o);
  GFElement& operator*=(const GFElement& o);

  friend GFElement operator+(GFElement a, const GFElement& b) { return a += b; }
  friend GFElement operator-(GFElement a, const GFElement& b) { return a -= b; }
  friend GFElement operator*(GFElement a, const GFElement& b) { return a *= b; }
  GFElement operator-() const;

  friend bool operator==(const GFElement& a, const GFElement& b);
  /// Lexicographic on coordinates 1, α, α^2, ...
  friend std::strong_ordering operator<=>(const GFElement& a, const GFElement& b);

  std::string str() const { return to_text(v_, "g"); }

 private:
  friend class GaloisField;
  GFElement(std::shared_ptr<const GaloisField::Data> f, ZpPoly v)
      : field_(std::move(f)), v_(std::move(v)) {}
  void check_same(const GFElement& o) const;

  std::shared_ptr<const GaloisField::Data> field_;
  ZpPoly v_;
};

inline CoeffText coeff_text(const GFElement& c) {
  if (c.in_prime_field()) {
    return {false, c.is_zero() ? "0" : c.prime_value().str(),
            !c.is_zero() && c.prime_value().residue() == 1};
  }
  return {false, "(" + c.str() + ")", false};
}

using GFPoly = Poly<GFElement>;

/// Polynomial in x with coefficients in g, reduced into the field.
GFPoly parse_gf_poly(const GaloisField& field, std::string_view text);

GFPoly lift_poly(const GaloisField& field, const ZpPoly& p);

}  // namespace conjprod
