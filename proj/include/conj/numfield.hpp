#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "conj/poly.hpp"
#include "conj/poly_text.hpp"
#include "conj/rational.hpp"

namespace conjprod {

class NFElement;

/// Q(γ) presented by the monic irreducible minimal polynomial of γ.
/// Fields compare by identity: two presentations built separately are
/// different fields even when their minimal polynomials agree.
class NumberField {
 public:
  struct Data;

  /// Checks that minpoly is monic and irreducible over Q.
  static NumberField create(const Poly<Rational>& minpoly);
  /// Q itself, presented by X.
  static NumberField rationals();
  /// Skips the irreducibility check; for callers that have already
  /// established it.
  static NumberField trusted(const Poly<Rational>& minpoly);

  int degree() const;
  const Poly<Rational>& minpoly() const;

  NFElement element(std::vector<Rational> coords) const;
  NFElement from_rational(const Rational& r) const;
  /// The coordinate polynomial reduced modulo minpoly.
  NFElement from_poly(const Poly<Rational>& p) const;
  NFElement generator() const;
  NFElement zero() const;
  NFElement one() const;

  /// Element text, a polynomial in the generator: "1/2*g^3 - g + 2".
  NFElement parse(std::string_view text) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_;
  }

 private:
  friend class NFElement;
  explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Element of a number field as power-basis coordinates. Arithmetic between
/// elements of different fields throws FieldMismatch.
class NFElement {
 public:
  NumberField field() const { return NumberField(field_); }
  const std::vector<Rational>& coords() const { return coords_; }
  Poly<Rational> as_poly() const { return Poly<Rational>(coords_); }

  bool is_zero() const;
  bool is_rational() const;
  /// The value when is_rational(); NotInBaseField otherwise.
  Rational rational_value() const;

  NFElement zero_like() const;
  NFElement one_like() const;
  NFElement from_int(std::int64_t v) const;
  std::uint64_t characteristic() const noexcept { return 0; }

  NFElement inverse() const;
  NFElement pow(std::uint64_t e) const;

  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o);
  NFElement& operator*=(const NFElement& o);
  NFElement& operator/=(const NFElement& o) { return *this *= o.inverse(); }

  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
  friend NFElement operator/(NFElement a, const NFElement& b) { return a /= b; }
  NFElement operator-() const;

  friend bool operator==(const NFElement& a, const NFElement& b);
  /// Coordinate-lexicographic order.
  friend std::strong_ordering operator<=>(const NFElement& a, const NFElement& b);

  std::string str() const;

 private:
  friend class NumberField;
  NFElement(std::shared_ptr<const NumberField::Data> f, std::vector<Rational> c)
      : field_(std::move(f)), coords_(std::move(c)) {}
  void check_same(const NFElement& o) const;

  std::shared_ptr<const NumberField::Data> field_;
  std::vector<Rational> coords_;
};

inline CoeffText coeff_text(const NFElement& c) {
  if (c.is_rational()) return coeff_text(c.rational_value());
  return {false, "(" + c.str() + ")", false};
}

using NFPoly = Poly<NFElement>;

inline NFElement nf_mul(const NFElement& a, const NFElement& b) { return a * b; }
inline NFElement nf_inverse(const NFElement& a) { return a.inverse(); }

/// Monic minimal polynomial over Q: the first linear dependence among
/// 1, a, a^2, ... found by exact elimination.
Poly<Rational> nf_minimal_polynomial(const NFElement& a);

/// Norm from the presented field to Q: Res(minpoly, coordinate polynomial).
Rational nf_norm(const NFElement& a);

/// Norm of a polynomial over the field down to Q[X]: the product of its
/// conjugates, obtained by interpolating pointwise norms.
Poly<Rational> nf_norm_poly(const NFPoly& a);

/// A rational polynomial viewed over the field.
NFPoly lift_poly(const NumberField& field, const Poly<Rational>& p);

/// Polynomial in x whose coefficients are elements in g, e.g.
/// "x^2 - (g + g^2)*x + g^3".
NFPoly parse_nf_poly(const NumberField& field, std::string_view text);

/// Result of collapsing Q(γ)(β) to a simple extension Q(γ') with
/// γ' = γ + t·β.
struct PrimitiveElement {
  NumberField field;
  NFElement old_generator;  // image of γ
  NFElement adjoined;       // image of β
  long t = 0;
};

/// Adjoins a root β of `relative_minpoly` (monic, irreducible over the field
/// of its coefficients). t runs 1, 2, ... until the norm of the shifted
/// relative minimal polynomial is squarefree, which happens for all but
/// finitely many t. A linear relative_minpoly returns the field unchanged.
PrimitiveElement nf_primitive_element(const NumberField& base,
                                      const NFPoly& relative_minpoly);

/// Upper limit on deg(a) * [F:Q] for Trager's norm polynomial.
inline constexpr int kMaxNormDegree = 128;

/// Factorization over a number field by Trager's method: squarefree split,
/// shift X -> X - s·γ (s = 0, 1, ...) until the norm is squarefree, factor
/// the norm over Q, pull each factor back by a gcd. Factors are monic and
/// canonically sorted.
std::vector<FactorEntry<NFElement>> trager_factor(const NFPoly& a,
                                                  std::uint64_t rng_seed = 0);

}  // namespace conjprod
