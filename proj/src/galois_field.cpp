#include "conj/galois_field.hpp"

#include <algorithm>

#include "conj/error.hpp"

namespace conjprod {

struct GaloisField::Data {
  PrimeField prime;
  ZpPoly modulus;
};

GaloisField GaloisField::create(const ZpPoly& f) {
  if (f.degree() < 1) fail(ErrorCode::ConstantPolynomial, "field modulus is constant");
  if (!is_irreducible_mod_p(f)) {
    fail(ErrorCode::NotIrreducible, to_text(f) + " is not irreducible over F_" +
                                        std::to_string(f.lc().characteristic()));
  }
  auto d = std::make_shared<Data>(
      Data{PrimeField(f.lc().characteristic()), f.monic()});
  return GaloisField(std::move(d));
}

std::uint64_t GaloisField::characteristic() const { return d_->prime.modulus(); }
int GaloisField::degree() const { return d_->modulus.degree(); }
const ZpPoly& GaloisField::modulus() const { return d_->modulus; }

GFElement GaloisField::generator() const {
  return from_poly(ZpPoly::x(d_->prime.one()));
}
GFElement GaloisField::zero() const { return GFElement(d_, ZpPoly()); }
GFElement GaloisField::one() const { return from_prime(d_->prime.one()); }
GFElement GaloisField::from_prime(const Zp& c) const {
  return GFElement(d_, ZpPoly::constant(c));
}
GFElement GaloisField::from_poly(const ZpPoly& p) const {
  return GFElement(d_, p % d_->modulus);
}

GFElement GaloisField::parse(std::string_view text) const {
  const BivariateTerms t = parse_terms(text, true);
  std::vector<Zp> v;
  for (const auto& [key, c] : t) {
    if (key.first != 0) {
      fail(ErrorCode::ParseError, "element text '" + std::string(text) + "' mentions x");
    }
    if (v.size() <= key.second) v.resize(key.second + 1, d_->prime.zero());
    try {
      v[key.second] = d_->prime.from_rational(c);
    } catch (const Error& e) {
      fail(ErrorCode::ParseError, e.what());
    }
  }
  return from_poly(ZpPoly(std::move(v)));
}

void GFElement::check_same(const GFElement& o) const {
  if (field_ != o.field_) {
    fail(ErrorCode::FieldMismatch, "elements belong to different finite fields");
  }
}

Zp GFElement::prime_value() const {
  if (!in_prime_field()) fail(ErrorCode::NotInBaseField, str() + " is not in F_p");
  return v_.is_zero() ? field_->prime.zero() : v_[0];
}

GFElement GFElement::zero_like() const { return field().zero(); }
GFElement GFElement::one_like() const { return field().one(); }
GFElement GFElement::from_int(std::int64_t v) const {
  return field().from_prime(field_->prime(v));
}
std::uint64_t GFElement::characteristic() const { return field_->prime.modulus(); }

GFElement GFElement::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in a finite field");
  const auto xg = poly_xgcd(v_, field_->modulus);
  return field().from_poly(xg.s);
}

GFElement GFElement::pow(const Integer& e) const {
  return GFElement(field_, powmod(v_, e, field_->modulus));
}

GFElement GFElement::frobenius() const {
  return GFElement(field_, conjprod::powmod(v_, characteristic(), field_->modulus));
}

GFElement GFElement::frobenius(std::uint64_t k) const {
  GFElement r = *this;
  for (std::uint64_t i = 0; i < k; ++i) r = r.frobenius();
  return r;
}

GFElement& GFElement::operator+=(const GFElement& o) {
  check_same(o);
  v_ += o.v_;
  return *this;
}

GFElement& GFElement::operator-=(const GFElement& o) {
  check_same(o);
  v_ -= o.v_;
  return *this;
}

GFElement& GFElement::operator*=(const GFElement& o) {
  check_same(o);
  v_ = (v_ * o.v_) % field_->modulus;
  return *this;
}

GFElement GFElement::operator-() const { return GFElement(field_, -v_); }

bool operator==(const GFElement& a, const GFElement& b) {
  a.check_same(b);
  return a.v_ == b.v_;
}

std::strong_ordering operator<=>(const GFElement& a, const GFElement& b) {
  a.check_same(b);
  const std::size_t n = std::max(a.v_.size(), b.v_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t x = i < a.v_.size() ? a.v_[i].residue() : 0;
    const std::uint64_t y = i < b.v_.size() ? b.v_[i].residue() : 0;
    if (auto c = x <=> y; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

GFPoly parse_gf_poly(const GaloisField& field, std::string_view text) {
  const BivariateTerms t = parse_terms(text, true);
  unsigned top = 0;
  for (const auto& [key, c] : t) top = std::max(top, key.first);
  std::vector<GFElement> coeffs(top + 1, field.zero());
  const ZpPoly one = ZpPoly::constant(field.one().value()[0]);
  for (const auto& [key, c] : t) {
    Zp r = one[0];
    try {
      r = one[0].field().from_rational(c);
    } catch (const Error& e) {
      fail(ErrorCode::ParseError, e.what());
    }
    coeffs[key.first] += field.from_poly(ZpPoly::monomial(r, key.second));
  }
  return GFPoly(std::move(coeffs));
}

GFPoly lift_poly(const GaloisField& field, const ZpPoly& p) {
  return p.map([&](const Zp& c) { return field.from_prime(c); });
}

}  // namespace conjprod
