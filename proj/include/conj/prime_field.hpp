#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "conj/rational.hpp"

namespace conjprod {

class Zp;

/// The prime field F_p. Construction checks primality by trial division;
/// p is capped below 2^31 so that products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  Zp operator()(std::int64_t v) const;
  Zp zero() const;
  Zp one() const;

  /// Image of a rational whose denominator is invertible mod p.
  Zp from_rational(const Rational& r) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Element of F_p. Carries its modulus; mixing moduli is a FieldMismatch.
class Zp {
 public:
  std::uint64_t residue() const noexcept { return r_; }
  std::uint64_t modulus() const noexcept { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  bool is_zero() const noexcept { return r_ == 0; }
  Zp zero_like() const { return Zp(0, p_); }
  Zp one_like() const { return Zp(1 % p_, p_); }
  Zp from_int(std::int64_t v) const;
  std::uint64_t characteristic() const noexcept { return p_; }
  Zp inverse() const;
  Zp pow(std::uint64_t e) const;

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  Zp operator-() const { return Zp(r_ == 0 ? 0 : p_ - r_, p_); }

  friend bool operator==(const Zp&, const Zp&) = default;
  friend std::strong_ordering operator<=>(const Zp& a, const Zp& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.r_ <=> b.r_;
  }

  std::string str() const { return std::to_string(r_); }

 private:
  friend class PrimeField;
  Zp(std::uint64_t r, std::uint64_t p) : r_(r), p_(p) {}

  std::uint64_t r_;
  std::uint64_t p_;
};

/// Inverse of a nonzero element; free-function spelling of Zp::inverse.
inline Zp prime_field_inverse(const Zp& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const Zp& a);

}  // namespace conjprod
