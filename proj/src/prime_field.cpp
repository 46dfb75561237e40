#include "conj/prime_field.hpp"

#include <ostream>

#include "conj/error.hpp"

namespace conjprod {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 31)) {
    fail(ErrorCode::CapExceeded, "prime modulus must be below 2^31");
  }
  if (!is_prime(Integer(static_cast<unsigned long>(p)))) {
    fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
}

Zp PrimeField::operator()(std::int64_t v) const { return zero().from_int(v); }

Zp PrimeField::zero() const { return Zp(0, p_); }
Zp PrimeField::one() const { return Zp(1 % p_, p_); }

Zp PrimeField::from_rational(const Rational& r) const {
  const Integer p(static_cast<unsigned long>(p_));
  Integer num = r.num() % p;
  Integer den = r.den() % p;
  if (num < 0) num += p;
  if (den == 0) {
    fail(ErrorCode::DivisionByZero,
         "denominator of " + r.str() + " vanishes mod " + std::to_string(p_));
  }
  return Zp(num.get_ui(), p_) / Zp(den.get_ui(), p_);
}

Zp Zp::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Zp(static_cast<std::uint64_t>(r), p_);
}

Zp Zp::inverse() const {
  if (r_ == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_p");
  // Extended Euclid on (r, p).
  std::int64_t old_r = static_cast<std::int64_t>(r_);
  std::int64_t r = static_cast<std::int64_t>(p_);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t inv = old_s % p;
  if (inv < 0) inv += p;
  return Zp(static_cast<std::uint64_t>(inv), p_);
}

Zp Zp::pow(std::uint64_t e) const {
  Zp result(1 % p_, p_);
  Zp base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

namespace {

void check_same(const Zp& a, const Zp& b) {
  if (a.modulus() != b.modulus()) {
    fail(ErrorCode::FieldMismatch, "elements of F_" +
                                       std::to_string(a.modulus()) +
                                       " and F_" + std::to_string(b.modulus()));
  }
}

}  // namespace

Zp& Zp::operator+=(const Zp& o) {
  check_same(*this, o);
  r_ += o.r_;
  if (r_ >= p_) r_ -= p_;
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  check_same(*this, o);
  r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  check_same(*this, o);
  r_ = (r_ * o.r_) % p_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.str(); }

}  // namespace conjprod
