#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace conjprod {

/// Arbitrary-precision integer. GMP keeps it canonical (no leading zero
/// limbs, a single zero).
using Integer = mpz_class;

std::string to_string(const Integer& v);

/// Deterministic trial division up to sqrt(|n|).
bool is_prime(const Integer& n);

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& v) : v_(v) {}

  /// Builds num/den in canonical form; throws ZeroDenominator when den == 0.
  static Rational normalize(const Integer& num, const Integer& den);

  /// Parses "a/b" or "a" with an optional leading sign.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  std::uint64_t characteristic() const noexcept { return 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const;
  Rational abs() const;

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::string str() const;
  std::size_t hash() const;

 private:
  mpq_class v_;
};

/// Free-function form of Rational::normalize.
inline Rational rational_normalize(const Integer& num, const Integer& den) {
  return Rational::normalize(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace conjprod
