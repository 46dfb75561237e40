#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "conj/error.hpp"

namespace conjprod {

/// The coefficient contract every polynomial routine relies on. Elements
/// know their own field, so constants are always built from an exemplar.
template <class T>
concept FieldElement = std::copy_constructible<T> && requires(const T a, const T b,
                                                              std::int64_t k) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<T>;
  { a.zero_like() } -> std::convertible_to<T>;
  { a.one_like() } -> std::convertible_to<T>;
  { a.from_int(k) } -> std::convertible_to<T>;
  { a.characteristic() } -> std::convertible_to<std::uint64_t>;
};

/// Dense univariate polynomial; coeffs()[i] is the coefficient of X^i.
/// The highest stored coefficient is never zero, and the zero polynomial is
/// the empty sequence.
template <FieldElement T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }

  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, c.zero_like());
    v[k] = c;
    return Poly(std::move(v));
  }

  /// The indeterminate X over the field of `like`.
  static Poly x(const T& like) { return monomial(like.one_like(), 1); }

  /// X - r.
  static Poly linear_root(const T& r) {
    return Poly(std::vector<T>{-r, r.one_like()});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& lc() const {
    if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of 0");
    return c_.back();
  }

  /// Coefficient of X^i, or zero past the degree.
  T coeff(std::size_t i, const T& like) const {
    return i < c_.size() ? c_[i] : like.zero_like();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == c_.back().one_like(); }
  bool is_constant() const { return c_.size() <= 1; }

  Poly monic() const {
    if (c_.empty()) return *this;
    return scaled(c_.back().inverse());
  }

  Poly scaled(const T& s) const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const T& a : c_) v.push_back(a * s);
    return Poly(std::move(v));
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(c_.front()))>;
    std::vector<U> v;
    v.reserve(c_.size());
    for (const T& a : c_) v.push_back(f(a));
    return Poly<U>(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) {
      for (std::size_t i = c_.size(); i < o.c_.size(); ++i) {
        c_.push_back(o.c_[i].zero_like());
      }
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) {
      for (std::size_t i = c_.size(); i < o.c_.size(); ++i) {
        c_.push_back(o.c_[i].zero_like());
      }
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const T& a : c_) v.push_back(-a);
    return Poly(std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, a.c_[0].zero_like());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(v));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Poly& a, const T& s) { return a.scaled(s); }
  friend Poly operator*(const T& s, const Poly& a) { return a.scaled(s); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

/// One irreducible factor together with its multiplicity.
template <FieldElement T>
struct FactorEntry {
  Poly<T> factor;
  int multiplicity = 1;

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

template <FieldElement T>
struct DivMod {
  Poly<T> quotient;
  Poly<T> remainder;
};

/// Long division: a = quotient*b + remainder with deg remainder < deg b.
template <FieldElement T>
DivMod<T> poly_divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by 0");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  const T inv_lc = b.lc().inverse();
  std::vector<T> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<T> q(r.size() - db, inv_lc.zero_like());
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const T t = r[k] * inv_lc;
    q[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] = r[k - db + j] - t * b[j];
    }
  }
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(db), r.end());
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <FieldElement T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return poly_divmod(a, b).remainder;
}

template <FieldElement T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
  return poly_divmod(a, b).quotient;
}

template <FieldElement T>
bool divides(const Poly<T>& d, const Poly<T>& a) {
  return poly_divmod(a, d).remainder.is_zero();
}

/// Monic greatest common divisor.
template <FieldElement T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0)");
  while (!b.is_zero()) {
    Poly<T> r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <FieldElement T>
struct ExtendedGcd {
  Poly<T> gcd;  // monic
  Poly<T> s;
  Poly<T> t;
};

/// s*a + t*b = gcd(a, b).
template <FieldElement T>
ExtendedGcd<T> poly_xgcd(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "xgcd(0, 0)");
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0, s1, t0, t1;
  const T& like = a.is_zero() ? b.lc() : a.lc();
  s0 = Poly<T>::constant(like.one_like());
  t1 = Poly<T>::constant(like.one_like());
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1;
    Poly<T> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const T inv = r0.lc().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <FieldElement T>
T poly_eval(const Poly<T>& a, const T& x) {
  T acc = x.zero_like();
  for (std::size_t k = a.size(); k-- > 0;) acc = acc * x + a[k];
  return acc;
}

template <FieldElement T>
Poly<T> derivative(const Poly<T>& a) {
  if (a.degree() < 1) return Poly<T>();
  std::vector<T> v;
  v.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    v.push_back(a[i] * a[i].from_int(static_cast<std::int64_t>(i)));
  }
  return Poly<T>(std::move(v));
}

template <FieldElement T>
Poly<T> pow(const Poly<T>& a, std::uint64_t e, const T& like) {
  Poly<T> result = Poly<T>::constant(like.one_like());
  Poly<T> base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

/// a^e mod m for a machine-size exponent.
template <FieldElement T>
Poly<T> powmod(const Poly<T>& a, std::uint64_t e, const Poly<T>& m) {
  Poly<T> result = Poly<T>::constant(m.lc().one_like()) % m;
  Poly<T> base = a % m;
  while (e > 0) {
    if (e & 1) result = (result * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return result;
}

/// a(b(X)).
template <FieldElement T>
Poly<T> compose(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> acc;
  for (std::size_t k = a.size(); k-- > 0;) {
    acc = acc * b + Poly<T>::constant(a[k]);
  }
  return acc;
}

/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a, by the
/// Euclidean remainder sequence over the coefficient field.
template <FieldElement T>
T poly_resultant(Poly<T> a, Poly<T> b) {
  if (a.is_zero() || b.is_zero()) {
    fail(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
  }
  T acc = a.lc().one_like();
  for (;;) {
    const int da = a.degree();
    const int db = b.degree();
    if (db == 0) {
      for (int i = 0; i < da; ++i) acc = acc * b[0];
      return acc;
    }
    if (da == 0) {
      for (int i = 0; i < db; ++i) acc = acc * a[0];
      return acc;
    }
    Poly<T> r = poly_divmod(a, b).remainder;
    if (r.is_zero()) return acc.zero_like();
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    for (int i = 0; i < da - r.degree(); ++i) acc = acc * b.lc();
    a = std::move(b);
    b = std::move(r);
  }
}

/// a / gcd(a, a'), monic. Inputs whose derivative vanishes (p-th powers in
/// characteristic p) are rejected.
template <FieldElement T>
Poly<T> poly_squarefree_part(const Poly<T>& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree part of 0");
  if (a.degree() == 0) return Poly<T>::constant(a.lc().one_like());
  const Poly<T> d = derivative(a);
  if (d.is_zero()) {
    fail(ErrorCode::InseparableInput,
         "derivative vanishes identically; input is a p-th power");
  }
  return (a / poly_gcd(a, d)).monic();
}

template <FieldElement T>
bool is_squarefree(const Poly<T>& a) {
  if (a.degree() < 1) return true;
  const Poly<T> d = derivative(a);
  if (d.is_zero()) return false;
  return poly_gcd(a, d).degree() == 0;
}

/// Yun's squarefree decomposition, characteristic 0 only: a = lc * prod
/// parts[i]^(i+1) with each part monic and squarefree.
template <FieldElement T>
std::vector<Poly<T>> squarefree_decomposition(const Poly<T>& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of 0");
  std::vector<Poly<T>> parts;
  if (a.degree() == 0) return parts;
  const Poly<T> am = a.monic();
  const Poly<T> da = derivative(am);
  Poly<T> g = poly_gcd(am, da);
  Poly<T> b = am / g;
  Poly<T> c = da / g;
  Poly<T> d = c - derivative(b);
  while (b.degree() > 0) {
    Poly<T> part = poly_gcd(b, d);
    b = b / part;
    c = d / part;
    d = c - derivative(b);
    parts.push_back(part.monic());
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

/// Element ordering used for canonical output; defaults to operator<.
template <class T>
bool canonical_less(const T& a, const T& b) {
  return a < b;
}

/// Polynomials ordered by degree, then by coefficients in ascending powers.
template <FieldElement T>
bool canonical_less(const Poly<T>& a, const Poly<T>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (canonical_less(a[i], b[i])) return true;
    if (canonical_less(b[i], a[i])) return false;
  }
  return false;
}

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
template <FieldElement T>
Poly<T> interpolate(std::span<const T> xs, std::span<const T> ys) {
  const std::size_t n = xs.size();
  if (n == 0) return Poly<T>();
  std::vector<T> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) * (xs[i] - xs[i - j]).inverse();
      if (i == j) break;
    }
  }
  Poly<T> acc = Poly<T>::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    acc = acc * Poly<T>::linear_root(xs[k]) + Poly<T>::constant(dd[k]);
  }
  return acc;
}

}  // namespace conjprod
