#include "conj/numfield.hpp"

#include <algorithm>

#include "conj/error.hpp"
#include "conj/factor_qq.hpp"
#include "conj/linalg.hpp"

namespace conjprod {

struct NumberField::Data {
  Poly<Rational> minpoly;
  int degree = 0;
  // reduction[k] holds the coordinates of γ^(degree + k).
  std::vector<std::vector<Rational>> reduction;
};

namespace {

constexpr long kMaxShift = 1000;

std::shared_ptr<const NumberField::Data> make_data(const Poly<Rational>& minpoly) {
  if (minpoly.degree() < 1) {
    fail(ErrorCode::ConstantPolynomial, "number field minimal polynomial is constant");
  }
  if (!minpoly.is_monic()) fail(ErrorCode::NotMonic, "minimal polynomial must be monic");
  auto d = std::make_shared<NumberField::Data>();
  d->minpoly = minpoly;
  d->degree = minpoly.degree();
  const auto n = static_cast<std::size_t>(d->degree);
  // γ^n = -(m_0 + ... + m_{n-1} γ^{n-1}); higher powers by shifting.
  std::vector<Rational> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = -minpoly[i];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    d->reduction.push_back(cur);
    std::vector<Rational> next(n);
    const Rational top = cur[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) next[i] = cur[i - 1];
    for (std::size_t i = 0; i < n; ++i) next[i] -= top * minpoly[i];
    cur = std::move(next);
  }
  return d;
}

}  // namespace

NumberField NumberField::create(const Poly<Rational>& minpoly) {
  auto d = make_data(minpoly);
  if (minpoly.degree() > 1 && !is_irreducible_over_Q(minpoly)) {
    fail(ErrorCode::NotIrreducible, to_text(minpoly) + " is not irreducible over Q");
  }
  return NumberField(std::move(d));
}

NumberField NumberField::rationals() {
  return NumberField(make_data(Poly<Rational>({Rational(0), Rational(1)})));
}

NumberField NumberField::trusted(const Poly<Rational>& minpoly) {
  return NumberField(make_data(minpoly));
}

int NumberField::degree() const { return d_->degree; }
const Poly<Rational>& NumberField::minpoly() const { return d_->minpoly; }

NFElement NumberField::element(std::vector<Rational> coords) const {
  if (coords.size() > static_cast<std::size_t>(d_->degree)) {
    return from_poly(Poly<Rational>(std::move(coords)));
  }
  coords.resize(static_cast<std::size_t>(d_->degree));
  return NFElement(d_, std::move(coords));
}

NFElement NumberField::from_rational(const Rational& r) const {
  std::vector<Rational> c(static_cast<std::size_t>(d_->degree));
  c[0] = r;
  return NFElement(d_, std::move(c));
}

NFElement NumberField::from_poly(const Poly<Rational>& p) const {
  const Poly<Rational> r = p % d_->minpoly;
  std::vector<Rational> c = r.coeffs();
  c.resize(static_cast<std::size_t>(d_->degree));
  return NFElement(d_, std::move(c));
}

NFElement NumberField::generator() const {
  return from_poly(Poly<Rational>::x(Rational(1)));
}

NFElement NumberField::zero() const { return from_rational(Rational(0)); }
NFElement NumberField::one() const { return from_rational(Rational(1)); }

NFElement NumberField::parse(std::string_view text) const {
  const BivariateTerms t = parse_terms(text, true);
  unsigned top = 0;
  for (const auto& [key, c] : t) {
    if (key.first != 0) {
      fail(ErrorCode::ParseError, "element text '" + std::string(text) + "' mentions x");
    }
    top = std::max(top, key.second);
  }
  std::vector<Rational> v(top + 1);
  for (const auto& [key, c] : t) v[key.second] = c;
  return from_poly(Poly<Rational>(std::move(v)));
}

void NFElement::check_same(const NFElement& o) const {
  if (field_ != o.field_) {
    fail(ErrorCode::FieldMismatch, "elements belong to different number fields");
  }
}

bool NFElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool NFElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

Rational NFElement::rational_value() const {
  if (!is_rational()) fail(ErrorCode::NotInBaseField, str() + " is not rational");
  return coords_[0];
}

NFElement NFElement::zero_like() const { return field().zero(); }
NFElement NFElement::one_like() const { return field().one(); }
NFElement NFElement::from_int(std::int64_t v) const {
  return field().from_rational(Rational(static_cast<long>(v)));
}

NFElement NFElement::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in a number field");
  const auto xg = poly_xgcd(as_poly(), field_->minpoly);
  // s*a + t*m = 1 since the minimal polynomial is irreducible.
  if (xg.gcd.degree() != 0) {
    fail(ErrorCode::InternalInconsistency, "minimal polynomial is reducible");
  }
  return field().from_poly(xg.s);
}

NFElement NFElement::pow(std::uint64_t e) const {
  NFElement result = one_like();
  NFElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

NFElement& NFElement::operator+=(const NFElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& o) {
  check_same(o);
  const std::size_t n = coords_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coords_[j].is_zero()) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  for (std::size_t k = n; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const std::vector<Rational>& red = field_->reduction[k - n];
    for (std::size_t i = 0; i < n; ++i) prod[i] += prod[k] * red[i];
  }
  prod.resize(n);
  coords_ = std::move(prod);
  return *this;
}

NFElement NFElement::operator-() const {
  NFElement r = *this;
  for (Rational& c : r.coords_) c = -c;
  return r;
}

bool operator==(const NFElement& a, const NFElement& b) {
  a.check_same(b);
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const NFElement& a, const NFElement& b) {
  a.check_same(b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string NFElement::str() const { return to_text(as_poly(), "g"); }

Poly<Rational> nf_minimal_polynomial(const NFElement& a) {
  const auto n = static_cast<std::size_t>(a.field().degree());
  std::vector<NFElement> powers{a.one_like()};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * a);
    Matrix<Rational> m(n, k + 1, Rational(0));
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t i = 0; i < n; ++i) m(i, j) = powers[j].coords()[i];
    }
    const auto kernel = nullspace(std::move(m), Rational(0));
    if (kernel.empty()) continue;
    // The first dependence is unique up to scale and involves a^k.
    const std::vector<Rational>& v = kernel.front();
    return Poly<Rational>(v).monic();
  }
  fail(ErrorCode::InternalInconsistency, "no linear dependence among powers");
}

Rational nf_norm(const NFElement& a) {
  if (a.is_zero()) return Rational(0);
  return poly_resultant(a.field().minpoly(), a.as_poly());
}

Poly<Rational> nf_norm_poly(const NFPoly& a) {
  if (a.is_zero()) return Poly<Rational>();
  const NumberField field = a.lc().field();
  const int out_degree = a.degree() * field.degree();
  std::vector<Rational> xs, ys;
  for (int z = 0; z <= out_degree; ++z) {
    xs.emplace_back(z);
    ys.push_back(nf_norm(poly_eval(a, field.from_rational(Rational(z)))));
  }
  return interpolate<Rational>(xs, ys);
}

NFPoly lift_poly(const NumberField& field, const Poly<Rational>& p) {
  return p.map([&](const Rational& c) { return field.from_rational(c); });
}

NFPoly parse_nf_poly(const NumberField& field, std::string_view text) {
  const BivariateTerms t = parse_terms(text, true);
  unsigned top = 0;
  for (const auto& [key, c] : t) top = std::max(top, key.first);
  std::vector<Poly<Rational>> in_g(top + 1);
  for (const auto& [key, c] : t) {
    in_g[key.first] += Poly<Rational>::monomial(c, key.second);
  }
  std::vector<NFElement> coeffs;
  coeffs.reserve(in_g.size());
  for (const auto& p : in_g) coeffs.push_back(field.from_poly(p));
  return NFPoly(std::move(coeffs));
}

PrimitiveElement nf_primitive_element(const NumberField& base,
                                      const NFPoly& relative_minpoly) {
  if (relative_minpoly.degree() < 1) {
    fail(ErrorCode::ConstantPolynomial, "relative minimal polynomial is constant");
  }
  if (relative_minpoly.lc().field() != base) {
    fail(ErrorCode::FieldMismatch, "relative minimal polynomial over another field");
  }
  const NFPoly q = relative_minpoly.monic();
  if (q.degree() == 1) {
    return {base, base.generator(), -q[0], 0};
  }
  const NFElement gamma = base.generator();
  for (long t = 1; t <= kMaxShift; ++t) {
    const NFElement inv_t = base.from_rational(Rational(t).inverse());
    // β = (Z - γ)/t where Z stands for γ' = γ + t·β.
    const NFPoly beta_of_z({-gamma * inv_t, inv_t});
    const Poly<Rational> norm = nf_norm_poly(compose(q, beta_of_z)).monic();
    if (!is_squarefree(norm)) continue;
    if (!is_irreducible_over_Q(norm)) {
      fail(ErrorCode::NotIrreducible,
           "relative minimal polynomial is reducible over its field");
    }
    const NumberField big = NumberField::trusted(norm);
    const NFElement gp = big.generator();
    // γ is the common root of m(Y) and q((γ' - Y)/t) with γ replaced by Y.
    const NFElement big_inv_t = big.from_rational(Rational(t).inverse());
    const NFPoly w({gp * big_inv_t, -big_inv_t});
    NFPoly p;
    for (std::size_t j = q.size(); j-- > 0;) {
      p = p * w + lift_poly(big, q[j].as_poly());
    }
    const NFPoly g = poly_gcd(p, lift_poly(big, base.minpoly()));
    if (g.degree() != 1) continue;
    const NFElement gamma_img = -g[0];
    const NFElement beta_img = (gp - gamma_img) * big_inv_t;
    return {big, gamma_img, beta_img, t};
  }
  fail(ErrorCode::InternalInconsistency, "primitive element search did not terminate");
}

namespace {

std::vector<NFPoly> trager_squarefree(const NFPoly& a, std::uint64_t seed) {
  if (a.degree() <= 1) return {a.monic()};
  const NumberField field = a.lc().field();
  if (a.degree() * field.degree() > kMaxNormDegree) {
    fail(ErrorCode::DegreeCapExceeded,
         "norm of degree " + std::to_string(a.degree() * field.degree()) +
             " exceeds the cap of " + std::to_string(kMaxNormDegree));
  }
  const NFElement gamma = field.generator();
  const NFElement one = field.one();
  for (long s = 0; s <= kMaxShift; ++s) {
    const NFElement shift = gamma * field.from_rational(Rational(s));
    const NFPoly shifted = compose(a, NFPoly({-shift, one}));
    const Poly<Rational> norm = nf_norm_poly(shifted);
    if (!is_squarefree(norm)) continue;
    const auto factors = factor_over_Q(norm, seed);
    if (factors.size() == 1) return {a.monic()};
    std::vector<NFPoly> out;
    const NFPoly back({shift, one});
    for (const auto& f : factors) {
      const NFPoly h = poly_gcd(shifted, lift_poly(field, f.factor));
      out.push_back(compose(h, back).monic());
    }
    return out;
  }
  fail(ErrorCode::InternalInconsistency, "Trager shift search did not terminate");
}

}  // namespace

std::vector<FactorEntry<NFElement>> trager_factor(const NFPoly& a,
                                                  std::uint64_t rng_seed) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "trager_factor of 0");
  std::vector<FactorEntry<NFElement>> out;
  const auto parts = squarefree_decomposition(a);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (NFPoly& f : trager_squarefree(parts[i], rng_seed)) {
      out.push_back({std::move(f), static_cast<int>(i + 1)});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.factor == y.factor) return x.multiplicity < y.multiplicity;
    return canonical_less(x.factor, y.factor);
  });
  return out;
}

}  // namespace conjprod
