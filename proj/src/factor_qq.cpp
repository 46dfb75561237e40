#include "conj/factor_qq.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "conj/error.hpp"

namespace conjprod {

namespace {

constexpr int kPrimeCandidates = 6;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer mod(const Integer& v, const Integer& m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return r;
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (Integer& c : a) c = mod(c, m);
  trim(a);
  return a;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (Integer& c : a) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  return reduce(mul(a, b), m);
}

ZPoly scale(const ZPoly& a, const Integer& s) {
  ZPoly r = a;
  for (Integer& c : r) c *= s;
  trim(r);
  return r;
}

/// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b,
                                     const Integer& m) {
  ZPoly r = reduce(a, m);
  if (deg(r) < deg(b)) return {{}, r};
  const std::size_t db = b.size() - 1;
  ZPoly q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    const Integer t = mod(r[k], m);
    if (t == 0) continue;
    q[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= t * b[j];
  }
  r.resize(db);
  return {reduce(q, m), reduce(r, m)};
}

ZPoly make_monic_mod(const ZPoly& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), m.get_mpz_t()) == 0) {
    fail(ErrorCode::InternalInconsistency, "leading coefficient not invertible");
  }
  return reduce(scale(a, inv), m);
}

ZPoly from_zp(const ZpPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (const Zp& c : a.coeffs()) r.emplace_back(static_cast<unsigned long>(c.residue()));
  return r;
}

ZpPoly to_zp(const ZPoly& a, const PrimeField& field) {
  const Integer p(static_cast<unsigned long>(field.modulus()));
  std::vector<Zp> v;
  v.reserve(a.size());
  for (const Integer& c : a) v.push_back(field(static_cast<std::int64_t>(mod(c, p).get_ui())));
  return ZpPoly(std::move(v));
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const Integer& c : a) g = gcd(g, c);
  return g;
}

ZPoly primitive(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  for (Integer& c : a) c /= g;
  return a;
}

/// Exact quotient a / b over Z, if it exists.
std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (deg(a) < deg(b)) return std::nullopt;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    const Integer t = r[k] / b.back();
    q[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= t * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

struct LiftPair {
  ZPoly g;
  ZPoly h;
};

/// Lifts f ≡ g*h (mod p) with s*g + t*h ≡ 1 to modulus `target` by repeated
/// squaring of the modulus. h is monic.
LiftPair lift_two(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t,
                  const Integer& p, const Integer& target) {
  for (Integer m = p; m < target; m *= m) {
    const Integer m2 = m * m;
    const ZPoly e = reduce(sub(f, mul(g, h)), m2);
    auto [q, r] = divmod_monic(mul(s, e), h, m2);
    const ZPoly g_new = reduce(add(g, add(mul(t, e), mul(q, g))), m2);
    const ZPoly h_new = reduce(add(h, r), m2);
    const ZPoly b = reduce(sub(add(mul(s, g_new), mul(t, h_new)), ZPoly{1}), m2);
    auto [c, d] = divmod_monic(mul(s, b), h_new, m2);
    s = reduce(sub(s, d), m2);
    t = reduce(sub(t, add(mul(t, b), mul(c, g_new))), m2);
    g = g_new;
    h = h_new;
  }
  return {g, h};
}

void lift_tree(const ZPoly& f, std::span<const ZpPoly> factors,
               const PrimeField& field, const Integer& target,
               std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    out.push_back(make_monic_mod(reduce(f, target), target));
    return;
  }
  const std::size_t mid = factors.size() / 2;
  const ZpPoly fp = to_zp(f, field);
  ZpPoly left = ZpPoly::constant(fp.lc());
  for (std::size_t i = 0; i < mid; ++i) left *= factors[i];
  ZpPoly right = ZpPoly::constant(fp.lc().one_like());
  for (std::size_t i = mid; i < factors.size(); ++i) right *= factors[i];
  const auto [g, s, t] = poly_xgcd(left, right);
  if (g.degree() != 0) {
    fail(ErrorCode::NotCoprime, "modular factors are not pairwise coprime");
  }
  const Integer p(static_cast<unsigned long>(field.modulus()));
  const LiftPair lifted =
      lift_two(f, from_zp(left), from_zp(right), from_zp(s), from_zp(t), p, target);
  lift_tree(lifted.g, factors.subspan(0, mid), field, target, out);
  lift_tree(lifted.h, factors.subspan(mid), field, target, out);
}

bool good_prime(const ZPoly& a, std::uint64_t p) {
  const Integer P(static_cast<unsigned long>(p));
  if (mod(a.back(), P) == 0) return false;
  return is_squarefree(to_zp(a, PrimeField(p)));
}

std::uint64_t next_prime(std::uint64_t p) {
  do {
    ++p;
  } while (!is_prime(Integer(static_cast<unsigned long>(p))));
  return p;
}

/// Factors a primitive squarefree integer polynomial with positive leading
/// coefficient into primitive irreducible integer polynomials.
std::vector<ZPoly> zassenhaus(const ZPoly& a, std::uint64_t seed) {
  if (deg(a) <= 1) return {a};

  // Among the first few good primes keep the one with the fewest factors.
  std::uint64_t best_p = 0;
  std::vector<ZpPoly> best;
  std::uint64_t p = 1;
  for (int found = 0; found < kPrimeCandidates;) {
    p = next_prime(p);
    if (!good_prime(a, p)) continue;
    ++found;
    const ZpPoly ap = to_zp(a, PrimeField(p));
    std::vector<ZpPoly> fs;
    for (auto& e : factor_mod_p(ap, seed)) fs.push_back(std::move(e.factor));
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) return {a};
  }
  if (best.size() > kMaxModularFactors) {
    fail(ErrorCode::CapExceeded,
         "recombination over " + std::to_string(best.size()) +
             " modular factors exceeds the cap of " +
             std::to_string(kMaxModularFactors));
  }

  const HenselLift lift = hensel_lift(a, best, factor_coefficient_bound(a));
  const Integer& m = lift.modulus;

  std::vector<ZPoly> found;
  std::vector<ZPoly> u = lift.factors;
  ZPoly f = a;
  for (std::size_t s = 1; 2 * s <= u.size();) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      ZPoly cand{f.back()};
      for (std::size_t i : idx) cand = mul_mod(cand, u[i], m);
      cand = primitive(symmetric(cand, m));
      if (auto q = exact_quotient(f, cand)) {
        found.push_back(cand);
        f = *q;
        std::vector<ZPoly> rest;
        for (std::size_t i = 0, j = 0; i < u.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
          } else {
            rest.push_back(u[i]);
          }
        }
        u = std::move(rest);
        hit = true;
        break;
      }
      // Next s-subset in lexicographic order.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == u.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (deg(f) > 0) found.push_back(primitive(f));
  return found;
}

Poly<Rational> monic_rational(const ZPoly& a) { return to_rational_poly(a).monic(); }

}  // namespace

ZPoly primitive_integer_part(const Poly<Rational>& a) {
  Integer l = 1;
  for (const Rational& c : a.coeffs()) l = lcm(l, c.den());
  ZPoly r;
  r.reserve(a.size());
  for (const Rational& c : a.coeffs()) r.push_back(c.num() * (l / c.den()));
  return primitive(std::move(r));
}

Poly<Rational> to_rational_poly(const ZPoly& a) {
  std::vector<Rational> v;
  v.reserve(a.size());
  for (const Integer& c : a) v.emplace_back(c);
  return Poly<Rational>(std::move(v));
}

Integer factor_coefficient_bound(const ZPoly& a) {
  Integer norm2 = 0;
  for (const Integer& c : a) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(std::max(deg(a), 0)));
  return abs(a.back()) * pow2 * (root + 1);
}

std::uint64_t choose_good_prime(const Poly<Rational>& a) {
  if (a.degree() < 1) fail(ErrorCode::ConstantPolynomial, "choose_good_prime of a constant");
  if (!is_squarefree(a)) fail(ErrorCode::NotSquarefree, "choose_good_prime: input not squarefree");
  const ZPoly z = primitive_integer_part(a);
  for (std::uint64_t p = 2;; p = next_prime(p)) {
    if (good_prime(z, p)) return p;
  }
}

HenselLift hensel_lift(const ZPoly& a, const std::vector<ZpPoly>& factors,
                       const Integer& target_bound) {
  if (factors.empty()) fail(ErrorCode::PreconditionViolated, "no factors to lift");
  HenselLift out;
  out.prime = factors.front().lc().characteristic();
  const Integer p(static_cast<unsigned long>(out.prime));
  out.modulus = p;
  out.exponent = 1;
  while (out.modulus <= 2 * target_bound) {
    out.modulus *= out.modulus;
    out.exponent *= 2;
  }
  for (const ZpPoly& f : factors) {
    if (!f.is_monic()) fail(ErrorCode::NotMonic, "modular factors must be monic");
  }
  lift_tree(a, factors, PrimeField(out.prime), out.modulus, out.factors);
  return out;
}

std::vector<FactorEntry<Rational>> factor_over_Q(const Poly<Rational>& a,
                                                 std::uint64_t rng_seed) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "factor_over_Q of 0");
  std::vector<FactorEntry<Rational>> out;
  const std::vector<Poly<Rational>> parts = squarefree_decomposition(a);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (const ZPoly& f : zassenhaus(primitive_integer_part(parts[i]), rng_seed)) {
      out.push_back({monic_rational(f), static_cast<int>(i + 1)});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.factor == y.factor) return x.multiplicity < y.multiplicity;
    return canonical_less(x.factor, y.factor);
  });
  return out;
}

bool is_irreducible_over_Q(const Poly<Rational>& a) {
  if (a.degree() < 1) fail(ErrorCode::ConstantPolynomial, "irreducibility of a constant");
  const auto fs = factor_over_Q(a);
  return fs.size() == 1 && fs.front().multiplicity == 1;
}

}  // namespace conjprod
