#include "conj/factor_zp.hpp"

#include <algorithm>
#include <random>

#include "conj/error.hpp"

namespace conjprod {

namespace {

constexpr int kMaxSplitAttempts = 256;

ZpPoly one_poly(const Zp& like) { return ZpPoly::constant(like.one_like()); }

void require_monic_squarefree(const ZpPoly& a, const char* who) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, std::string(who) + " of 0");
  if (!a.is_monic()) fail(ErrorCode::NotMonic, std::string(who) + ": input not monic");
  if (!is_squarefree(a)) {
    fail(ErrorCode::NotSquarefree, std::string(who) + ": input not squarefree");
  }
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// X^(p^k) mod m by k Frobenius steps.
ZpPoly frobenius_power_of_x(const ZpPoly& m, std::uint64_t k) {
  const Zp& like = m.lc();
  ZpPoly h = ZpPoly::x(like) % m;
  for (std::uint64_t i = 0; i < k; ++i) h = powmod(h, like.characteristic(), m);
  return h;
}

ZpPoly random_poly(std::mt19937_64& rng, const Zp& like, int below_degree) {
  std::uniform_int_distribution<std::uint64_t> dist(0, like.characteristic() - 1);
  std::vector<Zp> v;
  v.reserve(static_cast<std::size_t>(below_degree));
  for (int i = 0; i < below_degree; ++i) {
    v.push_back(like.from_int(static_cast<std::int64_t>(dist(rng))));
  }
  return ZpPoly(std::move(v));
}

ZpPoly pth_root(const ZpPoly& a) {
  const std::uint64_t p = a.lc().characteristic();
  std::vector<Zp> v;
  for (std::size_t i = 0; i < a.size(); i += p) v.push_back(a[i]);
  return ZpPoly(std::move(v));
}

void sort_canonical(std::vector<ZpPoly>& v) {
  std::sort(v.begin(), v.end(),
            [](const ZpPoly& a, const ZpPoly& b) { return canonical_less(a, b); });
}

}  // namespace

ZpPoly powmod(const ZpPoly& a, const Integer& e, const ZpPoly& m) {
  ZpPoly result = one_poly(m.lc()) % m;
  ZpPoly base = a % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
  }
  return result;
}

std::vector<DegreePart> ddf(const ZpPoly& a) {
  require_monic_squarefree(a, "ddf");
  std::vector<DegreePart> out;
  const Zp& like = a.lc();
  const std::uint64_t p = like.characteristic();
  ZpPoly rest = a;
  ZpPoly h = ZpPoly::x(like) % rest;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, p, rest);
    const ZpPoly g = poly_gcd(h - ZpPoly::x(like), rest);
    if (g.degree() > 0) {
      out.push_back({g, d});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back({rest, rest.degree()});
  return out;
}

std::vector<ZpPoly> edf(const ZpPoly& a, int d, std::uint64_t rng_seed) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "edf of 0");
  if (!a.is_monic()) fail(ErrorCode::NotMonic, "edf: input not monic");
  if (d < 1 || a.degree() % d != 0) {
    fail(ErrorCode::PreconditionViolated,
         "edf: degree " + std::to_string(a.degree()) + " is not a multiple of " +
             std::to_string(d));
  }
  const Zp& like = a.lc();
  const std::uint64_t p = like.characteristic();
  std::mt19937_64 rng(rng_seed);
  Integer half_exponent;
  if (p != 2) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
    half_exponent = (q - 1) / 2;
  }

  std::vector<ZpPoly> out;
  std::vector<ZpPoly> pending{a};
  while (!pending.empty()) {
    ZpPoly cur = std::move(pending.back());
    pending.pop_back();
    if (cur.degree() == d) {
      out.push_back(std::move(cur));
      continue;
    }
    bool split = false;
    for (int attempt = 0; attempt < kMaxSplitAttempts && !split; ++attempt) {
      const ZpPoly b = random_poly(rng, like, cur.degree());
      if (b.degree() < 1) continue;
      ZpPoly w;
      if (p == 2) {
        // Trace of b from GF(2^d) down to GF(2).
        ZpPoly term = b % cur;
        w = term;
        for (int i = 1; i < d; ++i) {
          term = (term * term) % cur;
          w += term;
        }
      } else {
        w = powmod(b, half_exponent, cur) - one_poly(like);
      }
      if (w.is_zero()) continue;
      const ZpPoly g = poly_gcd(w, cur);
      if (g.degree() > 0 && g.degree() < cur.degree()) {
        pending.push_back(cur / g);
        pending.push_back(g);
        split = true;
      }
    }
    if (!split) {
      fail(ErrorCode::PreconditionViolated,
           "edf: could not split a factor of degree " +
               std::to_string(cur.degree()) + " into degree-" +
               std::to_string(d) + " pieces");
    }
  }
  for (const ZpPoly& f : out) {
    if (!is_irreducible_mod_p(f)) {
      fail(ErrorCode::PreconditionViolated,
           "edf: input has an irreducible factor of degree other than " +
               std::to_string(d));
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<FactorEntry<Zp>> squarefree_factorization_mod_p(const ZpPoly& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree factorization of 0");
  std::vector<FactorEntry<Zp>> out;
  if (a.degree() < 1) return out;
  const ZpPoly f = a.monic();
  const Zp& like = f.lc();
  const std::uint64_t p = like.characteristic();

  const ZpPoly df = derivative(f);
  if (df.is_zero()) {
    for (auto& e : squarefree_factorization_mod_p(pth_root(f))) {
      out.push_back({e.factor, e.multiplicity * static_cast<int>(p)});
    }
    return out;
  }
  ZpPoly c = poly_gcd(f, df);
  ZpPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    const ZpPoly y = poly_gcd(w, c);
    const ZpPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& e : squarefree_factorization_mod_p(pth_root(c.monic()))) {
      out.push_back({e.factor, e.multiplicity * static_cast<int>(p)});
    }
  }
  return out;
}

std::vector<FactorEntry<Zp>> factor_mod_p(const ZpPoly& a, std::uint64_t rng_seed) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "factor_mod_p of 0");
  std::vector<FactorEntry<Zp>> out;
  for (const auto& part : squarefree_factorization_mod_p(a)) {
    for (const DegreePart& dp : ddf(part.factor)) {
      for (ZpPoly& f : edf(dp.poly, dp.degree, rng_seed)) {
        out.push_back({std::move(f), part.multiplicity});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.factor == y.factor) return x.multiplicity < y.multiplicity;
    return canonical_less(x.factor, y.factor);
  });
  return out;
}

bool is_irreducible_mod_p(const ZpPoly& a) {
  if (a.degree() < 1) {
    fail(ErrorCode::ConstantPolynomial, "irreducibility of a constant");
  }
  const ZpPoly f = a.monic();
  const auto n = static_cast<std::uint64_t>(f.degree());
  if (n == 1) return true;
  const ZpPoly x = ZpPoly::x(f.lc());
  if (frobenius_power_of_x(f, n) != x % f) return false;
  for (std::uint64_t q : prime_divisors(n)) {
    const ZpPoly h = frobenius_power_of_x(f, n / q) - x;
    if (poly_gcd(h, f).degree() > 0) return false;
  }
  return true;
}

}  // namespace conjprod
