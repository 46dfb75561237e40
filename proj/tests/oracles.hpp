#pragma once

// Slow, independent reference computations. Nothing here calls into the
// library's polynomial or factoring code; values are raw vectors so a bug in
// the library cannot leak into its own oracle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;  // ascending coefficients

inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Vec mul(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, Q(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

/// Exact quotient, or nullopt when b does not divide a.
inline std::optional<Vec> exact_div(Vec a, const Vec& b) {
  trim(a);
  if (a.empty()) return Vec{};
  if (a.size() < b.size()) return std::nullopt;
  Vec q(a.size() - b.size() + 1, Q(0));
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const Q t = a[k] / b.back();
    q[k - b.size() + 1] = t;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] -= t * b[j];
    if (k == b.size() - 1) break;
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

inline Vec monic(Vec a) {
  trim(a);
  const Q l = a.back();
  for (Q& c : a) c /= l;
  return a;
}

/// Determinant by Gaussian elimination over Q.
inline Q determinant(std::vector<Vec> m) {
  const std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Q sylvester_resultant(const Vec& a, const Vec& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  if (m == 0 && n == 0) return 1;
  const std::size_t size = m + n;
  std::vector<Vec> s(size, Vec(size, Q(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
  }
  return determinant(s);
}

// ---- brute force over F_p on int vectors ---------------------------------

using IVec = std::vector<long>;

inline void trim(IVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long inv_mod(long a, long p) {
  long r = 1;
  for (long k = 0; k < p - 2; ++k) r = r * a % p;
  return r;
}

inline std::optional<IVec> exact_div_mod(IVec a, const IVec& b, long p) {
  trim(a);
  if (a.size() < b.size()) return std::nullopt;
  const long inv = inv_mod(b.back(), p);
  IVec q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k >= b.size(); --k) {
    const long t = a[k - 1] * inv % p;
    q[k - b.size()] = t;
    for (std::size_t j = 0; j < b.size(); ++j) {
      long& x = a[k - b.size() + j];
      x = ((x - t * b[j]) % p + p) % p;
    }
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  return q;
}

/// All monic polynomials of exact degree d over F_p, in counting order.
inline std::vector<IVec> monic_of_degree(int d, long p) {
  std::vector<IVec> out;
  IVec c(static_cast<std::size_t>(d) + 1, 0);
  c.back() = 1;
  while (true) {
    out.push_back(c);
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(d) && ++c[i] == p) c[i++] = 0;
    if (i == static_cast<std::size_t>(d)) break;
  }
  return out;
}

/// Monic irreducible factors with multiplicities by repeatedly dividing out
/// the lowest-degree monic divisor. The map key is the coefficient vector.
inline std::map<IVec, int> factor_mod_p_brute(IVec a, long p) {
  trim(a);
  const long inv = inv_mod(a.back(), p);
  for (long& c : a) c = c * inv % p;
  std::map<IVec, int> out;
  while (a.size() > 1) {
    bool found = false;
    for (int d = 1; d < static_cast<int>(a.size()) && !found; ++d) {
      for (const IVec& cand : monic_of_degree(d, p)) {
        if (auto q = exact_div_mod(a, cand, p)) {
          ++out[cand];
          a = *q;
          found = true;
          break;
        }
      }
    }
  }
  return out;
}

inline bool has_root_mod_p(const IVec& a, long p) {
  for (long x = 0; x < p; ++x) {
    long acc = 0;
    for (std::size_t k = a.size(); k-- > 0;) acc = (acc * x + a[k]) % p;
    if (acc == 0) return true;
  }
  return false;
}

// ---- factoring small integer polynomials over Q --------------------------

inline std::vector<long> divisors(long n) {
  n = std::labs(n);
  std::vector<long> out;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline Vec to_vec(const std::vector<long>& a) {
  Vec v;
  for (long c : a) v.emplace_back(c);
  trim(v);
  return v;
}

/// Monic irreducible factors over Q of an integer polynomial of degree <= 4,
/// with multiplicities: rational roots by the p/q test, then quadratic
/// factors by searching integer a x^2 + b x + c with a | lc and c | const.
inline std::map<Vec, int> factor_over_Q_small(const std::vector<long>& coeffs) {
  Vec a = to_vec(coeffs);
  std::map<Vec, int> out;
  // x^k factors first so the constant term is nonzero.
  while (a.size() > 1 && a[0] == 0) {
    ++out[Vec{Q(0), Q(1)}];
    a.erase(a.begin());
  }
  auto integer_lc_const = [](const Vec& v) {
    mpz_class l = 1;
    for (const Q& c : v) l = lcm(l, c.get_den());
    return std::pair<long, long>(mpz_class(v.back() * l).get_si(),
                                 mpz_class(v.front() * l).get_si());
  };
  bool progress = true;
  while (a.size() > 2 && progress) {
    progress = false;
    const auto [lc, c0] = integer_lc_const(a);
    for (long q : divisors(lc)) {
      for (long pn : divisors(c0)) {
        for (long sign : {1L, -1L}) {
          const Q r(sign * pn, q);
          const Vec lin = {Q(-r), Q(1)};
          if (auto quo = exact_div(a, lin)) {
            ++out[lin];
            a = *quo;
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  if (a.size() == 5) {
    const auto [lc, c0] = integer_lc_const(a);
    bool split = false;
    for (long qa : divisors(lc)) {
      for (long qc : divisors(c0)) {
        for (long sc : {1L, -1L}) {
          for (long b = -64; b <= 64 && !split; ++b) {
            const Vec quad = {Q(sc * qc), Q(b), Q(qa)};
            if (auto quo = exact_div(a, quad)) {
              ++out[monic(quad)];
              ++out[monic(*quo)];
              split = true;
            }
          }
        }
      }
    }
    if (!split) ++out[monic(a)];
  } else if (a.size() >= 2) {
    ++out[monic(a)];
  }
  // Merge equal factors found through different routes.
  return out;
}

// ---- Q(zeta_5) as Z[C_5] modulo 1 + z + ... + z^4 ------------------------

/// Element of Q(ζ5) as coefficients on ζ^0..ζ^4, normalized so the ζ^4
/// coefficient is zero (then the first four entries are power-basis
/// coordinates modulo Φ5).
struct Cyclo5 {
  std::vector<Q> c = std::vector<Q>(5, Q(0));

  Cyclo5 normalized() const {
    Cyclo5 r = *this;
    const Q t = r.c[4];
    for (Q& x : r.c) x -= t;
    return r;
  }
  friend Cyclo5 operator+(const Cyclo5& a, const Cyclo5& b) {
    Cyclo5 r;
    for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] + b.c[i];
    return r.normalized();
  }
  friend Cyclo5 operator*(const Cyclo5& a, const Cyclo5& b) {
    Cyclo5 r;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) r.c[(i + j) % 5] += a.c[i] * b.c[j];
    }
    return r.normalized();
  }
  friend bool operator==(const Cyclo5& a, const Cyclo5& b) {
    return a.normalized().c == b.normalized().c;
  }
  friend bool operator<(const Cyclo5& a, const Cyclo5& b) {
    return a.normalized().c < b.normalized().c;
  }
  static Cyclo5 zeta_pow(int k) {
    Cyclo5 r;
    r.c[((k % 5) + 5) % 5] = 1;
    return r.normalized();
  }
  static Cyclo5 rational(const Q& q) {
    Cyclo5 r;
    r.c[0] = q;
    return r.normalized();
  }
  /// ζ -> ζ^k.
  Cyclo5 galois(int k) const {
    Cyclo5 r;
    for (int i = 0; i < 5; ++i) r.c[(i * k) % 5] += c[i];
    return r.normalized();
  }
  bool is_rational() const {
    const Cyclo5 n = normalized();
    return n.c[1] == 0 && n.c[2] == 0 && n.c[3] == 0;
  }
};

using CycloPoly = std::vector<Cyclo5>;

inline CycloPoly cyclo_mul(const CycloPoly& a, const CycloPoly& b) {
  CycloPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

/// ∏ (X - ζ^e) over the exponents.
inline CycloPoly cyclo_from_roots(const std::vector<int>& exps) {
  CycloPoly g{Cyclo5::rational(1)};
  for (int e : exps) {
    g = cyclo_mul(g, CycloPoly{Cyclo5::rational(-1) * Cyclo5::zeta_pow(e),
                               Cyclo5::rational(1)});
  }
  return g;
}

struct Cyclo5Result {
  std::size_t orbit_size;
  std::optional<Vec> product;  // when every coefficient is rational
};

/// Orbit of g under ζ -> ζ^k (k = 1..4) and the product of its members.
inline Cyclo5Result cyclo5_orbit_product(const std::vector<int>& exps) {
  const CycloPoly g = cyclo_from_roots(exps);
  std::vector<CycloPoly> orbit;
  for (int k = 1; k <= 4; ++k) {
    CycloPoly c;
    for (const auto& x : g) c.push_back(x.galois(k));
    if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) orbit.push_back(c);
  }
  CycloPoly h{Cyclo5::rational(1)};
  for (const auto& c : orbit) h = cyclo_mul(h, c);
  Vec out;
  for (const auto& x : h) {
    if (!x.is_rational()) return {orbit.size(), std::nullopt};
    out.push_back(x.normalized().c[0]);
  }
  return {orbit.size(), out};
}

// ---- field degrees by direct counting ----------------------------------

/// a mod b over Q, b nonzero.
inline Vec rem(Vec a, const Vec& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Q t = a.back() / b.back();
    const std::size_t s = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= t * b[j];
    trim(a);
  }
  return a;
}

/// [M:Q] for an irreducible integer polynomial f, by classical counts:
/// quadratics give 2, cubics give 3 or 6 by whether the discriminant is a
/// square, and otherwise f must split in Q(α) with every root a power of α
/// (then [M:Q] = deg f). nullopt when none of these applies.
inline std::optional<int> splitting_degree_classical(const std::vector<long>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 2) return 2;
  if (d == 3) {
    const mpz_class a = f[3], b = f[2], c = f[1], e = f[0];
    const mpz_class disc = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * e - 27 * a * a * e * e +
                           18 * a * b * c * e;
    return disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()) ? 3 : 6;
  }
  const Vec fv = to_vec(f);
  std::vector<Vec> found;
  for (int k = 1; k <= 4 * d * d; ++k) {
    Vec xk(static_cast<std::size_t>(k) + 1, Q(0));
    xk.back() = 1;
    xk = rem(xk, fv);
    Vec acc;  // f(x^k) mod f by Horner
    for (std::size_t i = fv.size(); i-- > 0;) {
      acc = rem(mul(acc, xk), fv);
      if (acc.empty()) acc = Vec{fv[i]};
      else acc[0] += fv[i];
      trim(acc);
    }
    acc = rem(acc, fv);
    if (acc.empty() && std::find(found.begin(), found.end(), xk) == found.end()) found.push_back(xk);
  }
  if (static_cast<int>(found.size()) == d) return d;
  return std::nullopt;
}

/// Dimension over F_p of the algebra generated by the given elements of
/// F_p[x]/(m), m irreducible, i.e. the degree of the field they generate.
inline int generated_field_degree(const std::vector<IVec>& gens, const IVec& m, long p) {
  const std::size_t d = m.size() - 1;
  auto mulmod = [&](const IVec& a, const IVec& b) {
    IVec c(2 * d, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    const long inv = inv_mod(m.back(), p);
    for (std::size_t k = c.size(); k-- > d;) {
      const long t = c[k] * inv % p;
      if (t == 0) continue;
      for (std::size_t j = 0; j <= d; ++j) c[k - d + j] = ((c[k - d + j] - t * m[j]) % p + p) % p;
    }
    c.resize(d);
    return c;
  };
  // Echelon basis keyed by pivot position.
  std::map<std::size_t, IVec> basis;
  auto reduce = [&](IVec v) {
    v.resize(d, 0);
    for (std::size_t i = d; i-- > 0;) {
      if (v[i] == 0) continue;
      const auto it = basis.find(i);
      if (it == basis.end()) return v;
      const long t = v[i] * inv_mod(it->second[i], p) % p;
      for (std::size_t j = 0; j < d; ++j) v[j] = ((v[j] - t * it->second[j]) % p + p) % p;
    }
    return v;
  };
  std::vector<IVec> queue{IVec{1}};
  while (!queue.empty()) {
    IVec v = reduce(queue.back());
    queue.pop_back();
    std::size_t piv = d;
    for (std::size_t i = d; i-- > 0;) {
      if (v[i] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == d) continue;
    basis[piv] = v;
    for (const IVec& g : gens) queue.push_back(mulmod(v, g));
  }
  return static_cast<int>(basis.size());
}

}  // namespace oracle
