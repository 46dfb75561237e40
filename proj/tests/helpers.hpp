#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conj/poly.hpp"
#include "conj/poly_text.hpp"
#include "conj/prime_field.hpp"
#include "conj/rational.hpp"
#include "oracles.hpp"

namespace testing_helpers {

using conjprod::Poly;
using conjprod::Rational;
using conjprod::Zp;

inline Poly<Rational> qpoly(const std::string& s) { return conjprod::parse_rational_poly(s); }

inline Poly<Zp> zpoly(const std::string& s, std::uint64_t p) {
  return conjprod::parse_prime_field_poly(s, conjprod::PrimeField(p));
}

inline oracle::Vec to_oracle(const Poly<Rational>& a) {
  oracle::Vec v;
  for (const Rational& c : a.coeffs()) v.emplace_back(c.num(), c.den());
  for (auto& c : v) c.canonicalize();
  return v;
}

inline Poly<Rational> from_oracle(const oracle::Vec& v) {
  std::vector<Rational> c;
  for (const auto& x : v) c.push_back(Rational::normalize(x.get_num(), x.get_den()));
  return Poly<Rational>(std::move(c));
}

inline oracle::IVec to_ivec(const Poly<Zp>& a) {
  oracle::IVec v;
  for (const Zp& c : a.coeffs()) v.push_back(static_cast<long>(c.residue()));
  return v;
}

/// Random polynomial of exact degree d with coefficients in [-bound, bound].
inline Poly<Rational> random_qpoly(std::mt19937_64& rng, int d, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Rational> c;
  for (int i = 0; i < d; ++i) c.emplace_back(dist(rng));
  long top = 0;
  while (top == 0) top = dist(rng);
  c.emplace_back(top);
  return Poly<Rational>(std::move(c));
}

inline Poly<Zp> random_zpoly(std::mt19937_64& rng, int d, std::uint64_t p, bool monic) {
  const conjprod::PrimeField f(p);
  std::uniform_int_distribution<long> dist(0, static_cast<long>(p) - 1);
  std::vector<Zp> c;
  for (int i = 0; i < d; ++i) c.push_back(f(dist(rng)));
  long top = monic ? 1 : 0;
  while (top == 0) top = dist(rng);
  c.push_back(f(top));
  return Poly<Zp>(std::move(c));
}

inline const std::vector<std::uint64_t>& primes_below_100() {
  static const std::vector<std::uint64_t> v = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                               43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  return v;
}

}  // namespace testing_helpers
