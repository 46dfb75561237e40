#pragma once

#include <cstdint>
#include <vector>

#include "conj/factor_zp.hpp"
#include "conj/poly.hpp"
#include "conj/rational.hpp"

namespace conjprod {

/// Integer polynomial, ascending powers, no trailing zeros.
using ZPoly = std::vector<Integer>;

/// Clears denominators and content; the result has positive leading
/// coefficient.
ZPoly primitive_integer_part(const Poly<Rational>& a);
Poly<Rational> to_rational_poly(const ZPoly& a);

/// Landau-Mignotte style bound: every integer factor of a, multiplied by
/// lc(a), has coefficients of absolute value at most
///   |lc(a)| * 2^deg(a) * (floor(sqrt(sum a_i^2)) + 1).
Integer factor_coefficient_bound(const ZPoly& a);

/// Smallest prime p with p not dividing lc(a) and a mod p squarefree.
std::uint64_t choose_good_prime(const Poly<Rational>& a);

struct HenselLift {
  std::uint64_t prime = 0;
  unsigned exponent = 0;  // modulus = prime^exponent, exponent a power of 2
  Integer modulus;
  std::vector<ZPoly> factors;  // monic, coefficients in [0, modulus)
};

/// Quadratic Hensel lifting of a ≡ lc(a) * prod factors (mod p) to the
/// first modulus p^(2^j) exceeding 2 * target_bound. The modular factors
/// must be monic and pairwise coprime.
HenselLift hensel_lift(const ZPoly& a, const std::vector<ZpPoly>& factors,
                       const Integer& target_bound);

/// Upper limit on modular factors fed to subset recombination.
inline constexpr std::size_t kMaxModularFactors = 12;

/// Factorization over Q: monic irreducible factors with multiplicities,
/// canonically sorted. Zassenhaus: reduce mod a good prime, Hensel lift past
/// the coefficient bound, recombine subsets of lifted factors by trial
/// division.
std::vector<FactorEntry<Rational>> factor_over_Q(const Poly<Rational>& a,
                                                 std::uint64_t rng_seed = 0);

bool is_irreducible_over_Q(const Poly<Rational>& a);

}  // namespace conjprod
