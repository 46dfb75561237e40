#pragma once

#include <cstdint>
#include <vector>

#include "conj/poly.hpp"
#include "conj/prime_field.hpp"

namespace conjprod {

using ZpPoly = Poly<Zp>;

/// Product of all irreducible factors of one degree.
struct DegreePart {
  ZpPoly poly;
  int degree = 0;
};

/// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<DegreePart> ddf(const ZpPoly& a);

/// Cantor-Zassenhaus equal-degree splitting. `a` must be monic with every
/// irreducible factor of degree d. Output is canonically sorted, so it does
/// not depend on the seed.
std::vector<ZpPoly> edf(const ZpPoly& a, int d, std::uint64_t rng_seed);

/// Squarefree factorization in characteristic p, p-th roots included:
/// monic parts with their multiplicities.
std::vector<FactorEntry<Zp>> squarefree_factorization_mod_p(const ZpPoly& a);

/// Complete factorization: a = lc(a) * prod factor^multiplicity, factors
/// monic irreducible and canonically sorted.
std::vector<FactorEntry<Zp>> factor_mod_p(const ZpPoly& a, std::uint64_t rng_seed = 0);

/// Rabin's irreducibility test.
bool is_irreducible_mod_p(const ZpPoly& a);

/// a^e mod m for an arbitrary-precision exponent.
ZpPoly powmod(const ZpPoly& a, const Integer& e, const ZpPoly& m);

}  // namespace conjprod
