#include "conj/conjtheorem.hpp"

#include <numeric>
#include <set>

#include "conj/factor_qq.hpp"
#include "conj/linalg.hpp"

namespace conjprod {

FrobeniusContext::FrobeniusContext(GaloisField m) : m_(std::move(m)) {
  GFElement r = m_.generator();
  for (int k = 0; k < m_.degree(); ++k) {
    roots_.push_back(r);
    r = r.frobenius();
  }
}

std::shared_ptr<const RationalContext> rational_context(const Poly<Rational>& f,
                                                        std::uint64_t rng_seed) {
  SplittingField m = build_splitting_field(f, rng_seed);
  std::vector<Automorphism> group = automorphisms(m);
  return std::make_shared<const RationalContext>(std::move(m), std::move(group));
}

std::shared_ptr<const FrobeniusContext> frobenius_context(const ZpPoly& f) {
  if (f.degree() < 1) fail(ErrorCode::ConstantPolynomial, "f is constant");
  const std::uint64_t p = f.lc().characteristic();
  if (p > kMaxFrobeniusPrime) {
    fail(ErrorCode::CapExceeded,
         "p = " + std::to_string(p) + " exceeds " + std::to_string(kMaxFrobeniusPrime));
  }
  if (f.degree() > kMaxFrobeniusDegree) {
    fail(ErrorCode::CapExceeded, "deg f = " + std::to_string(f.degree()) + " exceeds " +
                                     std::to_string(kMaxFrobeniusDegree));
  }
  return std::make_shared<const FrobeniusContext>(GaloisField::create(f));
}

namespace {

// Rows are the M-coordinates of the given elements.
Matrix<Rational> coordinate_rows(const std::vector<NFElement>& elems, int dim) {
  Matrix<Rational> mat(elems.size(), static_cast<std::size_t>(dim), Rational(0));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& c = elems[i].coords();
    for (std::size_t j = 0; j < c.size(); ++j) mat(i, j) = c[j];
  }
  return mat;
}

std::vector<NFElement> powers(const NFElement& a, int count) {
  std::vector<NFElement> out{a.one_like()};
  for (int k = 1; k < count; ++k) out.push_back(out.back() * a);
  return out;
}

}  // namespace

CoefficientField coefficient_field(const RationalSetting& s) {
  const NumberField& m = s.ctx->field();
  NFElement beta = m.zero();
  Poly<Rational> beta_min = Poly<Rational>::x(Rational(1));

  for (std::size_t i = 0; i < s.g.size(); ++i) {
    const NFElement& a = s.g[i];
    if (a.is_rational()) continue;
    const int db = beta_min.degree();
    const int da = nf_minimal_polynomial(a).degree();
    // [Q(β, a):Q] is the dimension of the span of β^i a^j.
    std::vector<NFElement> products;
    const auto bp = powers(beta, db);
    const auto ap = powers(a, da);
    for (const auto& x : bp) {
      for (const auto& y : ap) products.push_back(x * y);
    }
    const int dim = static_cast<int>(rank(coordinate_rows(products, m.degree())));
    if (dim == db) continue;

    bool found = false;
    for (long t = 1; t <= 1000 && !found; ++t) {
      const NFElement cand = beta + a * m.from_rational(Rational(t));
      Poly<Rational> mp = nf_minimal_polynomial(cand);
      if (mp.degree() == dim) {
        beta = cand;
        beta_min = std::move(mp);
        found = true;
      }
    }
    if (!found) {
      fail(ErrorCode::InternalInconsistency, "no primitive element found for L");
    }
  }
  return {beta_min, beta};
}

int coefficient_field_degree(const RationalSetting& s) {
  return coefficient_field(s).degree();
}

int coefficient_field_degree(const FrobeniusSetting& s) {
  const int d = s.ctx->field().degree();
  int l = 1;
  for (std::size_t i = 0; i < s.g.size(); ++i) {
    const GFElement& a = s.g[i];
    GFElement b = a.frobenius();
    int k = 1;
    while (!(b == a)) {
      b = b.frobenius();
      ++k;
      if (k > d) fail(ErrorCode::InternalInconsistency, "Frobenius orbit exceeds [M:K]");
    }
    l = std::lcm(l, k);
  }
  return l;
}

namespace {

bool irreducible_over_coefficient_field(const RationalSetting& s) {
  const CoefficientField cf = coefficient_field(s);
  if (cf.degree() == 1) {
    const Poly<Rational> gq =
        s.g.map([](const NFElement& c) { return c.rational_value(); });
    return is_irreducible_over_Q(gq);
  }
  // Write each coefficient of g in the basis 1, β, ..., β^(dL-1) of L.
  const NumberField l = NumberField::trusted(cf.minpoly);
  const int dl = cf.degree();
  const int dm = s.ctx->field().degree();
  const auto bp = powers(cf.primitive, dl);
  Matrix<Rational> basis(static_cast<std::size_t>(dm), static_cast<std::size_t>(dl),
                         Rational(0));
  for (int j = 0; j < dl; ++j) {
    const auto& c = bp[static_cast<std::size_t>(j)].coords();
    for (std::size_t i = 0; i < c.size(); ++i) basis(i, static_cast<std::size_t>(j)) = c[i];
  }
  std::vector<NFElement> coeffs;
  for (std::size_t k = 0; k < s.g.size(); ++k) {
    std::vector<Rational> rhs(static_cast<std::size_t>(dm), Rational(0));
    const auto& c = s.g[k].coords();
    std::copy(c.begin(), c.end(), rhs.begin());
    const auto x = solve(basis, rhs, Rational(0));
    if (!x) fail(ErrorCode::InternalInconsistency, "coefficient of g outside L");
    coeffs.push_back(l.element(*x));
  }
  const NFPoly gl(std::move(coeffs));
  const auto factors = trager_factor(gl);
  return factors.size() == 1 && factors[0].multiplicity == 1 &&
         factors[0].factor.degree() == gl.degree();
}

}  // namespace

std::vector<std::pair<std::string, bool>> corollary_hypotheses(const RationalSetting& s) {
  return {
      {"g_irreducible_over_L", irreducible_over_coefficient_field(s)},
      {"f_primitive_rooted",
       static_cast<std::size_t>(s.ctx->f().degree()) == s.ctx->group_order()},
  };
}

std::vector<std::pair<std::string, bool>> corollary_hypotheses(const FrobeniusSetting& s) {
  // Over L = F_(p^l) the roots of g split into orbits of Frob^l; g is
  // irreducible over L exactly when there is one orbit.
  const auto& roots = s.ctx->roots();
  const std::size_t d = roots.size();
  const auto l = static_cast<std::size_t>(coefficient_field_degree(s));
  std::set<std::size_t> root_set;
  for (std::size_t k = 0; k < d; ++k) {
    if (poly_eval(s.g, roots[k]).is_zero()) root_set.insert(k);
  }
  std::set<std::size_t> orbit;
  if (!root_set.empty()) {
    std::size_t k = *root_set.begin();
    while (orbit.insert(k).second) k = (k + l) % d;
  }
  const bool irreducible =
      !root_set.empty() && orbit == root_set &&
      static_cast<int>(root_set.size()) == s.g.degree();
  return {
      {"g_irreducible_over_L", irreducible},
      {"f_primitive_rooted",
       static_cast<std::size_t>(s.ctx->f().degree()) == s.ctx->group_order()},
  };
}

}  // namespace conjprod
