#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "conj/error.hpp"
#include "conj/galois_field.hpp"
#include "conj/numfield.hpp"
#include "conj/poly.hpp"
#include "conj/poly_text.hpp"
#include "conj/report.hpp"
#include "conj/splitting.hpp"

namespace conjprod {

/// K = Q: the splitting field of f and its automorphism group.
class RationalContext {
 public:
  using Element = NFElement;
  using Base = Rational;

  RationalContext(SplittingField m, std::vector<Automorphism> group)
      : m_(std::move(m)), group_(std::move(group)) {}

  const SplittingField& splitting() const { return m_; }
  const NumberField& field() const { return m_.field(); }
  const std::vector<Automorphism>& group() const { return group_; }
  std::size_t group_order() const { return group_.size(); }
  NFPoly act(std::size_t k, const NFPoly& p) const { return apply_to_poly(group_[k], p); }
  const std::vector<NFElement>& roots() const { return m_.roots(); }
  const Poly<Rational>& f() const { return m_.source(); }
  NFPoly f_over_M() const { return m_.source_over_field(); }
  std::string base_name() const { return "Q"; }

  static std::optional<Rational> to_base(const NFElement& a) {
    if (!a.is_rational()) return std::nullopt;
    return a.rational_value();
  }

 private:
  SplittingField m_;
  std::vector<Automorphism> group_;
};

/// K = F_p: M = F_p[Y]/(f), roots Y^(p^k), G generated by Frobenius.
class FrobeniusContext {
 public:
  using Element = GFElement;
  using Base = Zp;

  explicit FrobeniusContext(GaloisField m);

  const GaloisField& field() const { return m_; }
  std::size_t group_order() const { return static_cast<std::size_t>(m_.degree()); }
  GFPoly act(std::size_t k, const GFPoly& p) const {
    return p.map([&](const GFElement& c) { return c.frobenius(k); });
  }
  /// roots()[k] = α^(p^k).
  const std::vector<GFElement>& roots() const { return roots_; }
  const ZpPoly& f() const { return m_.modulus(); }
  GFPoly f_over_M() const { return lift_poly(m_, m_.modulus()); }
  std::string base_name() const { return "F_" + std::to_string(m_.characteristic()); }

  static std::optional<Zp> to_base(const GFElement& a) {
    if (!a.in_prime_field()) return std::nullopt;
    return a.prime_value();
  }

 private:
  GaloisField m_;
  std::vector<GFElement> roots_;
};

inline constexpr int kMaxFrobeniusDegree = 12;
inline constexpr std::uint64_t kMaxFrobeniusPrime = 97;

/// Builds M and G for f over Q; throws NotIrreducible, NotSeparable or
/// DegreeCapExceeded from the splitting-field construction.
std::shared_ptr<const RationalContext> rational_context(const Poly<Rational>& f,
                                                        std::uint64_t rng_seed = 0);

/// f irreducible over F_p with deg f <= 12 and p <= 97.
std::shared_ptr<const FrobeniusContext> frobenius_context(const ZpPoly& f);

/// f together with a divisor g in M[X].
template <class Ctx>
struct ConjugateSetting {
  std::shared_ptr<const Ctx> ctx;
  Poly<typename Ctx::Element> g;
};

using RationalSetting = ConjugateSetting<RationalContext>;
using FrobeniusSetting = ConjugateSetting<FrobeniusContext>;

/// prod over i in indices of (X - roots[i]).
template <class Ctx>
Poly<typename Ctx::Element> divisor_from_roots(const Ctx& ctx,
                                               const std::vector<std::size_t>& indices) {
  if (indices.empty()) fail(ErrorCode::EmptySet, "root index set is empty");
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::PreconditionViolated, "root index repeated");
  }
  const auto& roots = ctx.roots();
  using P = Poly<typename Ctx::Element>;
  P g = P::constant(roots.front().one_like());
  for (std::size_t i : sorted) {
    if (i >= roots.size()) {
      fail(ErrorCode::IndexOutOfRange, "root index " + std::to_string(i) +
                                           " out of range (f has " +
                                           std::to_string(roots.size()) + " roots)");
    }
    g = g * P::linear_root(roots[i]);
  }
  return g;
}

template <class Ctx>
ConjugateSetting<Ctx> make_setting(std::shared_ptr<const Ctx> ctx,
                                   const std::vector<std::size_t>& indices) {
  auto g = divisor_from_roots(*ctx, indices);
  return {std::move(ctx), std::move(g)};
}

/// Explicit g: HypothesisViolated unless deg g >= 1 and g divides f in M[X].
template <class Ctx>
ConjugateSetting<Ctx> make_setting(std::shared_ptr<const Ctx> ctx,
                                   Poly<typename Ctx::Element> g) {
  if (g.degree() < 1) {
    fail(ErrorCode::HypothesisViolated, "g must have degree at least 1");
  }
  if (!(g.lc().field() == ctx->field())) {
    fail(ErrorCode::FieldMismatch, "g is not written over the splitting field");
  }
  if (!divides(g, ctx->f_over_M())) {
    fail(ErrorCode::HypothesisViolated, "g does not divide f: " + to_text(g));
  }
  return {std::move(ctx), std::move(g)};
}

/// {g^σ : σ in G}, deduplicated and canonically sorted.
template <class Ctx>
std::vector<Poly<typename Ctx::Element>> conjugates_of(const ConjugateSetting<Ctx>& s) {
  using P = Poly<typename Ctx::Element>;
  std::vector<P> out;
  for (std::size_t k = 0; k < s.ctx->group_order(); ++k) {
    P c = s.ctx->act(k, s.g);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const P& a, const P& b) { return canonical_less(a, b); });
  return out;
}

/// L = Q(coefficients of g) inside M, by a primitive element.
struct CoefficientField {
  Poly<Rational> minpoly;
  NFElement primitive;
  int degree() const { return minpoly.degree(); }
};

CoefficientField coefficient_field(const RationalSetting& s);

/// [L:K], computed from the coefficients of g alone.
int coefficient_field_degree(const RationalSetting& s);
/// lcm over coefficients of the Frobenius orbit lengths.
int coefficient_field_degree(const FrobeniusSetting& s);

/// Product of the distinct conjugates, with each coefficient reduced to the
/// base field. A coefficient outside K throws NotInBaseField.
template <class Ctx>
Poly<typename Ctx::Base> conjugate_product(const ConjugateSetting<Ctx>& s) {
  using P = Poly<typename Ctx::Element>;
  const auto conj = conjugates_of(s);
  P h = P::constant(s.g.lc().one_like());
  for (const P& c : conj) h = h * c;
  std::vector<typename Ctx::Base> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto b = Ctx::to_base(h[i]);
    if (!b) {
      fail(ErrorCode::NotInBaseField,
           "coefficient of X^" + std::to_string(i) + " of h is not in the base field");
    }
    out.push_back(*b);
  }
  return Poly<typename Ctx::Base>(std::move(out));
}

namespace detail {

template <class T>
std::string scalar_text(const T& c) {
  return c.str();
}

}  // namespace detail

template <class Ctx>
VerificationReport verify_theorem1(const ConjugateSetting<Ctx>& s) {
  using P = Poly<typename Ctx::Element>;
  using B = typename Ctx::Base;
  const Ctx& ctx = *s.ctx;
  const Poly<B>& f = ctx.f();

  VerificationReport r;
  r.base_field = ctx.base_name();
  r.f = to_text(f);
  r.g = to_text(s.g);

  const std::vector<P> conj = conjugates_of(s);
  r.m = static_cast<int>(conj.size());
  for (const P& c : conj) r.conjugates.push_back(to_text(c));
  r.L_degree = coefficient_field_degree(s);
  r.assertions.emplace_back("m_equals_L_degree", r.m == r.L_degree);

  std::optional<Poly<B>> h;
  try {
    h = conjugate_product(s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInBaseField) throw;
  }
  r.assertions.emplace_back("h_in_base_field", h.has_value());

  const int deg_g = s.g.degree();
  const int deg_f = f.degree();
  const bool integral = (r.m * deg_g) % deg_f == 0 && r.m * deg_g > 0;
  if (integral) r.n = r.m * deg_g / deg_f;
  r.assertions.emplace_back("n_positive_integer", integral);

  bool exact = false;
  bool bookkeeping = false;
  bool minimal = false;
  if (h) {
    r.h = to_text(*h);
    const B c = h->lc();
    r.c = detail::scalar_text(c);
    if (r.n) {
      const B one = c.one_like();
      exact = *h == pow(f, static_cast<std::uint64_t>(*r.n), one) * c;
      bookkeeping = h->degree() == r.m * deg_g && h->degree() == *r.n * deg_f;
      minimal = !divides(*h, pow(f, static_cast<std::uint64_t>(*r.n - 1), one));
    }
    // c must also equal the product of the leading coefficients.
    auto lc_prod = s.g.lc().one_like();
    for (const P& cj : conj) lc_prod = lc_prod * cj.lc();
    const auto lc_base = Ctx::to_base(lc_prod);
    exact = exact && lc_base && *lc_base == c;
  } else {
    r.h = "";
    r.c = "";
  }
  r.assertions.emplace_back("h_equals_c_f_pow_n", exact);
  if (s.g.is_monic()) {
    r.assertions.emplace_back("c_is_one", h && h->lc() == h->lc().one_like());
  }
  r.assertions.emplace_back("degree_bookkeeping", bookkeeping);
  r.assertions.emplace_back("n_minimal", minimal);

  bool stable = true;
  for (std::size_t k = 0; k < ctx.group_order() && stable; ++k) {
    std::vector<P> moved;
    for (const P& c : conj) moved.push_back(ctx.act(k, c));
    std::sort(moved.begin(), moved.end(),
              [](const P& a, const P& b) { return canonical_less(a, b); });
    stable = moved == conj;
  }
  r.assertions.emplace_back("orbit_stable", stable);
  return r;
}

/// Hypotheses of the h = f corollary, by name.
std::vector<std::pair<std::string, bool>> corollary_hypotheses(const RationalSetting& s);
std::vector<std::pair<std::string, bool>> corollary_hypotheses(const FrobeniusSetting& s);

/// verify_theorem1 plus the corollary: when g is irreducible over L and f
/// has a root generating M, n = 1 and h = f. Otherwise the corollary status
/// is "not_applicable".
template <class Ctx>
VerificationReport verify_corollary(const ConjugateSetting<Ctx>& s) {
  VerificationReport r = verify_theorem1(s);
  r.corollary_hypotheses = corollary_hypotheses(s);
  const bool applicable =
      std::all_of(r.corollary_hypotheses.begin(), r.corollary_hypotheses.end(),
                  [](const auto& h) { return h.second; });
  if (!applicable) {
    r.corollary_status = "not_applicable";
  } else {
    const bool ok = r.n == 1 && r.h == to_text(s.ctx->f());
    r.corollary_status = ok ? "pass" : "fail";
  }
  return r;
}

}  // namespace conjprod
