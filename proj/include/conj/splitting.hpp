#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "conj/numfield.hpp"

namespace conjprod {

/// Input degree and splitting-field degree limits.
inline constexpr int kMaxSplittingInputDegree = 5;
inline constexpr int kMaxSplittingFieldDegree = 24;

/// The splitting field M = Q(γ) of f with the roots of f written in M.
class SplittingField {
 public:
  const NumberField& field() const { return field_; }
  int degree() const { return field_.degree(); }
  /// Roots in coordinate-lexicographic order.
  const std::vector<NFElement>& roots() const { return roots_; }
  /// f, made monic.
  const Poly<Rational>& source() const { return source_; }
  NFPoly source_over_field() const { return lift_poly(field_, source_); }
  /// γ = sum weights()[i] * roots()[i].
  const std::vector<long>& generator_weights() const { return weights_; }

 private:
  friend SplittingField build_splitting_field(const Poly<Rational>&, std::uint64_t);
  SplittingField(NumberField field, std::vector<NFElement> roots,
                 Poly<Rational> source, std::vector<long> weights)
      : field_(std::move(field)),
        roots_(std::move(roots)),
        source_(std::move(source)),
        weights_(std::move(weights)) {}

  NumberField field_;
  std::vector<NFElement> roots_;
  Poly<Rational> source_;
  std::vector<long> weights_;
};

/// Adjoins roots one at a time: factor the remaining cofactor over the
/// current field with Trager's method, record linear factors as roots and
/// collapse the tower with a primitive element when a nonlinear factor is
/// left. f must be irreducible and separable over Q with 2 <= deg f <= 5.
SplittingField build_splitting_field(const Poly<Rational>& f, std::uint64_t rng_seed = 0);

/// An element of Gal(M/Q), determined by the image of the generator γ.
class Automorphism {
 public:
  /// [M:Q] >= 2 always holds for a splitting field built here.
  Automorphism(const SplittingField& m, NFElement gamma_image);

  const NFElement& gamma_image() const { return powers_[1]; }
  /// σ(roots[i]) = roots[root_permutation()[i]].
  const std::vector<std::size_t>& root_permutation() const { return perm_; }
  bool is_identity() const;

  NFElement apply(const NFElement& a) const;

 private:
  std::vector<NFElement> powers_;  // σ(γ)^k for k < [M:Q]
  std::vector<std::size_t> perm_;
};

/// All of Gal(M/Q): one automorphism per root of the minimal polynomial of
/// γ in M, identity first, the rest by γ-image. The count is checked against
/// [M:Q].
std::vector<Automorphism> automorphisms(const SplittingField& m);

NFElement apply_automorphism(const Automorphism& sigma, const NFElement& a);
NFPoly apply_to_poly(const Automorphism& sigma, const NFPoly& g);

/// (σ∘τ)(x) = σ(τ(x)).
Automorphism compose(const SplittingField& m, const Automorphism& sigma,
                     const Automorphism& tau);

/// table[i][j] is the index in `group` of group[i]∘group[j].
std::vector<std::vector<std::size_t>> composition_table(
    const std::vector<Automorphism>& group);

/// Root permutation as disjoint cycles, e.g. "(0 1)(2)"; "()" for identity.
std::string cycle_notation(const std::vector<std::size_t>& perm);

}  // namespace conjprod
