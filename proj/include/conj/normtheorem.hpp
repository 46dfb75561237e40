#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "conj/numfield.hpp"
#include "conj/rational.hpp"

namespace conjprod {

class RingElement;

/// Z[α] for α a root of a monic irreducible integer polynomial.
class MonogenicRing {
 public:
  /// Requires integer coefficients, a monic leading term and
  /// irreducibility over Q.
  static MonogenicRing create(const Poly<Rational>& minpoly);

  int degree() const { return field_.degree(); }
  const Poly<Rational>& minpoly() const { return field_.minpoly(); }
  /// The fraction field Q(α).
  const NumberField& field() const { return field_; }

  /// Coordinates in 1, α, ..., α^(d-1); shorter lists are zero-padded.
  RingElement element(const std::vector<Integer>& coords) const;
  RingElement from_integer(const Integer& v) const;

 private:
  explicit MonogenicRing(NumberField f) : field_(std::move(f)) {}
  NumberField field_;
};

class RingElement {
 public:
  /// PreconditionViolated when a is not in Z[α].
  explicit RingElement(NFElement a);

  const NFElement& value() const { return v_; }
  std::vector<Integer> coords() const;
  bool is_zero() const { return v_.is_zero(); }
  std::string str() const { return v_.str(); }

  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    return RingElement(a.v_ * b.v_);
  }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.v_ == b.v_;
  }

 private:
  NFElement v_;
};

/// ν with θ = θ'·ν and ν in Z[α], if one exists. ZeroDivisor when θ' = 0.
std::optional<RingElement> ring_divides(const RingElement& theta_prime, const Integer& theta);

/// Norm from Q(a) to Q: (-1)^deg times the constant term of the minimal
/// polynomial of a.
Integer ring_norm(const RingElement& a);

/// Norm from the whole fraction field Q(α) to Q.
Integer ring_norm_full(const RingElement& a);

struct NormReport {
  Integer theta;
  std::string theta_prime;
  std::string nu;
  Integer Theta;
  int n = 0;
  Integer u;
  int bound = 0;  // [Q(θ'):Q]
  std::vector<std::pair<std::string, bool>> assertions;

  bool passed() const;
};

/// θ a rational prime up to sign (NotPrime otherwise) and θ' | θ in Z[α]
/// (DoesNotDivide otherwise). Checks N(θ') = θ^n·u with u = ±1 and
/// n <= [Q(θ'):Q].
NormReport verify_theorem2(const MonogenicRing& ring, const Integer& theta,
                           const RingElement& theta_prime);

nlohmann::ordered_json to_json(const NormReport& r);
std::string to_text(const NormReport& r);

}  // namespace conjprod
