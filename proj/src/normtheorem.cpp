#include "conj/normtheorem.hpp"

#include <algorithm>
#include <sstream>

#include "conj/error.hpp"
#include "conj/factor_qq.hpp"
#include "conj/linalg.hpp"

namespace conjprod {

MonogenicRing MonogenicRing::create(const Poly<Rational>& minpoly) {
  if (minpoly.degree() < 1) fail(ErrorCode::ConstantPolynomial, "ring minpoly is constant");
  if (!minpoly.is_monic()) {
    fail(ErrorCode::NotMonic, "ring minpoly must be monic: " + to_text(minpoly));
  }
  for (const Rational& c : minpoly.coeffs()) {
    if (!c.is_integer()) {
      fail(ErrorCode::PreconditionViolated,
           "ring minpoly must have integer coefficients: " + to_text(minpoly));
    }
  }
  return MonogenicRing(NumberField::create(minpoly));
}

RingElement MonogenicRing::element(const std::vector<Integer>& coords) const {
  if (coords.size() > static_cast<std::size_t>(degree())) {
    fail(ErrorCode::IndexOutOfRange, std::to_string(coords.size()) +
                                         " coordinates given for a ring of rank " +
                                         std::to_string(degree()));
  }
  std::vector<Rational> c;
  for (const Integer& v : coords) c.emplace_back(v);
  return RingElement(field_.element(std::move(c)));
}

RingElement MonogenicRing::from_integer(const Integer& v) const {
  return RingElement(field_.from_rational(Rational(v)));
}

RingElement::RingElement(NFElement a) : v_(std::move(a)) {
  for (const Rational& c : v_.coords()) {
    if (!c.is_integer()) {
      fail(ErrorCode::PreconditionViolated, v_.str() + " has non-integral coordinates");
    }
  }
}

std::vector<Integer> RingElement::coords() const {
  std::vector<Integer> out;
  for (const Rational& c : v_.coords()) out.push_back(c.num());
  out.resize(static_cast<std::size_t>(v_.field().degree()), Integer(0));
  return out;
}

std::optional<RingElement> ring_divides(const RingElement& theta_prime, const Integer& theta) {
  if (theta_prime.is_zero()) fail(ErrorCode::ZeroDivisor, "division by zero ring element");
  const NumberField field = theta_prime.value().field();
  const auto d = static_cast<std::size_t>(field.degree());
  // Column j holds the coordinates of θ'·α^j.
  Matrix<Rational> mul(d, d, Rational(0));
  NFElement basis = field.one();
  for (std::size_t j = 0; j < d; ++j) {
    const NFElement col = theta_prime.value() * basis;
    const auto& c = col.coords();
    for (std::size_t i = 0; i < c.size(); ++i) mul(i, j) = c[i];
    basis = basis * field.generator();
  }
  std::vector<Rational> rhs(d, Rational(0));
  rhs[0] = Rational(theta);
  const auto x = solve(mul, rhs, Rational(0));
  if (!x) fail(ErrorCode::InternalInconsistency, "multiplication by a nonzero element is singular");
  if (!std::all_of(x->begin(), x->end(), [](const Rational& r) { return r.is_integer(); })) {
    return std::nullopt;
  }
  return RingElement(field.element(*x));
}

Integer ring_norm(const RingElement& a) {
  const Poly<Rational> mp = nf_minimal_polynomial(a.value());
  Rational c = mp[0];
  if (mp.degree() % 2 == 1) c = -c;
  if (!c.is_integer()) fail(ErrorCode::InternalInconsistency, "norm of an integral element is not an integer");
  return c.num();
}

Integer ring_norm_full(const RingElement& a) {
  const Rational n = nf_norm(a.value());
  if (!n.is_integer()) fail(ErrorCode::InternalInconsistency, "norm of an integral element is not an integer");
  return n.num();
}

bool NormReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const auto& a) { return a.second; });
}

NormReport verify_theorem2(const MonogenicRing& ring, const Integer& theta,
                           const RingElement& theta_prime) {
  if (!is_prime(abs(theta))) {
    fail(ErrorCode::NotPrime, to_string(theta) + " is not a prime of Z");
  }
  if (!(theta_prime.value().field() == ring.field())) {
    fail(ErrorCode::FieldMismatch, "θ' is not an element of the given ring");
  }
  const auto nu = ring_divides(theta_prime, theta);
  if (!nu) {
    fail(ErrorCode::DoesNotDivide,
         theta_prime.str() + " does not divide " + to_string(theta) + " in the ring");
  }

  NormReport r;
  r.theta = theta;
  r.theta_prime = theta_prime.str();
  r.nu = nu->str();
  r.Theta = ring_norm(theta_prime);
  r.bound = nf_minimal_polynomial(theta_prime.value()).degree();

  Integer rest = r.Theta;
  const Integer p = abs(theta);
  while (rest != 0 && rest % p == 0) {
    rest /= p;
    ++r.n;
  }
  // Θ = θ^n·u with θ possibly negative.
  Integer theta_n = 1;
  for (int k = 0; k < r.n; ++k) theta_n *= theta;
  r.u = r.Theta / theta_n;

  r.assertions.emplace_back("theta_prime_times_nu_is_theta",
                            theta_prime * *nu == ring.from_integer(theta));
  r.assertions.emplace_back("Theta_equals_theta_pow_n_times_u", theta_n * r.u == r.Theta);
  r.assertions.emplace_back("u_is_unit", r.u == 1 || r.u == -1);
  r.assertions.emplace_back("n_at_most_bound", r.n <= r.bound);
  r.assertions.emplace_back("n_maximal", r.u % p != 0);

  // The full-field norm is the subfield norm to the power [Q(α):Q(θ')].
  const int index = ring.degree() / r.bound;
  Integer sub_pow = 1;
  for (int k = 0; k < index; ++k) sub_pow *= r.Theta;
  r.assertions.emplace_back("norm_tower_consistent",
                            ring.degree() % r.bound == 0 &&
                                ring_norm_full(theta_prime) == sub_pow);
  return r;
}

nlohmann::ordered_json to_json(const NormReport& r) {
  nlohmann::ordered_json j;
  j["theta"] = to_string(r.theta);
  j["theta_prime"] = r.theta_prime;
  j["nu"] = r.nu;
  j["Theta"] = to_string(r.Theta);
  j["n"] = r.n;
  j["u"] = to_string(r.u);
  j["bound"] = r.bound;
  nlohmann::ordered_json a = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.assertions) a[k] = v;
  j["assertions"] = a;
  j["pass"] = r.passed();
  return j;
}

std::string to_text(const NormReport& r) {
  std::ostringstream os;
  os << "theta        " << to_string(r.theta) << "\n"
     << "theta'       " << r.theta_prime << "\n"
     << "nu           " << r.nu << "\n"
     << "Theta        " << to_string(r.Theta) << "\n"
     << "n            " << r.n << "\n"
     << "u            " << to_string(r.u) << "\n"
     << "bound        " << r.bound << "\n"
     << "assertions:\n";
  for (const auto& [k, v] : r.assertions) {
    os << "  " << (v ? "pass " : "FAIL ") << k << "\n";
  }
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace conjprod
