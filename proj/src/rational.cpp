#include "conj/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "conj/error.hpp"

namespace conjprod {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::InseparableInput: return "InseparableInput";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotInBaseField: return "NotInBaseField";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DoesNotDivide: return "DoesNotDivide";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Integer& v) { return v.get_str(); }

bool is_prime(const Integer& n) {
  Integer m = abs(n);
  if (m < 2) return false;
  if (m < 4) return true;
  if (m.fits_ulong_p()) {
    const unsigned long u = m.get_ui();
    if (u % 2 == 0) return false;
    for (unsigned long d = 3; d <= u / d; d += 2) {
      if (u % d == 0) return false;
    }
    return true;
  }
  if (mpz_even_p(m.get_mpz_t())) return false;
  for (Integer d = 3; d * d <= m; d += 2) {
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

Rational Rational::normalize(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::ZeroDenominator, "zero denominator");
  Rational r;
  r.v_ = mpq_class(num, den);
  r.v_.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view("1")
                             : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    fail(ErrorCode::ParseError,
         "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (negative) n = -n;
  return normalize(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace conjprod
