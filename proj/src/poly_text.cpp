#include "conj/poly_text.hpp"

#include <cctype>
#include <optional>

#include "conj/error.hpp"

namespace conjprod {

namespace {

constexpr unsigned kMaxExponent = 4096;

void add_into(BivariateTerms& acc, const BivariateTerms& t, bool negate) {
  for (const auto& [key, c] : t) {
    Rational v = acc[key] + (negate ? -c : c);
    if (v.is_zero()) {
      acc.erase(key);
    } else {
      acc[key] = v;
    }
  }
}

BivariateTerms multiply(const BivariateTerms& a, const BivariateTerms& b) {
  BivariateTerms out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const std::pair<unsigned, unsigned> key{ka.first + kb.first,
                                              ka.second + kb.second};
      Rational v = out[key] + ca * cb;
      if (v.is_zero()) {
        out.erase(key);
      } else {
        out[key] = v;
      }
    }
  }
  return out;
}

BivariateTerms constant(const Rational& r) {
  BivariateTerms t;
  if (!r.is_zero()) t[{0, 0}] = r;
  return t;
}

std::optional<Rational> as_constant(const BivariateTerms& t) {
  if (t.empty()) return Rational();
  if (t.size() == 1 && t.begin()->first == std::pair<unsigned, unsigned>{0, 0}) {
    return t.begin()->second;
  }
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_generator)
      : text_(text), allow_g_(allow_generator) {}

  BivariateTerms parse() {
    skip_ws();
    if (at_end()) error("empty expression");
    BivariateTerms r = expr();
    skip_ws();
    if (!at_end()) error("unexpected '" + std::string(1, peek()) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, "cannot parse '" + std::string(text_) +
                                    "' at offset " + std::to_string(pos_) +
                                    ": " + msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_variable() const {
    const char c = peek();
    return c == 'x' || c == 'X' || c == 'g' || c == 'G';
  }

  BivariateTerms expr() {
    BivariateTerms acc;
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    add_into(acc, term(), negate);
    for (;;) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
        add_into(acc, term(), negate);
      } else {
        return acc;
      }
    }
  }

  BivariateTerms term() {
    BivariateTerms acc = power();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = multiply(acc, power());
      } else if (peek() == '/') {
        ++pos_;
        const auto d = as_constant(power());
        if (!d) error("division by a non-constant");
        if (d->is_zero()) error("division by zero");
        acc = multiply(acc, constant(d->inverse()));
      } else if (starts_variable() || peek() == '(') {
        acc = multiply(acc, power());
      } else {
        return acc;
      }
    }
  }

  BivariateTerms power() {
    BivariateTerms base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const unsigned e = natural();
    BivariateTerms r = constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = multiply(r, base);
    return r;
  }

  unsigned natural() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected digits");
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > kMaxExponent) error("exponent too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  BivariateTerms primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      BivariateTerms r = expr();
      if (!accept(')')) error("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      BivariateTerms r;
      add_into(r, power(), true);
      return r;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return BivariateTerms{{{1, 0}, Rational(1)}};
    }
    if (c == 'g' || c == 'G') {
      if (!allow_g_) error("the generator g is not allowed here");
      ++pos_;
      return BivariateTerms{{{0, 1}, Rational(1)}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return constant(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (at_end()) error("unexpected end of input");
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  bool allow_g_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariateTerms parse_terms(std::string_view text, bool allow_generator) {
  return Parser(text, allow_generator).parse();
}

Poly<Rational> parse_rational_poly(std::string_view text) {
  const BivariateTerms t = parse_terms(text, false);
  unsigned deg = 0;
  for (const auto& [key, c] : t) deg = std::max(deg, key.first);
  std::vector<Rational> v(deg + 1);
  for (const auto& [key, c] : t) v[key.first] = c;
  return Poly<Rational>(std::move(v));
}

Poly<Zp> parse_prime_field_poly(std::string_view text, const PrimeField& field) {
  const Poly<Rational> q = parse_rational_poly(text);
  try {
    return q.map([&](const Rational& c) { return field.from_rational(c); });
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

}  // namespace conjprod
