// conjcheck: command-line front end for the conjugate-product verifier.
//
// Exit codes: 0 pass, 1 assertion failure, 2 bad input, 3 hypothesis
// violated.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conj/conjtheorem.hpp"
#include "conj/factor_qq.hpp"
#include "conj/factor_zp.hpp"
#include "conj/normtheorem.hpp"
#include "conj/splitting.hpp"

namespace {

using namespace conjprod;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIrreducible:
    case ErrorCode::NotSeparable:
    case ErrorCode::HypothesisViolated:
    case ErrorCode::DoesNotDivide:
    case ErrorCode::NotPrime:
    case ErrorCode::DegreeCapExceeded:
    case ErrorCode::CapExceeded:
      return kExitHypothesis;
    case ErrorCode::InternalInconsistency:
    case ErrorCode::NotInBaseField:
      return kExitFail;
    default:
      return kExitInput;
  }
}

std::string hypothesis_label(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIrreducible: return "f is not irreducible";
    case ErrorCode::NotSeparable: return "f is not separable";
    case ErrorCode::HypothesisViolated: return "hypothesis violated";
    case ErrorCode::DoesNotDivide: return "theta' does not divide theta";
    case ErrorCode::NotPrime: return "not prime";
    default: return std::string(to_string(code));
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& s) {
  std::vector<std::size_t> out;
  for (const std::string& item : split_commas(s)) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      fail(ErrorCode::ParseError, "bad root index '" + item + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

std::vector<Integer> parse_integers(const std::string& s) {
  std::vector<Integer> out;
  for (const std::string& item : split_commas(s)) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) {
      fail(ErrorCode::ParseError, "bad integer '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

Integer parse_integer(const std::string& s) {
  const auto v = parse_integers(s);
  if (v.size() != 1) fail(ErrorCode::ParseError, "expected one integer, got '" + s + "'");
  return v[0];
}

void emit(const Json& j, const std::string& text, bool json) {
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string field = "q";
  std::uint64_t p = 0;
  std::string f;
  std::string roots;
  std::string g;
  bool all_subsets = false;
  unsigned jobs = 1;
  bool json = false;
  std::uint64_t seed = 0;
  bool corollary = false;
};

template <class Ctx>
VerificationReport run_one(const ConjugateSetting<Ctx>& s, bool corollary) {
  return corollary ? verify_corollary(s) : verify_theorem1(s);
}

template <class Ctx>
std::vector<VerificationReport> run_all_subsets(const std::shared_ptr<const Ctx>& ctx,
                                                bool corollary, unsigned jobs) {
  const std::size_t n = ctx->roots().size();
  if (n >= 20) fail(ErrorCode::CapExceeded, "too many roots for --all-subsets");
  const std::size_t count = (std::size_t{1} << n) - 1;
  std::vector<std::optional<VerificationReport>> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < count;) {
      const std::size_t mask = k + 1;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) idx.push_back(i);
      }
      try {
        out[k] = run_one(make_setting(ctx, idx), corollary);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<VerificationReport> reports;
  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    reports.push_back(std::move(*out[k]));
  }
  return reports;
}

template <class Ctx, class ParseG>
int verify_with(const VerifyArgs& a, const std::shared_ptr<const Ctx>& ctx, ParseG parse_g) {
  std::vector<VerificationReport> reports;
  if (a.all_subsets) {
    reports = run_all_subsets(ctx, a.corollary, a.jobs);
  } else if (!a.roots.empty()) {
    reports.push_back(run_one(make_setting(ctx, parse_indices(a.roots)), a.corollary));
  } else {
    reports.push_back(run_one(make_setting(ctx, parse_g(a.g)), a.corollary));
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const VerificationReport& r) { return r.passed(); });
  if (a.all_subsets) {
    Json arr = Json::array();
    std::string text;
    for (const auto& r : reports) {
      arr.push_back(to_json(r));
      text += to_text(r) + "\n";
    }
    emit(arr, text, a.json);
  } else {
    emit(to_json(reports[0]), to_text(reports[0]), a.json);
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_verify(const VerifyArgs& a) {
  const int selectors = (a.roots.empty() ? 0 : 1) + (a.g.empty() ? 0 : 1) + (a.all_subsets ? 1 : 0);
  if (selectors != 1) {
    fail(ErrorCode::ParseError, "give exactly one of --roots, --g, --all-subsets");
  }
  if (a.field == "q") {
    const auto ctx = rational_context(parse_rational_poly(a.f), a.seed);
    return verify_with(a, ctx, [&](const std::string& text) {
      return parse_nf_poly(ctx->field(), text);
    });
  }
  if (a.p == 0) fail(ErrorCode::ParseError, "--field fp needs --p");
  const PrimeField fp(a.p);
  const auto ctx = frobenius_context(parse_prime_field_poly(a.f, fp));
  return verify_with(a, ctx, [&](const std::string& text) {
    return parse_gf_poly(ctx->field(), text);
  });
}

// factor ------------------------------------------------------------------

struct FactorArgs {
  std::string field = "q";
  std::uint64_t p = 0;
  std::string f;
  bool json = false;
  std::uint64_t seed = 0;
};

template <class T>
int report_factors(const std::string& field_name, const Poly<T>& f,
                   const std::vector<FactorEntry<T>>& factors, bool json) {
  Json j;
  j["field"] = field_name;
  j["f"] = to_text(f);
  j["leading_coefficient"] = f.lc().str();
  Json arr = Json::array();
  std::ostringstream os;
  os << "f = " << to_text(f) << " over " << field_name << "\n"
     << "leading coefficient " << f.lc().str() << "\n";
  Poly<T> back = Poly<T>::constant(f.lc());
  for (const auto& e : factors) {
    arr.push_back(Json{{"factor", to_text(e.factor)}, {"multiplicity", e.multiplicity}});
    os << "  (" << to_text(e.factor) << ")^" << e.multiplicity << "\n";
    back = back * pow(e.factor, static_cast<std::uint64_t>(e.multiplicity), f.lc());
  }
  j["factors"] = arr;
  const bool irreducible = factors.size() == 1 && factors[0].multiplicity == 1;
  j["irreducible"] = irreducible;
  j["multiply_back"] = back == f;
  os << (irreducible ? "irreducible\n" : "reducible\n");
  emit(j, os.str(), json);
  return back == f ? kExitPass : kExitFail;
}

int cmd_factor(const FactorArgs& a) {
  if (a.field == "q") {
    const auto f = parse_rational_poly(a.f);
    if (f.degree() < 1) fail(ErrorCode::ConstantPolynomial, "f is constant");
    return report_factors("Q", f, factor_over_Q(f, a.seed), a.json);
  }
  if (a.p == 0) fail(ErrorCode::ParseError, "--field fp needs --p");
  const PrimeField fp(a.p);
  const auto f = parse_prime_field_poly(a.f, fp);
  if (f.degree() < 1) fail(ErrorCode::ConstantPolynomial, "f is constant");
  return report_factors("F_" + std::to_string(a.p), f, factor_mod_p(f, a.seed), a.json);
}

// galois ------------------------------------------------------------------

struct GaloisArgs {
  std::string f;
  bool json = false;
  std::uint64_t seed = 0;
};

int cmd_galois(const GaloisArgs& a) {
  const SplittingField m = build_splitting_field(parse_rational_poly(a.f), a.seed);
  const auto group = automorphisms(m);
  const auto table = composition_table(group);

  Json j;
  j["f"] = to_text(m.source());
  j["field_degree"] = m.degree();
  j["generator_minpoly"] = to_text(m.field().minpoly(), "g");
  Json roots = Json::array();
  for (const auto& r : m.roots()) roots.push_back(r.str());
  j["roots"] = roots;
  j["group_order"] = group.size();
  Json autos = Json::array();
  for (const auto& s : group) {
    autos.push_back(Json{{"gamma_image", s.gamma_image().str()},
                         {"root_permutation", s.root_permutation()},
                         {"cycles", cycle_notation(s.root_permutation())}});
  }
  j["automorphisms"] = autos;
  j["composition_table"] = table;

  std::ostringstream os;
  os << "f = " << to_text(m.source()) << "\n"
     << "M = Q(g), [M:Q] = " << m.degree() << ", g a root of " << to_text(m.field().minpoly(), "g")
     << "\n"
     << "roots:\n";
  for (std::size_t i = 0; i < m.roots().size(); ++i) {
    os << "  [" << i << "] " << m.roots()[i].str() << "\n";
  }
  os << "group order " << group.size() << "\n";
  for (std::size_t i = 0; i < group.size(); ++i) {
    os << "  s" << i << ": g -> " << group[i].gamma_image().str() << "   "
       << cycle_notation(group[i].root_permutation()) << "\n";
  }
  os << "composition table (row s_i, column s_j, entry k of s_i.s_j):\n";
  for (const auto& row : table) {
    os << " ";
    for (std::size_t k : row) os << " " << k;
    os << "\n";
  }
  emit(j, os.str(), a.json);
  return group.size() == static_cast<std::size_t>(m.degree()) ? kExitPass : kExitFail;
}

// normcheck ---------------------------------------------------------------

struct NormArgs {
  std::string minpoly;
  std::string theta;
  std::string theta_prime;
  bool json = false;
};

int cmd_normcheck(const NormArgs& a) {
  const MonogenicRing ring = MonogenicRing::create(parse_rational_poly(a.minpoly));
  const Integer theta = parse_integer(a.theta);
  const RingElement tp = ring.element(parse_integers(a.theta_prime));
  const NormReport r = verify_theorem2(ring, theta, tp);
  Json j;
  j["minpoly"] = to_text(ring.minpoly());
  const Json body = to_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(j, "ring Z[g], " + to_text(ring.minpoly(), "g") + " = 0\n" + to_text(r), a.json);
  return r.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks on products of conjugate polynomials"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check h = c*f^n for a divisor g of f");
  verify->add_option("--field", va.field, "base field")->check(CLI::IsMember({"q", "fp"}));
  verify->add_option("--p", va.p, "prime for --field fp");
  verify->add_option("--f", va.f, "irreducible polynomial f in x")->required();
  verify->add_option("--roots", va.roots, "comma-separated root indices defining g");
  verify->add_option("--g", va.g, "g as a polynomial in x with coefficients in g");
  verify->add_flag("--all-subsets", va.all_subsets, "run every nonempty root subset");
  verify->add_option("--jobs", va.jobs, "worker threads for --all-subsets")
      ->check(CLI::Range(1u, 256u));
  verify->add_flag("--json", va.json, "JSON output");
  verify->add_option("--seed", va.seed, "seed for randomized internals");
  verify->add_flag("--corollary", va.corollary, "also judge the h = f corollary");

  FactorArgs fa;
  auto* factor = app.add_subcommand("factor", "factor f over Q or F_p");
  factor->add_option("--field", fa.field, "base field")->check(CLI::IsMember({"q", "fp"}));
  factor->add_option("--p", fa.p, "prime for --field fp");
  factor->add_option("--f", fa.f, "polynomial in x")->required();
  factor->add_flag("--json", fa.json, "JSON output");
  factor->add_option("--seed", fa.seed, "seed for randomized internals");

  GaloisArgs ga;
  auto* galois = app.add_subcommand("galois", "splitting field and automorphisms of f over Q");
  galois->add_option("--f", ga.f, "irreducible polynomial f in x")->required();
  galois->add_flag("--json", ga.json, "JSON output");
  galois->add_option("--seed", ga.seed, "seed for randomized internals");

  NormArgs na;
  auto* norm = app.add_subcommand("normcheck", "check N(theta') = theta^n*u in Z[g]");
  norm->add_option("--minpoly", na.minpoly, "monic integer minimal polynomial of g")
      ->required();
  norm->add_option("--theta", na.theta, "rational prime theta")->required();
  norm->add_option("--thetaprime", na.theta_prime, "coordinates of theta' in 1, g, g^2, ...")
      ->required();
  norm->add_flag("--json", na.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*factor) return cmd_factor(fa);
    if (*galois) return cmd_galois(ga);
    if (*norm) return cmd_normcheck(na);
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    if (code == kExitHypothesis) {
      std::cerr << "hypothesis failed: " << hypothesis_label(e.code()) << ": " << e.what()
                << "\n";
    } else {
      std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    }
    return code;
  }
  return kExitInput;
}
