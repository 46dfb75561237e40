#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace conjprod {

/// Outcome of checking the conjugate-product theorem on one (f, g).
/// Polynomials are held in canonical text form.
struct VerificationReport {
  std::string base_field;  // "Q" or "F_p"
  std::string f;
  std::string g;
  int m = 0;                 // distinct conjugates
  int L_degree = 0;          // [L:K], computed without the orbit
  std::optional<int> n;      // m*deg g/deg f when integral
  std::string c;
  std::string h;
  std::vector<std::string> conjugates;
  std::vector<std::pair<std::string, bool>> assertions;
  /// "not_checked", "pass", "fail" or "not_applicable".
  std::string corollary_status = "not_checked";
  std::vector<std::pair<std::string, bool>> corollary_hypotheses;

  bool assertion(const std::string& name) const;
  bool all_assertions_pass() const;
  /// All assertions hold and the corollary, when judged, passed.
  bool passed() const;
};

nlohmann::ordered_json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

}  // namespace conjprod
