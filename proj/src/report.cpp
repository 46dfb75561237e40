#include "conj/report.hpp"

#include <algorithm>
#include <sstream>

namespace conjprod {

bool VerificationReport::assertion(const std::string& name) const {
  for (const auto& [k, v] : assertions) {
    if (k == name) return v;
  }
  return false;
}

bool VerificationReport::all_assertions_pass() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const auto& a) { return a.second; });
}

bool VerificationReport::passed() const {
  return all_assertions_pass() && corollary_status != "fail";
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["base_field"] = r.base_field;
  j["f"] = r.f;
  j["g"] = r.g;
  j["m"] = r.m;
  j["L_degree"] = r.L_degree;
  j["n"] = r.n ? nlohmann::ordered_json(*r.n) : nlohmann::ordered_json(nullptr);
  j["c"] = r.c;
  j["h"] = r.h;
  j["conjugates"] = r.conjugates;
  nlohmann::ordered_json a = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.assertions) a[k] = v;
  j["assertions"] = a;
  j["corollary_status"] = r.corollary_status;
  nlohmann::ordered_json hyp = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.corollary_hypotheses) hyp[k] = v;
  j["corollary_hypotheses"] = hyp;
  j["pass"] = r.passed();
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "base field   " << r.base_field << "\n"
     << "f            " << r.f << "\n"
     << "g            " << r.g << "\n"
     << "m            " << r.m << "\n"
     << "[L:K]        " << r.L_degree << "\n"
     << "n            " << (r.n ? std::to_string(*r.n) : "not an integer") << "\n"
     << "c            " << r.c << "\n"
     << "h            " << r.h << "\n"
     << "conjugates:\n";
  for (const auto& c : r.conjugates) os << "  " << c << "\n";
  os << "assertions:\n";
  for (const auto& [k, v] : r.assertions) {
    os << "  " << (v ? "pass " : "FAIL ") << k << "\n";
  }
  if (r.corollary_status != "not_checked") {
    os << "corollary    " << r.corollary_status << "\n";
    for (const auto& [k, v] : r.corollary_hypotheses) {
      os << "  " << (v ? "holds  " : "fails  ") << k << "\n";
    }
  }
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace conjprod
