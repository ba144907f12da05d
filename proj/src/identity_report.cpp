#include "polynum/identity_report.hpp"

#include <json.hpp>

namespace polynum {

bool IdentityReport::all_equal() const {
  for (const auto& c : cases) {
    if (!c.equal) return false;
  }
  return true;
}

bool IdentityReport::hard_pass() const {
  for (const auto& c : cases) {
    if (c.hard && !c.equal) return false;
  }
  return true;
}

int IdentityReport::equal_count() const {
  int n = 0;
  for (const auto& c : cases) {
    if (c.equal) ++n;
  }
  return n;
}

std::string IdentityReport::to_json_string() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["parameters"] = parameters;
  j["note"] = note;
  j["all_equal"] = all_equal();
  j["hard_pass"] = hard_pass();
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) {
    j["cases"].push_back({{"label", c.label},
                          {"lhs", c.lhs.str()},
                          {"rhs", c.rhs.str()},
                          {"equal", c.equal},
                          {"hard", c.hard}});
  }
  return j.dump(2);
}

std::string IdentityReport::text_summary() const {
  std::string line = identity;
  if (!parameters.empty()) line += " " + parameters;
  line += ": " + std::to_string(equal_count()) + "/" +
          std::to_string(cases.size()) + " cases equal — ";
  if (all_equal()) {
    line += "PASS";
  } else if (hard_pass()) {
    line += "PASS (informational mismatches only)";
  } else {
    line += "FAIL";
  }
  if (!note.empty()) line += "\n  note: " + note;
  int shown = 0;
  for (const auto& c : cases) {
    if (c.equal) continue;
    if (++shown > 5) {
      line += "\n  ...";
      break;
    }
    line += "\n  " + std::string(c.hard ? "MISMATCH " : "info-mismatch ") +
            c.label + ": lhs=" + c.lhs.str() + " rhs=" + c.rhs.str();
  }
  return line;
}

IdentityCase make_case(std::string label, Rational lhs, Rational rhs,
                       bool hard) {
  IdentityCase c;
  c.label = std::move(label);
  c.equal = (lhs == rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.hard = hard;
  return c;
}

}  // namespace polynum
