#ifndef POLYNUM_IDENTITY_REPORT_HPP
#define POLYNUM_IDENTITY_REPORT_HPP

#include <string>
#include <vector>

#include "polynum/rational.hpp"

namespace polynum {

// One compared instance of an identity. Both sides are kept as exact values so
// a failure is diagnosable from the report alone. `hard` marks cases whose
// outcome callers must treat as authoritative (everything except the
// informational right-hand-side comparisons of the multi-Lah recurrence
// verdict, which are reported but not asserted).
struct IdentityCase {
  std::string label;
  Rational lhs;
  Rational rhs;
  bool equal = false;
  bool hard = true;
};

// Outcome of one verifier run. Reports are deterministic: identical inputs
// serialize byte-for-byte identically (the note carries no timing).
struct IdentityReport {
  std::string identity;    // e.g. "thm2.4"
  std::string parameters;  // e.g. "index=1,2 max_n=10"
  std::string note;
  std::vector<IdentityCase> cases;

  bool all_equal() const;
  bool hard_pass() const;  // conjunction over hard cases only
  int equal_count() const;

  // JSON object with keys all_equal, cases, hard_pass, identity, note,
  // parameters; serialized with 2-space indent.
  std::string to_json_string() const;

  // One summary line, plus the first few failing cases when any.
  std::string text_summary() const;
};

// Convenience used by every verifier.
IdentityCase make_case(std::string label, Rational lhs, Rational rhs,
                       bool hard = true);

}  // namespace polynum

#endif  // POLYNUM_IDENTITY_REPORT_HPP
