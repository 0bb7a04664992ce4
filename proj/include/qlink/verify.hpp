#pragma once

#include "qlink/braiding.hpp"

#include <string>
#include <vector>

namespace qlink {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string counterexample;  // first failing index tuple, empty on pass
};

struct VerifyReport {
  std::string spec_id;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string to_json() const;
};

// Each check is an exact ring-equality test; failure reports the first bad
// index tuple.  All take pre-built matrices so negative-control tests can
// tamper with them in between.
CheckResult check_yang_baxter(const MatrixSet& ms);
CheckResult check_skein(const MatrixSet& ms);
CheckResult check_loop_twist(const MatrixSet& ms);
CheckResult check_spectrum_trace_det(const MatrixSet& ms);
CheckResult check_fusion_inverse(const MatrixSet& ms);
CheckResult check_braid_inverse_identity(const MatrixSet& ms);
CheckResult check_entry_reality(const MatrixSet& ms);
CheckResult check_critical_structure(const MatrixSet& ms);

VerifyReport run_suite(const MatrixSet& ms);

}  // namespace qlink
