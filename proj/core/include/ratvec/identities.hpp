#pragma once

#include <string>
#include <vector>

#include "ratvec/multipoly.hpp"

namespace ratvec {

/// Result of one machine-checked algebraic identity.  On failure `witness`
/// is the nonzero difference (or remainder) polynomial.
struct IdentityResult {
  std::string name;
  bool passed;
  MultiPoly witness;
  std::string note;  // e.g. cancellation factors discovered by the division oracle
};

/// Runs one identity by name (I1..I10).  Identities may be run against
/// mutated inputs for falsification testing via the overload below.
IdentityResult verify_identity(const std::string& name);

/// Same, but evaluates against a caller-supplied R (used to confirm that a
/// perturbed coefficient table breaks the suite).
IdentityResult verify_identity(const std::string& name, const MultiPoly& R);

/// The full suite I1..I10 in order.
std::vector<IdentityResult> verify_all_identities();

}  // namespace ratvec
