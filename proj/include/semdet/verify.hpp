#pragma once

// Exhaustive and randomized consistency checks between independent
// constructions. Each check reports how many cases it examined.

#include <cstdint>
#include <string>
#include <vector>

#include "semdet/polynomial.hpp"

namespace semdet::verify {

struct CheckReport {
  std::string name;
  std::string summary;
  long checked = 0;
  long failed = 0;
  std::string first_failure;
  double seconds = 0;
  bool passed() const { return failed == 0 && checked > 0; }
};

/// schubert(w) == schubert_via_pipedreams(w) for all w in S_1..S_n.
CheckReport pipe_oracle(int n);

/// Every SEM coefficient of S_w, w in S_n, has |alpha| <= 1, and the
/// expansion evaluates back to S_w.
CheckReport sem_bound(int n);

/// proper_rep over all thirteen-avoiding w in S_n and `samples` distinct
/// random ones in S_{n+1}: proper, determinant equals S_w, SEM read-off
/// equals sem_expand.
CheckReport rep_correct(int n, int samples, std::uint64_t seed);

/// No w in S_n containing a forbidden pattern factors as u v with v
/// lowering, u avoiding 1324/2413/3142 and l(w) = l(u) - l(v); every
/// thirteen-avoiding w does.
CheckReport converse(int n);

/// Worked examples with known values.
CheckReport fixtures();

/// Signed nonintersecting path sums equal determinants on random reps with
/// k <= 3 and heights <= 4.
CheckReport lgv_oracle(int trials, std::uint64_t seed);

/// Randomized determinant identities for pull, drop, both slides, product,
/// delete and lower; `trials` each.
CheckReport operations(int trials, std::uint64_t seed);

/// Quantum elementary recurrence against det(I + lambda G_k) for k <= n + 1;
/// quantum_schubert at q = 0 and the quantum determinant of proper_rep for
/// w in S_n.
CheckReport quantum_consistency(int n);

/// rep_321 over 321-avoiding w in S_n; rep_grassmannian against tableau
/// enumeration for lambda in a 3x3 box and up to 3 variables.
CheckReport corollaries(int n);

/// Sum of x^T over semistandard tableaux of shape lambda with entries <= n.
Polynomial schur_by_tableaux(const std::vector<int>& lambda, int n);

/// Determinant by the permutation expansion.
Polynomial leibniz_determinant(const PolyMatrix& m);

/// Names accepted by run_check.
const std::vector<std::string>& check_names();

struct Options {
  int n = 6;
  /// Samples or trials for the randomized checks; negative selects the
  /// defaults (1000 for rep-correct, 200 for lgv-oracle, 100 per operation).
  int budget = -1;
  std::uint64_t seed = 1;
};

/// Dispatch by name; throws std::invalid_argument for an unknown name.
CheckReport run_check(const std::string& name, const Options& opt);

}  // namespace semdet::verify
