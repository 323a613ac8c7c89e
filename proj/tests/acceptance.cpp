// Acceptance run: one line per criterion. All comparisons are exact.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "semdet/verify.hpp"

using namespace semdet::verify;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Criterion {
  int id;
  std::string title;
  std::function<CheckReport()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "pipe dreams agree with divided differences, S_1..S_6", [] { return pipe_oracle(6); }},
      {2, "SEM coefficients of S_w bounded by 1, S_6", [] { return sem_bound(6); }},
      {3, "proper representations are correct, S_6 plus 1000 in S_7", [] { return rep_correct(6, 1000, kSeed); }},
      {4, "factorization exists exactly for pattern-avoiding w, S_6", [] { return converse(6); }},
      {5, "worked examples", [] { return fixtures(); }},
      {6, "path sums equal determinants, 200 random reps", [] { return lgv_oracle(200, kSeed); }},
      {7, "operation identities, 100 trials each", [] { return operations(100, kSeed); }},
      {8, "quantum elementary and quantum Schubert consistency", [] { return quantum_consistency(5); }},
      {9, "321-avoiding and Grassmannian constructions", [] { return corollaries(6); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    CheckReport r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.failed = 1;
      r.first_failure = std::string("exception: ") + e.what();
    }
    const bool ok = r.passed();
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%ld checked, %ld failed, %.1fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), r.checked, r.failed, r.seconds, r.first_failure.empty() ? "" : "; first failure: ",
                r.first_failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
