#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "semdet/permutation.hpp"
#include "semdet/polynomial.hpp"
#include "semdet/sem.hpp"

namespace semdet {

/// Schubert polynomial from the staircase monomial x_1^{n-1} ... x_{n-1}
/// by divided differences. Stable under padding w with fixed points.
Polynomial schubert(const Permutation& w);

/// Expansion of f in the Schubert basis {S_w : w in S_n}. The coefficient of
/// S_w is the constant term of partial_w f. Throws DomainError ("not in span")
/// if the reconstruction differs from f.
std::map<Permutation, Coeff> schubert_expand(const Polynomial& f, int n);

/// Set of crosses (row, column), 1-based matrix convention.
class PipeDream {
 public:
  PipeDream() = default;
  explicit PipeDream(std::set<std::pair<int, int>> crosses) : crosses_(std::move(crosses)) {}

  const std::set<std::pair<int, int>>& crosses() const { return crosses_; }
  /// Product of x_i over crosses in row i.
  Polynomial weight() const;

  struct Trace {
    std::vector<int> exits;  // exits[i-1]: column where the wire entering row i leaves
    bool reduced = true;     // no pair of wires crosses twice
  };
  /// Follows every wire through the diagram (rows 1..n).
  Trace trace(int n) const;

  /// ASCII grid: '+' for a cross, '/' for elbows, over the n x n staircase.
  std::string render(int n) const;

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;

 private:
  std::set<std::pair<int, int>> crosses_;
};

inline constexpr int kPipeDreamMaxN = 8;

/// All reduced pipe dreams of w inside the staircase i + j <= n. Depth-first
/// placement in reading order with weak-order pruning. Throws DomainError if
/// n exceeds kPipeDreamMaxN.
std::vector<PipeDream> reduced_pipe_dreams(const Permutation& w);

/// Sum of pipe dream weights; an independent route to schubert(w).
Polynomial schubert_via_pipedreams(const Permutation& w);

/// E_j^{(k)} through E_j^{(k)} = E_j^{(k-1)} + x_k E_{j-1}^{(k-1)} + q_{k-1} E_{j-2}^{(k-2)}.
Polynomial quantum_elementary(int j, int k);

/// Coefficient of lambda^j in det(I + lambda G_k), by direct Leibniz
/// expansion of the k x k matrix. Used as an oracle for quantum_elementary.
Polynomial quantum_elementary_via_determinant(int j, int k);

/// prod_k E_{j_k}^{(k)}.
Polynomial quantum_sem_monomial(const SemIndex& idx);

/// SEM-expand S_w with m = n - 1 and substitute E for e.
Polynomial quantum_schubert(const Permutation& w);

}  // namespace semdet
