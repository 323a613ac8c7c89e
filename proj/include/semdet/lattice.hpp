#pragma once

// Lattice path representations: starts (a_i, 0) and ends (b_j, c_j) in the
// graph on Z x Z_{>=0} with upsteps (a,b)->(a,b+1) of weight x_{b+1} and
// weight-one diagonal steps (a,b)->(a-1,b+1). A representation stands for
// sign * det(e^{(c_j)}_{c_j + b_j - a_i}).

#include <optional>
#include <string>
#include <vector>

#include "semdet/permutation.hpp"
#include "semdet/polynomial.hpp"
#include "semdet/sem.hpp"

namespace semdet {

struct EndPoint {
  int b = 0;
  int c = 0;
  friend bool operator==(const EndPoint&, const EndPoint&) = default;
  friend auto operator<=>(const EndPoint&, const EndPoint&) = default;
};

class LatticeRep {
 public:
  LatticeRep() = default;
  LatticeRep(std::vector<int> starts, std::vector<EndPoint> ends, int sign = 1,
             std::string label = {});

  const std::vector<int>& starts() const { return starts_; }
  const std::vector<EndPoint>& ends() const { return ends_; }
  int sign() const { return sign_; }
  const std::string& label() const { return label_; }
  int size() const { return static_cast<int>(starts_.size()); }

  void set_label(std::string label) { label_ = std::move(label); }

  /// Heights pairwise distinct.
  bool is_proper() const;
  /// Starts and heights both equal {0..k-1} and every b lies in [0, k-1].
  bool is_compact() const;
  /// For each s, at least s of the b_j are < s.
  bool is_parking() const;
  int max_height() const;

  /// Matrix of e^{(c_j)}_{c_j + b_j - a_i} (no sign applied).
  PolyMatrix matrix() const;

  /// Same represented polynomial with starts ascending and ends sorted by
  /// (height, abscissa); the sign absorbs both sorting permutations.
  LatticeRep normalized() const;

  /// Shift every abscissa by dx.
  LatticeRep translated(int dx) const;

  friend bool operator==(const LatticeRep&, const LatticeRep&) = default;

 private:
  friend LatticeRep product(const LatticeRep&, const LatticeRep&);
  std::vector<int> starts_;
  std::vector<EndPoint> ends_;
  int sign_ = 1;
  std::string label_;
};

/// True iff a directed path from (a,0) to (b,c) exists, i.e. b <= a <= b + c.
bool reachable(int a, const EndPoint& e);

/// Weight of all paths (a,0) -> (b,c): e^{(c)}_{c+b-a}.
Polynomial point_weight(int a, int b, int c);

/// sign * det(matrix()); the empty representation stands for 1.
Polynomial rep_determinant(const LatticeRep& rep);

/// sign * det(E^{(c_j)}_{c_j + b_j - a_i}) with quantum elementary entries.
/// Requires a proper representation.
Polynomial rep_determinant_quantum(const LatticeRep& rep);

/// Signed SEM expansion read off the Leibniz expansion of a proper rep.
SemExpansion sem_of_proper(const LatticeRep& rep);

// ------------------------------------------------------- path systems (LGV)

struct LatticePath {
  int start = 0;                     // index into starts
  int end = 0;                       // index into ends
  std::vector<bool> steps;           // true = upstep, false = diagonal
};

struct PathSystem {
  std::vector<LatticePath> paths;    // one per start, in start order
  std::vector<int> sigma;            // sigma[i] = end index of path i (0-based)
  Polynomial weight;
  int sign = 1;                      // sgn(sigma)
};

inline constexpr int kPathSystemMaxK = 5;
inline constexpr int kPathSystemMaxHeight = 8;

/// Every family of vertex-disjoint paths from the starts to the ends.
/// Throws DomainError outside the enumeration budget.
std::vector<PathSystem> enumerate_path_systems(const LatticeRep& rep);

/// Sum of sgn(sigma) * weight over enumerate_path_systems (no rep sign).
Polynomial path_system_sum(const std::vector<PathSystem>& systems);

/// Vertices of the path, starting at (a, 0).
std::vector<std::pair<int, int>> path_vertices(int a, const std::vector<bool>& steps);

// ---------------------------------------------------------------- operations

/// Replace (b+1, c) with (b, c+1); requires (b,c) and (b+1,c) among the ends.
LatticeRep pull(const LatticeRep& rep, int b, int c);

/// True if no end lies at height c, in which case partial_c kills the
/// represented polynomial.
bool drop_annihilates(const LatticeRep& rep, int c);

/// Move the unique end at height c down to c-1: represents partial_c F.
LatticeRep drop(const LatticeRep& rep, int c);

/// Unique (b,c) at height c and (b+1, c-1) present: replace (b+1,c-1) by
/// (b, c-1). Returns a representation of partial_c F (sign flipped).
LatticeRep slide_left_below(const LatticeRep& rep, int c);

/// Unique (b,c) at height c and (b-1, c-1) present: replace (b,c) by
/// (b-1, c). Represents partial_c F.
LatticeRep slide_left_at(const LatticeRep& rep, int c);

/// Union of the two representations, representing F * G. Requires no
/// directed path from a start of f to an end of g.
LatticeRep product(const LatticeRep& f, const LatticeRep& g);

/// Remove starts a..a+s and ends (a,0)..(a,s); polynomial unchanged.
LatticeRep delete_staircase(const LatticeRep& rep, int a, int s);

/// Applies the lowering permutation v: removes the k = v(1) bottom pairs and
/// re-assigns heights v^{-1}(k+1)-1, ..., v^{-1}(n)-1. Represents
/// partial_{v^{-1}} F. Accepts any ordering of starts/ends as long as the
/// heights are exactly 0..n-1 and the bottom k ends sit above starts.
LatticeRep lower(const LatticeRep& rep, const LoweringPermutation& v);

// ------------------------------------------------------------- constructions

/// Dominant w: starts n-1..0, ends (code_i, i-1), sign (-1)^{C(n,2) - l(w)}.
LatticeRep rep_dominant(const Permutation& w);

/// 213-avoiding w: starts n-1..0, ends (b_i, n-i) with b = code(w0 w w0).
LatticeRep rep_213(const Permutation& w);

/// Compact representation of a 1324-, 2413-, 3142-avoiding permutation,
/// normalized (starts ascending, ends by height).
LatticeRep compact_rep(const Permutation& w);

/// Proper representation of a thirteen-avoiding permutation: compact_rep(u)
/// lowered by v where w = u v.
LatticeRep proper_rep(const Permutation& w);

/// 321-avoiding w: starts qbar_i - 1, ends (0, pbar_i - 1).
LatticeRep rep_321(const Permutation& w);

/// s_lambda(x_1..x_n) as det(e^{(n+j-1)}_{lambda'_i + j - i}).
LatticeRep rep_grassmannian(const std::vector<int>& lambda, int n);

/// Fixed proper representation of S_{413625}.
LatticeRep rep_413625();

}  // namespace semdet
