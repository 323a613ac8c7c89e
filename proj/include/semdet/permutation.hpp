#pragma once

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace semdet {

/// Violation of a documented precondition on the mathematical input.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Permutation;

/// Raised when an input contains a pattern the operation forbids. Carries the
/// pattern and the 1-based positions of one occurrence.
class PatternViolation : public DomainError {
 public:
  PatternViolation(const std::string& what, std::vector<int> pattern, std::vector<int> positions);
  const std::vector<int>& pattern() const { return pattern_; }
  const std::vector<int>& positions() const { return positions_; }

 private:
  std::vector<int> pattern_;
  std::vector<int> positions_;
};

/// A permutation of {1..n} in one-line notation. Values and positions are
/// 1-indexed throughout.
class Permutation {
 public:
  /// Throws DomainError unless word is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// Parses "4 1 3 2", "4,1,3,2" or (n <= 9) the compact form "4132".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  /// Function composition: (*this * v)(i) = (*this)(v(i)).
  Permutation operator*(const Permutation& v) const;
  /// Right multiplication by s_i, i.e. swapping positions i and i+1.
  Permutation times_simple(int i) const;
  /// Embedding into S_m (m >= n) by appending fixed points.
  Permutation padded(int m) const;

  bool is_identity() const;
  std::string to_string() const;  // "4 1 3 2"
  std::string compact() const;    // "4132" (values joined; n <= 9 reads naturally)

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

using Code = std::vector<int>;

Code code(const Permutation& w);
Permutation from_code(const Code& c);
int length(const Permutation& w);
/// Positions i (1-based) with w(i) > w(i+1).
std::vector<int> descents(const Permutation& w);
/// Values that are left-to-right maxima, in order of appearance.
std::vector<int> left_to_right_maxima(const Permutation& w);

/// Standardization of an arbitrary sequence of distinct integers.
Permutation standardize(std::span<const int> values);

/// 1-based positions of the first occurrence of p in w, if any.
std::optional<std::vector<int>> find_pattern(const Permutation& w, const Permutation& p);
bool contains_pattern(const Permutation& w, const Permutation& p);
bool avoids(const Permutation& w, std::initializer_list<const char*> patterns);

/// Patterns of length 5 and 6 whose avoidance guarantees a proper representation.
const std::vector<Permutation>& thirteen_patterns();
bool avoids_thirteen(const Permutation& w);
/// First forbidden pattern found and its occurrence, if any.
std::optional<std::pair<Permutation, std::vector<int>>> thirteen_witness(const Permutation& w);

enum class ClassLabel {
  Dominant,
  Avoids213,
  Avoids321,
  Grassmannian,
  Separable,
  Avoids1324,
  Lowering,
  ThirteenAvoiding,
};
std::string label_name(ClassLabel label);
std::set<ClassLabel> classify(const Permutation& w);

Permutation direct_sum(const Permutation& u, const Permutation& v);
Permutation skew_sum(const Permutation& u, const Permutation& v);

/// Binary decomposition of a separable permutation into direct and skew sums
/// of the singleton permutation.
struct SeparableTree {
  enum class Kind { Leaf, Direct, Skew };
  Kind kind = Kind::Leaf;
  std::vector<SeparableTree> children;  // exactly two for Direct/Skew

  Permutation compose() const;
  std::string to_string() const;
};

/// Splits at the first (leftmost) top-level block boundary. Throws
/// PatternViolation for non-separable input.
SeparableTree separable_decomposition(const Permutation& w);

/// A permutation avoiding 132 and 312. Stores k = v(1) and the positions
/// p_i = v^{-1}(i) for i = 1..k (strictly decreasing, p_k = 1).
class LoweringPermutation {
 public:
  /// Throws DomainError if base contains 132 or 312.
  explicit LoweringPermutation(Permutation base);

  const Permutation& base() const { return base_; }
  int k() const { return k_; }
  const std::vector<int>& descent_positions() const { return positions_; }

 private:
  Permutation base_;
  int k_ = 0;
  std::vector<int> positions_;
};

bool is_lowering(const Permutation& v);

/// Subset Q of the left-to-right maxima used to factor a thirteen-avoiding
/// permutation. Returned in decreasing order.
std::vector<int> q_set(const Permutation& w);

struct Factorization {
  Permutation u;
  LoweringPermutation v;
};

/// w = u v with u avoiding 1324, 2413, 3142, v lowering, and
/// length(w) = length(u) - length(v).
Factorization factorize(const Permutation& w);

/// All permutations of size n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace semdet
