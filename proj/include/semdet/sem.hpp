#pragma once

// Standard elementary monomials e_{j1 j2 ...} = prod_k e_{j_k}^{(k)} and
// basis changes into them.

#include <map>
#include <vector>

#include "semdet/permutation.hpp"
#include "semdet/polynomial.hpp"

namespace semdet {

/// Index (j_1, ..., j_m) of a standard elementary monomial, 0 <= j_k <= k,
/// stored without trailing zeros.
class SemIndex {
 public:
  SemIndex() = default;
  /// Throws DomainError if some j_k lies outside [0, k].
  explicit SemIndex(std::vector<int> js);

  const std::vector<int>& js() const { return js_; }
  int length() const { return static_cast<int>(js_.size()); }
  int degree() const;
  /// j_k, 1-based; zero past the stored length.
  int operator[](int k) const { return k >= 1 && k <= length() ? js_[k - 1] : 0; }

  /// Compact label used in the e_{...} notation: digits concatenated when
  /// every j_k < 10, comma separated otherwise. "" for the empty index.
  std::string label() const;

  friend bool operator==(const SemIndex&, const SemIndex&) = default;
  friend auto operator<=>(const SemIndex&, const SemIndex&) = default;

 private:
  std::vector<int> js_;
};

/// Finite mapping SemIndex -> nonzero integer, sorted lexicographically.
using SemExpansion = std::map<SemIndex, Coeff>;

class InsufficientBound : public DomainError {
 public:
  using DomainError::DomainError;
};

/// prod_k e_{j_k}^{(k)}.
Polynomial sem_monomial(const SemIndex& idx);

/// Sum of alpha * sem_monomial(idx).
Polynomial evaluate(const SemExpansion& expansion);

/// Unique integer SEM expansion of f using indices of length <= m.
/// Solves one square exact system per homogeneous degree; the systems are
/// built once per m and cached. Throws InsufficientBound if f is not in the
/// span of SEMs with k <= m, and DomainError if f involves q-variables.
SemExpansion sem_expand(const Polynomial& f, int m);

/// Reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}, built by
/// repeatedly splitting off the smallest descent on the right.
std::vector<int> reduced_word(const Permutation& w);

/// partial_w f = partial_{i_1} ... partial_{i_l} f for any reduced word of w.
Polynomial divided_difference_word(const Polynomial& f, const Permutation& w);

/// Applies partial_{word[0]} ... partial_{word[l-1]} (rightmost first).
Polynomial apply_divided_differences(const Polynomial& f, const std::vector<int>& word);

}  // namespace semdet
