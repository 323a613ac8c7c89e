#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients over x_1, x_2, ... and (optionally) q_1, q_2, ...

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semdet {

using Coeff = boost::multiprecision::cpp_int;

inline constexpr int kMaxXVars = 32;
inline constexpr int kMaxQVars = 32;

/// Thrown when an exact arithmetic step cannot be carried out (non-exact
/// division, exponent overflow, variable index out of range).
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(const std::vector<int>& xexps,
                                 const std::vector<int>& qexps = {});

  // Variables are 1-indexed, matching x_1, x_2, ...
  int x(int i) const { return i >= 1 && i <= kMaxXVars ? x_[i - 1] : 0; }
  int q(int i) const { return i >= 1 && i <= kMaxQVars ? q_[i - 1] : 0; }
  void set_x(int i, int e);
  void set_q(int i, int e);

  int degree() const { return degree_; }
  int x_degree() const;
  bool has_q() const;
  bool is_one() const { return degree_ == 0; }

  /// Largest i with a nonzero exponent of x_i (0 if none).
  int max_x_var() const;
  int max_q_var() const;

  /// Exponent vectors with trailing zeros removed.
  std::vector<int> x_exponents() const;
  std::vector<int> q_exponents() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxXVars> x_{};
  std::array<std::uint8_t, kMaxQVars> q_{};
  int degree_ = 0;
};

/// Graded lexicographic order, x_1 > x_2 > ... > q_1 > q_2 > ...
/// Returns true when a is strictly larger than b, so a std::map keyed with
/// this comparator iterates from the leading term down.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coeff, GradedLexDescending>;

  Polynomial() = default;
  Polynomial(const Coeff& c);  // NOLINT: implicit constant embedding
  Polynomial(long c) : Polynomial(Coeff(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Coeff(c)) {}   // NOLINT

  static Polynomial x(int i);
  static Polynomial q(int i);
  static Polynomial monomial(const Monomial& m, const Coeff& c = 1);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the given monomial (zero if absent).
  Coeff coefficient(const Monomial& m) const;
  Coeff constant_term() const { return coefficient(Monomial{}); }

  /// -1 for the zero polynomial.
  int degree() const;
  int max_x_var() const;
  int max_q_var() const;
  bool has_q() const;

  Polynomial homogeneous_component(int d) const;
  /// Sets every q_i to zero.
  Polynomial at_q_zero() const;
  /// f(x_1, x_2, ...) -> f(x_{1+offset}, x_{2+offset}, ...).
  Polynomial shift_x(int offset) const;
  /// s_i f: swaps x_i and x_{i+1}.
  Polynomial swap_x(int i) const;

  void add_term(const Monomial& m, const Coeff& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Polynomial pow(int e) const;

  /// Plain-text rendering, e.g. "x1^3*x2 + x1^3*x3".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Exact quotient num / den. Throws ArithmeticError if den does not divide
/// num in Z[x, q].
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

/// e_j^{(k)}: the j-th elementary symmetric polynomial in x_1..x_k.
Polynomial elementary(int j, int k);

/// Divided difference (f - s_i f) / (x_i - x_{i+1}).
Polynomial divided_difference(const Polynomial& f, int i);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Exact determinant. Cofactor expansion up to 4x4, fraction-free
/// (Bareiss) elimination with exact division above that.
Polynomial determinant(const PolyMatrix& m);

/// Dual Jacobi-Trudi: det(e^{(n)}_{lambda'_i + j - i}), i,j = 1..lambda_1.
Polynomial schur(const std::vector<int>& lambda, int n);

/// Conjugate partition.
std::vector<int> conjugate(const std::vector<int>& lambda);

}  // namespace semdet
