#include "semdet/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace semdet {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_exponents(const std::vector<int>& xexps,
                                  const std::vector<int>& qexps) {
  Monomial m;
  for (std::size_t i = 0; i < xexps.size(); ++i) m.set_x(static_cast<int>(i) + 1, xexps[i]);
  for (std::size_t i = 0; i < qexps.size(); ++i) m.set_q(static_cast<int>(i) + 1, qexps[i]);
  return m;
}

void Monomial::set_x(int i, int e) {
  if (e == 0 && (i < 1 || i > kMaxXVars)) return;
  if (i < 1 || i > kMaxXVars) throw ArithmeticError("x variable index out of range: " + std::to_string(i));
  if (e < 0 || e > 255) throw ArithmeticError("x exponent out of range");
  degree_ += e - x_[i - 1];
  x_[i - 1] = static_cast<std::uint8_t>(e);
}

void Monomial::set_q(int i, int e) {
  if (e == 0 && (i < 1 || i > kMaxQVars)) return;
  if (i < 1 || i > kMaxQVars) throw ArithmeticError("q variable index out of range: " + std::to_string(i));
  if (e < 0 || e > 255) throw ArithmeticError("q exponent out of range");
  degree_ += e - q_[i - 1];
  q_[i - 1] = static_cast<std::uint8_t>(e);
}

int Monomial::x_degree() const {
  int d = 0;
  for (auto e : x_) d += e;
  return d;
}

bool Monomial::has_q() const {
  return std::any_of(q_.begin(), q_.end(), [](auto e) { return e != 0; });
}

int Monomial::max_x_var() const {
  for (int i = kMaxXVars; i >= 1; --i)
    if (x_[i - 1] != 0) return i;
  return 0;
}

int Monomial::max_q_var() const {
  for (int i = kMaxQVars; i >= 1; --i)
    if (q_[i - 1] != 0) return i;
  return 0;
}

std::vector<int> Monomial::x_exponents() const {
  return std::vector<int>(x_.begin(), x_.begin() + max_x_var());
}

std::vector<int> Monomial::q_exponents() const {
  return std::vector<int>(q_.begin(), q_.begin() + max_q_var());
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxXVars; ++i) {
    int e = x_[i] + other.x_[i];
    if (e > 255) throw ArithmeticError("x exponent overflow");
    r.x_[i] = static_cast<std::uint8_t>(e);
  }
  for (int i = 0; i < kMaxQVars; ++i) {
    int e = q_[i] + other.q_[i];
    if (e > 255) throw ArithmeticError("q exponent overflow");
    r.q_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxXVars; ++i)
    if (x_[i] > other.x_[i]) return false;
  for (int i = 0; i < kMaxQVars; ++i)
    if (q_[i] > other.q_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxXVars; ++i) r.x_[i] = static_cast<std::uint8_t>(other.x_[i] - x_[i]);
  for (int i = 0; i < kMaxQVars; ++i) r.q_[i] = static_cast<std::uint8_t>(other.q_[i] - q_[i]);
  r.degree_ = other.degree_ - degree_;
  return r;
}

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int i = 1; i <= kMaxXVars; ++i)
    if (a.x(i) != b.x(i)) return a.x(i) > b.x(i);
  for (int i = 1; i <= kMaxQVars; ++i)
    if (a.q(i) != b.q(i)) return a.q(i) > b.q(i);
  return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Coeff& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::x(int i) {
  Monomial m;
  m.set_x(i, 1);
  return monomial(m);
}

Polynomial Polynomial::q(int i) {
  Monomial m;
  m.set_q(i, 1);
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Coeff& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Polynomial::max_x_var() const {
  int r = 0;
  for (const auto& [m, c] : terms_) r = std::max(r, m.max_x_var());
  return r;
}

int Polynomial::max_q_var() const {
  int r = 0;
  for (const auto& [m, c] : terms_) r = std::max(r, m.max_q_var());
  return r;
}

bool Polynomial::has_q() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_q(); });
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial Polynomial::at_q_zero() const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (!m.has_q()) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial Polynomial::shift_x(int offset) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial s;
    for (int i = 1; i <= kMaxXVars; ++i)
      if (m.x(i) != 0) s.set_x(i + offset, m.x(i));
    for (int i = 1; i <= kMaxQVars; ++i)
      if (m.q(i) != 0) s.set_q(i, m.q(i));
    r.add_term(s, c);
  }
  return r;
}

Polynomial Polynomial::swap_x(int i) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    s.set_x(i, m.x(i + 1));
    s.set_x(i + 1, m.x(i));
    r.add_term(s, c);
  }
  return r;
}

void Polynomial::add_term(const Monomial& m, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (int i = 1; i <= kMaxXVars; ++i) {
      if (m.x(i) == 0) continue;
      std::string f = "x" + std::to_string(i);
      if (m.x(i) > 1) f += "^" + std::to_string(m.x(i));
      factors.push_back(std::move(f));
    }
    for (int i = 1; i <= kMaxQVars; ++i) {
      if (m.q(i) == 0) continue;
      std::string f = "q" + std::to_string(i);
      if (m.q(i) > 1) f += "^" + std::to_string(m.q(i));
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out << "*";
      out << factors[k];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- algebra

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw ArithmeticError("division by zero polynomial");
  const auto& [lead_m, lead_c] = *den.terms().begin();
  Polynomial rem = num;
  Polynomial quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().begin();
    if (!lead_m.divides(rm)) throw ArithmeticError("inexact polynomial division");
    Coeff qc;
    Coeff r;
    boost::multiprecision::divide_qr(rc, lead_c, qc, r);
    if (r != 0) throw ArithmeticError("inexact coefficient division");
    Polynomial t = Polynomial::monomial(lead_m.quotient_of(rm), qc);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

Polynomial elementary(int j, int k) {
  if (j < 0 || k < 0 || j > k) return {};
  if (j == 0) return Polynomial(1);
  Polynomial r;
  // Enumerate j-subsets of {1..k} in lexicographic order.
  std::vector<int> idx(j);
  for (int t = 0; t < j; ++t) idx[t] = t + 1;
  while (true) {
    Monomial m;
    for (int v : idx) m.set_x(v, 1);
    r.add_term(m, 1);
    int t = j - 1;
    while (t >= 0 && idx[t] == k - (j - 1 - t)) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < j; ++s) idx[s] = idx[s - 1] + 1;
  }
  return r;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1 || i >= kMaxXVars) throw ArithmeticError("divided difference index out of range");
  // Monomial-wise closed form of (x_i^p x_{i+1}^r - x_i^r x_{i+1}^p) / (x_i - x_{i+1}).
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    int p = m.x(i);
    int s = m.x(i + 1);
    if (p == s) continue;
    int lo = std::min(p, s);
    int gap = std::max(p, s) - lo;
    Coeff sign = p > s ? Coeff(c) : Coeff(-c);
    for (int t = 0; t < gap; ++t) {
      Monomial n = m;
      n.set_x(i, lo + gap - 1 - t);
      n.set_x(i + 1, lo + t);
      r.add_term(n, sign);
    }
  }
  return r;
}

namespace {

Polynomial cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Polynomial bareiss_det(PolyMatrix a) {
  const std::size_t n = a.size();
  bool negate = false;
  Polynomial prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[i][j] * a[k][k];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) num -= a[i][k] * a[k][j];
        a[i][j] = prev.is_constant() && prev.constant_term() == 1 ? std::move(num)
                                                                  : divide_exact(num, prev);
      }
      a[i][k] = Polynomial();
    }
    prev = a[k][k];
  }
  Polynomial d = a[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.size() <= 4) return cofactor_det(m);
  return bareiss_det(m);
}

std::vector<int> conjugate(const std::vector<int>& lambda) {
  std::vector<int> conj;
  if (lambda.empty()) return conj;
  int r = *std::max_element(lambda.begin(), lambda.end());
  for (int i = 1; i <= r; ++i) {
    int cnt = 0;
    for (int part : lambda)
      if (part >= i) ++cnt;
    conj.push_back(cnt);
  }
  return conj;
}

Polynomial schur(const std::vector<int>& lambda, int n) {
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
  auto conj = conjugate(lambda);
  const int r = static_cast<int>(conj.size());
  PolyMatrix m(r, std::vector<Polynomial>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) m[i - 1][j - 1] = elementary(conj[i - 1] + j - i, n);
  return determinant(m);
}

}  // namespace semdet
