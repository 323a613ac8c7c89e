#include "semdet/sem.hpp"

#include <memory>
#include <mutex>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace semdet {

SemIndex::SemIndex(std::vector<int> js) : js_(std::move(js)) {
  while (!js_.empty() && js_.back() == 0) js_.pop_back();
  for (int k = 1; k <= length(); ++k)
    if (js_[k - 1] < 0 || js_[k - 1] > k)
      throw DomainError("SEM index entry j_" + std::to_string(k) + " must lie in [0, " +
                        std::to_string(k) + "]");
}

int SemIndex::degree() const { return std::accumulate(js_.begin(), js_.end(), 0); }

std::string SemIndex::label() const {
  bool wide = false;
  for (int j : js_) wide = wide || j >= 10;
  std::string s;
  for (std::size_t i = 0; i < js_.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(js_[i]);
  }
  return s;
}

namespace {

const Polynomial& cached_elementary(int j, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Polynomial> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({j, k});
  if (it == cache.end()) it = cache.emplace(std::make_pair(j, k), elementary(j, k)).first;
  return it->second;
}

}  // namespace

Polynomial sem_monomial(const SemIndex& idx) {
  Polynomial r(1);
  for (int k = 1; k <= idx.length(); ++k)
    if (idx[k] != 0) r *= cached_elementary(idx[k], k);
  return r;
}

Polynomial evaluate(const SemExpansion& expansion) {
  Polynomial r;
  for (const auto& [idx, c] : expansion) r += Polynomial(c) * sem_monomial(idx);
  return r;
}

// ----------------------------------------------------------- linear systems

namespace {

using boost::multiprecision::cpp_rational;

// One homogeneous degree of the change of basis for a fixed m. Rows are the
// monomials x^a with a_i <= m + 1 - i; columns the SEM indices of that degree.
// Both sets have the same size, and inverse * column(monomial) gives the
// coefficient vector of that monomial in the SEM basis, scaled by denom.
struct DegreeSystem {
  std::vector<SemIndex> indices;
  std::map<Monomial, int, GradedLexDescending> row_of;
  // inverse_cols[r][c]: coefficient of indices[c] in the expansion of row r.
  std::vector<std::vector<Coeff>> inverse_cols;
  Coeff denom = 1;
};

struct SystemsForBound {
  std::vector<DegreeSystem> by_degree;
};

void enumerate_indices(int m, int k, std::vector<int>& cur, std::vector<std::vector<SemIndex>>& out) {
  if (k > m) {
    SemIndex idx(cur);
    out[idx.degree()].push_back(idx);
    return;
  }
  for (int j = 0; j <= k; ++j) {
    cur.push_back(j);
    enumerate_indices(m, k + 1, cur, out);
    cur.pop_back();
  }
}

void enumerate_monomials(int m, int i, Monomial& cur, std::vector<std::vector<Monomial>>& out) {
  if (i > m) {
    out[cur.degree()].push_back(cur);
    return;
  }
  for (int e = 0; e <= m + 1 - i; ++e) {
    cur.set_x(i, e);
    enumerate_monomials(m, i + 1, cur, out);
  }
  cur.set_x(i, 0);
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

// Inverse of an integer matrix modulo kPrime, lifted to the symmetric range
// and then checked exactly. Returns false if the lift is not the true inverse.
bool modular_inverse(const std::vector<std::vector<long long>>& a,
                     std::vector<std::vector<long long>>& inv) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long v = a[i][j] % static_cast<long long>(kPrime);
      m[i][j] = v < 0 ? static_cast<std::uint64_t>(v + static_cast<long long>(kPrime)) : v;
    }
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    const std::uint64_t scale = powmod(m[col][col], kPrime - 2);
    for (auto& v : m[col]) v = mulmod(v, scale);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const std::uint64_t f = m[r][col];
      for (std::size_t c = col; c < 2 * n; ++c) {
        if (m[col][c] == 0) continue;
        std::uint64_t sub = mulmod(f, m[col][c]);
        m[r][c] = m[r][c] >= sub ? m[r][c] - sub : m[r][c] + kPrime - sub;
      }
    }
  }
  inv.assign(n, std::vector<long long>(n, 0));
  constexpr long long kBound = 1LL << 40;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t v = m[i][n + j];
      long long s = v > kPrime / 2 ? -static_cast<long long>(kPrime - v) : static_cast<long long>(v);
      if (s > kBound || s < -kBound) return false;
      inv[i][j] = s;
    }
  // Exact check a * inv == I.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      __int128 acc = 0;
      for (std::size_t t = 0; t < n; ++t)
        if (a[i][t] != 0 && inv[t][j] != 0) acc += static_cast<__int128>(a[i][t]) * inv[t][j];
      if (acc != (i == j ? 1 : 0)) return false;
    }
  return true;
}

// Gauss-Jordan over the rationals; returns inverse scaled to a common
// denominator.
void rational_inverse(const std::vector<std::vector<long long>>& a,
                      std::vector<std::vector<Coeff>>& num, Coeff& denom) {
  const std::size_t n = a.size();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("SEM change-of-basis matrix is singular");
    std::swap(m[piv], m[col]);
    const cpp_rational scale = 1 / m[col][col];
    for (auto& v : m[col]) v *= scale;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const cpp_rational f = m[r][col];
      for (std::size_t c = col; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  denom = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      denom = boost::multiprecision::lcm(denom, Coeff(boost::multiprecision::denominator(m[i][n + j])));
  num.assign(n, std::vector<Coeff>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cpp_rational scaled = m[i][n + j] * cpp_rational(denom);
      num[i][j] = boost::multiprecision::numerator(scaled);
    }
}

std::shared_ptr<const SystemsForBound> build_systems(int m) {
  const int max_deg = m * (m + 1) / 2;
  std::vector<std::vector<SemIndex>> indices(max_deg + 1);
  std::vector<std::vector<Monomial>> monomials(max_deg + 1);
  std::vector<int> cur;
  enumerate_indices(m, 1, cur, indices);
  Monomial mono;
  enumerate_monomials(m, 1, mono, monomials);

  auto systems = std::make_shared<SystemsForBound>();
  systems->by_degree.resize(max_deg + 1);
  for (int d = 0; d <= max_deg; ++d) {
    auto& sys = systems->by_degree[d];
    sys.indices = indices[d];
    const std::size_t n = sys.indices.size();
    if (monomials[d].size() != n) throw std::logic_error("SEM system is not square");
    for (std::size_t r = 0; r < n; ++r) sys.row_of.emplace(monomials[d][r], static_cast<int>(r));

    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
      Polynomial p = sem_monomial(sys.indices[c]);
      for (const auto& [mon, coeff] : p.terms()) {
        auto it = sys.row_of.find(mon);
        if (it == sys.row_of.end()) throw std::logic_error("SEM term outside the staircase");
        a[it->second][c] = coeff.convert_to<long long>();
      }
    }

    std::vector<std::vector<Coeff>> inv;  // inv[c][r]
    std::vector<std::vector<long long>> small;
    if (modular_inverse(a, small)) {
      inv.assign(n, std::vector<Coeff>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = small[i][j];
      sys.denom = 1;
    } else {
      rational_inverse(a, inv, sys.denom);
    }
    sys.inverse_cols.assign(n, std::vector<Coeff>(n));
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) sys.inverse_cols[r][c] = inv[c][r];
  }
  return systems;
}

std::shared_ptr<const SystemsForBound> systems_for(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SystemsForBound>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  auto built = build_systems(m);
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(built)).first->second;
}

}  // namespace

SemExpansion sem_expand(const Polynomial& f, int m) {
  if (m < 1) throw DomainError("SEM index bound must be positive");
  if (f.has_q()) throw DomainError("sem_expand expects a polynomial in x-variables only");
  for (const auto& [mon, c] : f.terms()) {
    for (int i = 1; i <= kMaxXVars; ++i) {
      const int cap = i <= m ? m + 1 - i : 0;
      if (mon.x(i) > cap)
        throw InsufficientBound("polynomial is not in the span of SEMs with index length <= " +
                                std::to_string(m));
    }
  }
  SemExpansion result;
  if (f.is_zero()) return result;
  auto systems = systems_for(m);
  std::vector<std::vector<std::pair<int, Coeff>>> by_degree(systems->by_degree.size());
  for (const auto& [mon, c] : f.terms()) {
    const auto& sys = systems->by_degree[mon.degree()];
    by_degree[mon.degree()].emplace_back(sys.row_of.at(mon), c);
  }
  for (std::size_t d = 0; d < by_degree.size(); ++d) {
    if (by_degree[d].empty()) continue;
    const auto& sys = systems->by_degree[d];
    std::vector<Coeff> alpha(sys.indices.size());
    for (const auto& [row, c] : by_degree[d]) {
      const auto& col = sys.inverse_cols[row];
      for (std::size_t k = 0; k < col.size(); ++k)
        if (col[k] != 0) alpha[k] += col[k] * c;
    }
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] == 0) continue;
      Coeff q;
      Coeff r;
      boost::multiprecision::divide_qr(alpha[k], sys.denom, q, r);
      if (r != 0) throw InsufficientBound("no integer SEM expansion exists");
      result.emplace(sys.indices[k], q);
    }
  }
  return result;
}

// ------------------------------------------------------ divided differences

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> tail;  // letters split off from the right, last first
  Permutation cur = w;
  while (true) {
    auto d = descents(cur);
    if (d.empty()) break;
    tail.push_back(d.front());
    cur = cur.times_simple(d.front());
  }
  return std::vector<int>(tail.rbegin(), tail.rend());
}

Polynomial apply_divided_differences(const Polynomial& f, const std::vector<int>& word) {
  Polynomial r = f;
  for (auto it = word.rbegin(); it != word.rend() && !r.is_zero(); ++it) r = divided_difference(r, *it);
  return r;
}

Polynomial divided_difference_word(const Polynomial& f, const Permutation& w) {
  return apply_divided_differences(f, reduced_word(w));
}

}  // namespace semdet
