#include "semdet/schubert.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace semdet {

namespace {

Permutation trim_fixed_tail(const Permutation& w) {
  int n = w.size();
  while (n > 1 && w(n) == n) --n;
  return Permutation(std::vector<int>(w.word().begin(), w.word().begin() + n));
}

Polynomial staircase(int n) {
  Monomial m;
  for (int i = 1; i < n; ++i) m.set_x(i, n - i);
  return Polynomial::monomial(m);
}

Polynomial compute_schubert(const Permutation& w) {
  const int n = w.size();
  // Walk up to w_0 by smallest ascents; S_w = partial_{i_1} partial_{i_2} ... S_{w_0}.
  std::vector<int> word;
  Permutation cur = w;
  while (true) {
    int ascent = 0;
    for (int i = 1; i < n; ++i)
      if (cur(i) < cur(i + 1)) {
        ascent = i;
        break;
      }
    if (ascent == 0) break;
    word.push_back(ascent);
    cur = cur.times_simple(ascent);
  }
  return apply_divided_differences(staircase(n), word);
}

}  // namespace

Polynomial schubert(const Permutation& w) {
  static std::mutex mu;
  static std::map<Permutation, Polynomial> cache;
  const Permutation key = trim_fixed_tail(w);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Polynomial p = compute_schubert(key);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(p)).first->second;
}

std::map<Permutation, Coeff> schubert_expand(const Polynomial& f, int n) {
  if (f.has_q() || f.max_x_var() > n - 1)
    throw DomainError("polynomial is not in the span of Schubert polynomials of S_" + std::to_string(n));
  std::set<int> degrees;
  for (const auto& [m, c] : f.terms()) degrees.insert(m.degree());
  std::map<Permutation, Coeff> result;
  for (const auto& w : all_permutations(n)) {
    if (!degrees.count(length(w))) continue;
    Coeff c = divided_difference_word(f, w).constant_term();
    if (c != 0) result.emplace(w, c);
  }
  Polynomial rebuilt;
  for (const auto& [w, c] : result) rebuilt += Polynomial(c) * schubert(w);
  if (!(rebuilt == f))
    throw DomainError("polynomial is not in the span of Schubert polynomials of S_" + std::to_string(n));
  return result;
}

// --------------------------------------------------------------- pipe dreams

Polynomial PipeDream::weight() const {
  Monomial m;
  for (const auto& [i, j] : crosses_) m.set_x(i, m.x(i) + 1);
  return Polynomial::monomial(m);
}

PipeDream::Trace PipeDream::trace(int n) const {
  Trace t;
  t.exits.resize(n);
  std::map<std::pair<int, int>, std::vector<int>> through;  // cross cell -> wires
  for (int wire = 1; wire <= n; ++wire) {
    int r = wire;
    int c = 1;
    bool from_left = true;
    while (r >= 1) {
      const bool cross = crosses_.count({r, c}) > 0;
      if (cross) through[{r, c}].push_back(wire);
      if (from_left == cross) {
        // Continue right: a cross passes straight through from the left, an
        // elbow turns a wire entering from below to the right.
        ++c;
        from_left = true;
      } else {
        --r;
        from_left = false;
      }
    }
    t.exits[wire - 1] = c;
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& [cell, wires] : through) {
    if (wires.size() != 2) continue;  // crosses touched by wires beyond n
    auto p = std::minmax(wires[0], wires[1]);
    if (!pairs.insert(p).second) t.reduced = false;
  }
  return t;
}

std::string PipeDream::render(int n) const {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n + 1 - i; ++j) out += crosses_.count({i, j}) ? '+' : '/';
    out += '\n';
  }
  return out;
}

std::vector<PipeDream> reduced_pipe_dreams(const Permutation& w) {
  const int n = w.size();
  if (n > kPipeDreamMaxN)
    throw DomainError("pipe dream enumeration budget exceeded (n <= " + std::to_string(kPipeDreamMaxN) + ")");
  const int target_len = length(w);
  const Permutation target_inv = w.inverse();

  // Staircase cells in reading order: rows top to bottom, right to left.
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = n - i; j >= 1; --j) cells.emplace_back(i, j);

  std::vector<PipeDream> out;
  std::vector<int> cur = Permutation::identity(n).word();
  std::set<std::pair<int, int>> chosen;
  int placed = 0;

  std::function<void(std::size_t)> dfs = [&](std::size_t at) {
    if (placed == target_len) {
      if (cur == w.word()) out.emplace_back(chosen);
      return;
    }
    if (static_cast<int>(cells.size() - at) < target_len - placed) return;
    const auto [i, j] = cells[at];
    const int a = i + j - 1;  // cross contributes s_a on the right
    const int lo = cur[a - 1];
    const int hi = cur[a];
    // Placing the cross must invert the pair (lo, hi) and that pair must be
    // inverted in w as well.
    if (lo < hi && target_inv(hi) < target_inv(lo)) {
      std::swap(cur[a - 1], cur[a]);
      chosen.insert({i, j});
      ++placed;
      dfs(at + 1);
      --placed;
      chosen.erase({i, j});
      std::swap(cur[a - 1], cur[a]);
    }
    dfs(at + 1);
  };
  dfs(0);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial schubert_via_pipedreams(const Permutation& w) {
  Polynomial r;
  for (const auto& pd : reduced_pipe_dreams(w)) r += pd.weight();
  return r;
}

// -------------------------------------------------------------------- quantum

Polynomial quantum_elementary(int j, int k) {
  if (j < 0 || k < 0 || j > k) return {};
  if (j == 0) return Polynomial(1);
  static std::mutex mu;
  static std::map<std::pair<int, int>, Polynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({j, k}); it != cache.end()) return it->second;
  }
  Polynomial r = quantum_elementary(j, k - 1) + Polynomial::x(k) * quantum_elementary(j - 1, k - 1);
  if (k >= 2) r += Polynomial::q(k - 1) * quantum_elementary(j - 2, k - 2);
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(j, k), std::move(r)).first->second;
}

Polynomial quantum_elementary_via_determinant(int j, int k) {
  if (k < 0 || j < 0) return {};
  // Entries of I + lambda G_k as polynomials in lambda: entry[d] = coefficient of lambda^d.
  using LambdaPoly = std::vector<Polynomial>;
  auto entry = [](int r, int c) -> LambdaPoly {
    if (r == c) return {Polynomial(1), Polynomial::x(r)};
    if (c == r + 1) return {Polynomial(), Polynomial::q(r)};
    if (r == c + 1) return {Polynomial(), Polynomial(-1)};
    return {};
  };
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  Polynomial total;
  do {
    LambdaPoly prod{Polynomial(1)};
    bool zero = false;
    for (int r = 1; r <= k && !zero; ++r) {
      LambdaPoly e = entry(r, perm[r - 1]);
      if (e.empty()) {
        zero = true;
        break;
      }
      LambdaPoly next(prod.size() + e.size() - 1);
      for (std::size_t a = 0; a < prod.size(); ++a)
        for (std::size_t b = 0; b < e.size(); ++b)
          if (!prod[a].is_zero() && !e[b].is_zero()) next[a + b] += prod[a] * e[b];
      prod = std::move(next);
    }
    if (zero) continue;
    int inversions = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    if (j < static_cast<int>(prod.size())) {
      if (inversions % 2)
        total -= prod[j];
      else
        total += prod[j];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Polynomial quantum_sem_monomial(const SemIndex& idx) {
  Polynomial r(1);
  for (int k = 1; k <= idx.length(); ++k)
    if (idx[k] != 0) r *= quantum_elementary(idx[k], k);
  return r;
}

Polynomial quantum_schubert(const Permutation& w) {
  const Permutation t = trim_fixed_tail(w);
  const int m = std::max(1, t.size() - 1);
  Polynomial r;
  for (const auto& [idx, c] : sem_expand(schubert(t), m)) r += Polynomial(c) * quantum_sem_monomial(idx);
  return r;
}

}  // namespace semdet
