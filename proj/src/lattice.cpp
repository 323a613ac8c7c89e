#include "semdet/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "semdet/schubert.hpp"

namespace semdet {

namespace {

int parity_of(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

void require_pattern_free(const Permutation& w, std::initializer_list<const char*> patterns,
                          const std::string& what) {
  for (const char* p : patterns) {
    auto pat = Permutation::parse(p);
    if (auto occ = find_pattern(w, pat))
      throw PatternViolation(what + ": " + w.compact() + " contains " + p, pat.word(), *occ);
  }
}

std::optional<std::size_t> find_end(const std::vector<EndPoint>& ends, EndPoint e) {
  auto it = std::find(ends.begin(), ends.end(), e);
  if (it == ends.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ends.begin());
}

std::vector<std::size_t> ends_at_height(const std::vector<EndPoint>& ends, int c) {
  std::vector<std::size_t> r;
  for (std::size_t j = 0; j < ends.size(); ++j)
    if (ends[j].c == c) r.push_back(j);
  return r;
}

std::size_t unique_end_at(const LatticeRep& rep, int c, const char* op) {
  auto at = ends_at_height(rep.ends(), c);
  if (at.size() != 1)
    throw DomainError(std::string(op) + ": expected exactly one end point at height " + std::to_string(c) +
                      ", found " + std::to_string(at.size()));
  return at.front();
}

}  // namespace

LatticeRep::LatticeRep(std::vector<int> starts, std::vector<EndPoint> ends, int sign, std::string label)
    : starts_(std::move(starts)), ends_(std::move(ends)), sign_(sign), label_(std::move(label)) {
  if (starts_.size() != ends_.size()) throw DomainError("lattice representation needs as many starts as ends");
  if (sign_ != 1 && sign_ != -1) throw DomainError("lattice representation sign must be +1 or -1");
  for (const auto& e : ends_)
    if (e.c < 0) throw DomainError("end point heights must be nonnegative");
}

bool LatticeRep::is_proper() const {
  std::set<int> heights;
  for (const auto& e : ends_)
    if (!heights.insert(e.c).second) return false;
  return true;
}

bool LatticeRep::is_compact() const {
  const int k = size();
  std::vector<int> a = starts_;
  std::vector<int> c;
  for (const auto& e : ends_) {
    c.push_back(e.c);
    if (e.b < 0 || e.b > k - 1) return false;
  }
  std::sort(a.begin(), a.end());
  std::sort(c.begin(), c.end());
  std::vector<int> expected(k);
  std::iota(expected.begin(), expected.end(), 0);
  return a == expected && c == expected;
}

bool LatticeRep::is_parking() const {
  const int k = size();
  for (int s = 1; s <= k; ++s) {
    int below = 0;
    for (const auto& e : ends_)
      if (e.b < s) ++below;
    if (below < s) return false;
  }
  return true;
}

int LatticeRep::max_height() const {
  int h = 0;
  for (const auto& e : ends_) h = std::max(h, e.c);
  return h;
}

PolyMatrix LatticeRep::matrix() const {
  const int k = size();
  PolyMatrix m(k, std::vector<Polynomial>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = point_weight(starts_[i], ends_[j].b, ends_[j].c);
  return m;
}

LatticeRep LatticeRep::normalized() const {
  const int k = size();
  std::vector<int> row_order(k);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::stable_sort(row_order.begin(), row_order.end(),
                   [&](int x, int y) { return starts_[x] < starts_[y]; });
  std::vector<int> col_order(k);
  std::iota(col_order.begin(), col_order.end(), 0);
  std::stable_sort(col_order.begin(), col_order.end(), [&](int x, int y) {
    return std::tie(ends_[x].c, ends_[x].b) < std::tie(ends_[y].c, ends_[y].b);
  });
  LatticeRep r;
  for (int i : row_order) r.starts_.push_back(starts_[i]);
  for (int j : col_order) r.ends_.push_back(ends_[j]);
  r.sign_ = sign_ * parity_of(row_order) * parity_of(col_order);
  r.label_ = label_;
  return r;
}

LatticeRep LatticeRep::translated(int dx) const {
  LatticeRep r = *this;
  for (auto& a : r.starts_) a += dx;
  for (auto& e : r.ends_) e.b += dx;
  return r;
}

bool reachable(int a, const EndPoint& e) { return e.b <= a && a <= e.b + e.c; }

Polynomial point_weight(int a, int b, int c) { return elementary(c + b - a, c); }

Polynomial rep_determinant(const LatticeRep& rep) {
  Polynomial d = determinant(rep.matrix());
  return rep.sign() < 0 ? -d : d;
}

Polynomial rep_determinant_quantum(const LatticeRep& rep) {
  if (!rep.is_proper()) throw DomainError("quantum determinant requires a proper representation");
  const int k = rep.size();
  PolyMatrix m(k, std::vector<Polynomial>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const auto& e = rep.ends()[j];
      m[i][j] = quantum_elementary(e.c + e.b - rep.starts()[i], e.c);
    }
  Polynomial d = determinant(m);
  return rep.sign() < 0 ? -d : d;
}

SemExpansion sem_of_proper(const LatticeRep& rep) {
  if (!rep.is_proper()) throw DomainError("SEM read-off requires a proper representation");
  const int k = rep.size();
  std::vector<int> row_of_col(k, -1);
  std::vector<bool> row_used(k, false);
  std::vector<int> js(rep.max_height(), 0);
  std::map<SemIndex, Coeff> acc;

  std::function<void(int)> dfs = [&](int col) {
    if (col == k) {
      SemIndex idx(js);
      acc[idx] += rep.sign() * parity_of(row_of_col);
      return;
    }
    const auto& e = rep.ends()[col];
    for (int i = 0; i < k; ++i) {
      if (row_used[i]) continue;
      const int j = e.c + e.b - rep.starts()[i];
      if (j < 0 || j > e.c) continue;
      row_used[i] = true;
      row_of_col[col] = i;
      if (e.c >= 1) js[e.c - 1] = j;
      dfs(col + 1);
      if (e.c >= 1) js[e.c - 1] = 0;
      row_used[i] = false;
    }
  };
  dfs(0);
  SemExpansion out;
  for (auto& [idx, c] : acc)
    if (c != 0) out.emplace(idx, c);
  return out;
}

// ------------------------------------------------------------- path systems

std::vector<std::pair<int, int>> path_vertices(int a, const std::vector<bool>& steps) {
  std::vector<std::pair<int, int>> v{{a, 0}};
  int x = a;
  int y = 0;
  for (bool up : steps) {
    if (!up) --x;
    ++y;
    v.emplace_back(x, y);
  }
  return v;
}

namespace {

void all_step_words(int length, int diagonals, std::vector<bool>& cur, std::vector<std::vector<bool>>& out) {
  const int used_diag = static_cast<int>(std::count(cur.begin(), cur.end(), false));
  const int remaining = length - static_cast<int>(cur.size());
  if (remaining == 0) {
    if (used_diag == diagonals) out.push_back(cur);
    return;
  }
  if (used_diag < diagonals) {
    cur.push_back(false);
    all_step_words(length, diagonals, cur, out);
    cur.pop_back();
  }
  if (diagonals - used_diag < remaining) {
    cur.push_back(true);
    all_step_words(length, diagonals, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PathSystem> enumerate_path_systems(const LatticeRep& rep) {
  const int k = rep.size();
  if (k > kPathSystemMaxK || rep.max_height() > kPathSystemMaxHeight)
    throw DomainError("path system enumeration budget exceeded (k <= " + std::to_string(kPathSystemMaxK) +
                      ", heights <= " + std::to_string(kPathSystemMaxHeight) + ")");

  // Candidate paths for each (start, end) pair.
  std::vector<std::vector<std::vector<std::vector<bool>>>> candidates(k, std::vector<std::vector<std::vector<bool>>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const auto& e = rep.ends()[j];
      if (!reachable(rep.starts()[i], e)) continue;
      std::vector<bool> cur;
      all_step_words(e.c, rep.starts()[i] - e.b, cur, candidates[i][j]);
    }

  std::vector<PathSystem> out;
  std::vector<LatticePath> chosen;
  std::vector<bool> end_used(k, false);
  std::set<std::pair<int, int>> occupied;

  std::function<void(int)> dfs = [&](int i) {
    if (i == k) {
      PathSystem sys;
      sys.paths = chosen;
      sys.weight = Polynomial(1);
      for (const auto& p : chosen) {
        sys.sigma.push_back(p.end);
        Monomial m;
        int y = 0;
        for (bool up : p.steps) {
          if (up) m.set_x(y + 1, m.x(y + 1) + 1);
          ++y;
        }
        sys.weight *= Polynomial::monomial(m);
      }
      sys.sign = parity_of(sys.sigma);
      out.push_back(std::move(sys));
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (end_used[j]) continue;
      for (const auto& steps : candidates[i][j]) {
        auto verts = path_vertices(rep.starts()[i], steps);
        bool clash = false;
        for (const auto& v : verts)
          if (occupied.count(v)) {
            clash = true;
            break;
          }
        if (clash) continue;
        for (const auto& v : verts) occupied.insert(v);
        end_used[j] = true;
        chosen.push_back(LatticePath{i, j, steps});
        dfs(i + 1);
        chosen.pop_back();
        end_used[j] = false;
        for (const auto& v : verts) occupied.erase(v);
      }
    }
  };
  dfs(0);
  return out;
}

Polynomial path_system_sum(const std::vector<PathSystem>& systems) {
  Polynomial total;
  for (const auto& s : systems) total += s.sign < 0 ? -s.weight : s.weight;
  return total;
}

// --------------------------------------------------------------- operations

LatticeRep pull(const LatticeRep& rep, int b, int c) {
  if (!find_end(rep.ends(), {b, c})) throw DomainError("pull: (b, c) is not an end point");
  auto right = find_end(rep.ends(), {b + 1, c});
  if (!right) throw DomainError("pull: (b+1, c) is not an end point");
  auto ends = rep.ends();
  ends[*right] = {b, c + 1};
  return LatticeRep(rep.starts(), std::move(ends), rep.sign(), rep.label());
}

bool drop_annihilates(const LatticeRep& rep, int c) { return ends_at_height(rep.ends(), c).empty(); }

LatticeRep drop(const LatticeRep& rep, int c) {
  if (c < 1) throw DomainError("drop: height must be at least 1");
  if (drop_annihilates(rep, c))
    throw DomainError("drop: no end point at height " + std::to_string(c) + "; the divided difference vanishes");
  const std::size_t j = unique_end_at(rep, c, "drop");
  auto ends = rep.ends();
  ends[j].c = c - 1;
  return LatticeRep(rep.starts(), std::move(ends), rep.sign(), rep.label());
}

LatticeRep slide_left_below(const LatticeRep& rep, int c) {
  if (c < 1) throw DomainError("slide: height must be at least 1");
  const std::size_t j = unique_end_at(rep, c, "slide");
  const int b = rep.ends()[j].b;
  auto below = find_end(rep.ends(), {b + 1, c - 1});
  if (!below) throw DomainError("slide (a): (b+1, c-1) is not an end point");
  auto ends = rep.ends();
  ends[*below] = {b, c - 1};
  return LatticeRep(rep.starts(), std::move(ends), -rep.sign(), rep.label());
}

LatticeRep slide_left_at(const LatticeRep& rep, int c) {
  if (c < 1) throw DomainError("slide: height must be at least 1");
  const std::size_t j = unique_end_at(rep, c, "slide");
  const int b = rep.ends()[j].b;
  if (!find_end(rep.ends(), {b - 1, c - 1})) throw DomainError("slide (b): (b-1, c-1) is not an end point");
  auto ends = rep.ends();
  ends[j] = {b - 1, c};
  return LatticeRep(rep.starts(), std::move(ends), rep.sign(), rep.label());
}

LatticeRep product(const LatticeRep& f, const LatticeRep& g) {
  for (int a : f.starts())
    for (const auto& e : g.ends())
      if (reachable(a, e))
        throw DomainError("product: a start of the first factor reaches (" + std::to_string(e.b) + ", " +
                          std::to_string(e.c) + ") of the second");
  LatticeRep r;
  r.starts_ = f.starts_;
  r.starts_.insert(r.starts_.end(), g.starts_.begin(), g.starts_.end());
  r.ends_ = f.ends_;
  r.ends_.insert(r.ends_.end(), g.ends_.begin(), g.ends_.end());
  r.sign_ = f.sign_ * g.sign_;
  return r;
}

LatticeRep delete_staircase(const LatticeRep& rep, int a, int s) {
  if (s < 0) throw DomainError("delete: s must be nonnegative");
  std::vector<int> rows;
  std::vector<int> cols;
  for (int t = 0; t <= s; ++t) {
    auto it = std::find(rep.starts().begin(), rep.starts().end(), a + t);
    if (it == rep.starts().end()) throw DomainError("delete: start " + std::to_string(a + t) + " missing");
    rows.push_back(static_cast<int>(it - rep.starts().begin()));
    auto col = find_end(rep.ends(), {a, t});
    if (!col)
      throw DomainError("delete: end (" + std::to_string(a) + ", " + std::to_string(t) + ") missing");
    cols.push_back(static_cast<int>(*col));
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  // det M = (-1)^{sum rows + sum cols} det M[rows, cols] det M[rest, rest]
  // because no remaining start reaches a removed end.
  PolyMatrix block(rows.size(), std::vector<Polynomial>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto& e = rep.ends()[cols[j]];
      block[i][j] = point_weight(rep.starts()[rows[i]], e.b, e.c);
    }
  const Polynomial block_det = determinant(block);
  if (!block_det.is_constant() || (block_det.constant_term() != 1 && block_det.constant_term() != -1))
    throw std::logic_error("delete: staircase block does not have determinant +-1");
  int parity = (std::accumulate(rows.begin(), rows.end(), 0) + std::accumulate(cols.begin(), cols.end(), 0)) % 2;
  int sign = rep.sign() * (parity ? -1 : 1) * (block_det.constant_term() < 0 ? -1 : 1);

  std::vector<int> starts;
  for (int i = 0; i < rep.size(); ++i)
    if (!std::binary_search(rows.begin(), rows.end(), i)) starts.push_back(rep.starts()[i]);
  std::vector<EndPoint> ends;
  for (int j = 0; j < rep.size(); ++j)
    if (!std::binary_search(cols.begin(), cols.end(), j)) ends.push_back(rep.ends()[j]);
  return LatticeRep(std::move(starts), std::move(ends), sign, rep.label());
}

LatticeRep lower(const LatticeRep& rep, const LoweringPermutation& v) {
  const int n = rep.size();
  if (v.base().size() != n) throw DomainError("lower: permutation size differs from representation size");
  std::vector<int> heights;
  for (const auto& e : rep.ends()) heights.push_back(e.c);
  std::sort(heights.begin(), heights.end());
  for (int i = 0; i < n; ++i)
    if (heights[i] != i) throw DomainError("lower: end heights must be exactly 0..n-1");

  LatticeRep cur = rep;
  const auto& positions = v.descent_positions();
  for (int i = 0; i < v.k(); ++i) {
    const auto bottom = ends_at_height(cur.ends(), 0);
    const int b = cur.ends()[bottom.front()].b;
    if (std::find(cur.starts().begin(), cur.starts().end(), b) == cur.starts().end())
      throw DomainError("lower: no start sits below the end point (" + std::to_string(b) + ", 0)");
    cur = delete_staircase(cur, b, 0);
    for (int c = 1; c < positions[i]; ++c) cur = drop(cur, c);
  }
  return cur.normalized();
}

// ------------------------------------------------------------ constructions

LatticeRep rep_dominant(const Permutation& w) {
  require_pattern_free(w, {"132"}, "rep_dominant expects a dominant permutation");
  const int n = w.size();
  auto c = code(w);
  std::vector<int> starts;
  std::vector<EndPoint> ends;
  for (int i = 0; i < n; ++i) {
    starts.push_back(n - 1 - i);
    ends.push_back({c[i], i});
  }
  const int exponent = n * (n - 1) / 2 - length(w);
  return LatticeRep(std::move(starts), std::move(ends), exponent % 2 ? -1 : 1, w.compact());
}

LatticeRep rep_213(const Permutation& w) {
  require_pattern_free(w, {"213"}, "rep_213 expects a 213-avoiding permutation");
  const int n = w.size();
  const Permutation w0 = Permutation::longest(n);
  auto c = code(w0 * w * w0);
  std::vector<int> starts;
  std::vector<EndPoint> ends;
  for (int i = 0; i < n; ++i) {
    starts.push_back(n - 1 - i);
    ends.push_back({c[i], n - 1 - i});
  }
  return LatticeRep(std::move(starts), std::move(ends), 1, w.compact());
}

namespace {

LatticeRep compact_from_tree(const SeparableTree& t) {
  if (t.kind == SeparableTree::Kind::Leaf) return LatticeRep({0}, {{0, 0}}, 1);
  const Permutation u = t.children[0].compose();
  const Permutation v = t.children[1].compose();
  const int m = u.size();
  const int n = m + v.size();
  if (t.kind == SeparableTree::Kind::Skew) {
    LatticeRep ru = compact_from_tree(t.children[0]).translated(n - m);
    LatticeRep rv = compact_from_tree(t.children[1]);
    std::vector<int> starts = ru.starts();
    starts.insert(starts.end(), rv.starts().begin(), rv.starts().end());
    std::vector<EndPoint> ends = ru.ends();
    for (auto e : rv.ends()) ends.push_back({e.b, e.c + m});
    return LatticeRep(std::move(starts), std::move(ends), ru.sign() * rv.sign()).normalized();
  }
  LatticeRep ru = rep_dominant(u);
  LatticeRep rv = delete_staircase(rep_213(direct_sum(Permutation::identity(m), v)), 0, m - 1);
  return product(rv, ru).normalized();
}

}  // namespace

LatticeRep compact_rep(const Permutation& w) {
  require_pattern_free(w, {"1324", "2413", "3142"}, "compact_rep expects a 1324-avoiding separable permutation");
  LatticeRep r = compact_from_tree(separable_decomposition(w));
  r.set_label(w.compact());
  return r;
}

LatticeRep proper_rep(const Permutation& w) {
  if (auto witness = thirteen_witness(w)) {
    const auto& [p, occ] = *witness;
    throw PatternViolation("proper_rep: " + w.compact() + " contains forbidden pattern " + p.compact(), p.word(),
                           occ);
  }
  Factorization f = factorize(w);
  LatticeRep r = lower(compact_rep(f.u), f.v);
  r.set_label(w.compact());
  return r;
}

LatticeRep rep_321(const Permutation& w) {
  require_pattern_free(w, {"321"}, "rep_321 expects a 321-avoiding permutation");
  const int n = w.size();
  auto maxima = left_to_right_maxima(w);
  std::vector<bool> is_max(n + 1, false);
  for (int q : maxima) is_max[q] = true;
  auto pos = w.inverse();
  std::vector<int> starts;
  std::vector<EndPoint> ends;
  for (int q = 1; q <= n; ++q) {
    if (is_max[q]) continue;
    starts.push_back(q - 1);
    ends.push_back({0, pos(q) - 1});
  }
  return LatticeRep(std::move(starts), std::move(ends), 1, w.compact());
}

LatticeRep rep_grassmannian(const std::vector<int>& lambda, int n) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw DomainError("partition parts must be nonnegative");
    if (i && lambda[i] > lambda[i - 1]) throw DomainError("partition must be weakly decreasing");
  }
  if (n < 1) throw DomainError("number of variables must be positive");
  auto conj = conjugate(lambda);
  const int r = static_cast<int>(conj.size());
  std::vector<int> starts;
  std::vector<EndPoint> ends;
  for (int i = 1; i <= r; ++i) starts.push_back(n - 1 - conj[i - 1] + i);
  for (int j = 1; j <= r; ++j) ends.push_back({0, n + j - 1});
  return LatticeRep(std::move(starts), std::move(ends), 1);
}

LatticeRep rep_413625() { return LatticeRep({0, 1, 2, 5}, {{0, 1}, {0, 2}, {1, 4}, {1, 5}}, 1, "413625"); }

}  // namespace semdet
