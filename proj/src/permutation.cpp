#include "semdet/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace semdet {

PatternViolation::PatternViolation(const std::string& what, std::vector<int> pattern,
                                   std::vector<int> positions)
    : DomainError(what), pattern_(std::move(pattern)), positions_(std::move(positions)) {}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1) throw DomainError("permutation must have at least one entry");
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw DomainError("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw DomainError("empty permutation");
  std::vector<int> word;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    for (char ch : tokens[0]) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw DomainError("bad permutation digit in '" + text + "'");
      word.push_back(ch - '0');
    }
  } else {
    for (const auto& tok : tokens) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw DomainError("bad permutation entry '" + tok + "'");
      }
      if (used != tok.size()) throw DomainError("bad permutation entry '" + tok + "'");
      word.push_back(v);
    }
  }
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (v.size() != size()) throw DomainError("composing permutations of different sizes");
  std::vector<int> r(word_.size());
  for (int i = 1; i <= size(); ++i) r[i - 1] = (*this)(v(i));
  return Permutation(std::move(r));
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= size()) throw DomainError("simple transposition out of range");
  auto w = word_;
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::padded(int m) const {
  auto w = word_;
  for (int v = size() + 1; v <= m; ++v) w.push_back(v);
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(word_[i]);
  }
  return s;
}

std::string Permutation::compact() const {
  std::string s;
  for (int v : word_) s += std::to_string(v);
  return s;
}

// --------------------------------------------------------- basic statistics

Code code(const Permutation& w) {
  const int n = w.size();
  Code c(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++c[i - 1];
  return c;
}

Permutation from_code(const Code& c) {
  const int n = static_cast<int>(c.size());
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> word;
  word.reserve(n);
  for (int i = 1; i <= n; ++i) {
    int ci = c[i - 1];
    if (ci < 0 || ci > n - i)
      throw DomainError("malformed code: entry " + std::to_string(i) + " must lie in [0, " +
                        std::to_string(n - i) + "]");
    word.push_back(remaining[ci]);
    remaining.erase(remaining.begin() + ci);
  }
  return Permutation(std::move(word));
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(j) < w(i)) ++inv;
  return inv;
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

std::vector<int> left_to_right_maxima(const Permutation& w) {
  std::vector<int> maxima;
  int best = 0;
  for (int v : w.word())
    if (v > best) {
      maxima.push_back(v);
      best = v;
    }
  return maxima;
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> word(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) word[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(word));
}

// ----------------------------------------------------------------- patterns

namespace {

bool extend_occurrence(const Permutation& w, const Permutation& p, std::vector<int>& chosen,
                       int next_pos) {
  const int k = p.size();
  const int depth = static_cast<int>(chosen.size());
  if (depth == k) return true;
  // Leave room for the remaining pattern letters.
  for (int pos = next_pos; pos <= w.size() - (k - depth - 1); ++pos) {
    bool ok = true;
    for (int a = 0; a < depth && ok; ++a)
      ok = (w(chosen[a]) < w(pos)) == (p(a + 1) < p(depth + 1));
    if (!ok) continue;
    chosen.push_back(pos);
    if (extend_occurrence(w, p, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_pattern(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) return std::nullopt;
  std::vector<int> chosen;
  chosen.reserve(p.size());
  if (extend_occurrence(w, p, chosen, 1)) return chosen;
  return std::nullopt;
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
  return find_pattern(w, p).has_value();
}

bool avoids(const Permutation& w, std::initializer_list<const char*> patterns) {
  for (const char* p : patterns)
    if (contains_pattern(w, Permutation::parse(p))) return false;
  return true;
}

const std::vector<Permutation>& thirteen_patterns() {
  static const std::vector<Permutation> patterns = [] {
    std::vector<Permutation> r;
    for (const char* p : {"51324", "15324", "52413", "25413", "53142", "35142", "31542", "143265",
                          "143625", "143652", "146352", "413265", "413625"})
      r.push_back(Permutation::parse(p));
    return r;
  }();
  return patterns;
}

std::optional<std::pair<Permutation, std::vector<int>>> thirteen_witness(const Permutation& w) {
  for (const auto& p : thirteen_patterns())
    if (auto occ = find_pattern(w, p)) return std::make_pair(p, *occ);
  return std::nullopt;
}

bool avoids_thirteen(const Permutation& w) { return !thirteen_witness(w).has_value(); }

std::string label_name(ClassLabel label) {
  switch (label) {
    case ClassLabel::Dominant: return "dominant";
    case ClassLabel::Avoids213: return "213-avoiding";
    case ClassLabel::Avoids321: return "321-avoiding";
    case ClassLabel::Grassmannian: return "Grassmannian";
    case ClassLabel::Separable: return "separable";
    case ClassLabel::Avoids1324: return "1324-avoiding";
    case ClassLabel::Lowering: return "lowering";
    case ClassLabel::ThirteenAvoiding: return "thirteen-avoiding";
  }
  return "?";
}

std::set<ClassLabel> classify(const Permutation& w) {
  std::set<ClassLabel> labels;
  if (avoids(w, {"132"})) labels.insert(ClassLabel::Dominant);
  if (avoids(w, {"213"})) labels.insert(ClassLabel::Avoids213);
  if (avoids(w, {"321"})) labels.insert(ClassLabel::Avoids321);
  if (descents(w).size() <= 1) labels.insert(ClassLabel::Grassmannian);
  if (avoids(w, {"2413", "3142"})) labels.insert(ClassLabel::Separable);
  if (avoids(w, {"1324"})) labels.insert(ClassLabel::Avoids1324);
  if (is_lowering(w)) labels.insert(ClassLabel::Lowering);
  if (avoids_thirteen(w)) labels.insert(ClassLabel::ThirteenAvoiding);
  return labels;
}

// ----------------------------------------------------- direct and skew sums

Permutation direct_sum(const Permutation& u, const Permutation& v) {
  auto w = u.word();
  for (int x : v.word()) w.push_back(x + u.size());
  return Permutation(std::move(w));
}

Permutation skew_sum(const Permutation& u, const Permutation& v) {
  std::vector<int> w;
  for (int x : u.word()) w.push_back(x + v.size());
  for (int x : v.word()) w.push_back(x);
  return Permutation(std::move(w));
}

Permutation SeparableTree::compose() const {
  switch (kind) {
    case Kind::Leaf: return Permutation::identity(1);
    case Kind::Direct: return direct_sum(children[0].compose(), children[1].compose());
    case Kind::Skew: return skew_sum(children[0].compose(), children[1].compose());
  }
  return Permutation::identity(1);
}

std::string SeparableTree::to_string() const {
  switch (kind) {
    case Kind::Leaf: return "1";
    case Kind::Direct: return "(" + children[0].to_string() + " + " + children[1].to_string() + ")";
    case Kind::Skew: return "(" + children[0].to_string() + " - " + children[1].to_string() + ")";
  }
  return "?";
}

SeparableTree separable_decomposition(const Permutation& w) {
  const int n = w.size();
  if (n == 1) return {};
  const auto& word = w.word();
  int prefix_max = 0;
  int prefix_min = n + 1;
  for (int m = 1; m < n; ++m) {
    prefix_max = std::max(prefix_max, word[m - 1]);
    prefix_min = std::min(prefix_min, word[m - 1]);
    const bool direct = prefix_max == m;
    const bool skew = prefix_min == n - m + 1;
    if (!direct && !skew) continue;
    auto left = standardize(std::span<const int>(word.data(), m));
    auto right = standardize(std::span<const int>(word.data() + m, n - m));
    SeparableTree t;
    t.kind = direct ? SeparableTree::Kind::Direct : SeparableTree::Kind::Skew;
    t.children.push_back(separable_decomposition(left));
    t.children.push_back(separable_decomposition(right));
    return t;
  }
  for (const char* p : {"2413", "3142"})
    if (auto occ = find_pattern(w, Permutation::parse(p)))
      throw PatternViolation("permutation " + w.compact() + " is not separable (contains " + p + ")",
                             Permutation::parse(p).word(), *occ);
  throw DomainError("permutation " + w.compact() + " is not separable");
}

// ------------------------------------------------------ lowering and Q-set

bool is_lowering(const Permutation& v) { return avoids(v, {"132", "312"}); }

LoweringPermutation::LoweringPermutation(Permutation base) : base_(std::move(base)) {
  for (const char* p : {"132", "312"})
    if (auto occ = find_pattern(base_, Permutation::parse(p)))
      throw PatternViolation("not a lowering permutation: contains " + std::string(p),
                             Permutation::parse(p).word(), *occ);
  k_ = base_(1);
  auto inv = base_.inverse();
  for (int i = 1; i <= k_; ++i) positions_.push_back(inv(i));
}

namespace {

void require_thirteen_avoiding(const Permutation& w) {
  if (auto witness = thirteen_witness(w)) {
    const auto& [p, occ] = *witness;
    throw PatternViolation("permutation " + w.compact() + " contains forbidden pattern " + p.compact(),
                           p.word(), occ);
  }
}

}  // namespace

std::vector<int> q_set(const Permutation& w) {
  require_thirteen_avoiding(w);
  const int n = w.size();
  auto pos = w.inverse();
  auto maxima = left_to_right_maxima(w);
  std::vector<bool> in_q(n + 1, false);
  std::vector<int> result;
  for (auto it = maxima.rbegin(); it != maxima.rend(); ++it) {
    const int q = *it;
    const int i = pos(q);
    // Look for a 1342 occurrence a q q' b with q' outside Q.
    bool blocked = false;
    for (int ia = 1; ia < i && !blocked; ++ia) {
      const int a = w(ia);
      if (a > q) continue;
      for (int j = i + 1; j <= n && !blocked; ++j) {
        const int qp = w(j);
        if (qp < q || in_q[qp]) continue;
        for (int ib = j + 1; ib <= n; ++ib) {
          const int b = w(ib);
          if (b > a && b < q) {
            blocked = true;
            break;
          }
        }
      }
    }
    if (!blocked) {
      in_q[q] = true;
      result.push_back(q);
    }
  }
  return result;
}

Factorization factorize(const Permutation& w) {
  auto q = q_set(w);  // decreasing; also enforces the pattern precondition
  std::vector<bool> in_q(w.size() + 1, false);
  for (int v : q) in_q[v] = true;
  std::vector<int> uw = q;
  for (int v : w.word())
    if (!in_q[v]) uw.push_back(v);
  Permutation u(std::move(uw));
  Permutation v = u.inverse() * w;
  if (!avoids(u, {"1324", "2413", "3142"}) || length(w) != length(u) - length(v))
    throw std::logic_error("factorization invariant failed for " + w.compact());
  return Factorization{u, LoweringPermutation(v)};
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> r;
  do {
    r.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return r;
}

}  // namespace semdet
