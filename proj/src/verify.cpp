#include "semdet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "semdet/lattice.hpp"
#include "semdet/schubert.hpp"

namespace semdet::verify {

namespace {

class Recorder {
 public:
  Recorder(CheckReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  void stop() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

  void expect(bool ok, const std::string& what) {
    ++r_.checked;
    if (ok) return;
    ++r_.failed;
    if (r_.first_failure.empty()) r_.first_failure = what;
  }

  // Runs body, turning an exception into a recorded failure.
  void guarded(const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string label = what;
    try {
      ok = body();
    } catch (const std::exception& e) {
      label += " (threw: " + std::string(e.what()) + ")";
    }
    expect(ok, label);
  }

 private:
  CheckReport& r_;
  std::chrono::steady_clock::time_point start_;
};

int parity(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

Permutation random_permutation(std::mt19937_64& g, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), g);
  return Permutation(w);
}

// Distinct starts in [0, span); each end reachable from its start most of
// the time so that determinants are rarely zero.
LatticeRep random_rep(std::mt19937_64& g, int kmin, int kmax, int hmax) {
  const int k = uniform(g, kmin, kmax);
  std::vector<int> pool(k + hmax + 1);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), g);
  std::vector<int> starts(pool.begin(), pool.begin() + k);
  std::vector<EndPoint> ends;
  for (int a : starts) {
    const int c = uniform(g, 0, hmax);
    const int b = uniform(g, 0, 3) == 0 ? uniform(g, 0, a + 1) : a - uniform(g, 0, std::min(a, c));
    ends.push_back({b, c});
  }
  std::shuffle(ends.begin(), ends.end(), g);
  return LatticeRep(starts, ends, uniform(g, 0, 1) ? 1 : -1);
}

std::string describe(const LatticeRep& rep) {
  std::ostringstream out;
  out << "sign " << rep.sign() << " starts";
  for (int a : rep.starts()) out << " " << a;
  out << " ends";
  for (const auto& e : rep.ends()) out << " (" << e.b << "," << e.c << ")";
  return out.str();
}

const std::vector<Permutation>& lowering_permutations(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Permutation>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Permutation> out;
  for (const auto& v : all_permutations(n))
    if (is_lowering(v)) out.push_back(v);
  return cache.emplace(n, std::move(out)).first->second;
}

int count_at_height(const LatticeRep& rep, int c) {
  return static_cast<int>(std::count_if(rep.ends().begin(), rep.ends().end(),
                                        [c](const EndPoint& e) { return e.c == c; }));
}

CheckReport report(std::string name, std::string summary) {
  CheckReport r;
  r.name = std::move(name);
  r.summary = std::move(summary);
  return r;
}

Polynomial mono(std::vector<int> xs) { return Polynomial::monomial(Monomial::from_exponents(xs)); }

}  // namespace

Polynomial leibniz_determinant(const PolyMatrix& m) {
  const int k = static_cast<int>(m.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total;
  do {
    Polynomial term(1);
    for (int i = 0; i < k && !term.is_zero(); ++i) term *= m[i][perm[i]];
    if (term.is_zero()) continue;
    if (parity(perm) < 0)
      total -= term;
    else
      total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Polynomial schur_by_tableaux(const std::vector<int>& lambda, int n) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::map<std::pair<int, int>, int> filling;
  Polynomial total;
  std::function<void(std::size_t)> fill = [&](std::size_t at) {
    if (at == cells.size()) {
      Monomial m;
      for (const auto& [cell, v] : filling) m.set_x(v, m.x(v) + 1);
      total += Polynomial::monomial(m);
      return;
    }
    const auto [r, c] = cells[at];
    int lo = 1;
    if (c > 0) lo = std::max(lo, filling[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, filling[{r - 1, c}] + 1);
    for (int v = lo; v <= n; ++v) {
      filling[{r, c}] = v;
      fill(at + 1);
    }
    filling.erase({r, c});
  };
  fill(0);
  return total;
}

// ------------------------------------------------------------------ checks

CheckReport pipe_oracle(int n) {
  CheckReport r = report("pipe-oracle", "schubert(w) equals the pipe dream sum for all w in S_1..S_" + std::to_string(n));
  Recorder rec(r);
  for (int m = 1; m <= n; ++m)
    for (const auto& w : all_permutations(m))
      rec.guarded(w.compact(), [&] { return schubert(w) == schubert_via_pipedreams(w); });
  rec.stop();
  return r;
}

CheckReport sem_bound(int n) {
  CheckReport r = report("sem-bound", "|alpha| <= 1 in the SEM expansion of S_w for all w in S_" + std::to_string(n));
  Recorder rec(r);
  const int m = std::max(1, n - 1);
  for (const auto& w : all_permutations(n))
    rec.guarded(w.compact(), [&] {
      const Polynomial s = schubert(w);
      const SemExpansion e = sem_expand(s, m);
      for (const auto& [idx, c] : e)
        if (abs(c) > 1) return false;
      return evaluate(e) == s;
    });
  rec.stop();
  return r;
}

CheckReport rep_correct(int n, int samples, std::uint64_t seed) {
  CheckReport r = report("rep-correct", "proper_rep determinant and SEM read-off for thirteen-avoiding w in S_" +
                                   std::to_string(n));
  Recorder rec(r);
  auto check = [&](const Permutation& w) {
    rec.guarded(w.compact(), [&] {
      const LatticeRep rep = proper_rep(w);
      const Polynomial s = schubert(w);
      if (!rep.is_proper() || rep_determinant(rep) != s) return false;
      return sem_of_proper(rep) == sem_expand(s, std::max(1, w.size() - 1));
    });
  };
  for (const auto& w : all_permutations(n))
    if (avoids_thirteen(w)) check(w);
  if (samples > 0) {
    std::vector<Permutation> pool;
    for (const auto& w : all_permutations(n + 1))
      if (avoids_thirteen(w)) pool.push_back(w);
    std::mt19937_64 g(seed);
    std::shuffle(pool.begin(), pool.end(), g);
    if (pool.size() > static_cast<std::size_t>(samples)) pool.erase(pool.begin() + samples, pool.end());
    std::sort(pool.begin(), pool.end());
    for (const auto& w : pool) check(w);
    r.summary += " and " + std::to_string(pool.size()) + " samples from S_" + std::to_string(n + 1);
  }
  rec.stop();
  return r;
}

CheckReport converse(int n) {
  CheckReport r = report("converse", "factorization u v exists iff w avoids the thirteen patterns, all w in S_" +
                                std::to_string(n));
  Recorder rec(r);
  const auto& lowering = lowering_permutations(n);
  for (const auto& w : all_permutations(n)) {
    bool found = false;
    for (const auto& v : lowering) {
      const Permutation u = w * v.inverse();
      if (length(w) == length(u) - length(v) && avoids(u, {"1324", "2413", "3142"})) {
        found = true;
        break;
      }
    }
    rec.expect(found == avoids_thirteen(w), w.compact());
  }
  rec.stop();
  return r;
}

CheckReport fixtures() {
  CheckReport r = report("fixtures", "worked examples");
  Recorder rec(r);
  auto P = Permutation::parse;
  const Polynomial s4132 = mono({3, 1}) + mono({3, 0, 1});

  rec.guarded("code(4132)", [&] { return code(P("4132")) == Code{3, 0, 1, 0}; });
  rec.guarded("S_4132", [&] { return schubert(P("4132")) == s4132; });
  rec.guarded("pipe dreams of 4132", [&] {
    auto pds = reduced_pipe_dreams(P("4132"));
    return pds.size() == 2 && pds[0].weight() + pds[1].weight() == s4132 && pds[0].weight() != pds[1].weight();
  });
  rec.guarded("SEM of S_4132", [&] {
    SemExpansion expected{{SemIndex({1, 1, 2}), 1}, {SemIndex({1, 0, 3}), -1}, {SemIndex({0, 2, 2}), -1}};
    return sem_expand(schubert(P("4132")), 3) == expected;
  });
  const LatticeRep rep4132({0, 1, 2}, {{0, 1}, {0, 2}, {1, 3}}, 1);
  rec.guarded("4132 determinant", [&] {
    return rep_determinant(rep4132) == s4132 && leibniz_determinant(rep4132.matrix()) == s4132;
  });
  rec.guarded("4132 SEM read-off", [&] {
    SemExpansion expected{{SemIndex({1, 1, 2}), 1}, {SemIndex({1, 0, 3}), -1}, {SemIndex({0, 2, 2}), -1}};
    return sem_of_proper(rep4132) == expected;
  });
  rec.guarded("4132 path systems", [&] {
    auto systems = enumerate_path_systems(rep4132);
    if (systems.size() != 2) return false;
    std::vector<int> id{0, 1, 2};
    for (const auto& s : systems)
      if (s.sigma != id) return false;
    return (systems[0].weight == mono({3, 1}) && systems[1].weight == mono({3, 0, 1})) ||
           (systems[1].weight == mono({3, 1}) && systems[0].weight == mono({3, 0, 1}));
  });

  rec.guarded("21 skew 321564", [&] { return skew_sum(P("21"), P("321564")) == P("87321564"); });
  rec.guarded("321 direct 231", [&] { return direct_sum(P("321"), P("231")) == P("321564"); });
  rec.guarded("compact rep of 321564", [&] {
    auto rep = compact_rep(P("321564"));
    std::vector<EndPoint> expected{{2, 0}, {1, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 5}};
    return rep.ends() == expected && rep.is_compact() && rep_determinant(rep) == schubert(P("321564"));
  });
  rec.guarded("compact rep of 87321564", [&] {
    auto rep = compact_rep(P("87321564"));
    std::vector<EndPoint> expected{{7, 0}, {6, 1}, {2, 2}, {1, 3}, {0, 4}, {0, 5}, {0, 6}, {2, 7}};
    return rep.ends() == expected && rep.is_compact() && rep_determinant(rep) == schubert(P("87321564"));
  });
  rec.guarded("Q-set of 32157684", [&] { return q_set(P("32157684")) == std::vector<int>{8, 7, 3}; });
  rec.guarded("factorization of 32157684", [&] {
    auto f = factorize(P("32157684"));
    return f.u == P("87321564") && f.v.base() == P("34562718");
  });
  rec.guarded("lowering 87321564 by 34562718", [&] {
    auto rep = lower(compact_rep(P("87321564")), LoweringPermutation(P("34562718")));
    std::vector<int> starts{0, 1, 3, 4, 5};
    std::vector<EndPoint> ends{{1, 1}, {0, 2}, {0, 3}, {0, 5}, {2, 7}};
    return rep.starts() == starts && rep.ends() == ends && rep_determinant(rep) == schubert(P("32157684"));
  });
  rec.guarded("proper rep of 32157684", [&] {
    auto rep = proper_rep(P("32157684"));
    std::vector<int> starts{0, 1, 3, 4, 5};
    std::vector<EndPoint> ends{{1, 1}, {0, 2}, {0, 3}, {0, 5}, {2, 7}};
    return rep.starts() == starts && rep.ends() == ends && rep_determinant(rep) == schubert(P("32157684"));
  });

  const LatticeRep slide_rep({0, 1, 2}, {{0, 2}, {1, 1}, {1, 3}}, 1);
  rec.guarded("slide example", [&] {
    return rep_determinant(slide_rep) == mono({3, 2}) + mono({3, 1, 1}) &&
           rep_determinant(slide_left_below(slide_rep, 2)) == s4132 &&
           rep_determinant(slide_left_at(slide_rep, 3)) == mono({3, 1});
  });

  rec.guarded("413625 matrix", [&] {
    auto e = [](int j, int k) { return elementary(j, k); };
    PolyMatrix expected{{e(1, 1), e(2, 2), 0, 0},
                        {e(0, 1), e(1, 2), e(4, 4), e(5, 5)},
                        {0, e(0, 2), e(3, 4), e(4, 5)},
                        {0, 0, e(0, 4), e(1, 5)}};
    const LatticeRep rep = rep_413625();
    return rep.matrix() == expected && rep.is_proper() && rep_determinant(rep) == schubert(P("413625")) &&
           leibniz_determinant(expected) == schubert(P("413625"));
  });
  rec.guarded("reps derived from 413625", [&] {
    const LatticeRep rep = rep_413625();
    return rep_determinant(drop(rep, 4)) == schubert(P("413265")) &&
           rep_determinant(drop(rep, 1)) == schubert(P("143625")) &&
           rep_determinant(drop(drop(rep, 4), 1)) == schubert(P("143265"));
  });
  rec.stop();
  return r;
}

CheckReport lgv_oracle(int trials, std::uint64_t seed) {
  CheckReport r = report("lgv-oracle", std::to_string(trials) + " random reps with k <= 3 and heights <= 4");
  Recorder rec(r);
  std::mt19937_64 g(seed);
  for (int t = 0; t < trials; ++t) {
    const LatticeRep rep = random_rep(g, 1, 3, 4);
    rec.guarded(describe(rep), [&] {
      return path_system_sum(enumerate_path_systems(rep)) == determinant(rep.matrix());
    });
  }
  rec.stop();
  return r;
}

CheckReport operations(int trials, std::uint64_t seed) {
  CheckReport r = report("operations", std::to_string(trials) +
                                  " trials each of pull, drop, slide (a), slide (b), product, delete, lower");
  Recorder rec(r);
  std::mt19937_64 g(seed);

  for (int t = 0; t < trials;) {
    auto base = random_rep(g, 2, 4, 4);
    auto ends = base.ends();
    const int j = uniform(g, 0, base.size() - 1);
    int j2 = uniform(g, 0, base.size() - 2);
    if (j2 >= j) ++j2;
    ends[j2] = {ends[j].b + 1, ends[j].c};
    const LatticeRep rep(base.starts(), ends, base.sign());
    ++t;
    rec.guarded("pull " + describe(rep), [&] {
      return rep_determinant(pull(rep, ends[j].b, ends[j].c)) == rep_determinant(rep);
    });
  }

  for (int t = 0; t < trials;) {
    const LatticeRep rep = random_rep(g, 1, 4, 4);
    const int c = uniform(g, 1, 4);
    const int at = count_at_height(rep, c);
    if (at > 1) continue;
    if (at == 0) {
      rec.guarded("drop annihilates " + describe(rep), [&] {
        return drop_annihilates(rep, c) && divided_difference(rep_determinant(rep), c).is_zero();
      });
      continue;
    }
    ++t;
    rec.guarded("drop " + std::to_string(c) + " " + describe(rep), [&] {
      return rep_determinant(drop(rep, c)) == divided_difference(rep_determinant(rep), c);
    });
  }

  for (int variant = 0; variant < 2; ++variant) {
    for (int t = 0; t < trials;) {
      auto base = random_rep(g, 2, 4, 4);
      auto ends = base.ends();
      const int j = uniform(g, 0, base.size() - 1);
      if (ends[j].c < 1) continue;
      int j2 = uniform(g, 0, base.size() - 2);
      if (j2 >= j) ++j2;
      ends[j2] = {ends[j].b + (variant == 0 ? 1 : -1), ends[j].c - 1};
      const LatticeRep rep(base.starts(), ends, base.sign());
      const int c = ends[j].c;
      if (count_at_height(rep, c) != 1) continue;
      ++t;
      rec.guarded(std::string(variant == 0 ? "slide (a) " : "slide (b) ") + describe(rep), [&] {
        const LatticeRep out = variant == 0 ? slide_left_below(rep, c) : slide_left_at(rep, c);
        return rep_determinant(out) == divided_difference(rep_determinant(rep), c);
      });
    }
  }

  for (int t = 0; t < trials; ++t) {
    const LatticeRep f0 = random_rep(g, 1, 3, 3);
    const LatticeRep gg = random_rep(g, 1, 3, 3);
    int reach = 0;
    for (const auto& e : gg.ends()) reach = std::max(reach, e.b + e.c);
    const int lo = *std::min_element(f0.starts().begin(), f0.starts().end());
    const LatticeRep f = f0.translated(std::max(0, reach + 1 - lo) + uniform(g, 0, 1));
    rec.guarded("product " + describe(f) + " | " + describe(gg), [&] {
      return rep_determinant(product(f, gg)) == rep_determinant(f) * rep_determinant(gg);
    });
  }

  for (int t = 0; t < trials;) {
    const int s = uniform(g, 0, 2);
    const int a = uniform(g, 0, 3);
    const LatticeRep base = random_rep(g, 1, 3, 4);
    if (std::any_of(base.starts().begin(), base.starts().end(), [&](int x) { return a <= x && x <= a + s; }))
      continue;
    std::vector<int> starts = base.starts();
    std::vector<EndPoint> ends = base.ends();
    for (int i = 0; i <= s; ++i) {
      starts.insert(starts.begin() + uniform(g, 0, static_cast<int>(starts.size())), a + i);
      ends.insert(ends.begin() + uniform(g, 0, static_cast<int>(ends.size())), EndPoint{a, i});
    }
    const LatticeRep rep(starts, ends, base.sign());
    ++t;
    rec.guarded("delete " + describe(rep), [&] {
      return rep_determinant(delete_staircase(rep, a, s)) == rep_determinant(rep);
    });
  }

  for (int t = 0; t < trials;) {
    const int n = uniform(g, 2, 6);
    const Permutation u = random_permutation(g, n);
    if (!avoids(u, {"1324", "2413", "3142"})) continue;
    const auto& lows = lowering_permutations(n);
    const LoweringPermutation v(lows[uniform(g, 0, static_cast<int>(lows.size()) - 1)]);
    const LatticeRep compact = compact_rep(u);
    // Shuffle the order of starts and ends; the sign absorbs both.
    std::vector<int> row(n);
    std::vector<int> col(n);
    std::iota(row.begin(), row.end(), 0);
    std::iota(col.begin(), col.end(), 0);
    std::shuffle(row.begin(), row.end(), g);
    std::shuffle(col.begin(), col.end(), g);
    std::vector<int> starts;
    std::vector<EndPoint> ends;
    for (int i : row) starts.push_back(compact.starts()[i]);
    for (int j : col) ends.push_back(compact.ends()[j]);
    const LatticeRep rep(starts, ends, compact.sign() * parity(row) * parity(col));
    LatticeRep out;
    try {
      out = lower(rep, v);
    } catch (const DomainError&) {
      continue;  // bottom ends do not sit above distinct starts
    }
    ++t;
    rec.guarded("lower " + u.compact() + " by " + v.base().compact(), [&] {
      return rep_determinant(out) == divided_difference_word(rep_determinant(rep), v.base().inverse());
    });
  }
  rec.stop();
  return r;
}

CheckReport quantum_consistency(int n) {
  CheckReport r = report("quantum-consistency", "E recurrence vs det(I + lambda G_k) for k <= " + std::to_string(n + 1) +
                                           "; quantum Schubert polynomials for w in S_" + std::to_string(n));
  Recorder rec(r);
  for (int k = 0; k <= n + 1; ++k)
    for (int j = 0; j <= k + 1; ++j)
      rec.guarded("E_" + std::to_string(j) + "^(" + std::to_string(k) + ")", [&] {
        const Polynomial e = quantum_elementary(j, k);
        return e == quantum_elementary_via_determinant(j, k) && e.at_q_zero() == elementary(j, k);
      });
  for (const auto& w : all_permutations(n)) {
    const Polynomial qs = quantum_schubert(w);
    rec.guarded("q = 0 " + w.compact(), [&] { return qs.at_q_zero() == schubert(w); });
    if (avoids_thirteen(w))
      rec.guarded("quantum determinant " + w.compact(),
                  [&] { return rep_determinant_quantum(proper_rep(w)) == qs; });
  }
  rec.stop();
  return r;
}

CheckReport corollaries(int n) {
  CheckReport r = report("corollaries", "rep_321 over S_" + std::to_string(n) +
                                   "; rep_grassmannian against tableaux in a 3x3 box, up to 3 variables");
  Recorder rec(r);
  for (const auto& w : all_permutations(n))
    if (avoids(w, {"321"}))
      rec.guarded("321 " + w.compact(), [&] {
        const LatticeRep rep = rep_321(w);
        return rep.sign() == 1 && rep.is_proper() && rep_determinant(rep) == schubert(w);
      });
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) {
        std::vector<int> lambda;
        for (int part : {a, b, c})
          if (part > 0) lambda.push_back(part);
        for (int vars = 1; vars <= 3; ++vars)
          rec.guarded("schur (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") in " +
                          std::to_string(vars) + " variables",
                      [&] {
                        const Polynomial expected = schur_by_tableaux(lambda, vars);
                        return rep_determinant(rep_grassmannian(lambda, vars)) == expected &&
                               schur(lambda, vars) == expected;
                      });
      }
  rec.stop();
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"pipe-oracle", "sem-bound",  "rep-correct",         "converse",
                                              "fixtures",    "lgv-oracle", "operations",          "quantum-consistency",
                                              "corollaries"};
  return names;
}

CheckReport run_check(const std::string& name, const Options& opt) {
  auto budget = [&](int fallback) { return opt.budget >= 0 ? opt.budget : fallback; };
  if (name == "pipe-oracle") return pipe_oracle(opt.n);
  if (name == "sem-bound") return sem_bound(opt.n);
  if (name == "rep-correct") return rep_correct(opt.n, budget(1000), opt.seed);
  if (name == "converse") return converse(opt.n);
  if (name == "fixtures") return fixtures();
  if (name == "lgv-oracle") return lgv_oracle(budget(200), opt.seed);
  if (name == "operations") return operations(budget(100), opt.seed);
  if (name == "quantum-consistency") return quantum_consistency(opt.n);
  if (name == "corollaries") return corollaries(opt.n);
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace semdet::verify
