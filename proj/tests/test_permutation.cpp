#include <doctest.h>

#include <random>

#include "semdet/permutation.hpp"

using namespace semdet;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("parsing accepts spaced, comma and compact forms") {
  CHECK(P("4 1 3 2") == Permutation({4, 1, 3, 2}));
  CHECK(P("[4,1,3,2]") == Permutation({4, 1, 3, 2}));
  CHECK(P("4132") == Permutation({4, 1, 3, 2}));
  CHECK_THROWS_AS(P("4 1 3 3"), DomainError);
  CHECK_THROWS_AS(P("0 1"), DomainError);
  CHECK_THROWS_AS(P(""), DomainError);
}

TEST_CASE("code, from_code and length") {
  CHECK(code(P("4132")) == Code{3, 0, 1, 0});
  CHECK(code(P("321")) == Code{2, 1, 0});
  CHECK(code(Permutation::identity(5)) == Code{0, 0, 0, 0, 0});
  CHECK(from_code({3, 0, 1, 0}) == P("4132"));
  CHECK(from_code({2, 1, 0}) == P("321"));
  CHECK_THROWS_AS(from_code({1, 1}), DomainError);
  CHECK(length(P("4132")) == 4);
  CHECK(length(Permutation::longest(6)) == 15);

  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n)) {
      const Code c = code(w);
      int sum = 0;
      for (int x : c) sum += x;
      REQUIRE(from_code(c) == w);
      REQUIRE(length(w) == sum);
    }
}

TEST_CASE("products and simple transpositions") {
  const Permutation u = P("87321564");
  const Permutation v = P("34562718");
  CHECK(u * v == P("32157684"));
  CHECK(P("4132").times_simple(1) == P("1432"));
  CHECK(P("4132").inverse() == P("2431"));
  CHECK(P("231").padded(5) == P("23145"));
}

TEST_CASE("pattern containment") {
  CHECK(contains_pattern(P("32157684"), P("1342")));
  CHECK(contains_pattern(P("4132"), P("4132")));
  CHECK_FALSE(contains_pattern(P("1234"), P("21")));
  auto occ = find_pattern(P("32157684"), P("1342"));
  REQUIRE(occ);
  std::vector<int> values;
  for (int p : *occ) values.push_back(P("32157684")(p));
  CHECK(standardize(values) == P("1342"));
}

TEST_CASE("pattern containment is transitive on random samples") {
  std::mt19937_64 g(7);
  auto random_perm = [&](int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::shuffle(w.begin(), w.end(), g);
    return Permutation(w);
  };
  int tested = 0;
  for (int t = 0; t < 300; ++t) {
    const Permutation w = random_perm(8);
    const Permutation mid = random_perm(5);
    const Permutation p = random_perm(3);
    if (contains_pattern(w, mid) && contains_pattern(mid, p)) {
      ++tested;
      CHECK(contains_pattern(w, p));
    }
  }
  CHECK(tested > 10);
}

TEST_CASE("thirteen forbidden patterns") {
  CHECK(thirteen_patterns().size() == 13);
  CHECK(avoids_thirteen(P("32157684")));
  CHECK(avoids_thirteen(P("87321564")));
  CHECK_FALSE(avoids_thirteen(P("51324")));
  for (const auto& p : thirteen_patterns()) CHECK_FALSE(avoids_thirteen(p));
  auto witness = thirteen_witness(P("651324"));
  REQUIRE(witness);
  CHECK(witness->first.size() == 5);
}

TEST_CASE("classification labels") {
  auto has = [](const Permutation& w, ClassLabel l) { return classify(w).count(l) > 0; };
  const auto labels321 = classify(P("321"));
  CHECK(labels321 == std::set<ClassLabel>{ClassLabel::Dominant, ClassLabel::Avoids213, ClassLabel::Separable,
                                          ClassLabel::Avoids1324, ClassLabel::Lowering,
                                          ClassLabel::ThirteenAvoiding});
  CHECK(classify(Permutation::identity(4)).size() == 8);
  CHECK_FALSE(has(P("2413"), ClassLabel::Separable));
  CHECK(has(P("1342"), ClassLabel::Grassmannian));
  CHECK_FALSE(has(P("1432"), ClassLabel::Grassmannian));
}

TEST_CASE("direct and skew sums") {
  CHECK(skew_sum(P("21"), P("321564")) == P("87321564"));
  CHECK(direct_sum(P("321"), P("231")) == P("321564"));
  CHECK(direct_sum(P("1"), P("1")) == P("12"));
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3)) {
      CHECK(length(direct_sum(u, v)) == length(u) + length(v));
      CHECK(length(skew_sum(u, v)) == length(u) + length(v) + 9);
    }
}

TEST_CASE("separable decomposition") {
  const auto t = separable_decomposition(P("87321564"));
  CHECK(t.kind == SeparableTree::Kind::Skew);
  CHECK(t.children[0].compose() == P("1"));
  CHECK(t.children[1].compose() == P("7321564"));
  CHECK(t.children[1].kind == SeparableTree::Kind::Skew);
  CHECK(separable_decomposition(P("321564")).kind == SeparableTree::Kind::Direct);
  CHECK(separable_decomposition(P("1")).kind == SeparableTree::Kind::Leaf);
  CHECK_THROWS_AS(separable_decomposition(P("2413")), PatternViolation);
  for (const auto& w : all_permutations(6))
    if (avoids(w, {"2413", "3142"})) REQUIRE(separable_decomposition(w).compose() == w);
}

TEST_CASE("lowering permutations") {
  const LoweringPermutation v(P("34562718"));
  CHECK(v.k() == 3);
  CHECK(v.descent_positions() == std::vector<int>{7, 5, 1});
  CHECK_THROWS_AS(LoweringPermutation(P("132")), DomainError);
  CHECK(is_lowering(Permutation::identity(4)));
  CHECK_FALSE(is_lowering(P("312")));
}

TEST_CASE("Q-set and factorization") {
  CHECK(q_set(P("32157684")) == std::vector<int>{8, 7, 3});
  CHECK(q_set(P("54321")) == std::vector<int>{5});
  CHECK(q_set(Permutation::identity(4)) == std::vector<int>{4, 3, 2, 1});
  CHECK_THROWS_AS(q_set(P("51324")), PatternViolation);

  auto f = factorize(P("32157684"));
  CHECK(f.u == P("87321564"));
  CHECK(f.v.base() == P("34562718"));

  auto id = factorize(Permutation::identity(4));
  CHECK(id.u == Permutation::longest(4));
  CHECK(id.v.base() == Permutation::longest(4));

  auto d = factorize(P("321"));
  CHECK(d.u == P("321"));
  CHECK(d.v.base() == Permutation::identity(3));
}

TEST_CASE("factorization invariants over S6") {
  for (const auto& w : all_permutations(6)) {
    if (!avoids_thirteen(w)) continue;
    auto f = factorize(w);
    REQUIRE(f.u * f.v.base() == w);
    REQUIRE(length(w) == length(f.u) - length(f.v.base()));
    REQUIRE(avoids(f.u, {"1324", "2413", "3142"}));
    REQUIRE(avoids(f.v.base(), {"132", "312"}));
  }
}

TEST_CASE("Q contains the 4 of every 2413 and the 4 of every 3142") {
  for (const auto& w : all_permutations(6)) {
    if (!avoids_thirteen(w)) continue;
    const auto q = q_set(w);
    auto in_q = [&](int value) { return std::find(q.begin(), q.end(), value) != q.end(); };
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b)
        for (int c = b + 1; c <= 6; ++c)
          for (int d = c + 1; d <= 6; ++d) {
            const std::vector<int> values{w(a), w(b), w(c), w(d)};
            const Permutation pat = standardize(values);
            if (pat == P("2413")) REQUIRE(in_q(w(b)));
            if (pat == P("3142")) REQUIRE(in_q(w(c)));
          }
  }
}
