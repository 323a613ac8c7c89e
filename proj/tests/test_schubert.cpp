#include <doctest.h>

#include "semdet/schubert.hpp"

using namespace semdet;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
Polynomial X(int i) { return Polynomial::x(i); }
Polynomial Q(int i) { return Polynomial::q(i); }
Polynomial mono(std::vector<int> xs) { return Polynomial::monomial(Monomial::from_exponents(xs)); }

}  // namespace

TEST_CASE("Schubert polynomials of small permutations") {
  CHECK(schubert(P("4132")) == mono({3, 1}) + mono({3, 0, 1}));
  CHECK(schubert(P("321")) == mono({2, 1}));
  CHECK(schubert(P("1")) == Polynomial(1));
  CHECK(schubert(P("213")) == X(1));
  CHECK(schubert(P("132")) == X(1) + X(2));
  CHECK(schubert(P("2143")) == mono({2}) + mono({1, 1}) + mono({1, 0, 1}));
  CHECK(schubert(Permutation::longest(5)) == mono({4, 3, 2, 1}));
}

TEST_CASE("stability under padding") {
  for (const auto& w : all_permutations(4)) REQUIRE(schubert(w) == schubert(w.padded(6)));
}

TEST_CASE("dominant permutations give the code monomial") {
  for (const auto& w : all_permutations(5))
    if (avoids(w, {"132"})) REQUIRE(schubert(w) == Polynomial::monomial(Monomial::from_exponents(code(w))));
}

TEST_CASE("pipe dreams of 4132") {
  const auto pds = reduced_pipe_dreams(P("4132"));
  REQUIRE(pds.size() == 2);
  std::set<std::string> weights;
  for (const auto& pd : pds) {
    CHECK(pd.crosses().size() == 4);
    const auto t = pd.trace(4);
    CHECK(t.reduced);
    weights.insert(pd.weight().to_string());
  }
  CHECK(weights == std::set<std::string>{"x1^3*x2", "x1^3*x3"});
}

TEST_CASE("pipe dream corner cases") {
  const auto id = reduced_pipe_dreams(Permutation::identity(3));
  REQUIRE(id.size() == 1);
  CHECK(id.front().crosses().empty());
  const auto top = reduced_pipe_dreams(Permutation::longest(3));
  REQUIRE(top.size() == 1);
  CHECK(top.front().crosses() == std::set<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}});
  CHECK_THROWS_AS(reduced_pipe_dreams(Permutation::identity(9)), DomainError);
}

TEST_CASE("traced wires exit where the permutation sends them") {
  for (const auto& w : all_permutations(5))
    for (const auto& pd : reduced_pipe_dreams(w)) {
      const auto t = pd.trace(5);
      REQUIRE(t.reduced);
      for (int i = 1; i <= 5; ++i) REQUIRE(t.exits[i - 1] == w(i));
    }
}

TEST_CASE("pipe dreams agree with divided differences") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) REQUIRE(schubert_via_pipedreams(w) == schubert(w));
}

TEST_CASE("sampled agreement in S7") {
  int k = 0;
  for (const auto& w : all_permutations(7))
    if (k++ % 97 == 0) REQUIRE(schubert_via_pipedreams(w) == schubert(w));
}

TEST_CASE("monomial positivity in S6") {
  for (const auto& w : all_permutations(6)) {
    const Polynomial s = schubert(w);
    for (const auto& [m, c] : s.terms()) REQUIRE(c > 0);
  }
}

TEST_CASE("direct and skew sum product rules") {
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3)) {
      const Permutation one3 = Permutation::identity(3);
      REQUIRE(schubert(direct_sum(u, v)) == schubert(u) * schubert(direct_sum(one3, v)));
      const Polynomial block = (X(1) * X(2) * X(3)).pow(3);
      REQUIRE(schubert(skew_sum(u, v)) == schubert(u) * block * schubert(v).shift_x(3));
    }
}

TEST_CASE("SEM coefficients of S_w are bounded by one in S6") {
  for (const auto& w : all_permutations(6))
    for (const auto& [idx, c] : sem_expand(schubert(w), 5)) REQUIRE(abs(c) <= 1);
}

TEST_CASE("quantum elementary polynomials") {
  CHECK(quantum_elementary(2, 2) == X(1) * X(2) + Q(1));
  CHECK(quantum_elementary(1, 4) == X(1) + X(2) + X(3) + X(4));
  CHECK(quantum_elementary(0, 0) == Polynomial(1));
  CHECK(quantum_elementary(3, 2).is_zero());
  CHECK(quantum_elementary(2, 3) == X(1) * X(2) + X(1) * X(3) + X(2) * X(3) + Q(1) + Q(2));
  for (int k = 0; k <= 6; ++k)
    for (int j = 0; j <= k + 1; ++j) {
      REQUIRE(quantum_elementary(j, k) == quantum_elementary_via_determinant(j, k));
      REQUIRE(quantum_elementary(j, k).at_q_zero() == elementary(j, k));
    }
}

TEST_CASE("quantum Schubert polynomials") {
  CHECK(quantum_schubert(P("21")) == X(1));
  const Polynomial q4132 = quantum_sem_monomial(SemIndex({1, 1, 2})) - quantum_sem_monomial(SemIndex({1, 0, 3})) -
                           quantum_sem_monomial(SemIndex({0, 2, 2}));
  CHECK(quantum_schubert(P("4132")) == q4132);
  CHECK(quantum_schubert(P("321")) == quantum_sem_monomial(SemIndex({1, 2})));
  for (const auto& w : all_permutations(5)) REQUIRE(quantum_schubert(w).at_q_zero() == schubert(w));
}
