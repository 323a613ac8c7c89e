#include <doctest.h>

#include <functional>
#include <random>

#include "semdet/polynomial.hpp"
#include "semdet/schubert.hpp"
#include "semdet/sem.hpp"
#include "semdet/verify.hpp"

using namespace semdet;

namespace {

Polynomial X(int i) { return Polynomial::x(i); }
Polynomial mono(std::vector<int> xs) { return Polynomial::monomial(Monomial::from_exponents(xs)); }

Polynomial random_poly(std::mt19937_64& g, int vars, int max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> var(1, vars);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Polynomial f;
  for (int t = 0; t < terms; ++t) {
    Polynomial m(coeff(g));
    const int d = deg(g);
    for (int k = 0; k < d; ++k) m *= X(var(g));
    f += m;
  }
  return f;
}

}  // namespace

TEST_CASE("arithmetic and rendering") {
  const Polynomial f = X(1) + X(2);
  CHECK((f * f).to_string() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK((f - f).is_zero());
  CHECK(f.pow(3) == f * f * f);
  CHECK((X(1) * Polynomial::q(1) - 3).to_string() == "x1*q1 - 3");
  CHECK(Polynomial(7).is_constant());
  CHECK(mono({0, 2, 1}).degree() == 3);
  CHECK((X(1) + Polynomial::q(2)).at_q_zero() == X(1));
  CHECK(mono({1, 2}).shift_x(2) == mono({0, 0, 1, 2}));
  CHECK(mono({1, 2}).swap_x(1) == mono({2, 1}));
}

TEST_CASE("large coefficients stay exact") {
  Polynomial f = X(1) + 1;
  const Polynomial g = f.pow(80);
  Coeff binom = 1;
  for (int i = 0; i < 40; ++i) binom = binom * (80 - i) / (i + 1);
  CHECK(g.coefficient(Monomial::from_exponents({40})) == binom);
}

TEST_CASE("exact division") {
  const Polynomial a = X(1) * X(1) - X(2) * X(2);
  CHECK(divide_exact(a, X(1) - X(2)) == X(1) + X(2));
  CHECK_THROWS_AS(divide_exact(a + 1, X(1) - X(2)), ArithmeticError);
}

TEST_CASE("elementary symmetric polynomials") {
  CHECK(elementary(1, 2) == X(1) + X(2));
  CHECK(elementary(0, 5) == Polynomial(1));
  CHECK(elementary(3, 2).is_zero());
  CHECK(elementary(-1, 2).is_zero());
  CHECK(elementary(2, 3) == X(1) * X(2) + X(1) * X(3) + X(2) * X(3));
}

TEST_CASE("divided differences") {
  const Polynomial f = mono({3, 2}) + mono({3, 1, 1});
  CHECK(divided_difference(f, 2) == mono({3, 1}) + mono({3, 0, 1}));
  CHECK(divided_difference(X(1), 1) == Polynomial(1));
  CHECK(divided_difference(X(1) * X(2), 1).is_zero());
  CHECK(divided_difference(mono({2, 1}), 1) == mono({1, 1}));
}

TEST_CASE("divided differences agree with the quotient definition") {
  std::mt19937_64 g(11);
  for (int t = 0; t < 40; ++t) {
    const Polynomial f = random_poly(g, 4, 5, 6);
    for (int i = 1; i <= 3; ++i)
      REQUIRE(divided_difference(f, i) == divide_exact(f - f.swap_x(i), X(i) - X(i + 1)));
  }
}

TEST_CASE("nilCoxeter relations on random polynomials") {
  std::mt19937_64 g(3);
  auto d = [](const Polynomial& f, int i) { return divided_difference(f, i); };
  for (int t = 0; t < 30; ++t) {
    const Polynomial f = random_poly(g, 5, 6, 8);
    for (int i = 1; i <= 4; ++i) {
      REQUIRE(d(d(f, i), i).is_zero());
      if (i <= 3) REQUIRE(d(d(d(f, i), i + 1), i) == d(d(d(f, i + 1), i), i + 1));
      for (int j = i + 2; j <= 4; ++j) REQUIRE(d(d(f, i), j) == d(d(f, j), i));
    }
  }
}

TEST_CASE("reduced words and word independence") {
  const Permutation w0 = Permutation::longest(3);
  const auto word = reduced_word(w0);
  CHECK(word.size() == 3);
  CHECK(apply_divided_differences(mono({2, 1}), {1, 2, 1}) == apply_divided_differences(mono({2, 1}), {2, 1, 2}));
  CHECK(divided_difference_word(mono({2, 1}), Permutation::identity(3)) == mono({2, 1}));
  CHECK(divided_difference_word(mono({3, 2, 1}), Permutation::longest(4)) == Polynomial(1));
  for (const auto& w : all_permutations(5)) {
    Permutation rebuilt = Permutation::identity(5);
    for (int i : reduced_word(w)) rebuilt = rebuilt.times_simple(i);
    REQUIRE(rebuilt == w);
    REQUIRE(static_cast<int>(reduced_word(w).size()) == length(w));
  }
}

TEST_CASE("determinants") {
  CHECK(determinant({}) == Polynomial(1));
  PolyMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(determinant(id) == Polynomial(1));
  PolyMatrix m2{{elementary(1, 1), elementary(2, 2)}, {elementary(0, 1), elementary(1, 2)}};
  CHECK(determinant(m2) == verify::leibniz_determinant(m2));
  CHECK(determinant(m2) == mono({2}));

  std::mt19937_64 g(5);
  for (int size = 1; size <= 6; ++size)
    for (int t = 0; t < 4; ++t) {
      PolyMatrix m(size, std::vector<Polynomial>(size));
      for (auto& row : m)
        for (auto& e : row) e = random_poly(g, 3, 2, 2);
      REQUIRE(determinant(m) == verify::leibniz_determinant(m));
    }
}

TEST_CASE("Schur polynomials") {
  CHECK(schur({1}, 2) == X(1) + X(2));
  CHECK(schur({2, 1}, 2) == mono({2, 1}) + mono({1, 2}));
  CHECK(schur({}, 3) == Polynomial(1));
  CHECK(conjugate({3, 1}) == std::vector<int>{2, 1, 1});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int n = 1; n <= 4; ++n) {
          std::vector<int> lambda;
          for (int p : {a, b, c})
            if (p) lambda.push_back(p);
          REQUIRE(schur(lambda, n) == verify::schur_by_tableaux(lambda, n));
        }
}

TEST_CASE("SEM indices") {
  CHECK(SemIndex({1, 1, 2, 0, 0}).length() == 3);
  CHECK(SemIndex({0, 2, 2}).label() == "022");
  CHECK_THROWS_AS(SemIndex({2}), DomainError);
  CHECK(sem_monomial(SemIndex({0, 2})) == X(1) * X(2));
  CHECK(sem_monomial(SemIndex()) == Polynomial(1));
  CHECK(sem_monomial(SemIndex({1, 1, 2})) == elementary(1, 1) * elementary(1, 2) * elementary(2, 3));
}

TEST_CASE("SEM expansion") {
  const SemExpansion e4132 = sem_expand(mono({3, 1}) + mono({3, 0, 1}), 3);
  const SemExpansion expected{{SemIndex({1, 1, 2}), 1}, {SemIndex({1, 0, 3}), -1}, {SemIndex({0, 2, 2}), -1}};
  CHECK(e4132 == expected);
  CHECK(sem_expand(X(1), 1) == SemExpansion{{SemIndex({1}), 1}});
  CHECK(sem_expand(X(2), 2) == SemExpansion{{SemIndex({0, 1}), 1}, {SemIndex({1}), -1}});
  CHECK(sem_expand(Polynomial(5), 2) == SemExpansion{{SemIndex(), 5}});
  CHECK(sem_expand(Polynomial(), 2).empty());
  CHECK_THROWS_AS(sem_expand(X(3), 2), InsufficientBound);
  CHECK_THROWS_AS(sem_expand(X(1) * X(1), 1), InsufficientBound);
  CHECK_THROWS_AS(sem_expand(Polynomial::q(1), 2), DomainError);

  std::mt19937_64 g(9);
  for (int t = 0; t < 30; ++t) {
    Polynomial f;
    // Random polynomial inside the span of SEMs with k <= 4.
    for (int i = 0; i < 4; ++i) {
      std::vector<int> js(4);
      for (int k = 1; k <= 4; ++k) js[k - 1] = std::uniform_int_distribution<int>(0, k)(g);
      f += Polynomial(std::uniform_int_distribution<int>(-3, 3)(g)) * sem_monomial(SemIndex(js));
    }
    REQUIRE(evaluate(sem_expand(f, 4)) == f);
  }
}

TEST_CASE("SEMs are linearly independent at small degree") {
  // Per degree there are as many SEMs as monomials under the staircase, so
  // expanding every such monomial is a full-rank check.
  for (int d = 0; d <= 6; ++d) {
    std::vector<std::vector<int>> exps;
    std::vector<int> e(5, 0);
    std::function<void(int, int)> gen = [&](int i, int left) {
      if (i == 5) {
        if (left == 0) exps.push_back(e);
        return;
      }
      for (int v = 0; v <= std::min(left, 5 - i); ++v) {
        e[i] = v;
        gen(i + 1, left - v);
      }
      e[i] = 0;
    };
    gen(0, d);
    for (const auto& x : exps) {
      const Polynomial m = mono(x);
      REQUIRE(evaluate(sem_expand(m, 5)) == m);
    }
  }
}

TEST_CASE("Schubert basis expansion") {
  const auto e = schubert_expand(mono({3, 1}) + mono({3, 0, 1}), 4);
  CHECK(e == std::map<Permutation, Coeff>{{Permutation::parse("4132"), 1}});
  CHECK(schubert_expand(X(1), 3) == std::map<Permutation, Coeff>{{Permutation::parse("213"), 1}});
  CHECK_THROWS_AS(schubert_expand(X(3), 3), DomainError);
  for (const auto& w : all_permutations(5))
    REQUIRE(schubert_expand(schubert(w), 5) == std::map<Permutation, Coeff>{{w, 1}});
}
