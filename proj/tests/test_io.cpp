#include <doctest.h>

#include "semdet/io.hpp"

using namespace semdet;
using namespace semdet::io;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
Polynomial mono(std::vector<int> xs) { return Polynomial::monomial(Monomial::from_exponents(xs)); }

const LatticeRep& rep4132() {
  static const LatticeRep r({0, 1, 2}, {{0, 1}, {0, 2}, {1, 3}});
  return r;
}

}  // namespace

TEST_CASE("permutation json") {
  const Permutation w = P("4132");
  CHECK(to_json(w) == json::array({4, 1, 3, 2}));
  CHECK(permutation_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(permutation_from_json(json::array({1, 1})), ParseError);
  CHECK_THROWS_AS(permutation_from_json(json("4132")), ParseError);
}

TEST_CASE("polynomial json round trip") {
  Polynomial f = mono({3, 1}) - Polynomial::x(2) * Polynomial::q(3);
  f += Polynomial(Coeff("123456789012345678901234567890"));
  CHECK(polynomial_from_json(to_json(f)) == f);
  CHECK(polynomial_from_json(to_json(Polynomial())) == Polynomial());
  CHECK_THROWS_AS(polynomial_from_json(json::object()), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"([{"exps":[1]}])")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"([{"exps":[1],"coeff":"x"}])")), ParseError);
}

TEST_CASE("SEM expansion json and text") {
  const SemExpansion e{{SemIndex({1, 1, 2}), 1}, {SemIndex({1, 0, 3}), -1}, {SemIndex({0, 2, 2}), -1}};
  CHECK(sem_from_json(to_json(e)) == e);
  CHECK(sem_to_text(e) == "e_112 - e_103 - e_022");
  CHECK(sem_to_text(e, 'E') == "E_112 - E_103 - E_022");
  CHECK(latex(e) == "e_{112}-e_{103}-e_{022}");
  CHECK_THROWS_AS(sem_from_json(json::parse(R"([{"index":[3],"coeff":"1"}])")), ParseError);
}

TEST_CASE("lattice representation json") {
  LatticeRep r({0, 2}, {{0, 1}, {1, 3}}, -1, "sample");
  const LatticeRep back = rep_from_json(to_json(r));
  CHECK(back == r);
  CHECK(back.label() == "sample");
  CHECK(rep_from_json(to_json(rep4132())) == rep4132());
  CHECK_THROWS_AS(rep_from_json(json::parse(R"({"starts":[0]})")), ParseError);
  CHECK_THROWS_AS(rep_from_json(json::parse(R"({"starts":[0],"ends":[[0]]})")), ParseError);
  CHECK_THROWS_AS(rep_from_json(json::parse(R"({"starts":[0],"ends":[[0,1]],"sign":"+"})")), ParseError);
}

TEST_CASE("pipe dream json") {
  for (const auto& pd : reduced_pipe_dreams(P("4132"))) CHECK(pipedream_from_json(to_json(pd)) == pd);
  CHECK(to_json(reduced_pipe_dreams(P("4132"))).size() == 2);
  CHECK_THROWS_AS(pipedream_from_json(json::parse("[[0,1]]")), ParseError);
}

TEST_CASE("latex output") {
  CHECK(latex(mono({3, 1}) + mono({3, 0, 1})) == "x_1^3x_2+x_1^3x_3");
  CHECK(latex(Polynomial()) == "0");
  CHECK(latex_matrix(rep4132()) ==
        "\\left|\\begin{matrix}\n"
        "e_1^{(1)}&e_2^{(2)}&0\\\\\n"
        "e_0^{(1)}&e_1^{(2)}&e_3^{(3)}\\\\\n"
        "0&e_0^{(2)}&e_2^{(3)}\n"
        "\\end{matrix}\\right|");
  const LatticeRep r413625({0, 1, 2, 5}, {{0, 1}, {0, 2}, {1, 4}, {1, 5}});
  CHECK(latex_matrix(r413625) ==
        "\\left|\\begin{matrix}\n"
        "e_1^{(1)}&e_2^{(2)}&0&0\\\\\n"
        "e_0^{(1)}&e_1^{(2)}&e_4^{(4)}&e_5^{(5)}\\\\\n"
        "0&e_0^{(2)}&e_3^{(4)}&e_4^{(5)}\\\\\n"
        "0&0&e_0^{(4)}&e_1^{(5)}\n"
        "\\end{matrix}\\right|");
  LatticeRep neg({0}, {{0, 1}}, -1);
  CHECK(latex_matrix(neg).rfind("-\\left|", 0) == 0);
}

TEST_CASE("text and svg output") {
  CHECK(rep_to_text(rep4132()) == "sign: +1\nstarts: (0,0) (1,0) (2,0)\nends: (0,1) (0,2) (1,3)\n");
  const auto systems = enumerate_path_systems(rep4132());
  REQUIRE(!systems.empty());
  const std::string pic = svg(rep4132(), &systems.front());
  CHECK(pic.rfind("<svg", 0) == 0);
  CHECK(pic.find("</svg>") != std::string::npos);
  CHECK(svg(rep4132()).find("<circle") != std::string::npos);
}
