#pragma once

// JSON, text, LaTeX and SVG encodings of the library's value types.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "semdet/lattice.hpp"
#include "semdet/permutation.hpp"
#include "semdet/polynomial.hpp"
#include "semdet/schubert.hpp"
#include "semdet/sem.hpp"

namespace semdet::io {

using json = nlohmann::json;

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Permutation& w);
json to_json(const Polynomial& f);
json to_json(const SemExpansion& e);
json to_json(const LatticeRep& rep);
json to_json(const PipeDream& pd);
json to_json(const std::vector<PipeDream>& pds);

Permutation permutation_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);
SemExpansion sem_from_json(const json& j);
LatticeRep rep_from_json(const json& j);
PipeDream pipedream_from_json(const json& j);

/// "e_112 - e_103 - e_022"; symbol is "e" or "E".
std::string sem_to_text(const SemExpansion& e, char symbol = 'e');
std::string rep_to_text(const LatticeRep& rep);

std::string latex(const Polynomial& f);
/// e_{112}-e_{103}-e_{022}.
std::string latex(const SemExpansion& e, char symbol = 'e');
/// The e-matrix as \left|\begin{matrix} ... \end{matrix}\right|, prefixed by
/// a minus sign when the representation carries sign -1.
std::string latex_matrix(const LatticeRep& rep, char symbol = 'e');

/// Grid with starts, ends and (if given) the edges of one path system.
std::string svg(const LatticeRep& rep, const PathSystem* system = nullptr);

}  // namespace semdet::io
