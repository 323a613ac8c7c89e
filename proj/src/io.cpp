#include "semdet/io.hpp"

#include <algorithm>
#include <sstream>

namespace semdet::io {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::string term_sign(const Coeff& c, bool first) {
  if (first) return c < 0 ? "-" : "";
  return c < 0 ? " - " : " + ";
}

std::string latex_monomial(const Monomial& m) {
  std::string s;
  auto emit = [&](char var, int i, int e) {
    if (e == 0) return;
    s += var;
    s += "_";
    s += i < 10 ? std::to_string(i) : "{" + std::to_string(i) + "}";
    if (e > 1) s += "^" + (e < 10 ? std::to_string(e) : "{" + std::to_string(e) + "}");
  };
  for (int i = 1; i <= m.max_x_var(); ++i) emit('x', i, m.x(i));
  for (int i = 1; i <= m.max_q_var(); ++i) emit('q', i, m.q(i));
  return s;
}

}  // namespace

// ------------------------------------------------------------------- JSON out

json to_json(const Permutation& w) { return w.word(); }

json to_json(const Polynomial& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms())
    out.push_back({{"exps", m.x_exponents()}, {"qexps", m.q_exponents()}, {"coeff", c.str()}});
  return out;
}

json to_json(const SemExpansion& e) {
  json out = json::array();
  for (const auto& [idx, c] : e) out.push_back({{"index", idx.js()}, {"coeff", c.str()}});
  return out;
}

json to_json(const LatticeRep& rep) {
  json ends = json::array();
  for (const auto& e : rep.ends()) ends.push_back({e.b, e.c});
  json out = {{"sign", rep.sign()}, {"starts", rep.starts()}, {"ends", ends}};
  if (!rep.label().empty()) out["label"] = rep.label();
  return out;
}

json to_json(const PipeDream& pd) {
  json out = json::array();
  for (const auto& [i, j] : pd.crosses()) out.push_back({i, j});
  return out;
}

json to_json(const std::vector<PipeDream>& pds) {
  json out = json::array();
  for (const auto& pd : pds) out.push_back(to_json(pd));
  return out;
}

// -------------------------------------------------------------------- JSON in

Permutation permutation_from_json(const json& j) {
  try {
    return Permutation(int_array(j, "permutation"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array of terms");
  Polynomial f;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff")) throw ParseError("polynomial: term needs a coeff");
    std::vector<int> xs = t.contains("exps") ? int_array(t["exps"], "exps") : std::vector<int>{};
    std::vector<int> qs = t.contains("qexps") ? int_array(t["qexps"], "qexps") : std::vector<int>{};
    Coeff c;
    try {
      c = t["coeff"].is_string() ? Coeff(t["coeff"].get<std::string>()) : Coeff(t["coeff"].get<long long>());
    } catch (const std::exception&) {
      throw ParseError("polynomial: bad coefficient");
    }
    try {
      f.add_term(Monomial::from_exponents(xs, qs), c);
    } catch (const ArithmeticError& e) {
      throw ParseError(std::string("polynomial: ") + e.what());
    }
  }
  return f;
}

SemExpansion sem_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("SEM expansion: expected an array");
  SemExpansion out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("index") || !t.contains("coeff"))
      throw ParseError("SEM expansion: entries need index and coeff");
    try {
      Coeff c = t["coeff"].is_string() ? Coeff(t["coeff"].get<std::string>()) : Coeff(t["coeff"].get<long long>());
      SemIndex idx(int_array(t["index"], "index"));
      if (c != 0) out[idx] += c;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string("SEM expansion: ") + e.what());
    }
  }
  return out;
}

LatticeRep rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("starts") || !j.contains("ends"))
    throw ParseError("lattice representation: needs starts and ends");
  std::vector<int> starts = int_array(j["starts"], "starts");
  std::vector<EndPoint> ends;
  if (!j["ends"].is_array()) throw ParseError("ends: expected an array of [b, c] pairs");
  for (const auto& e : j["ends"]) {
    auto bc = int_array(e, "ends");
    if (bc.size() != 2) throw ParseError("ends: expected [b, c] pairs");
    ends.push_back({bc[0], bc[1]});
  }
  int sign = 1;
  if (j.contains("sign")) {
    if (!j["sign"].is_number_integer()) throw ParseError("sign: expected +1 or -1");
    sign = j["sign"].get<int>();
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  try {
    return LatticeRep(std::move(starts), std::move(ends), sign, std::move(label));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

PipeDream pipedream_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("pipe dream: expected an array of [i, j] pairs");
  std::set<std::pair<int, int>> crosses;
  for (const auto& c : j) {
    auto ij = int_array(c, "pipe dream");
    if (ij.size() != 2 || ij[0] < 1 || ij[1] < 1) throw ParseError("pipe dream: expected positive [i, j] pairs");
    crosses.insert({ij[0], ij[1]});
  }
  return PipeDream(std::move(crosses));
}

// ----------------------------------------------------------------------- text

std::string sem_to_text(const SemExpansion& e, char symbol) {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    const auto& [idx, c] = *it;
    s += term_sign(c, first);
    const Coeff a = abs(c);
    const std::string label = idx.length() == 0 ? "1" : std::string(1, symbol) + "_" + idx.label();
    if (a != 1)
      s += a.str() + (idx.length() == 0 ? "" : "*" + label);
    else
      s += label;
    first = false;
  }
  return s;
}

std::string rep_to_text(const LatticeRep& rep) {
  std::ostringstream out;
  out << "sign: " << (rep.sign() > 0 ? "+1" : "-1") << "\nstarts:";
  for (int a : rep.starts()) out << " (" << a << ",0)";
  out << "\nends:";
  for (const auto& e : rep.ends()) out << " (" << e.b << "," << e.c << ")";
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------------- LaTeX

std::string latex(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? "-" : "+");
    const Coeff a = abs(c);
    if (a != 1 || m.is_one()) s += a.str();
    s += latex_monomial(m);
    first = false;
  }
  return s;
}

std::string latex(const SemExpansion& e, char symbol) {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    const auto& [idx, c] = *it;
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? "-" : "+");
    const Coeff a = abs(c);
    if (idx.length() == 0) {
      s += a.str();
    } else {
      if (a != 1) s += a.str();
      s += std::string(1, symbol) + "_{" + idx.label() + "}";
    }
    first = false;
  }
  return s;
}

std::string latex_matrix(const LatticeRep& rep, char symbol) {
  if (rep.size() == 0) return rep.sign() < 0 ? "-1" : "1";
  std::string s = rep.sign() < 0 ? "-" : "";
  s += "\\left|\\begin{matrix}\n";
  for (int i = 0; i < rep.size(); ++i) {
    for (int j = 0; j < rep.size(); ++j) {
      const auto& e = rep.ends()[j];
      const int sub = e.c + e.b - rep.starts()[i];
      if (j) s += "&";
      if (sub < 0 || sub > e.c)
        s += "0";
      else
        s += std::string(1, symbol) + "_" + (sub < 10 ? std::to_string(sub) : "{" + std::to_string(sub) + "}") +
             "^{(" + std::to_string(e.c) + ")}";
    }
    s += i + 1 < rep.size() ? "\\\\\n" : "\n";
  }
  s += "\\end{matrix}\\right|";
  return s;
}

// ------------------------------------------------------------------------ SVG

std::string svg(const LatticeRep& rep, const PathSystem* system) {
  constexpr int kCell = 40;
  constexpr int kMargin = 30;
  int lo = 0;
  int hi = 0;
  for (int a : rep.starts()) {
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  for (const auto& e : rep.ends()) {
    lo = std::min(lo, e.b);
    hi = std::max(hi, e.b);
  }
  const int top = std::max(1, rep.max_height());
  const int width = (hi - lo) * kCell + 2 * kMargin;
  const int height = top * kCell + 2 * kMargin;
  auto px = [&](int x) { return kMargin + (x - lo) * kCell; };
  auto py = [&](int y) { return height - kMargin - y * kCell; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<g stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"3,3\">\n";
  for (int x = lo; x <= hi; ++x)
    for (int y = 0; y < top; ++y) {
      out << "<line x1=\"" << px(x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x) << "\" y2=\"" << py(y + 1)
          << "\"/>\n";
      if (x > lo)
        out << "<line x1=\"" << px(x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x - 1) << "\" y2=\"" << py(y + 1)
            << "\"/>\n";
    }
  out << "</g>\n";
  if (system) {
    out << "<g stroke=\"black\" stroke-width=\"3\">\n";
    for (const auto& path : system->paths) {
      auto v = path_vertices(rep.starts()[path.start], path.steps);
      for (std::size_t i = 1; i < v.size(); ++i)
        out << "<line x1=\"" << px(v[i - 1].first) << "\" y1=\"" << py(v[i - 1].second) << "\" x2=\""
            << px(v[i].first) << "\" y2=\"" << py(v[i].second) << "\"/>\n";
    }
    out << "</g>\n";
  }
  for (int a : rep.starts()) out << "<circle cx=\"" << px(a) << "\" cy=\"" << py(0) << "\" r=\"5\" fill=\"black\"/>\n";
  for (const auto& e : rep.ends())
    out << "<circle cx=\"" << px(e.b) << "\" cy=\"" << py(e.c)
        << "\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace semdet::io
