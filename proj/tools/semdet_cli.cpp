// semdet: command-line front end for the Schubert / SEM / lattice path library.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "semdet/io.hpp"
#include "semdet/lattice.hpp"
#include "semdet/schubert.hpp"
#include "semdet/verify.hpp"

using namespace semdet;
using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string perm;
  int n = 0;
  std::string format = "text";
  std::string check;
  int budget = -1;
  std::uint64_t seed = 1;
  std::string rep_file;
  std::string poly_file;
  std::string kind = "proper";
  bool pipedreams = false;
  bool sem = false;
};

Permutation get_perm(const Args& a) {
  if (a.perm.empty()) throw UsageError("--perm is required");
  try {
    return Permutation::parse(a.perm);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--perm: ") + e.what());
  }
}

std::string slurp(const std::string& path, const char* flag) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError(std::string(flag) + ": cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

json read_json(const std::string& path, const char* flag) {
  try {
    return json::parse(slurp(path, flag));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string(flag) + ": invalid JSON (" + e.what() + ")");
  }
}

LatticeRep get_rep(const Args& a) {
  if (!a.rep_file.empty()) {
    try {
      return io::rep_from_json(read_json(a.rep_file, "--rep"));
    } catch (const io::ParseError& e) {
      throw UsageError(std::string("--rep: ") + e.what());
    }
  }
  return proper_rep(get_perm(a));
}

Polynomial get_poly(const Args& a) {
  try {
    return io::polynomial_from_json(read_json(a.poly_file, "--poly"));
  } catch (const io::ParseError& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
}

std::string perm_label(const Permutation& w) { return w.size() <= 9 ? w.compact() : w.to_string(); }

void reject_format(const Args& a, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (a.format == f) return;
  throw UsageError("--format " + a.format + " is not supported by this command");
}

// ------------------------------------------------------------------ commands

int cmd_schubert(const Args& a) {
  reject_format(a, {"text", "json", "latex"});
  const Permutation w = get_perm(a);
  if (a.pipedreams) {
    auto pds = reduced_pipe_dreams(w);
    if (a.format == "json") {
      std::cout << io::to_json(pds).dump() << "\n";
    } else {
      std::cout << pds.size() << " reduced pipe dreams\n";
      for (const auto& pd : pds) std::cout << "\n" << pd.weight().to_string() << "\n" << pd.render(w.size());
    }
    return 0;
  }
  const Polynomial s = schubert(w);
  if (a.format == "json")
    std::cout << io::to_json(s).dump() << "\n";
  else if (a.format == "latex")
    std::cout << io::latex(s) << "\n";
  else
    std::cout << s.to_string() << "\n";
  return 0;
}

void emit_sem(const Args& a, const SemExpansion& e, char symbol) {
  if (a.format == "json")
    std::cout << io::to_json(e).dump() << "\n";
  else if (a.format == "latex")
    std::cout << io::latex(e, symbol) << "\n";
  else
    std::cout << io::sem_to_text(e, symbol) << "\n";
}

int cmd_sem(const Args& a) {
  reject_format(a, {"text", "json", "latex"});
  Polynomial f;
  int m = a.n;
  if (!a.poly_file.empty()) {
    f = get_poly(a);
    if (m <= 0) m = std::max(1, f.max_x_var());
  } else {
    const Permutation w = get_perm(a);
    f = schubert(w);
    if (m <= 0) m = std::max(1, w.size() - 1);
  }
  emit_sem(a, sem_expand(f, m), 'e');
  return 0;
}

int cmd_expand_schubert(const Args& a) {
  reject_format(a, {"text", "json", "latex"});
  Polynomial f;
  int n = a.n;
  if (!a.poly_file.empty()) {
    f = get_poly(a);
    if (n <= 0) throw UsageError("--n is required with --poly");
  } else {
    const Permutation w = get_perm(a);
    Monomial m;
    const Code c = code(w);
    for (int i = 0; i < w.size(); ++i) m.set_x(i + 1, c[i]);
    f = Polynomial::monomial(m);
    if (n <= 0) n = w.size();
  }
  const auto expansion = schubert_expand(f, n);
  if (a.format == "json") {
    json out = json::array();
    for (const auto& [w, c] : expansion) out.push_back({{"perm", io::to_json(w)}, {"coeff", c.str()}});
    std::cout << out.dump() << "\n";
    return 0;
  }
  const bool tex = a.format == "latex";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : expansion) {
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    const Coeff mag = abs(c);
    if (mag != 1) s += mag.str() + (tex ? "" : "*");
    s += tex ? "\\mathfrak S_{" + perm_label(w) + "}" : "S_" + perm_label(w);
    first = false;
  }
  std::cout << (first ? "0" : s) << "\n";
  return 0;
}

LatticeRep rep_of_kind(const Args& a) {
  const Permutation w = get_perm(a);
  if (a.kind == "proper") return proper_rep(w);
  if (a.kind == "compact") return compact_rep(w);
  if (a.kind == "dominant") return rep_dominant(w);
  if (a.kind == "213") return rep_213(w);
  if (a.kind == "321") return rep_321(w);
  throw UsageError("--kind must be one of proper, compact, dominant, 213, 321");
}

int cmd_rep(const Args& a) {
  const LatticeRep rep = rep_of_kind(a);
  if (a.format == "json")
    std::cout << io::to_json(rep).dump() << "\n";
  else if (a.format == "latex")
    std::cout << io::latex_matrix(rep) << "\n";
  else if (a.format == "svg") {
    std::vector<PathSystem> systems;
    if (rep.size() <= kPathSystemMaxK && rep.max_height() <= kPathSystemMaxHeight)
      systems = enumerate_path_systems(rep);
    std::cout << io::svg(rep, systems.empty() ? nullptr : &systems.front());
  } else
    std::cout << io::rep_to_text(rep);
  return 0;
}

int cmd_det(const Args& a) {
  reject_format(a, {"text", "json", "latex"});
  const LatticeRep rep = get_rep(a);
  const Polynomial d = rep_determinant(rep);
  if (a.format == "json") {
    json matrix = json::array();
    for (int i = 0; i < rep.size(); ++i) {
      json row = json::array();
      for (const auto& e : rep.ends()) {
        const int j = e.c + e.b - rep.starts()[i];
        row.push_back(j < 0 || j > e.c ? json(nullptr) : json{j, e.c});
      }
      matrix.push_back(row);
    }
    std::cout << json{{"sign", rep.sign()}, {"matrix", matrix}, {"determinant", io::to_json(d)}}.dump() << "\n";
  } else if (a.format == "latex") {
    std::cout << io::latex_matrix(rep) << " = " << io::latex(d) << "\n";
  } else {
    if (rep.sign() < 0) std::cout << "sign: -1\n";
    for (int i = 0; i < rep.size(); ++i) {
      for (std::size_t c = 0; c < rep.ends().size(); ++c) {
        const auto& e = rep.ends()[c];
        const int j = e.c + e.b - rep.starts()[i];
        std::string cell = j < 0 || j > e.c ? "0" : "e_" + std::to_string(j) + "^(" + std::to_string(e.c) + ")";
        std::cout << (c ? "  " : "") << cell;
      }
      std::cout << "\n";
    }
    std::cout << "det = " << d.to_string() << "\n";
  }
  return 0;
}

int cmd_paths(const Args& a) {
  const LatticeRep rep = get_rep(a);
  const auto systems = enumerate_path_systems(rep);
  const std::size_t limit = a.budget >= 0 ? static_cast<std::size_t>(a.budget) : systems.size();
  const std::size_t shown = std::min(limit, systems.size());
  if (a.format == "svg") {
    std::cout << io::svg(rep, systems.empty() ? nullptr : &systems.front());
    return 0;
  }
  if (a.format == "json") {
    json list = json::array();
    for (std::size_t s = 0; s < shown; ++s) {
      json paths = json::array();
      for (const auto& p : systems[s].paths) {
        std::string steps;
        for (bool up : p.steps) steps += up ? 'U' : 'D';
        paths.push_back({{"start", p.start}, {"end", p.end}, {"steps", steps}});
      }
      list.push_back({{"sigma", systems[s].sigma},
                      {"sign", systems[s].sign},
                      {"weight", io::to_json(systems[s].weight)},
                      {"paths", paths}});
    }
    std::cout << json{{"count", systems.size()}, {"systems", list}}.dump() << "\n";
    return 0;
  }
  reject_format(a, {"text"});
  std::cout << systems.size() << " nonintersecting path systems\n";
  for (std::size_t s = 0; s < shown; ++s) {
    const auto& sys = systems[s];
    std::cout << "\n#" << s + 1 << " sign " << (sys.sign > 0 ? "+" : "-") << " weight " << sys.weight.to_string()
              << "\n";
    for (const auto& p : sys.paths) {
      const auto& e = rep.ends()[p.end];
      std::cout << "  (" << rep.starts()[p.start] << ",0) -> (" << e.b << "," << e.c << ") ";
      for (bool up : p.steps) std::cout << (up ? 'U' : 'D');
      std::cout << "\n";
    }
  }
  if (shown < systems.size()) std::cout << "\n(" << systems.size() - shown << " more not listed)\n";
  return 0;
}

int cmd_quantum(const Args& a) {
  reject_format(a, {"text", "json", "latex"});
  const Permutation w = get_perm(a);
  if (a.sem) {
    emit_sem(a, sem_expand(schubert(w), std::max(1, w.size() - 1)), 'E');
    return 0;
  }
  const Polynomial q = quantum_schubert(w);
  if (a.format == "json")
    std::cout << io::to_json(q).dump() << "\n";
  else if (a.format == "latex")
    std::cout << io::latex(q) << "\n";
  else
    std::cout << q.to_string() << "\n";
  return 0;
}

int cmd_classify(const Args& a) {
  reject_format(a, {"text", "json"});
  const Permutation w = get_perm(a);
  json out;
  out["perm"] = io::to_json(w);
  out["code"] = code(w);
  out["length"] = length(w);
  std::vector<std::string> labels;
  for (auto l : classify(w)) labels.push_back(label_name(l));
  out["classes"] = labels;
  if (auto witness = thirteen_witness(w)) {
    out["forbidden_pattern"] = {{"pattern", io::to_json(witness->first)}, {"positions", witness->second}};
  } else {
    auto q = q_set(w);
    std::sort(q.begin(), q.end());
    auto f = factorize(w);
    out["q_set"] = q;
    out["u"] = io::to_json(f.u);
    out["v"] = io::to_json(f.v.base());
  }
  if (a.format == "json") {
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "permutation: " << w.to_string() << "\n";
  std::cout << "code:";
  for (int c : code(w)) std::cout << " " << c;
  std::cout << "\nlength: " << length(w) << "\nclasses:";
  for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? ", " : " ") << labels[i];
  std::cout << "\n";
  if (out.contains("forbidden_pattern")) {
    std::cout << "forbidden pattern " << perm_label(io::permutation_from_json(out["forbidden_pattern"]["pattern"]))
              << " at positions";
    for (int p : out["forbidden_pattern"]["positions"]) std::cout << " " << p;
    std::cout << "\n";
  } else {
    std::cout << "Q = {";
    bool first = true;
    for (int q : out["q_set"]) {
      std::cout << (first ? "" : ",") << q;
      first = false;
    }
    std::cout << "}\nu = " << perm_label(io::permutation_from_json(out["u"]))
              << "\nv = " << perm_label(io::permutation_from_json(out["v"])) << "\n";
  }
  return 0;
}

int cmd_verify(const Args& a) {
  reject_format(a, {"text", "json"});
  verify::Options opt;
  opt.n = a.n > 0 ? a.n : 6;
  opt.budget = a.budget;
  opt.seed = a.seed;
  std::vector<std::string> names = verify::check_names();
  if (!a.check.empty()) {
    if (std::find(names.begin(), names.end(), a.check) == names.end())
      throw UsageError("--check: unknown check '" + a.check + "'");
    names = {a.check};
  }
  json out = json::array();
  int failed = 0;
  for (const auto& name : names) {
    const auto r = verify::run_check(name, opt);
    if (!r.passed()) ++failed;
    if (a.format == "json") {
      out.push_back({{"check", r.name},
                     {"passed", r.passed()},
                     {"checked", r.checked},
                     {"failed", r.failed},
                     {"seconds", r.seconds},
                     {"first_failure", r.first_failure}});
      continue;
    }
    std::cout << (r.passed() ? "pass " : "FAIL ") << r.name << ": " << r.checked - r.failed << "/" << r.checked
              << " (" << r.summary << ")";
    if (!r.first_failure.empty()) std::cout << "; first failure: " << r.first_failure;
    std::cout << "\n";
  }
  if (a.format == "json") std::cout << out.dump() << "\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert polynomials, SEM expansions and lattice path determinants"};
  app.require_subcommand(1);
  Args a;
  const std::vector<std::string> formats{"text", "json", "latex", "svg"};

  auto add_common = [&](CLI::App* sub, bool perm) {
    if (perm) sub->add_option("--perm", a.perm, "permutation in one-line notation, e.g. \"4 1 3 2\" or 4132");
    sub->add_option("--format", a.format, "output format")->check(CLI::IsMember(formats));
  };

  auto* schubert_cmd = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  add_common(schubert_cmd, true);
  schubert_cmd->add_flag("--pipedreams", a.pipedreams, "list the reduced pipe dreams instead");

  auto* sem_cmd = app.add_subcommand("sem", "expansion in standard elementary monomials");
  add_common(sem_cmd, true);
  sem_cmd->add_option("--n", a.n, "index length bound m (default n-1)");
  sem_cmd->add_option("--poly", a.poly_file, "expand a JSON polynomial from FILE (- for stdin)");

  auto* expand_cmd = app.add_subcommand("expand-schubert", "expand x^code(w), or a JSON polynomial, in Schubert polynomials");
  add_common(expand_cmd, true);
  expand_cmd->add_option("--n", a.n, "expand over S_n");
  expand_cmd->add_option("--poly", a.poly_file, "JSON polynomial from FILE (- for stdin)");

  auto* rep_cmd = app.add_subcommand("rep", "lattice path representation");
  add_common(rep_cmd, true);
  rep_cmd->add_option("--kind", a.kind, "proper | compact | dominant | 213 | 321");

  auto* det_cmd = app.add_subcommand("det", "e-matrix of a representation and its determinant");
  add_common(det_cmd, true);
  det_cmd->add_option("--rep", a.rep_file, "JSON representation from FILE (- for stdin)");

  auto* paths_cmd = app.add_subcommand("paths", "nonintersecting path systems of a representation");
  add_common(paths_cmd, true);
  paths_cmd->add_option("--rep", a.rep_file, "JSON representation from FILE (- for stdin)");
  paths_cmd->add_option("--budget", a.budget, "list at most this many systems");

  auto* quantum_cmd = app.add_subcommand("quantum", "quantum Schubert polynomial");
  add_common(quantum_cmd, true);
  quantum_cmd->add_flag("--sem", a.sem, "print the E-expansion instead of the polynomial");

  auto* classify_cmd = app.add_subcommand("classify", "pattern classes, Q-set and factorization");
  add_common(classify_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "run consistency checks");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--n", a.n, "permutation size for the sweeps (default 6)");
  verify_cmd->add_option("--check", a.check, "run a single check");
  verify_cmd->add_option("--budget", a.budget, "samples or trials for the randomized checks");
  verify_cmd->add_option("--seed", a.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (schubert_cmd->parsed()) return cmd_schubert(a);
    if (sem_cmd->parsed()) return cmd_sem(a);
    if (expand_cmd->parsed()) return cmd_expand_schubert(a);
    if (rep_cmd->parsed()) return cmd_rep(a);
    if (det_cmd->parsed()) return cmd_det(a);
    if (paths_cmd->parsed()) return cmd_paths(a);
    if (quantum_cmd->parsed()) return cmd_quantum(a);
    if (classify_cmd->parsed()) return cmd_classify(a);
    if (verify_cmd->parsed()) return cmd_verify(a);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PatternViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "pattern";
    for (int v : e.pattern()) std::cerr << " " << v;
    std::cerr << " occurs at positions";
    for (int p : e.positions()) std::cerr << " " << p;
    std::cerr << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
