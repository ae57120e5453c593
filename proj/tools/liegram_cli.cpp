// Command-line front end: root systems, Chevalley brackets, weighted Dynkin
// diagrams, gradings, symbolic Gram matrices, Pfaffians, and the
// admissibility / specialness check pipeline.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liegram/admissibility.hpp"
#include "liegram/chevalley.hpp"
#include "liegram/gram.hpp"
#include "liegram/grading.hpp"
#include "liegram/pfaffian.hpp"
#include "liegram/rootsys.hpp"
#include "liegram/wdd.hpp"

using json = nlohmann::ordered_json;
using namespace liegram;

namespace {

constexpr const char* k_version = "liegram 1.0.0";

struct cli_settings {
  std::string data_dir;
  uint64_t budget = 0;
  uint64_t pf_budget = 0;
  int pf_cap = 24;
  int threads = 1;
};

decide_options make_options(const cli_settings& s) {
  decide_options opt;
  opt.search_budget = s.budget;
  opt.pf_node_budget = s.pf_budget;
  opt.symbolic_n_cap = s.pf_cap;
  opt.threads = s.threads;
  return opt;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(long p) {
  if (!is_prime(p)) throw config_error("p = " + std::to_string(p) + " is not a prime");
}

weighted_diagram need_diagram(const root_system& rs, const std::string& label) {
  auto d = find_diagram(rs, label);
  if (!d)
    throw config_error("no diagram labelled '" + label + "' in type " + rs.type().str() +
                       " (see `wdd " + rs.type().str() + "`)");
  return *d;
}

json witness_json(const std::vector<uint32_t>& w) {
  json a = json::array();
  for (auto v : w) a.push_back(v);
  return a;
}

json row_json(const check_row& row) {
  json r;
  r["label"] = row.diagram.label;
  json w = json::array();
  for (int v : row.diagram.weights) w.push_back(v);
  r["weights"] = w;
  r["dim_g1"] = row.dim_g1;
  r["dim_g2"] = row.dim_g2;
  r["verdict"] = status_str(row.status);
  if (row.witness) r["witness"] = witness_json(*row.witness);
  if (row.certificate) r["certificate"] = row.certificate->str();
  if (!row.note.empty()) r["note"] = row.note;
  r["expected"] = row.expected;
  if (row.agrees) r["agrees"] = *row.agrees;
  else r["agrees"] = nullptr;
  return r;
}

json report_json(const check_report& rep) {
  json out;
  out["type"] = rep.type.str();
  if (rep.prime) out["prime"] = *rep.prime;
  json rows = json::array();
  for (const auto& row : rep.rows) rows.push_back(row_json(row));
  out["rows"] = rows;
  return out;
}

void print_report_text(const check_report& rep, std::ostream& os) {
  os << "type " << rep.type.str();
  if (rep.prime) os << ", p = " << *rep.prime;
  else os << ", over Z (specialness)";
  os << "\n";
  os << std::left << std::setw(16) << "label" << std::setw(18) << "weights" << std::setw(5)
     << "g(1)" << std::setw(5) << "g(2)" << std::setw(12) << "verdict" << std::setw(9)
     << "expected" << std::setw(7) << "agrees" << "detail\n";
  for (const auto& row : rep.rows) {
    std::string agrees = row.agrees ? (*row.agrees ? "yes" : "NO") : "?";
    std::string detail;
    if (row.witness) {
      detail = "witness ";
      for (auto v : *row.witness) detail += std::to_string(v);
    } else if (row.certificate) {
      detail = "content " + row.certificate->str();
    } else if (!row.note.empty()) {
      detail = row.note;
    }
    os << std::left << std::setw(16) << row.diagram.label << std::setw(18)
       << row.diagram.weights_str() << std::setw(5) << row.dim_g1 << std::setw(5) << row.dim_g2
       << std::setw(12) << status_str(row.status) << std::setw(9)
       << (row.expected ? "yes" : "no") << std::setw(7) << agrees << detail << "\n";
  }
  os << rep.rows.size() << " diagrams, " << rep.disagreements << " disagreements, "
     << rep.unknowns << " unknown\n";
}

int finish_report(const check_report& rep, bool as_json) {
  if (as_json)
    std::cout << report_json(rep).dump(2) << "\n";
  else
    print_report_text(rep, std::cout);
  return rep.disagreements > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gram-matrix admissibility toolkit for root-system gradings"};

  cli_settings settings;
  app.add_option("--data-dir", settings.data_dir,
                 "directory overriding the embedded diagram tables (also: LIEGRAM_DATA_DIR)");
  app.add_option("--budget", settings.budget, "witness-search budget in points (0 = full cube)");
  app.add_option("--pf-budget", settings.pf_budget,
                 "Pfaffian expansion node budget (0 = unlimited)");
  app.add_option("--pf-cap", settings.pf_cap,
                 "largest matrix dimension for symbolic Pfaffian certificates");
  app.add_option("--threads", settings.threads, "parallel workers for witness searches")
      ->check(CLI::Range(1, 256));
  {
    std::ostringstream os;
    os << k_version;
    for (const auto& [name, sum] : table_checksums())
      os << "\n  table " << name << " fnv1a=" << std::hex << std::setw(16) << std::setfill('0')
         << sum << std::dec;
    app.set_version_flag("--version", os.str());
  }
  app.fallthrough(); // allow the global flags after a subcommand
  app.require_subcommand(1);

  std::string type_str, label, root_a, root_b, format = "text";
  bool as_json = false, selfcheck = false, stats = false, all_types = false;
  uint32_t mod_p = 0;
  long prime_opt = 0;
  std::vector<long> primes;
  std::vector<std::string> type_list;

  auto* roots_cmd = app.add_subcommand("roots", "ordered positive roots of a type");
  roots_cmd->add_option("type", type_str)->required();
  roots_cmd->add_flag("--json", as_json);

  auto* bracket_cmd = app.add_subcommand("bracket", "Chevalley bracket of two positive roots");
  bracket_cmd->add_option("type", type_str)->required();
  bracket_cmd->add_option("a", root_a);
  bracket_cmd->add_option("b", root_b);
  bracket_cmd->add_flag("--selfcheck", selfcheck, "run the antisymmetry/string/Jacobi suite");

  auto* wdd_cmd = app.add_subcommand("wdd", "weighted Dynkin diagrams with metadata");
  wdd_cmd->add_option("type", type_str)->required();
  wdd_cmd->add_option("--label", label);
  wdd_cmd->add_flag("--json", as_json);

  auto* grading_cmd = app.add_subcommand("grading", "graded pieces for one diagram");
  grading_cmd->add_option("type", type_str)->required();
  grading_cmd->add_option("--label", label)->required();
  grading_cmd->add_flag("--json", as_json);

  auto* gram_cmd = app.add_subcommand("gram", "symbolic Gram matrix of the alternating form");
  gram_cmd->add_option("type", type_str)->required();
  gram_cmd->add_option("--label", label)->required();
  gram_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

  auto* pf_cmd = app.add_subcommand("pfaffian", "Pfaffian of the Gram matrix");
  pf_cmd->add_option("type", type_str)->required();
  pf_cmd->add_option("--label", label)->required();
  pf_cmd->add_option("--mod", mod_p, "reduce mod a prime");
  pf_cmd->add_flag("--stats", stats, "print monomial count, content, degree");

  auto* check_cmd = app.add_subcommand("check", "verify a conjectural characterisation");
  auto* k2_cmd = check_cmd->add_subcommand("k2", "non-degeneracy over the closure of F_p");
  k2_cmd->add_option("--type", type_str)->required();
  k2_cmd->add_option("--prime", prime_opt)->required();
  k2_cmd->add_flag("--json", as_json);
  auto* special_cmd = check_cmd->add_subcommand("special", "integral unimodularity");
  special_cmd->add_option("--type", type_str)->required();
  special_cmd->add_flag("--json", as_json);
  check_cmd->require_subcommand(1);

  auto* report_cmd = app.add_subcommand("report", "k2 + specialness over several types/primes");
  report_cmd->add_option("--types", type_list, "comma-separated types")->delimiter(',');
  report_cmd->add_flag("--all", all_types, "every supported type (slow for E7/E8)");
  report_cmd->add_option("--primes", primes, "primes for the k2 checks")->delimiter(',');
  report_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!settings.data_dir.empty()) setenv("LIEGRAM_DATA_DIR", settings.data_dir.c_str(), 1);
    decide_options opt = make_options(settings);

    if (*roots_cmd) {
      root_system rs(parse_cartan_type(type_str));
      if (as_json) {
        json out;
        out["type"] = rs.type().str();
        json arr = json::array();
        for (const auto& r : rs.positive_roots()) arr.push_back(r.digits());
        out["positive_roots"] = arr;
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& r : rs.positive_roots()) std::cout << r.digits() << "\n";
      }
      return 0;
    }

    if (*bracket_cmd) {
      root_system rs(parse_cartan_type(type_str));
      if (selfcheck) {
        structure_constants sc(rs);
        std::string msg;
        if (!sc.check_antisymmetry_and_strings(&msg)) {
          std::cerr << "selfcheck failed: " << msg << "\n";
          return 1;
        }
        uint64_t jacobi_limit = rs.num_positive() > 60 ? 20000 : 0;
        if (!sc.check_jacobi(jacobi_limit, 0x5eed, &msg)) {
          std::cerr << "selfcheck failed: " << msg << "\n";
          return 1;
        }
        std::cout << "selfcheck ok: antisymmetry, string bounds, "
                  << (jacobi_limit ? "randomized Jacobi" : "exhaustive Jacobi") << "\n";
        return 0;
      }
      if (root_a.empty() || root_b.empty())
        throw config_error("bracket needs two positive roots (digit strings)");
      int a = rs.parse_root(root_a), b = rs.parse_root(root_b);
      if (a < 0 || b < 0) throw config_error("not a positive root of " + rs.type().str());
      structure_constants sc(rs);
      auto br = sc.bracket(a, b);
      if (!br) {
        std::cout << "[e_" << root_a << ", e_" << root_b << "] = 0\n";
      } else {
        std::cout << "[e_" << root_a << ", e_" << root_b << "] = " << br->second << "*e_"
                  << rs.positive_root(br->first).digits() << "\n";
      }
      return 0;
    }

    if (*wdd_cmd) {
      root_system rs(parse_cartan_type(type_str));
      auto all = enumerate_diagrams(rs);
      if (!label.empty()) label = need_diagram(rs, label).label; // canonical form
      json rows = json::array();
      bool matched = false;
      for (const auto& d : all) {
        if (!label.empty() && d.label != label) continue;
        matched = true;
        graded_pieces g = compute_grading(rs, d);
        if (as_json) {
          json r;
          r["label"] = d.label;
          json w = json::array();
          for (int v : d.weights) w.push_back(v);
          r["weights"] = w;
          r["b_d"] = b_invariant(rs, d);
          r["dim_g1"] = static_cast<int>(g.phi(1).size());
          r["dim_g2"] = static_cast<int>(g.phi(2).size());
          if (d.special) r["special"] = *d.special;
          else r["special"] = nullptr;
          r["condition"] = condition_str(d.condition);
          rows.push_back(r);
        } else {
          std::string special = d.special ? (*d.special ? "yes" : "no") : "?";
          std::cout << std::left << std::setw(16) << d.label << std::setw(18) << d.weights_str()
                    << std::setw(5) << b_invariant(rs, d) << std::setw(5) << g.phi(1).size()
                    << std::setw(5) << g.phi(2).size() << std::setw(9) << special
                    << condition_str(d.condition) << "\n";
        }
      }
      if (!label.empty() && !matched)
        throw config_error("no diagram labelled '" + label + "' in type " + rs.type().str());
      if (as_json) {
        json out;
        out["type"] = rs.type().str();
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
      }
      return 0;
    }

    if (*grading_cmd) {
      root_system rs(parse_cartan_type(type_str));
      weighted_diagram d = need_diagram(rs, label);
      graded_pieces g = compute_grading(rs, d);
      if (as_json) {
        json out;
        out["type"] = rs.type().str();
        out["label"] = d.label;
        json pieces = json::object();
        for (const auto& [w, roots] : g.phi_pos) {
          json arr = json::array();
          for (int r : roots) arr.push_back(rs.positive_root(r).digits());
          pieces[std::to_string(w)] = arr;
        }
        out["phi"] = pieces;
        json dims = json::object();
        for (const auto& [w, dim] : g.dim_g) dims[std::to_string(w)] = dim;
        out["dim_g"] = dims;
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& [w, roots] : g.phi_pos) {
          std::cout << "Phi_" << w << " (" << roots.size() << "):";
          for (int r : roots) std::cout << " " << rs.positive_root(r).digits();
          std::cout << "\n";
        }
        for (const auto& [w, dim] : g.dim_g)
          std::cout << "dim g(" << w << ") = " << dim << "\n";
      }
      return 0;
    }

    if (*gram_cmd) {
      root_system rs(parse_cartan_type(type_str));
      weighted_diagram d = need_diagram(rs, label);
      structure_constants sc(rs);
      gram_matrix gm = build_gram(rs, sc, compute_grading(rs, d));
      if (format == "json") {
        json out;
        out["type"] = rs.type().str();
        out["label"] = d.label;
        out["n"] = gm.n();
        out["m"] = gm.m();
        json rb = json::array(), vb = json::array();
        for (int r : gm.row_basis()) rb.push_back(rs.positive_root(r).digits());
        for (int r : gm.var_basis()) vb.push_back(rs.positive_root(r).digits());
        out["row_basis"] = rb;
        out["var_basis"] = vb;
        json rows = json::array();
        for (int i = 0; i < gm.n(); ++i) {
          json row = json::array();
          for (int j = 0; j < gm.n(); ++j) row.push_back(gm.entry(i, j).str());
          rows.push_back(row);
        }
        out["entries"] = rows;
        std::cout << out.dump(2) << "\n";
      } else if (format == "latex") {
        std::cout << "\\left(\\begin{array}{*{" << gm.n() << "}r}\n";
        for (int i = 0; i < gm.n(); ++i) {
          for (int j = 0; j < gm.n(); ++j) {
            int c = gm.coeff(i, j);
            std::string cell = "0";
            if (c != 0) {
              std::string coef = c == 1 ? "" : c == -1 ? "-" : std::to_string(c);
              cell = coef + "x_{" + std::to_string(gm.var(i, j) + 1) + "}";
            }
            std::cout << cell << (j + 1 < gm.n() ? " & " : "");
          }
          std::cout << (i + 1 < gm.n() ? " \\\\" : "") << "\n";
        }
        std::cout << "\\end{array}\\right)\n";
      } else {
        std::cout << "rows (Phi_1):";
        for (int r : gm.row_basis()) std::cout << " " << rs.positive_root(r).digits();
        std::cout << "\nvariables (Phi_2):";
        for (int r : gm.var_basis()) std::cout << " " << rs.positive_root(r).digits();
        std::cout << "\n";
        for (int i = 0; i < gm.n(); ++i) {
          for (int j = 0; j < gm.n(); ++j) std::cout << std::setw(8) << gm.entry(i, j).str();
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*pf_cmd) {
      root_system rs(parse_cartan_type(type_str));
      weighted_diagram d = need_diagram(rs, label);
      structure_constants sc(rs);
      gram_matrix gm = build_gram(rs, sc, compute_grading(rs, d));
      if (mod_p) require_prime(static_cast<long>(mod_p));
      domain dom{mod_p};
      pfaffian_options popt;
      popt.node_budget = settings.pf_budget;
      sparse_poly pf = pfaffian(skew_poly_matrix::from_gram(gm, dom), popt);
      std::cout << "Pf = " << pf.str() << "\n";
      if (stats) {
        std::cout << "monomials = " << pf.monomial_count() << "\n";
        if (!dom.is_modular()) std::cout << "content = " << pf.content().str() << "\n";
        std::cout << "degree = " << pf.total_degree() << "\n";
      }
      return 0;
    }

    if (*k2_cmd) {
      require_prime(prime_opt);
      root_system rs(parse_cartan_type(type_str));
      auto rep = check_conjecture_k2(rs, static_cast<uint32_t>(prime_opt), opt);
      return finish_report(rep, as_json);
    }
    if (*special_cmd) {
      root_system rs(parse_cartan_type(type_str));
      auto rep = check_conjecture_special(rs, opt);
      return finish_report(rep, as_json);
    }

    if (*report_cmd) {
      if (all_types) {
        type_list.clear();
        for (int n = 1; n <= 15; ++n) type_list.push_back("A" + std::to_string(n));
        for (int n = 2; n <= 8; ++n) type_list.push_back("B" + std::to_string(n));
        for (int n = 2; n <= 8; ++n) type_list.push_back("C" + std::to_string(n));
        for (int n = 4; n <= 8; ++n) type_list.push_back("D" + std::to_string(n));
        type_list.insert(type_list.end(), {"E6", "E7", "E8", "F4", "G2"});
      }
      if (type_list.empty()) throw config_error("report needs --types or --all");
      for (long p : primes) require_prime(p);
      json out = json::array();
      int exit_code = 0;
      for (const auto& t : type_list) {
        root_system rs(parse_cartan_type(t));
        for (long p : primes) {
          try {
            auto rep = check_conjecture_k2(rs, static_cast<uint32_t>(p), opt);
            if (rep.disagreements > 0) exit_code = 1;
            if (as_json) out.push_back(report_json(rep));
            else print_report_text(rep, std::cout);
          } catch (const data_error& e) {
            if (!as_json) std::cout << "type " << t << ": " << e.what() << " (skipped)\n";
          }
        }
        try {
          auto rep = check_conjecture_special(rs, opt);
          if (rep.disagreements > 0) exit_code = 1;
          if (as_json) out.push_back(report_json(rep));
          else print_report_text(rep, std::cout);
        } catch (const data_error& e) {
          if (!as_json) std::cout << "type " << t << ": " << e.what() << " (skipped)\n";
        }
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return exit_code;
    }
  } catch (const data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
