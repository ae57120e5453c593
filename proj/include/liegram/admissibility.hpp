#ifndef LIEGRAM_ADMISSIBILITY_HPP
#define LIEGRAM_ADMISSIBILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "liegram/gram.hpp"
#include "liegram/pfaffian.hpp"
#include "liegram/wdd.hpp"

namespace liegram {

enum class verdict_status { exists, not_exists, trivially_admissible, unknown };

std::string status_str(verdict_status s);

struct decide_options {
  // Witness search: number of {0,1} points examined before giving up.
  // 0 means the default policy: the full cube for m <= 22 variables, a
  // 65536-point cap beyond that (larger cubes need an explicit budget).
  uint64_t search_budget = 0;
  // Symbolic Pfaffian: recursion-node budget (0 = unlimited) and the
  // largest matrix dimension the expansion is attempted on.
  uint64_t pf_node_budget = 0;
  int symbolic_n_cap = 24;
  int threads = 1;
};

struct k2_verdict {
  verdict_status status = verdict_status::unknown;
  uint32_t prime = 0;
  std::optional<std::vector<uint32_t>> witness;  // values of the x_l, when known
  std::optional<uint64_t> witness_index;         // position in the search order
  std::string method;                            // "witness-search" or "symbolic-pfaffian"
};

struct unimodular_verdict {
  verdict_status status = verdict_status::unknown;
  std::optional<std::vector<uint32_t>> witness;  // {0,1} point with |Pf| = 1
  std::optional<uint64_t> witness_index;
  std::optional<bigint> certificate;             // content(Pf) > 1 for NotExists
};

// Is there lambda over the algebraic closure of F_p with det G_lambda != 0?
// Fast path: scan {0,1}^m in the canonical order for a point with
// det != 0 mod p.  Decisive NotExists comes only from the symbolic Pfaffian
// mod p being the zero polynomial.
k2_verdict k2_decide(const gram_matrix& g, uint32_t p, const decide_options& opt = {});

// Is there an integral lambda with Gram determinant +-1?
unimodular_verdict unimodular_decide(const gram_matrix& g, const decide_options& opt = {});

struct check_row {
  weighted_diagram diagram;
  int b_d = 0;
  int dim_g1 = 0;
  int dim_g2 = 0;
  verdict_status status = verdict_status::unknown;
  std::optional<std::vector<uint32_t>> witness;
  std::optional<bigint> certificate;
  std::string note;               // set on unknown verdicts (why undecided)
  bool expected = false;          // table prediction
  std::optional<bool> agrees;     // nullopt when the verdict is unknown
};

struct check_report {
  cartan_type type;
  std::optional<long> prime;
  std::vector<check_row> rows;
  int disagreements = 0;
  int unknowns = 0;
};

// Conjectural bullet-set characterisation: for every diagram, compare the
// K2 decision against the table membership at p.
check_report check_conjecture_k2(const root_system& rs, uint32_t p,
                                 const decide_options& opt = {});

// Conjectural specialness characterisation: compare integral unimodularity
// against the specialness flag.
check_report check_conjecture_special(const root_system& rs, const decide_options& opt = {});

} // namespace liegram

#endif
