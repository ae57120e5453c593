#include "liegram/admissibility.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "liegram/search.hpp"

namespace liegram {

std::string status_str(verdict_status s) {
  switch (s) {
    case verdict_status::exists: return "exists";
    case verdict_status::not_exists: return "not_exists";
    case verdict_status::trivially_admissible: return "trivial";
    case verdict_status::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

constexpr uint64_t default_search_cap = 1ull << 16;

uint64_t effective_search_budget(const decide_options& opt, int m) {
  if (opt.search_budget != 0) return opt.search_budget;
  if (m <= 22) return 0; // full enumeration
  return default_search_cap;
}

// det mod p of the Gram matrix at a 0/1 (or mod-p) point
uint64_t gram_det_mod_p(const gram_matrix& g, const std::vector<uint32_t>& x, uint64_t p) {
  const int n = g.n();
  std::vector<uint64_t> a(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = g.coeff(i, j);
      if (c == 0) continue;
      int64_t v = static_cast<int64_t>(c) * x[g.var(i, j)] % static_cast<int64_t>(p);
      if (v < 0) v += p;
      a[static_cast<size_t>(i) * n + j] = static_cast<uint64_t>(v);
    }
  return det_mod_p(std::move(a), n, p);
}

bigint gram_det_z(const gram_matrix& g, const std::vector<uint32_t>& x) {
  const int n = g.n();
  std::vector<bigint> a(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = g.coeff(i, j);
      if (c == 0) continue;
      a[static_cast<size_t>(i) * n + j] = bigint(c) * x[g.var(i, j)];
    }
  return bareiss_det(std::move(a), n);
}

} // namespace

k2_verdict k2_decide(const gram_matrix& g, uint32_t p, const decide_options& opt) {
  k2_verdict v;
  v.prime = p;
  const int m = g.m();

  // Phase 1: {0,1} witness search in the canonical order.
  auto found = find_first_point(m, effective_search_budget(opt, m), opt.threads,
                                [&](const std::vector<uint32_t>& x) {
                                  return gram_det_mod_p(g, x, p) != 0;
                                });
  if (found.index) {
    v.status = verdict_status::exists;
    v.witness = found.point;
    v.witness_index = found.index;
    v.method = "witness-search";
    return v;
  }

  // Phase 2: symbolic Pfaffian mod p.
  v.method = "symbolic-pfaffian";
  if (g.n() > opt.symbolic_n_cap) {
    v.status = verdict_status::unknown;
    v.method = "unknown: no witness within budget and the matrix is too large "
               "for Pfaffian expansion; deciding it needs Groebner-basis methods";
    return v;
  }
  sparse_poly pf;
  try {
    pfaffian_options popt;
    popt.node_budget = opt.pf_node_budget;
    pf = pfaffian(skew_poly_matrix::from_gram(g, domain{p}), popt);
  } catch (const budget_exceeded&) {
    v.status = verdict_status::unknown;
    v.method = "unknown: Pfaffian expansion exceeded its node budget";
    return v;
  }
  if (pf.is_zero()) {
    v.status = verdict_status::not_exists;
    return v;
  }

  // Nonzero over F_p, hence nonzero on a dense open set over the algebraic
  // closure: the verdict is Exists.  Try to pin a rational witness anyway.
  v.status = verdict_status::exists;
  std::mt19937_64 rng(0xC0FFEEull + p);
  std::uniform_int_distribution<uint32_t> coord(0, p - 1);
  std::vector<uint32_t> x(m);
  for (int tries = 0; tries < 100000; ++tries) {
    for (auto& c : x) c = coord(rng);
    if (gram_det_mod_p(g, x, p) != 0) {
      v.witness = x;
      break;
    }
  }
  return v;
}

unimodular_verdict unimodular_decide(const gram_matrix& g, const decide_options& opt) {
  unimodular_verdict v;
  const int m = g.m();

  // |Pf(point)| = 1 iff det(point) = 1; filter mod two word primes, then
  // confirm exactly.
  constexpr uint64_t p1 = 2147483629ull, p2 = 2147483587ull;
  auto is_unimodular_at = [&](const std::vector<uint32_t>& x) {
    if (gram_det_mod_p(g, x, p1) != 1) return false;
    if (gram_det_mod_p(g, x, p2) != 1) return false;
    return gram_det_z(g, x) == 1;
  };

  const uint64_t budget = effective_search_budget(opt, m);
  const uint64_t quick = std::min<uint64_t>(budget == 0 ? 10000 : budget, 10000);

  auto found = find_first_point(m, quick, opt.threads, is_unimodular_at);
  if (found.index) {
    v.status = verdict_status::exists;
    v.witness = found.point;
    v.witness_index = found.index;
    return v;
  }

  // Content certificate from the integral Pfaffian.
  std::optional<bigint> content;
  if (g.n() <= opt.symbolic_n_cap) {
    try {
      pfaffian_options popt;
      popt.node_budget = opt.pf_node_budget;
      sparse_poly pf = pfaffian(skew_poly_matrix::from_gram(g, domain{}), popt);
      content = pf.content();
    } catch (const budget_exceeded&) {
      content.reset();
    }
  }
  if (content && *content != 1) {
    // every value of Pf is divisible by the content, so no point reaches 1
    v.status = verdict_status::not_exists;
    v.certificate = *content;
    return v;
  }

  if (!found.exhausted) {
    found = find_first_point(m, budget, opt.threads, is_unimodular_at);
    if (found.index) {
      v.status = verdict_status::exists;
      v.witness = found.point;
      v.witness_index = found.index;
      return v;
    }
  }
  v.status = verdict_status::unknown;
  return v;
}

namespace {

check_report run_check(const root_system& rs, std::optional<long> prime,
                       const decide_options& opt) {
  check_report rep;
  rep.type = rs.type();
  rep.prime = prime;
  structure_constants sc(rs);

  for (const auto& d : enumerate_diagrams(rs)) {
    check_row row;
    row.diagram = d;
    row.b_d = b_invariant(rs, d);
    graded_pieces g = compute_grading(rs, d);
    row.dim_g1 = static_cast<int>(g.phi(1).size());
    row.dim_g2 = static_cast<int>(g.phi(2).size());

    if (prime) {
      row.expected = lookup_membership(rs, d, *prime).in_delta_bullet;
    } else {
      row.expected = lookup_membership(rs, d, 0).special;
    }

    if (row.dim_g1 == 0) {
      row.status = verdict_status::trivially_admissible;
      row.agrees = row.expected == true;
    } else {
      gram_matrix gm = build_gram(rs, sc, g);
      if (prime) {
        k2_verdict kv = k2_decide(gm, static_cast<uint32_t>(*prime), opt);
        row.status = kv.status;
        row.witness = kv.witness;
        if (kv.status == verdict_status::unknown) row.note = kv.method;
        if (kv.status == verdict_status::exists && kv.witness &&
            gram_det_mod_p(gm, *kv.witness, static_cast<uint64_t>(*prime)) == 0)
          throw std::logic_error("K2 witness failed re-verification");
      } else {
        unimodular_verdict uv = unimodular_decide(gm, opt);
        row.status = uv.status;
        row.witness = uv.witness;
        row.certificate = uv.certificate;
        if (uv.status == verdict_status::unknown)
          row.note = "unknown: no unimodular point found and no content certificate";
        if (uv.status == verdict_status::exists && uv.witness &&
            gram_det_z(gm, *uv.witness) != 1)
          throw std::logic_error("unimodular witness failed re-verification");
      }
      if (row.status == verdict_status::unknown) {
        row.agrees = std::nullopt;
      } else {
        bool admissible = row.status != verdict_status::not_exists;
        row.agrees = admissible == row.expected;
      }
    }

    if (!row.agrees.has_value()) ++rep.unknowns;
    else if (!*row.agrees) ++rep.disagreements;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace

check_report check_conjecture_k2(const root_system& rs, uint32_t p, const decide_options& opt) {
  return run_check(rs, static_cast<long>(p), opt);
}

check_report check_conjecture_special(const root_system& rs, const decide_options& opt) {
  return run_check(rs, std::nullopt, opt);
}

} // namespace liegram
