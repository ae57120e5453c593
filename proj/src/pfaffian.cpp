#include "liegram/pfaffian.hpp"

#include <cassert>
#include <unordered_map>

namespace liegram {

skew_poly_matrix::skew_poly_matrix(int n, int nvars, domain dom, std::vector<sparse_poly> entries)
    : n_(n), nvars_(nvars), dom_(dom), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != n * n)
    throw domain_error("entry count does not match dimension");
  for (int i = 0; i < n; ++i) {
    if (!entries_[static_cast<size_t>(i) * n + i].is_zero())
      throw domain_error("nonzero diagonal in antisymmetric matrix");
    for (int j = i + 1; j < n; ++j)
      if (!(entries_[static_cast<size_t>(i) * n + j] == -entries_[static_cast<size_t>(j) * n + i]))
        throw domain_error("matrix is not antisymmetric");
  }
}

skew_poly_matrix skew_poly_matrix::from_gram(const gram_matrix& g, domain dom) {
  std::vector<sparse_poly> e;
  e.reserve(static_cast<size_t>(g.n()) * g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) e.push_back(g.entry(i, j, dom));
  return skew_poly_matrix(g.n(), g.m(), dom, std::move(e));
}

namespace {

struct pf_state {
  const skew_poly_matrix* m;
  pfaffian_options opt;
  uint64_t nodes = 0;
  size_t memo_terms = 0;
  std::unordered_map<uint32_t, sparse_poly> memo;

  sparse_poly rec(uint32_t mask) {
    if (mask == 0) return sparse_poly::constant(m->nvars(), m->dom(), 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    if (opt.node_budget && ++nodes > opt.node_budget)
      throw budget_exceeded("pfaffian expansion exceeded its node budget");

    std::vector<int> idx;
    for (int i = 0; i < m->n(); ++i)
      if (mask & (1u << i)) idx.push_back(i);

    // pivot: fewest nonzero entries within the submatrix, ties to lowest index
    int pivot = -1, best = -1;
    for (int i : idx) {
      int nz = 0;
      for (int j : idx)
        if (j != i && !m->entry(i, j).is_zero()) ++nz;
      if (best < 0 || nz < best) { best = nz; pivot = i; }
    }
    if (best == 0) return sparse_poly(m->nvars(), m->dom()); // isolated row: Pf = 0

    // position of the pivot among the active indices decides the leading sign
    int ppos = 0;
    while (idx[ppos] != pivot) ++ppos;

    sparse_poly acc(m->nvars(), m->dom());
    int upos = 0;
    for (int t : idx) {
      if (t == pivot) continue;
      ++upos; // 1-based position within idx \ {pivot}
      const sparse_poly& e = m->entry(pivot, t);
      if (e.is_zero()) continue;
      sparse_poly sub = rec(mask & ~(1u << pivot) & ~(1u << t));
      if (sub.is_zero()) continue;
      int sign = ((ppos % 2 == 0 ? 1 : -1)) * (upos % 2 == 1 ? 1 : -1);
      if (e.monomial_count() == 1) {
        const uint8_t* ex = e.exponents(0);
        int var = -1, exp = 0;
        for (int v = 0; v < m->nvars(); ++v)
          if (ex[v]) { var = v; exp = ex[v]; break; }
        bigint c = e.coefficient(0) * sign;
        acc.add_scaled(c, var, exp, sub);
      } else {
        sparse_poly prod = e * sub;
        if (sign < 0) prod = -prod;
        acc = acc + prod;
      }
    }
    if (memo_terms + acc.monomial_count() <= opt.memo_term_cap) {
      memo_terms += acc.monomial_count();
      memo.emplace(mask, acc);
    }
    return acc;
  }
};

} // namespace

sparse_poly pfaffian(const skew_poly_matrix& m, const pfaffian_options& opt) {
  if (m.n() % 2 == 1) return sparse_poly(m.nvars(), m.dom());
  if (m.n() == 0) return sparse_poly::constant(m.nvars(), m.dom(), 1);
  if (m.n() > 31) throw domain_error("pfaffian expansion supports n <= 31");
  pf_state st;
  st.m = &m;
  st.opt = opt;
  uint32_t mask = m.n() == 31 ? 0x7fffffffu : ((1u << m.n()) - 1);
  return st.rec(mask);
}

sparse_poly det_via_pfaffian(const skew_poly_matrix& m, const pfaffian_options& opt) {
  if (m.n() % 2 == 1) return sparse_poly(m.nvars(), m.dom());
  sparse_poly pf = pfaffian(m, opt);
  return pf * pf;
}

int rank_at(const skew_poly_matrix& m, const std::vector<bigint>& point, uint32_t p) {
  const int n = m.n();
  std::vector<uint64_t> a(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bigint v = m.entry(i, j).evaluate(point) % p;
      if (v < 0) v += p;
      a[static_cast<size_t>(i) * n + j] = static_cast<uint64_t>(v);
    }
  return rank_mod_p(std::move(a), n, p);
}

bigint bareiss_det(std::vector<bigint> m, int n) {
  if (n == 0) return 1;
  auto at = [&](int i, int j) -> bigint& { return m[static_cast<size_t>(i) * n + j]; };
  bigint prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (at(r, k) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        bigint num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        assert(num % prev == 0);
        at(i, j) = num / prev;
      }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
} // namespace

int rank_mod_p(std::vector<uint64_t> m, int n, uint64_t p) {
  auto at = [&](int i, int j) -> uint64_t& { return m[static_cast<size_t>(i) * n + j]; };
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (at(r, col) % p != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(rank, j));
    uint64_t inv = powmod(at(rank, col) % p, p - 2, p);
    for (int r = rank + 1; r < n; ++r) {
      uint64_t f = mulmod(at(r, col) % p, inv, p);
      if (!f) continue;
      for (int j = col; j < n; ++j)
        at(r, j) = (at(r, j) + p * p - mulmod(f, at(rank, j) % p, p)) % p;
    }
    ++rank;
  }
  return rank;
}

uint64_t det_mod_p(std::vector<uint64_t> m, int n, uint64_t p) {
  auto at = [&](int i, int j) -> uint64_t& { return m[static_cast<size_t>(i) * n + j]; };
  uint64_t det = 1 % p;
  bool neg = false;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (at(r, col) % p != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      neg = !neg;
    }
    uint64_t d = at(col, col) % p;
    det = mulmod(det, d, p);
    uint64_t inv = powmod(d, p - 2, p);
    for (int r = col + 1; r < n; ++r) {
      uint64_t f = mulmod(at(r, col) % p, inv, p);
      if (!f) continue;
      for (int j = col; j < n; ++j)
        at(r, j) = (at(r, j) + p * p - mulmod(f, at(col, j) % p, p)) % p;
    }
  }
  if (neg) det = (p - det) % p;
  return det;
}

} // namespace liegram
