#ifndef LIEGRAM_PFAFFIAN_HPP
#define LIEGRAM_PFAFFIAN_HPP

#include <cstdint>
#include <vector>

#include "liegram/gram.hpp"
#include "liegram/poly.hpp"

namespace liegram {

// Antisymmetric matrix of polynomials.  Construction checks antisymmetry and
// the zero diagonal (contract violation otherwise).
class skew_poly_matrix {
public:
  skew_poly_matrix(int n, int nvars, domain dom, std::vector<sparse_poly> entries);

  static skew_poly_matrix from_gram(const gram_matrix& g, domain dom = {});

  int n() const { return n_; }
  int nvars() const { return nvars_; }
  const domain& dom() const { return dom_; }
  const sparse_poly& entry(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }

private:
  int n_, nvars_;
  domain dom_;
  std::vector<sparse_poly> entries_;
};

struct pfaffian_options {
  uint64_t node_budget = 0;      // 0 = unlimited; recursion nodes
  size_t memo_term_cap = 1u << 26; // stop memoizing past this many stored terms
};

// Pfaffian by row expansion over index subsets, memoized on the subset.
// Expansion pivots on the row with the fewest nonzero entries in the
// remaining submatrix (ties to the lowest index).  Odd dimension gives 0;
// the sign convention is Pf([[0,1],[-1,0]]) = +1 blockwise, so the standard
// symplectic matrix has Pfaffian +1.  Throws budget_exceeded when the node
// budget runs out.
sparse_poly pfaffian(const skew_poly_matrix& m, const pfaffian_options& opt = {});

// Pf(M)^2.
sparse_poly det_via_pfaffian(const skew_poly_matrix& m, const pfaffian_options& opt = {});

// Rank over F_p of the matrix evaluated at the given point.
int rank_at(const skew_poly_matrix& m, const std::vector<bigint>& point, uint32_t p);

// ---- exact numeric helpers --------------------------------------------------

// Fraction-free (Bareiss) determinant of an n x n integer matrix.
bigint bareiss_det(std::vector<bigint> m, int n);

// Rank of an n x n matrix over F_p.
int rank_mod_p(std::vector<uint64_t> m, int n, uint64_t p);

// Determinant over F_p (elimination with modular inverses).
uint64_t det_mod_p(std::vector<uint64_t> m, int n, uint64_t p);

} // namespace liegram

#endif
