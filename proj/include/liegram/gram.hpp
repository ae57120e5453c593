#ifndef LIEGRAM_GRAM_HPP
#define LIEGRAM_GRAM_HPP

#include <vector>

#include "liegram/chevalley.hpp"
#include "liegram/grading.hpp"
#include "liegram/poly.hpp"

namespace liegram {

// Symbolic Gram matrix of the alternating form on g(1): rows and columns are
// indexed by the ordered basis of Phi_1, and the entry at (i,j) is
// N_{beta_i,beta_j} * x_l where beta_i + beta_j is the l-th root of Phi_2
// (zero when beta_i + beta_j is not a root).  Every entry is a single
// monomial of degree <= 1 in m = |Phi_2| variables.
class gram_matrix {
public:
  gram_matrix(const root_system& rs, const structure_constants& sc, const graded_pieces& g);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<int>& row_basis() const { return row_basis_; } // positive-root indices
  const std::vector<int>& var_basis() const { return var_basis_; }

  // entry (i,j) as (coefficient, variable index); coefficient 0 means the
  // entry is zero (variable index is -1 then)
  int coeff(int i, int j) const { return coef_[static_cast<size_t>(i) * n_ + j]; }
  int var(int i, int j) const { return var_[static_cast<size_t>(i) * n_ + j]; }

  sparse_poly entry(int i, int j, domain dom = {}) const;

  // Numeric specialisation at a point (over Z when p == 0, else over F_p).
  // Entries of the result are reduced representatives.
  std::vector<bigint> at(const std::vector<bigint>& point, uint32_t p = 0) const;

private:
  int n_, m_;
  std::vector<int> row_basis_, var_basis_;
  std::vector<int> coef_;
  std::vector<int> var_;
};

gram_matrix build_gram(const root_system& rs, const structure_constants& sc,
                       const graded_pieces& g);

} // namespace liegram

#endif
