#include "liegram/gram.hpp"

#include <cassert>

namespace liegram {

gram_matrix::gram_matrix(const root_system& rs, const structure_constants& sc,
                         const graded_pieces& g) {
  row_basis_ = g.phi(1);
  var_basis_ = g.phi(2);
  if (row_basis_.empty())
    throw domain_error("no odd part: g(1) = 0, the form is trivial");
  n_ = static_cast<int>(row_basis_.size());
  m_ = static_cast<int>(var_basis_.size());

  std::vector<int> var_of(rs.num_positive(), -1);
  for (int l = 0; l < m_; ++l) var_of[var_basis_[l]] = l;

  coef_.assign(static_cast<size_t>(n_) * n_, 0);
  var_.assign(static_cast<size_t>(n_) * n_, -1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      int s = rs.sum_index(row_basis_[i], row_basis_[j]);
      if (s < 0) continue;
      assert(var_of[s] >= 0); // the sum of two weight-1 roots has weight 2
      coef_[static_cast<size_t>(i) * n_ + j] = sc.n_constant(row_basis_[i], row_basis_[j]);
      var_[static_cast<size_t>(i) * n_ + j] = var_of[s];
    }
}

sparse_poly gram_matrix::entry(int i, int j, domain dom) const {
  int c = coeff(i, j);
  if (c == 0) return sparse_poly(m_, dom);
  return sparse_poly::monomial(m_, dom, c, var(i, j));
}

std::vector<bigint> gram_matrix::at(const std::vector<bigint>& point, uint32_t p) const {
  if (static_cast<int>(point.size()) != m_)
    throw domain_error("evaluation point has wrong arity");
  std::vector<bigint> out(static_cast<size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int c = coeff(i, j);
      if (c == 0) continue;
      bigint v = point[var(i, j)] * c;
      if (p) {
        v %= p;
        if (v < 0) v += p;
      }
      out[static_cast<size_t>(i) * n_ + j] = std::move(v);
    }
  return out;
}

gram_matrix build_gram(const root_system& rs, const structure_constants& sc,
                       const graded_pieces& g) {
  return gram_matrix(rs, sc, g);
}

} // namespace liegram
