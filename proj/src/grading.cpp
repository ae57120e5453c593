#include "liegram/grading.hpp"

namespace liegram {

graded_pieces compute_grading(const root_system& rs, const weighted_diagram& d) {
  graded_pieces g;
  for (int i = 0; i < rs.num_positive(); ++i) {
    int w = extend_weight(rs, d, i);
    g.phi_pos[w].push_back(i); // ascending index = the fixed order
  }
  g.dim_g[0] = rs.rank();
  for (auto& [w, roots] : g.phi_pos) {
    g.dim_g[w] += static_cast<int>(roots.size());  // positive roots of weight w
    g.dim_g[-w] += static_cast<int>(roots.size()); // their negatives at -w
  }
  return g;
}

} // namespace liegram
