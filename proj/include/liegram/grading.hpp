#ifndef LIEGRAM_GRADING_HPP
#define LIEGRAM_GRADING_HPP

#include <map>
#include <vector>

#include "liegram/rootsys.hpp"
#include "liegram/wdd.hpp"

namespace liegram {

// The graded pieces of the algebra under a weighted Dynkin diagram.
// phi_pos[i] lists the positive roots of weight i, in the system's order;
// that order fixes the row and variable indexing of the Gram matrix.
struct graded_pieces {
  std::map<int, std::vector<int>> phi_pos; // weight -> positive-root indices
  std::map<int, int> dim_g;                // weight -> dim g(i), rank added at 0

  const std::vector<int>& phi(int i) const {
    static const std::vector<int> empty;
    auto it = phi_pos.find(i);
    return it == phi_pos.end() ? empty : it->second;
  }
  int dim(int i) const {
    auto it = dim_g.find(i);
    return it == dim_g.end() ? 0 : it->second;
  }
};

graded_pieces compute_grading(const root_system& rs, const weighted_diagram& d);

} // namespace liegram

#endif
