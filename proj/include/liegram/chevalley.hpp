#ifndef LIEGRAM_CHEVALLEY_HPP
#define LIEGRAM_CHEVALLEY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "liegram/rootsys.hpp"

namespace liegram {

// Integer structure constants N_{alpha,beta} of a canonical Chevalley basis,
// restricted to pairs of positive roots whose sum is again a root (the only
// brackets the Gram construction consumes).
//
// Signs are fixed by the extraspecial-pair convention: order the positive
// roots by the system's total order; for each non-simple positive root gamma
// the extraspecial pair is the decomposition gamma = alpha + beta with alpha
// minimal, and N_{alpha,beta} is set to +(r+1) where r is the length of the
// descending alpha-string through beta.  All remaining constants follow from
// the Jacobi identity.
class structure_constants {
public:
  explicit structure_constants(const root_system& rs);

  const root_system& system() const { return *rs_; }

  // N_{a,b} for positive-root indices with sum a root; 0 otherwise.
  int n_constant(int a, int b) const { return table_[static_cast<size_t>(a) * np_ + b]; }

  // (a+b, N_{a,b}) when a+b is a root, nullopt otherwise.
  std::optional<std::pair<int, int>> bracket(int a, int b) const;

  // Verification helpers (used by tests and `bracket --selfcheck`).
  bool check_antisymmetry_and_strings(std::string* msg = nullptr) const;
  // Jacobi on positive triples: exhaustive when limit == 0, else `limit`
  // pseudo-random triples.
  bool check_jacobi(uint64_t limit, uint64_t seed, std::string* msg = nullptr) const;

private:
  const root_system* rs_;
  int np_;
  std::vector<int> table_;
};

} // namespace liegram

#endif
