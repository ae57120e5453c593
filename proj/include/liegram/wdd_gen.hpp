#ifndef LIEGRAM_WDD_GEN_HPP
#define LIEGRAM_WDD_GEN_HPP

#include <string>
#include <vector>

#include "liegram/rootsys.hpp"

namespace liegram {

// Enumeration of weighted Dynkin diagrams from first principles, for the
// table generator and for cross-checking the shipped data files.
//
// Every nilpotent class is a pair (Levi subsystem, distinguished orbit of
// it).  Subsets S of the simple roots are scanned; per irreducible
// component of S the distinguished {0,2}-weightings are those with
// rank + 2|Phi_0^+| = |Phi_2^+| inside the component; the defining element
// is solved from the Cartan matrix restricted to S and conjugated into the
// dominant chamber, giving the diagram.  Labels combine the component types
// with the conventional decoration of the distinguished orbit.
struct generated_diagram {
  std::vector<int> weights;
  std::string label;
};

std::vector<generated_diagram> generate_diagrams(const root_system& rs);

} // namespace liegram

#endif
