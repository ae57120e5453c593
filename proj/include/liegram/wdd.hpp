#ifndef LIEGRAM_WDD_HPP
#define LIEGRAM_WDD_HPP

#include <optional>
#include <string>
#include <vector>

#include "liegram/rootsys.hpp"

namespace liegram {

// Condition on the prime p under which a non-special diagram still belongs
// to the bullet set; special diagrams always do.
enum class bullet_condition : uint8_t { always, p_ne_2, p_ne_3, p_ne_5, p_ne_2_3 };

bool condition_holds(bullet_condition c, long p); // p = 0 means characteristic zero
std::string condition_str(bullet_condition c);
std::optional<bullet_condition> parse_condition(const std::string& s);

struct weighted_diagram {
  std::vector<int> weights;            // simple root -> {0,1,2}, diagram order
  std::string label;                   // class name (Carter notation / partition)
  std::optional<bool> special;         // nullopt = no metadata shipped
  bullet_condition condition = bullet_condition::always;

  std::string weights_str() const;     // "1,0,0,0"
};

// d(a) for any root a of the system (additive extension of the weights).
int extend_weight(const root_system& rs, const weighted_diagram& d, const root& a);
int extend_weight(const root_system& rs, const weighted_diagram& d, int positive_idx);

// All weighted Dynkin diagrams of the system, sorted by descending b_d and
// then by label.  Classical types are computed from partitions by the
// standard recipe; exceptional types load from the embedded tables
// (data_error if a table is missing).
std::vector<weighted_diagram> enumerate_diagrams(const root_system& rs);

// Half of (dim g(0) + dim g(1) - rank): the dimension of the Springer fibre
// attached to the diagram's orbit.
int b_invariant(const root_system& rs, const weighted_diagram& d);

struct membership {
  bool special;
  bool in_delta_bullet;
};

// Specialness and bullet-set membership at the prime p (p = 0 for
// characteristic zero).  Throws data_error when the diagram carries no
// specialness metadata.
membership lookup_membership(const root_system& rs, const weighted_diagram& d, long p);

// Diagram with the given label, if any.
std::optional<weighted_diagram> find_diagram(const root_system& rs, const std::string& label);

// True when p is a good prime for the type.
bool is_good_prime(cartan_type t, long p);

// Checksums of the embedded tables (table name -> FNV-1a hash), for --version.
std::vector<std::pair<std::string, uint64_t>> table_checksums();

} // namespace liegram

#endif
