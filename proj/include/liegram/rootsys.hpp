#ifndef LIEGRAM_ROOTSYS_HPP
#define LIEGRAM_ROOTSYS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liegram/errors.hpp"

namespace liegram {

enum class series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct cartan_type {
  series ser;
  int rank;

  std::string str() const { return std::string(1, static_cast<char>(ser)) + std::to_string(rank); }
  bool operator==(const cartan_type&) const = default;
};

// Parses "F4", "A12", ... and checks the supported ranges
// (A1-A15, B2-B8, C2-C8, D4-D8, E6-E8, F4, G2).
cartan_type parse_cartan_type(const std::string& s);

using coeff_vec = std::vector<int8_t>; // coefficients over the simple roots

struct root {
  coeff_vec coeffs;
  int height = 0;      // sum of coefficients
  bool positive = true;

  std::string digits() const; // compact digit string, e.g. "1342"
};

// An irreducible root system with a fixed height-compatible total order on
// the positive roots: sort by height, ties broken by descending lexicographic
// comparison of the coefficient tuples.  That order reproduces the basis
// orderings used throughout the worked examples this library is tested
// against, and it pins the variable indexing of the symbolic Gram matrices.
class root_system {
public:
  explicit root_system(cartan_type type);

  const cartan_type& type() const { return type_; }
  int rank() const { return rank_; }

  // Cartan matrix, A[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  int num_positive() const { return static_cast<int>(positive_.size()); }
  const std::vector<root>& positive_roots() const { return positive_; } // already in the fixed order
  const root& positive_root(int i) const { return positive_[i]; }

  int dim_algebra() const { return 2 * num_positive() + rank_; }

  // Index of a positive root given its coefficient tuple, or -1.
  int index_of(const coeff_vec& c) const;

  // Sum of two positive roots as a positive-root index, or -1 when the sum
  // is not a root.
  int sum_index(int i, int j) const { return sum_[i * positive_.size() + j]; }

  // root_sum on arbitrary elements of Phi (positive or negative).
  std::optional<root> root_sum(const root& a, const root& b) const;

  // <gamma, alpha_i^vee> for a positive root index.
  int pairing(int root_idx, int simple) const { return pairing_[root_idx * rank_ + simple]; }

  // Squared length (alpha, alpha) in the integral normalisation where short
  // roots have norm 2; ratios are what matters downstream.
  int norm2(int root_idx) const { return norm2_[root_idx]; }

  // Largest r >= 0 with beta - r*alpha a root (both positive root indices).
  int down_string(int alpha, int beta) const;

  // Parse a digit string such as "1342" into a positive-root index; -1 if
  // it is not a positive root of this system.
  int parse_root(const std::string& digits) const;

  bool is_simple(int root_idx) const { return positive_[root_idx].height == 1; }
  int simple_index(int root_idx) const; // position in Pi, or -1

private:
  cartan_type type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizer_;          // d_i with (alpha_i, alpha_i) = 2 d_i
  std::vector<root> positive_;
  std::map<coeff_vec, int> index_;
  std::vector<int32_t> sum_;              // dense np x np table
  std::vector<int> pairing_;
  std::vector<int> norm2_;

  void build_cartan();
  void close_positive_roots();
};

} // namespace liegram

#endif
