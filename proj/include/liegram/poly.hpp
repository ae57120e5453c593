#ifndef LIEGRAM_POLY_HPP
#define LIEGRAM_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "liegram/errors.hpp"

namespace liegram {

using bigint = boost::multiprecision::cpp_int;

// Coefficient domain: integers (p == 0) or the prime field F_p.
struct domain {
  uint32_t p = 0;
  bool operator==(const domain&) const = default;
  bool is_modular() const { return p != 0; }
};

// Exact sparse multivariate polynomial.  Terms are kept in canonical
// graded-lex order (higher total degree first, ties by descending exponent
// tuple); no zero coefficients are stored; modular coefficients lie in
// [0, p).
class sparse_poly {
public:
  sparse_poly() = default;
  sparse_poly(int nvars, domain dom) : nvars_(nvars), dom_(dom) {}

  static sparse_poly constant(int nvars, domain dom, const bigint& c);
  static sparse_poly variable(int nvars, domain dom, int var); // x_{var}, 0-based
  // c * x_{var}^e, or a constant when var < 0
  static sparse_poly monomial(int nvars, domain dom, const bigint& c, int var, int e = 1);

  int nvars() const { return nvars_; }
  const domain& dom() const { return dom_; }
  bool is_zero() const { return coefs_.empty(); }
  int monomial_count() const { return static_cast<int>(coefs_.size()); }
  int total_degree() const; // 0 for the zero polynomial

  const uint8_t* exponents(int t) const { return exps_.data() + static_cast<size_t>(t) * nvars_; }
  const bigint& coefficient(int t) const { return coefs_[t]; }

  sparse_poly operator-() const;
  sparse_poly operator+(const sparse_poly& o) const;
  sparse_poly operator-(const sparse_poly& o) const;
  sparse_poly operator*(const sparse_poly& o) const;
  bool operator==(const sparse_poly& o) const;

  // *this += c * x_{var}^e * o   (the workhorse of the Pfaffian expansion)
  void add_scaled(const bigint& c, int var, int e, const sparse_poly& o);

  sparse_poly reduce_mod(uint32_t p) const; // integer polynomial -> F_p
  bigint evaluate(const std::vector<bigint>& point) const;
  bigint content() const; // gcd of coefficients over Z (0 for the zero polynomial)

  std::string str() const;

private:
  int nvars_ = 0;
  domain dom_;
  std::vector<uint8_t> exps_; // monomial_count x nvars
  std::vector<int> degs_;
  std::vector<bigint> coefs_;

  void check_compatible(const sparse_poly& o) const;
  bigint normal(const bigint& c) const;
  friend class poly_builder;
};

// Accumulates terms in any order, then yields a canonical polynomial.
class poly_builder {
public:
  poly_builder(int nvars, domain dom) : nvars_(nvars), dom_(dom) {}
  void add_term(const uint8_t* exps, const bigint& c);
  void add_term(const std::vector<uint8_t>& exps, const bigint& c) { add_term(exps.data(), c); }
  sparse_poly build();

private:
  int nvars_;
  domain dom_;
  std::vector<std::pair<std::vector<uint8_t>, bigint>> terms_;
};

} // namespace liegram

#endif
