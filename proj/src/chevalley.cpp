#include "liegram/chevalley.hpp"

#include <cassert>
#include <random>
#include <sstream>

namespace liegram {

structure_constants::structure_constants(const root_system& rs)
    : rs_(&rs), np_(rs.num_positive()) {
  table_.assign(static_cast<size_t>(np_) * np_, 0);
  auto N = [&](int a, int b) -> int& { return table_[static_cast<size_t>(a) * np_ + b]; };

  // Extraspecial pair of each non-simple positive root gamma: the
  // decomposition gamma = alpha + beta with alpha minimal in the total
  // order.  Positive roots are already sorted, so the first alpha found
  // scanning upward is minimal.
  std::vector<int> ext(np_, -1);
  for (int g = 0; g < np_; ++g) {
    if (rs.positive_root(g).height == 1) continue;
    for (int a = 0; a < np_; ++a) {
      coeff_vec diff = rs.positive_root(g).coeffs;
      bool ok = true;
      for (size_t t = 0; t < diff.size(); ++t) {
        diff[t] = static_cast<int8_t>(diff[t] - rs.positive_root(a).coeffs[t]);
        if (diff[t] < 0) ok = false;
      }
      if (!ok) continue;
      if (rs.index_of(diff) >= 0) { ext[g] = a; break; }
    }
    assert(ext[g] >= 0); // every non-simple positive root decomposes
  }

  // Process sums by increasing position in the order (heights ascend), so
  // every constant the Jacobi recursion consults is already known.
  for (int g = 0; g < np_; ++g) {
    if (rs.positive_root(g).height == 1) continue;
    const int ap = ext[g];
    coeff_vec comp = rs.positive_root(g).coeffs;
    for (size_t t = 0; t < comp.size(); ++t)
      comp[t] = static_cast<int8_t>(comp[t] - rs.positive_root(ap).coeffs[t]);
    const int bp = rs.index_of(comp);
    assert(bp >= 0);

    // extraspecial value
    {
      int r = rs.down_string(ap, bp);
      N(ap, bp) = r + 1;
      N(bp, ap) = -(r + 1);
    }

    // remaining decompositions gamma = a + b
    for (int a = 0; a < np_; ++a) {
      if (a == ap || a == bp) continue;
      coeff_vec d = rs.positive_root(g).coeffs;
      bool ok = true;
      for (size_t t = 0; t < d.size(); ++t) {
        d[t] = static_cast<int8_t>(d[t] - rs.positive_root(a).coeffs[t]);
        if (d[t] < 0) ok = false;
      }
      if (!ok) continue;
      int b = rs.index_of(d);
      if (b < 0) continue;
      if (N(a, b) != 0) continue;
      if (a == b) continue; // cannot happen in a reduced system

      // Jacobi identity on (e_{-a'}, e_a, e_b) with (a', b') the
      // extraspecial pair of gamma, rewritten so that only constants of
      // positive pairs with lower sums appear:
      //
      //   N_{a,b} = (g,g) / ((b',b') N_{a',b'}) *
      //             [ (d,d)/(a,a) N_{a',d} N_{d,b}   with d = a - a'
      //             - (e,e)/(b,b) N_{a',e} N_{e,a} ] with e = b - a'
      long num = 0, den_extra;
      {
        auto minus = [&](int x, int y) -> int {
          coeff_vec c = rs.positive_root(x).coeffs;
          for (size_t t = 0; t < c.size(); ++t) {
            c[t] = static_cast<int8_t>(c[t] - rs.positive_root(y).coeffs[t]);
            if (c[t] < 0) return -1;
          }
          return rs.index_of(c);
        };
        int dd = minus(a, ap);
        if (dd >= 0)
          num += static_cast<long>(rs.norm2(dd)) * N(ap, dd) * N(dd, b) * rs.norm2(b);
        int ee = minus(b, ap);
        if (ee >= 0)
          num -= static_cast<long>(rs.norm2(ee)) * N(ap, ee) * N(ee, a) * rs.norm2(a);
        // common denominator (a,a)(b,b) folded in:
        num *= rs.norm2(g);
        den_extra = static_cast<long>(rs.norm2(bp)) * N(ap, bp) *
                    rs.norm2(a) * rs.norm2(b);
      }
      assert(den_extra != 0);
      assert(num % den_extra == 0);
      int val = static_cast<int>(num / den_extra);
      assert(val != 0);
      int r = rs.down_string(a, b);
      assert(std::abs(val) == r + 1);
      N(a, b) = val;
      N(b, a) = -val;
    }
  }
}

std::optional<std::pair<int, int>> structure_constants::bracket(int a, int b) const {
  int s = rs_->sum_index(a, b);
  if (s < 0) return std::nullopt;
  return std::make_pair(s, n_constant(a, b));
}

bool structure_constants::check_antisymmetry_and_strings(std::string* msg) const {
  for (int a = 0; a < np_; ++a)
    for (int b = 0; b < np_; ++b) {
      int s = rs_->sum_index(a, b);
      int v = n_constant(a, b);
      if (s < 0) {
        if (v != 0) {
          if (msg) *msg = "nonzero constant on a non-root sum";
          return false;
        }
        continue;
      }
      if (v == 0 || v != -n_constant(b, a)) {
        if (msg) *msg = "antisymmetry failure";
        return false;
      }
      int r = rs_->down_string(a, b);
      if (std::abs(v) != r + 1) {
        std::ostringstream os;
        os << "string bound failure at (" << rs_->positive_root(a).digits() << ", "
           << rs_->positive_root(b).digits() << "): N = " << v << ", r = " << r;
        if (msg) *msg = os.str();
        return false;
      }
    }
  return true;
}

bool structure_constants::check_jacobi(uint64_t limit, uint64_t seed, std::string* msg) const {
  auto test = [&](int a, int b, int c) -> bool {
    // Triple contributes only when a+b+c is a root; each term drops out
    // when its inner sum is not a root.
    long total = 0;
    if (int ab = rs_->sum_index(a, b); ab >= 0 && rs_->sum_index(ab, c) >= 0)
      total += static_cast<long>(n_constant(a, b)) * n_constant(ab, c);
    if (int bc = rs_->sum_index(b, c); bc >= 0 && rs_->sum_index(bc, a) >= 0)
      total += static_cast<long>(n_constant(b, c)) * n_constant(bc, a);
    if (int ca = rs_->sum_index(c, a); ca >= 0 && rs_->sum_index(ca, b) >= 0)
      total += static_cast<long>(n_constant(c, a)) * n_constant(ca, b);
    if (total != 0) {
      std::ostringstream os;
      os << "Jacobi failure on (" << rs_->positive_root(a).digits() << ", "
         << rs_->positive_root(b).digits() << ", " << rs_->positive_root(c).digits() << ")";
      if (msg) *msg = os.str();
      return false;
    }
    return true;
  };

  if (limit == 0) {
    for (int a = 0; a < np_; ++a)
      for (int b = a + 1; b < np_; ++b)
        for (int c = b + 1; c < np_; ++c)
          if (!test(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, np_ - 1);
  for (uint64_t i = 0; i < limit; ++i)
    if (!test(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

} // namespace liegram
