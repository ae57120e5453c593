#include "liegram/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <map>
#include <numeric>
#include <sstream>

namespace liegram {

namespace {
// canonical order: higher total degree first, ties by descending exponent tuple
int cmp_mono(int deg_a, const uint8_t* a, int deg_b, const uint8_t* b, int nvars) {
  if (deg_a != deg_b) return deg_a > deg_b ? -1 : 1;
  int c = std::memcmp(a, b, static_cast<size_t>(nvars));
  return c > 0 ? -1 : (c < 0 ? 1 : 0);
}
} // namespace

bigint sparse_poly::normal(const bigint& c) const {
  if (!dom_.is_modular()) return c;
  bigint r = c % dom_.p;
  if (r < 0) r += dom_.p;
  return r;
}

sparse_poly sparse_poly::constant(int nvars, domain dom, const bigint& c) {
  sparse_poly p(nvars, dom);
  bigint v = p.normal(c);
  if (v != 0) {
    p.exps_.assign(nvars, 0);
    p.degs_.push_back(0);
    p.coefs_.push_back(std::move(v));
  }
  return p;
}

sparse_poly sparse_poly::variable(int nvars, domain dom, int var) {
  return monomial(nvars, dom, 1, var, 1);
}

sparse_poly sparse_poly::monomial(int nvars, domain dom, const bigint& c, int var, int e) {
  sparse_poly p(nvars, dom);
  bigint v = p.normal(c);
  if (v == 0) return p;
  p.exps_.assign(nvars, 0);
  if (var >= 0 && e > 0) {
    assert(var < nvars);
    p.exps_[var] = static_cast<uint8_t>(e);
    p.degs_.push_back(e);
  } else {
    p.degs_.push_back(0);
  }
  p.coefs_.push_back(std::move(v));
  return p;
}

int sparse_poly::total_degree() const {
  return degs_.empty() ? 0 : *std::max_element(degs_.begin(), degs_.end());
}

void sparse_poly::check_compatible(const sparse_poly& o) const {
  if (nvars_ != o.nvars_ || !(dom_ == o.dom_))
    throw domain_error("polynomial domain/arity mismatch");
}

sparse_poly sparse_poly::operator-() const {
  sparse_poly r = *this;
  for (auto& c : r.coefs_) c = r.normal(-c);
  return r;
}

sparse_poly sparse_poly::operator+(const sparse_poly& o) const {
  check_compatible(o);
  sparse_poly r(nvars_, dom_);
  size_t i = 0, j = 0;
  const size_t na = coefs_.size(), nb = o.coefs_.size();
  r.exps_.reserve((na + nb) * nvars_);
  while (i < na || j < nb) {
    int c = i == na ? 1 : j == nb ? -1
            : cmp_mono(degs_[i], exponents(static_cast<int>(i)), o.degs_[j],
                       o.exponents(static_cast<int>(j)), nvars_);
    if (c < 0) {
      r.exps_.insert(r.exps_.end(), exponents(static_cast<int>(i)), exponents(static_cast<int>(i)) + nvars_);
      r.degs_.push_back(degs_[i]);
      r.coefs_.push_back(coefs_[i]);
      ++i;
    } else if (c > 0) {
      r.exps_.insert(r.exps_.end(), o.exponents(static_cast<int>(j)), o.exponents(static_cast<int>(j)) + nvars_);
      r.degs_.push_back(o.degs_[j]);
      r.coefs_.push_back(o.coefs_[j]);
      ++j;
    } else {
      bigint s = normal(coefs_[i] + o.coefs_[j]);
      if (s != 0) {
        r.exps_.insert(r.exps_.end(), exponents(static_cast<int>(i)), exponents(static_cast<int>(i)) + nvars_);
        r.degs_.push_back(degs_[i]);
        r.coefs_.push_back(std::move(s));
      }
      ++i; ++j;
    }
  }
  return r;
}

sparse_poly sparse_poly::operator-(const sparse_poly& o) const { return *this + (-o); }

sparse_poly sparse_poly::operator*(const sparse_poly& o) const {
  check_compatible(o);
  poly_builder acc(nvars_, dom_);
  std::vector<uint8_t> e(nvars_);
  for (size_t i = 0; i < coefs_.size(); ++i)
    for (size_t j = 0; j < o.coefs_.size(); ++j) {
      const uint8_t* a = exponents(static_cast<int>(i));
      const uint8_t* b = o.exponents(static_cast<int>(j));
      for (int v = 0; v < nvars_; ++v) {
        int s = a[v] + b[v];
        if (s > 255) throw domain_error("exponent overflow in multiplication");
        e[v] = static_cast<uint8_t>(s);
      }
      acc.add_term(e, coefs_[i] * o.coefs_[j]);
    }
  return acc.build();
}

bool sparse_poly::operator==(const sparse_poly& o) const {
  return nvars_ == o.nvars_ && dom_ == o.dom_ && degs_ == o.degs_ &&
         exps_ == o.exps_ && coefs_ == o.coefs_;
}

void sparse_poly::add_scaled(const bigint& c, int var, int e, const sparse_poly& o) {
  check_compatible(o);
  sparse_poly shifted = o;
  for (size_t t = 0; t < shifted.coefs_.size(); ++t) {
    shifted.coefs_[t] = normal(shifted.coefs_[t] * c);
    if (var >= 0 && e > 0) {
      int s = shifted.exps_[t * nvars_ + var] + e;
      if (s > 255) throw domain_error("exponent overflow");
      shifted.exps_[t * nvars_ + var] = static_cast<uint8_t>(s);
      shifted.degs_[t] += e;
    }
  }
  // scaling can create zero coefficients mod p; drop them
  if (dom_.is_modular()) {
    sparse_poly clean(nvars_, dom_);
    for (size_t t = 0; t < shifted.coefs_.size(); ++t)
      if (shifted.coefs_[t] != 0) {
        clean.exps_.insert(clean.exps_.end(), shifted.exponents(static_cast<int>(t)),
                           shifted.exponents(static_cast<int>(t)) + nvars_);
        clean.degs_.push_back(shifted.degs_[t]);
        clean.coefs_.push_back(shifted.coefs_[t]);
      }
    shifted = std::move(clean);
  }
  *this = *this + shifted;
}

sparse_poly sparse_poly::reduce_mod(uint32_t p) const {
  if (dom_.is_modular()) throw domain_error("reduce_mod expects an integer polynomial");
  sparse_poly r(nvars_, domain{p});
  for (size_t t = 0; t < coefs_.size(); ++t) {
    bigint c = r.normal(coefs_[t]);
    if (c == 0) continue;
    r.exps_.insert(r.exps_.end(), exponents(static_cast<int>(t)), exponents(static_cast<int>(t)) + nvars_);
    r.degs_.push_back(degs_[t]);
    r.coefs_.push_back(std::move(c));
  }
  return r;
}

bigint sparse_poly::evaluate(const std::vector<bigint>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw domain_error("evaluation point has wrong arity");
  bigint total = 0;
  for (size_t t = 0; t < coefs_.size(); ++t) {
    bigint term = coefs_[t];
    const uint8_t* e = exponents(static_cast<int>(t));
    for (int v = 0; v < nvars_; ++v)
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    total += term;
  }
  return normal(total);
}

bigint sparse_poly::content() const {
  if (dom_.is_modular()) throw domain_error("content is defined over Z");
  bigint g = 0;
  for (const auto& c : coefs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g < 0 ? bigint(-g) : g;
}

std::string sparse_poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t t = 0; t < coefs_.size(); ++t) {
    bigint c = coefs_[t];
    if (t == 0) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      if (c < 0) { os << " - "; c = -c; }
      else os << " + ";
    }
    const uint8_t* e = exponents(static_cast<int>(t));
    std::vector<std::string> parts;
    if (c != 1 || degs_[t] == 0) parts.push_back(c.str());
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      std::string s = "x" + std::to_string(v + 1);
      if (e[v] > 1) s += "^" + std::to_string(static_cast<int>(e[v]));
      parts.push_back(std::move(s));
    }
    for (size_t k = 0; k < parts.size(); ++k) {
      if (k) os << "*";
      os << parts[k];
    }
  }
  return os.str();
}

void poly_builder::add_term(const uint8_t* exps, const bigint& c) {
  terms_.emplace_back(std::vector<uint8_t>(exps, exps + nvars_), c);
}

sparse_poly poly_builder::build() {
  std::sort(terms_.begin(), terms_.end(), [&](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  sparse_poly p(nvars_, dom_);
  for (size_t i = 0; i < terms_.size();) {
    size_t j = i;
    bigint sum = 0;
    while (j < terms_.size() && terms_[j].first == terms_[i].first) sum += terms_[j++].second;
    bigint v = p.normal(sum);
    if (v != 0) {
      p.exps_.insert(p.exps_.end(), terms_[i].first.begin(), terms_[i].first.end());
      p.degs_.push_back(std::accumulate(terms_[i].first.begin(), terms_[i].first.end(), 0));
      p.coefs_.push_back(std::move(v));
    }
    i = j;
  }
  return p;
}

} // namespace liegram
