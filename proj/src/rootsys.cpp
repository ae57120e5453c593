#include "liegram/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace liegram {

cartan_type parse_cartan_type(const std::string& s) {
  if (s.size() < 2) throw config_error("cannot parse Cartan type '" + s + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G') throw config_error("unknown series '" + s + "'");
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw config_error("cannot parse rank in '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  cartan_type t{static_cast<series>(c), rank};
  auto in = [&](int lo, int hi) { return rank >= lo && rank <= hi; };
  bool ok = false;
  switch (t.ser) {
    case series::A: ok = in(1, 15); break;
    case series::B: ok = in(2, 8); break;
    case series::C: ok = in(2, 8); break;
    case series::D: ok = in(4, 8); break;
    case series::E: ok = in(6, 8); break;
    case series::F: ok = rank == 4; break;
    case series::G: ok = rank == 2; break;
    default: break;
  }
  if (!ok) throw config_error("unsupported type/rank '" + s + "'");
  return t;
}

std::string root::digits() const {
  std::string out;
  out.reserve(coeffs.size());
  for (int8_t c : coeffs) {
    int v = positive ? c : -c;
    assert(v >= 0 && v <= 9);
    out.push_back(static_cast<char>('0' + v));
  }
  if (!positive) out.insert(out.begin(), '-');
  return out;
}

root_system::root_system(cartan_type type) : type_(type), rank_(type.rank) {
  build_cartan();
  close_positive_roots();
}

void root_system::build_cartan() {
  const int n = rank_;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto edge = [&](int i, int j) { cartan_[i][j] = -1; cartan_[j][i] = -1; };
  symmetrizer_.assign(n, 1);

  switch (type_.ser) {
    case series::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case series::B: // alpha_n short
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      for (int i = 0; i < n - 1; ++i) symmetrizer_[i] = 2;
      break;
    case series::C: // alpha_n long
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      cartan_[n - 1][n - 2] = -2;
      symmetrizer_[n - 1] = 2;
      break;
    case series::D:
      if (n == 4) {
        // numbering with alpha_1, alpha_2, alpha_4 all attached to alpha_3
        edge(0, 2); edge(1, 2); edge(3, 2);
      } else {
        for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
        edge(n - 3, n - 1);
      }
      break;
    case series::E:
      // chain 1-3-4-5-6(-7-8), node 2 attached to 4 (indices 0-based)
      edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5);
      if (n >= 7) edge(5, 6);
      if (n >= 8) edge(6, 7);
      edge(1, 3);
      break;
    case series::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(0, 1); edge(2, 3);
      cartan_[1][2] = -2;
      cartan_[2][1] = -1;
      symmetrizer_[0] = symmetrizer_[1] = 2;
      break;
    case series::G: // alpha_1 short, alpha_2 long
      cartan_[0][1] = -1;
      cartan_[1][0] = -3;
      symmetrizer_[1] = 3;
      break;
  }

  // (alpha_i, alpha_j) = d_j A_ij must be symmetric
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      assert(symmetrizer_[j] * cartan_[i][j] == symmetrizer_[i] * cartan_[j][i]);
}

namespace {
// height, then descending lex on the coefficient tuple
bool order_lt(const root& a, const root& b) {
  if (a.height != b.height) return a.height < b.height;
  return a.coeffs > b.coeffs;
}
} // namespace

void root_system::close_positive_roots() {
  const int n = rank_;
  std::map<coeff_vec, int> seen;
  std::vector<root> roots;

  for (int i = 0; i < n; ++i) {
    root r;
    r.coeffs.assign(n, 0);
    r.coeffs[i] = 1;
    r.height = 1;
    seen[r.coeffs] = static_cast<int>(roots.size());
    roots.push_back(std::move(r));
  }

  // Grow height by height: gamma + alpha_i is a root iff the alpha_i-string
  // through gamma extends upward, i.e. p - <gamma, alpha_i^vee> > 0 where p
  // is the length of the downward string.
  for (size_t k = 0; k < roots.size(); ++k) {
    coeff_vec g = roots[k].coeffs; // copy: roots may reallocate
    for (int i = 0; i < n; ++i) {
      int pair = 0;
      for (int j = 0; j < n; ++j) pair += g[j] * cartan_[j][i];
      int p = 0;
      coeff_vec down = g;
      for (;;) {
        down[i] -= 1;
        if (down[i] < 0) break;
        bool zero = std::all_of(down.begin(), down.end(), [](int8_t c) { return c == 0; });
        if (zero || !seen.count(down)) break;
        ++p;
      }
      if (p - pair > 0) {
        coeff_vec up = g;
        up[i] += 1;
        if (!seen.count(up)) {
          root r;
          r.coeffs = up;
          r.height = roots[k].height + 1;
          seen[up] = static_cast<int>(roots.size());
          roots.push_back(std::move(r));
        }
      }
    }
  }

  std::sort(roots.begin(), roots.end(), order_lt);
  positive_ = std::move(roots);
  index_.clear();
  for (int i = 0; i < num_positive(); ++i) index_[positive_[i].coeffs] = i;

  const int np = num_positive();
  sum_.assign(static_cast<size_t>(np) * np, -1);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      coeff_vec s = positive_[i].coeffs;
      for (int t = 0; t < n; ++t) s[t] = static_cast<int8_t>(s[t] + positive_[j].coeffs[t]);
      auto it = index_.find(s);
      if (it != index_.end()) sum_[static_cast<size_t>(i) * np + j] = it->second;
    }

  pairing_.assign(static_cast<size_t>(np) * n, 0);
  norm2_.assign(np, 0);
  for (int i = 0; i < np; ++i) {
    const coeff_vec& c = positive_[i].coeffs;
    for (int s = 0; s < n; ++s) {
      int v = 0;
      for (int j = 0; j < n; ++j) v += c[j] * cartan_[j][s];
      pairing_[static_cast<size_t>(i) * n + s] = v;
    }
    int nrm = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        nrm += c[a] * c[b] * symmetrizer_[b] * cartan_[a][b];
    norm2_[i] = nrm;
  }
}

int root_system::index_of(const coeff_vec& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

std::optional<root> root_system::root_sum(const root& a, const root& b) const {
  coeff_vec s(rank_, 0);
  bool zero = true;
  for (int i = 0; i < rank_; ++i) {
    int va = a.positive ? a.coeffs[i] : -a.coeffs[i];
    int vb = b.positive ? b.coeffs[i] : -b.coeffs[i];
    int v = va + vb;
    if (v != 0) zero = false;
    s[i] = static_cast<int8_t>(v);
  }
  if (zero) return std::nullopt;
  coeff_vec abs = s;
  bool neg = std::all_of(s.begin(), s.end(), [](int8_t c) { return c <= 0; });
  if (neg)
    for (auto& c : abs) c = static_cast<int8_t>(-c);
  int idx = index_of(abs);
  if (idx < 0) return std::nullopt;
  root r = positive_[idx];
  r.positive = !neg;
  return r;
}

int root_system::down_string(int alpha, int beta) const {
  int r = 0;
  coeff_vec c = positive_[beta].coeffs;
  const coeff_vec& a = positive_[alpha].coeffs;
  for (;;) {
    bool nonneg = true, nonpos = true, zero = true;
    for (int i = 0; i < rank_; ++i) {
      c[i] = static_cast<int8_t>(c[i] - a[i]);
      if (c[i] > 0) nonpos = false;
      if (c[i] < 0) nonneg = false;
      if (c[i] != 0) zero = false;
    }
    if (zero) break;
    coeff_vec abs = c;
    if (nonpos)
      for (auto& x : abs) x = static_cast<int8_t>(-x);
    else if (!nonneg)
      break;
    if (index_of(abs) < 0) break;
    ++r;
  }
  return r;
}

int root_system::parse_root(const std::string& digits) const {
  if (static_cast<int>(digits.size()) != rank_) return -1;
  coeff_vec c(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) return -1;
    c[i] = static_cast<int8_t>(digits[i] - '0');
  }
  return index_of(c);
}

int root_system::simple_index(int root_idx) const {
  const root& r = positive_[root_idx];
  if (r.height != 1) return -1;
  for (int i = 0; i < rank_; ++i)
    if (r.coeffs[i] == 1) return i;
  return -1;
}

} // namespace liegram
