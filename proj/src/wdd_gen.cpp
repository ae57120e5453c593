#include "liegram/wdd_gen.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace liegram {

namespace {

using rational = boost::multiprecision::cpp_rational;

struct component {
  std::vector<int> nodes;   // simple-root indices, ambient numbering
  std::string base_name;    // "A3", "~A2", "B2", "C3", "D5", "E7", ...
  int rank() const { return static_cast<int>(nodes.size()); }
};

// Connected components of the Dynkin graph restricted to S.
std::vector<std::vector<int>> split_components(const root_system& rs, const std::vector<int>& s) {
  const auto& A = rs.cartan_matrix();
  std::vector<std::vector<int>> comps;
  std::set<int> left(s.begin(), s.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t k = 0; k < comp.size(); ++k)
      for (auto it = left.begin(); it != left.end();)
        if (A[comp[k]][*it] != 0) { comp.push_back(*it); it = left.erase(it); }
        else ++it;
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::string classify_component(const root_system& rs, const std::vector<int>& nodes) {
  const auto& A = rs.cartan_matrix();
  const int k = static_cast<int>(nodes.size());
  // lengths: a node is short when (alpha,alpha) = 2 in a system with two lengths
  bool ambient_two_lengths = rs.type().ser == series::B || rs.type().ser == series::C ||
                             rs.type().ser == series::F || rs.type().ser == series::G;
  int n_short = 0;
  for (int v : nodes) {
    coeff_vec c(rs.rank(), 0);
    c[v] = 1;
    if (rs.norm2(rs.index_of(c)) == 2) ++n_short;
  }
  bool all_short = ambient_two_lengths && n_short == k;
  bool mixed = n_short > 0 && n_short < k;

  std::vector<int> deg(k, 0);
  bool has_multi_edge = false;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && A[nodes[i]][nodes[j]] != 0) {
        ++deg[i];
        if (A[nodes[i]][nodes[j]] < -1 || A[nodes[j]][nodes[i]] < -1) has_multi_edge = true;
      }
  for (int i = 0; i < k; ++i) deg[i] /= 1; // degrees already counted once per neighbour

  int branches = static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d >= 3; }));

  if (rs.type().ser == series::G && k == 2) return "G2";
  if (mixed && has_multi_edge) {
    // path containing the double bond; name by which length occurs once
    if (k == 2) return "B2";
    int n_long = k - n_short;
    if (n_long == 1) return "C" + std::to_string(k);
    if (n_short == 1) return "B" + std::to_string(k);
    if (k == 4) return "F4";
    throw std::logic_error("unclassifiable mixed component");
  }
  std::string tilde = all_short ? "~" : "";
  if (branches == 0) return tilde + "A" + std::to_string(k);
  if (branches == 1) {
    // leg lengths from the branch node
    int center = nodes[static_cast<size_t>(std::find_if(deg.begin(), deg.end(), [](int d) { return d >= 3; }) - deg.begin())];
    std::vector<int> legs;
    for (int v : nodes)
      if (v != center && A[center][v] != 0) {
        int len = 1, prev = center, cur = v;
        for (;;) {
          int next = -1;
          for (int w : nodes)
            if (w != prev && w != cur && A[cur][w] != 0) { next = w; break; }
          if (next < 0) break;
          prev = cur; cur = next; ++len;
        }
        legs.push_back(len);
      }
    std::sort(legs.begin(), legs.end());
    if (legs.size() == 3 && legs[0] == 1 && legs[1] == 1) return "D" + std::to_string(k);
    if (legs == std::vector<int>{1, 2, 2}) return "E6";
    if (legs == std::vector<int>{1, 2, 3}) return "E7";
    if (legs == std::vector<int>{1, 2, 4}) return "E8";
  }
  throw std::logic_error("unclassifiable component shape");
}

// Positive roots of the ambient system supported on the given nodes.
std::vector<int> subsystem_positive(const root_system& rs, const std::vector<int>& nodes) {
  std::vector<char> in(rs.rank(), 0);
  for (int v : nodes) in[v] = 1;
  std::vector<int> out;
  for (int i = 0; i < rs.num_positive(); ++i) {
    const auto& c = rs.positive_root(i).coeffs;
    bool ok = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (c[j] != 0 && !in[j]) { ok = false; break; }
    if (ok) out.push_back(i);
  }
  return out;
}

struct dist_weighting {
  std::vector<int> weights; // 0/2 per node of the component (component order)
  long orbit_dim;           // within the component
};

// Distinguished {0,2}-weightings of one irreducible component.
std::vector<dist_weighting> distinguished_weightings(const root_system& rs,
                                                     const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  const auto sub = subsystem_positive(rs, nodes);
  std::vector<dist_weighting> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> w(rs.rank(), 0);
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) w[nodes[i]] = 2;
    long zero = 0, two = 0;
    for (int ridx : sub) {
      long v = 0;
      const auto& c = rs.positive_root(ridx).coeffs;
      for (int j = 0; j < rs.rank(); ++j) v += c[j] * w[j];
      if (v == 0) ++zero;
      else if (v == 2) ++two;
    }
    if (k + 2 * zero == two) {
      dist_weighting dw;
      dw.weights.resize(k);
      for (int i = 0; i < k; ++i) dw.weights[i] = w[nodes[i]];
      dw.orbit_dim = 2 * static_cast<long>(sub.size()) - 2 * zero;
      out.push_back(std::move(dw));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const dist_weighting& a, const dist_weighting& b) { return a.orbit_dim > b.orbit_dim; });
  for (size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i].orbit_dim == out[i + 1].orbit_dim)
      throw std::logic_error("distinguished orbits with equal dimension; decoration ambiguous");
  return out;
}

std::string decoration(const std::string& base, size_t index, size_t total) {
  auto consecutive = [&](size_t i) { return i == 0 ? std::string() : "(a" + std::to_string(i) + ")"; };
  if (base == "E6") {
    static const char* sfx[] = {"", "(a1)", "(a3)"};
    if (total != 3) throw std::logic_error("E6 should have 3 distinguished orbits");
    return sfx[index];
  }
  if (base == "E7") {
    if (total != 6) throw std::logic_error("E7 should have 6 distinguished orbits");
    return consecutive(index);
  }
  if (base == "E8") {
    static const char* sfx[] = {"", "(a1)", "(a2)", "(a3)", "(a4)", "(b4)",
                                "(a5)", "(b5)", "(a6)", "(b6)", "(a7)"};
    if (total != 11) throw std::logic_error("E8 should have 11 distinguished orbits");
    return sfx[index];
  }
  if (base == "F4") {
    if (total != 4) throw std::logic_error("F4 should have 4 distinguished orbits");
    return consecutive(index);
  }
  if (base == "G2") {
    if (total != 2) throw std::logic_error("G2 should have 2 distinguished orbits");
    return consecutive(index);
  }
  if (base[0] == 'A' || base[0] == '~') {
    if (total != 1) throw std::logic_error("type A should have a unique distinguished orbit");
    return "";
  }
  return consecutive(index); // B, C, D: consecutive a_i by descending dimension
}

// factor sort key: rank desc, then series rank (E > D > C > B > A), long before short
struct factor_name {
  std::string decorated; // e.g. "D5(a1)"
  int rank;
  int series_weight;
  bool tilde;
  bool operator<(const factor_name& o) const {
    if (rank != o.rank) return rank > o.rank;
    if (series_weight != o.series_weight) return series_weight > o.series_weight;
    if (tilde != o.tilde) return !tilde;
    return decorated < o.decorated;
  }
  bool operator==(const factor_name& o) const { return decorated == o.decorated; }
};

std::string join_label(std::vector<factor_name> parts) {
  if (parts.empty()) return "1";
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i) os << "+";
    if (j - i > 1) os << (j - i);
    os << parts[i].decorated;
    i = j;
  }
  return os.str();
}

} // namespace

std::vector<generated_diagram> generate_diagrams(const root_system& rs) {
  const series ser = rs.type().ser;
  if (ser == series::B || ser == series::C)
    throw config_error("diagram generation is not implemented for series B/C");

  const int n = rs.rank();
  const auto& A = rs.cartan_matrix();

  std::map<std::vector<int>, std::string> by_weights;

  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    auto comps = split_components(rs, s);

    // per-component distinguished choices
    std::vector<std::vector<dist_weighting>> choices;
    std::vector<std::string> bases;
    for (const auto& c : comps) {
      bases.push_back(classify_component(rs, c));
      choices.push_back(distinguished_weightings(rs, c));
      if (choices.back().empty()) throw std::logic_error("component without distinguished orbit");
    }

    std::vector<size_t> pick(comps.size(), 0);
    for (;;) {
      // assemble d on S
      std::vector<int> dS(n, 0);
      std::vector<factor_name> parts;
      for (size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& dw = choices[ci][pick[ci]];
        for (size_t t = 0; t < comps[ci].size(); ++t) dS[comps[ci][t]] = dw.weights[t];
        const std::string& base = bases[ci];
        factor_name fn;
        fn.decorated = base + decoration(base, pick[ci], choices[ci].size());
        fn.tilde = base[0] == '~';
        std::string core = fn.tilde ? base.substr(1) : base;
        fn.series_weight = core[0] - 'A';
        fn.rank = std::stoi(core.substr(1));
        parts.push_back(std::move(fn));
      }

      // solve for the defining element: sum_{s in S} c_s alpha_s^vee with
      // alpha_t(h) = dS[t] on S
      const int m = static_cast<int>(s.size());
      std::vector<std::vector<rational>> M(m, std::vector<rational>(m + 1));
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) M[r][c] = A[s[r]][s[c]];
        M[r][m] = dS[s[r]];
      }
      for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
          if (M[r][col] != 0) { piv = r; break; }
        assert(piv >= 0);
        std::swap(M[col], M[piv]);
        for (int r = 0; r < m; ++r) {
          if (r == col || M[r][col] == 0) continue;
          rational f = M[r][col] / M[col][col];
          for (int c = col; c <= m; ++c) M[r][c] -= f * M[col][c];
        }
      }
      std::vector<rational> coef(m);
      for (int r = 0; r < m; ++r) coef[r] = M[r][m] / M[r][r];

      // values on all simple roots
      std::vector<rational> v(n, 0);
      for (int i = 0; i < n; ++i)
        for (int r = 0; r < m; ++r) v[i] += coef[r] * A[i][s[r]];

      // conjugate into the dominant chamber
      for (long guard = 0;; ++guard) {
        assert(guard < 100000);
        int neg = -1;
        for (int i = 0; i < n; ++i)
          if (v[i] < 0) { neg = i; break; }
        if (neg < 0) break;
        rational vi = v[neg];
        for (int j = 0; j < n; ++j) v[j] -= vi * A[j][neg];
      }

      std::vector<int> weights(n);
      for (int i = 0; i < n; ++i) {
        assert(denominator(v[i]) == 1);
        long w = static_cast<long>(numerator(v[i]));
        assert(w >= 0 && w <= 2);
        weights[i] = static_cast<int>(w);
      }

      std::string label = join_label(parts);
      auto it = by_weights.find(weights);
      if (it == by_weights.end()) by_weights.emplace(weights, label);
      else if (it->second != label)
        throw std::logic_error("same diagram from differently-labelled pairs: " +
                               it->second + " vs " + label);

      // next combination
      size_t ci = 0;
      while (ci < pick.size() && ++pick[ci] == choices[ci].size()) pick[ci++] = 0;
      if (ci == pick.size()) break;
    }
  }

  // primed labels where two non-conjugate Levi classes share a type (E7)
  std::map<std::string, std::vector<std::vector<int>>> collisions;
  for (const auto& [w, l] : by_weights) collisions[l].push_back(w);
  std::vector<generated_diagram> out;
  for (const auto& [w, l] : by_weights) out.push_back({w, l});

  for (auto& [label, ws] : collisions) {
    if (ws.size() == 1) continue;
    if (rs.type().ser == series::D) continue; // labels unused there (partition labels ship instead)
    if (!(rs.type().ser == series::E && rs.rank() == 7) || ws.size() != 2)
      throw std::logic_error("unexpected label collision: " + label);
    static const std::map<std::string, int> primed_b = {
        {"3A1", 31}, {"A3+A1", 17}, {"A5", 9}};
    auto itb = primed_b.find(label);
    if (itb == primed_b.end()) throw std::logic_error("no prime rule for " + label);
    // b = (2*|Phi_0^+| + |Phi_1^+|)/2 decides which class gets the prime
    auto b_of = [&](const std::vector<int>& w) {
      long zero = 0, one = 0;
      for (int i = 0; i < rs.num_positive(); ++i) {
        long val = 0;
        const auto& c = rs.positive_root(i).coeffs;
        for (int j = 0; j < n; ++j) val += c[j] * w[j];
        if (val == 0) ++zero;
        else if (val == 1) ++one;
      }
      return (2 * zero + one) / 2;
    };
    bool paren = label.find('+') != std::string::npos || label[0] == '3';
    auto prime_name = [&](bool two) {
      std::string core = paren ? "(" + label + ")" : label;
      return core + (two ? "''" : "'");
    };
    for (auto& gd : out)
      if (gd.label == label)
        gd.label = prime_name(b_of(gd.weights) != itb->second);
  }

  return out;
}

} // namespace liegram
