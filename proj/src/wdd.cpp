#include "liegram/wdd.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace liegram {

namespace detail {
// generated from data/ at configure time
const char* embedded_table(const std::string& name);
const std::vector<std::string>& embedded_table_names();
} // namespace detail

bool condition_holds(bullet_condition c, long p) {
  switch (c) {
    case bullet_condition::always: return true;
    case bullet_condition::p_ne_2: return p != 2;
    case bullet_condition::p_ne_3: return p != 3;
    case bullet_condition::p_ne_5: return p != 5;
    case bullet_condition::p_ne_2_3: return p != 2 && p != 3;
  }
  return true;
}

std::string condition_str(bullet_condition c) {
  switch (c) {
    case bullet_condition::always: return "always";
    case bullet_condition::p_ne_2: return "p!=2";
    case bullet_condition::p_ne_3: return "p!=3";
    case bullet_condition::p_ne_5: return "p!=5";
    case bullet_condition::p_ne_2_3: return "p!=2,3";
  }
  return "always";
}

std::optional<bullet_condition> parse_condition(const std::string& s) {
  if (s == "always" || s == "-") return bullet_condition::always;
  if (s == "p!=2") return bullet_condition::p_ne_2;
  if (s == "p!=3") return bullet_condition::p_ne_3;
  if (s == "p!=5") return bullet_condition::p_ne_5;
  if (s == "p!=2,3") return bullet_condition::p_ne_2_3;
  return std::nullopt;
}

std::string weighted_diagram::weights_str() const {
  std::string out;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights[i]);
  }
  return out;
}

int extend_weight(const root_system& rs, const weighted_diagram& d, const root& a) {
  int v = 0;
  for (int i = 0; i < rs.rank(); ++i) v += a.coeffs[i] * d.weights[i];
  return a.positive ? v : -v;
}

int extend_weight(const root_system& rs, const weighted_diagram& d, int positive_idx) {
  return extend_weight(rs, d, rs.positive_root(positive_idx));
}

int b_invariant(const root_system& rs, const weighted_diagram& d) {
  long zero = 0, one = 0;
  for (int i = 0; i < rs.num_positive(); ++i) {
    int w = extend_weight(rs, d, i);
    if (w == 0) ++zero;
    else if (w == 1) ++one;
  }
  long twice = 2 * zero + one;
  assert(twice % 2 == 0);
  return static_cast<int>(twice / 2);
}

bool is_good_prime(cartan_type t, long p) {
  if (p == 0) return true;
  switch (t.ser) {
    case series::A: return true;
    case series::B:
    case series::C:
    case series::D: return p != 2;
    case series::E: return t.rank == 8 ? (p != 2 && p != 3 && p != 5) : (p != 2 && p != 3);
    case series::F:
    case series::G: return p != 2 && p != 3;
  }
  return true;
}

namespace {

// ---- classical enumeration from partitions --------------------------------

void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) { out.push_back(cur); return; }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

bool parity_multiplicity_ok(const std::vector<int>& parts, bool even_parts_even_mult) {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  for (auto [p, m] : mult) {
    bool even_part = p % 2 == 0;
    if (even_parts_even_mult ? (even_part && m % 2 != 0) : (!even_part && m % 2 != 0))
      return false;
  }
  return true;
}

std::vector<int> eigenvalue_multiset(const std::vector<int>& parts) {
  std::vector<int> m;
  for (int p : parts)
    for (int k = p - 1; k >= 1 - p; k -= 2) m.push_back(k);
  std::sort(m.rbegin(), m.rend());
  return m;
}

std::string partition_label(const std::vector<int>& parts) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::vector<weighted_diagram> classical_diagrams(const root_system& rs) {
  const int n = rs.rank();
  const series ser = rs.type().ser;
  std::vector<weighted_diagram> out;

  auto push = [&](std::vector<int> w, std::string label, std::optional<bool> special) {
    weighted_diagram d;
    d.weights = std::move(w);
    d.label = std::move(label);
    d.special = special;
    if (special.has_value())
      d.condition = *special ? bullet_condition::always : bullet_condition::p_ne_2;
    out.push_back(std::move(d));
  };

  if (ser == series::A) {
    for (const auto& parts : partitions(n + 1)) {
      auto eps = eigenvalue_multiset(parts);
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = eps[i] - eps[i + 1];
      push(std::move(w), partition_label(parts), true); // every class in type A is special
    }
    return out;
  }

  const int big = ser == series::B ? 2 * n + 1 : 2 * n;
  for (const auto& parts : partitions(big)) {
    bool ok = ser == series::C ? parity_multiplicity_ok(parts, false)
                               : parity_multiplicity_ok(parts, true);
    if (!ok) continue;
    auto eps = eigenvalue_multiset(parts);
    std::vector<int> w(n);
    for (int i = 0; i + 1 < n; ++i) w[i] = eps[i] - eps[i + 1];
    switch (ser) {
      case series::B: w[n - 1] = eps[n - 1]; break;
      case series::C: w[n - 1] = 2 * eps[n - 1]; break;
      case series::D: {
        w[n - 2] = eps[n - 2] - eps[n - 1];
        w[n - 1] = eps[n - 2] + eps[n - 1];
        break;
      }
      default: break;
    }
    if (ser == series::D) {
      bool very_even = eps[n - 1] > 0;
      auto renumber = [&](std::vector<int> v) {
        if (n == 4) std::swap(v[1], v[2]); // central node is alpha_3 in rank 4
        return v;
      };
      if (very_even) {
        std::vector<int> w2 = w;
        std::swap(w2[n - 2], w2[n - 1]);
        push(renumber(w), partition_label(parts) + " I", std::nullopt);
        push(renumber(std::move(w2)), partition_label(parts) + " II", std::nullopt);
      } else {
        push(renumber(std::move(w)), partition_label(parts), std::nullopt);
      }
    } else {
      push(std::move(w), partition_label(parts), std::nullopt);
    }
  }
  return out;
}

// ---- embedded tables -------------------------------------------------------

struct table_row {
  std::string label;
  std::vector<int> weights;
  std::optional<bool> special;
  bullet_condition condition;
};

std::string table_name_for(cartan_type t) {
  std::string s = t.str();
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string load_table_text(const std::string& name) {
  if (const char* dir = std::getenv("LIEGRAM_DATA_DIR")) {
    std::ifstream in(std::string(dir) + "/" + name + ".txt");
    if (!in) throw data_error("cannot open " + std::string(dir) + "/" + name + ".txt");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  const char* text = detail::embedded_table(name);
  if (!text) throw data_error("no embedded diagram table for type " + name);
  return text;
}

std::vector<table_row> parse_table(const std::string& text, int rank, const std::string& name) {
  std::vector<table_row> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string label, weights, special, cond;
    if (!std::getline(ls, label, '|') || !std::getline(ls, weights, '|') ||
        !std::getline(ls, special, '|') || !std::getline(ls, cond))
      throw data_error("malformed row in table " + name + " line " + std::to_string(lineno));
    table_row row;
    row.label = label;
    std::istringstream ws(weights);
    std::string tok;
    while (std::getline(ws, tok, ',')) row.weights.push_back(std::stoi(tok));
    if (static_cast<int>(row.weights.size()) != rank)
      throw data_error("wrong weight count in table " + name + " line " + std::to_string(lineno));
    if (special == "yes") row.special = true;
    else if (special == "no") row.special = false;
    else if (special == "unknown") row.special = std::nullopt;
    else throw data_error("bad special flag in table " + name + " line " + std::to_string(lineno));
    auto c = parse_condition(cond);
    if (!c) throw data_error("bad condition in table " + name + " line " + std::to_string(lineno));
    row.condition = *c;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw data_error("empty diagram table " + name);
  return rows;
}

} // namespace

std::vector<weighted_diagram> enumerate_diagrams(const root_system& rs) {
  std::vector<weighted_diagram> out;
  const series ser = rs.type().ser;
  if (ser == series::E || ser == series::F || ser == series::G) {
    const std::string name = table_name_for(rs.type());
    auto rows = parse_table(load_table_text(name), rs.rank(), name);
    for (auto& r : rows) {
      weighted_diagram d;
      d.weights = std::move(r.weights);
      d.label = std::move(r.label);
      d.special = r.special;
      d.condition = r.condition;
      out.push_back(std::move(d));
    }
  } else {
    out = classical_diagrams(rs);
    // attach specialness metadata for the classical types that ship a table
    if (ser != series::A) {
      const std::string name = table_name_for(rs.type());
      bool have = false;
      try {
        load_table_text(name);
        have = true;
      } catch (const data_error&) {
        have = false;
      }
      if (have) {
        auto rows = parse_table(load_table_text(name), rs.rank(), name);
        std::map<std::vector<int>, const table_row*> by_w;
        for (auto& r : rows) by_w[r.weights] = &r;
        for (auto& d : out) {
          auto it = by_w.find(d.weights);
          if (it != by_w.end()) {
            d.special = it->second->special;
            d.condition = it->second->condition;
          }
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const weighted_diagram& a, const weighted_diagram& b) {
    int ba = b_invariant(rs, a), bb = b_invariant(rs, b);
    if (ba != bb) return ba > bb;
    return a.label < b.label;
  });
  return out;
}

membership lookup_membership(const root_system& rs, const weighted_diagram& d, long p) {
  if (!d.special.has_value())
    throw data_error("no specialness metadata for " + rs.type().str() + " diagram " + d.label);
  bool special = *d.special;
  bool in_bullet = special || condition_holds(d.condition, p);
  return {special, in_bullet};
}

namespace {
std::string normalize_label(std::string s) {
  // accept the UTF-8 tilde form of short-root labels
  for (std::string from : {std::string("\xc3\x83"), std::string("A\xcc\x83")}) {
    size_t pos;
    while ((pos = s.find(from)) != std::string::npos) s.replace(pos, from.size(), "~A");
  }
  return s;
}
} // namespace

std::optional<weighted_diagram> find_diagram(const root_system& rs, const std::string& label) {
  std::string want = normalize_label(label);
  for (auto& d : enumerate_diagrams(rs))
    if (d.label == want) return d;
  return std::nullopt;
}

std::vector<std::pair<std::string, uint64_t>> table_checksums() {
  std::vector<std::pair<std::string, uint64_t>> out;
  for (const auto& name : detail::embedded_table_names()) {
    const char* text = detail::embedded_table(name);
    uint64_t h = 1469598103934665603ull;
    for (const char* p = text; *p; ++p) {
      h ^= static_cast<unsigned char>(*p);
      h *= 1099511628211ull;
    }
    out.emplace_back(name, h);
  }
  return out;
}

} // namespace liegram
