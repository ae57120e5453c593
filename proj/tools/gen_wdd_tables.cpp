// Regenerates the weighted-Dynkin-diagram tables for the exceptional types.
// Labels and weights come from the Levi/distinguished-orbit enumeration;
// specialness and the bullet-set conditions come from the classification of
// the non-special classes per type (keyed by label, cross-checked by b_d).
//
// Usage: gen_wdd_tables <TYPE> [> data/<type>.txt]

#include <cstdio>
#include <iostream>
#include <map>

#include "liegram/rootsys.hpp"
#include "liegram/wdd.hpp"
#include "liegram/wdd_gen.hpp"

using namespace liegram;

namespace {

struct nonspecial_row {
  const char* label;
  int b;
  const char* condition;
};

// label, b_d, condition for membership in the bullet set at bad p
const std::map<std::string, std::vector<nonspecial_row>> k_nonspecial = {
    {"G2", {{"A1", 3, "p!=3"}, {"~A1", 2, "p!=2"}}},
    {"F4",
     {{"A1", 16, "p!=2"},
      {"A2+~A1", 7, "p!=2"},
      {"B2", 6, "p!=2"},
      {"~A2+A1", 6, "p!=3"},
      {"C3(a1)", 5, "p!=2"}}},
    {"E6",
     {{"3A1", 16, "p!=2"}, {"2A2+A1", 9, "p!=3"}, {"A3+A1", 8, "p!=2"}, {"A5", 4, "p!=2"}}},
    {"E7",
     {{"(3A1)'", 31, "p!=2"},
      {"4A1", 28, "p!=2"},
      {"2A2+A1", 18, "p!=3"},
      {"(A3+A1)'", 17, "p!=2"},
      {"A3+2A1", 16, "p!=2"},
      {"D4+A1", 12, "p!=2"},
      {"A5'", 9, "p!=2"},
      {"A5+A1", 9, "p!=3"},
      {"D6(a2)", 8, "p!=2"},
      {"D6", 4, "p!=2"}}},
    {"E8",
     {{"3A1", 64, "p!=2"},
      {"4A1", 56, "p!=2"},
      {"A2+3A1", 43, "p!=2"},
      {"2A2+A1", 39, "p!=3"},
      {"A3+A1", 38, "p!=2"},
      {"2A2+2A1", 36, "p!=3"},
      {"A3+2A1", 34, "p!=2"},
      {"A3+A2+A1", 29, "p!=2"},
      {"D4+A1", 28, "p!=2"},
      {"2A3", 26, "p!=2"},
      {"A5", 22, "p!=2"},
      {"A4+A3", 20, "p!=5"},
      {"A5+A1", 19, "p!=2,3"},
      {"D5(a1)+A2", 19, "p!=2"},
      {"D6(a2)", 18, "p!=2"},
      {"E6(a3)+A1", 18, "p!=3"},
      {"E7(a5)", 17, "p!=2"},
      {"D5+A1", 16, "p!=2"},
      {"D6", 12, "p!=2"},
      {"A7", 11, "p!=2"},
      {"E6+A1", 9, "p!=3"},
      {"E7(a2)", 8, "p!=2"},
      {"D7", 7, "p!=2"},
      {"E7", 4, "p!=2"}}},
};

} // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_wdd_tables <TYPE>\n";
    return 2;
  }
  const std::string type_str = argv[1];
  root_system rs(parse_cartan_type(type_str));
  auto rows = generate_diagrams(rs);

  auto itns = k_nonspecial.find(type_str);
  if (itns == k_nonspecial.end()) {
    std::cerr << "no non-special classification for " << type_str << "\n";
    return 2;
  }
  std::map<std::string, nonspecial_row> ns;
  for (const auto& r : itns->second) ns.emplace(r.label, r);

  // sort: descending b_d, then label
  std::vector<std::pair<int, generated_diagram>> sorted;
  for (auto& r : rows) {
    weighted_diagram d;
    d.weights = r.weights;
    sorted.emplace_back(b_invariant(rs, d), std::move(r));
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second.label < b.second.label;
  });

  int used = 0;
  std::printf("# Weighted Dynkin diagrams, type %s.\n", type_str.c_str());
  std::printf("# columns: label|weights|special|bullet-condition\n");
  for (const auto& [b, r] : sorted) {
    std::string w;
    for (size_t i = 0; i < r.weights.size(); ++i) {
      if (i) w += ',';
      w += std::to_string(r.weights[i]);
    }
    auto it = ns.find(r.label);
    if (it != ns.end()) {
      if (it->second.b != b) {
        std::cerr << "b_d mismatch for " << r.label << ": computed " << b
                  << ", classification says " << it->second.b << "\n";
        return 1;
      }
      std::printf("%s|%s|no|%s\n", r.label.c_str(), w.c_str(), it->second.condition);
      ++used;
    } else {
      std::printf("%s|%s|yes|always\n", r.label.c_str(), w.c_str());
    }
  }
  if (used != static_cast<int>(itns->second.size())) {
    std::cerr << "only matched " << used << " of " << itns->second.size()
              << " non-special labels\n";
    return 1;
  }
  std::fprintf(stderr, "%zu diagrams\n", sorted.size());
  return 0;
}
