#pragma once

#include "qcrystal/graph.hpp"

#include <map>

namespace qcrystal {

using DropVector = std::vector<int>;

struct MultiplicityTable {
  CartanSpec spec;
  std::vector<int> lambda;
  std::optional<int> depth;  // unset for a complete finite table
  std::map<DropVector, long long> mult;
  long long at(const DropVector& k) const;
  long long total() const;
};

struct PositiveRoot {
  std::vector<int> coords;  // simple-root coordinates
  long long mult = 1;
};

// Positive roots of height at most max_height (all of them for finite types).
std::vector<PositiveRoot> positive_roots(const CartanSpec& spec, int max_height);

long long weyl_dim(const CartanSpec& spec, const std::vector<int>& lambda);
MultiplicityTable freudenthal(const CartanSpec& spec, const std::vector<int>& lambda, std::optional<int> depth);

// Per-drop node counts against the table, up to the table depth; one line per discrepancy.
std::vector<std::string> compare(const CrystalGraph& g, const MultiplicityTable& t);

json table_to_json(const MultiplicityTable& t);

}  // namespace qcrystal
