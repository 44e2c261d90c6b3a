#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "charkit/group.hpp"

namespace charkit {

// Named families. Parameters by family:
//   cyclic {n}              C_n acting on n points
//   dihedral {2n}           symmetries of an n-gon (2n >= 6)
//   quaternion {4m}         dicyclic group of order 4m, regular action; 8 gives Q8
//   extraspecial {p^3, t}   t = 1: Heisenberg group of exponent p; t = 2: C_{p^2} x| C_p
//   semidirect {p, q}       C_p x| C_q acting by x -> r x for r of order q mod p
//   S3, S4                  natural action
//   SL23                    SL(2,3) on the nonzero vectors of GF(3)^2
// Throws InputError for unknown names or unsupported parameters.
GroupPtr make_family(std::string_view name, const std::vector<long>& params);

// Parses "cyclic-6", "extraspecial-27", "extraspecial-27-p2", "semidirect-7-3",
// "S4" and products joined by '*', e.g. "cyclic-3*S3". The group is named `spec`.
GroupPtr parse_family(std::string_view spec);

// Product acting on the disjoint union of the point sets.
GroupPtr direct_product(const Group& a, const Group& b, std::string name);

// Right regular representation of a group on {0, ..., order-1} given its
// multiplication rule and generators.
GroupPtr regular_group(std::size_t order, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                       const std::vector<std::size_t>& generators, std::string name);

struct CorpusEntry {
  std::string name;  // family spec accepted by parse_family
  std::size_t order = 0;
  bool solvable = true;
  bool supersolvable = true;
};

const std::vector<CorpusEntry>& builtin_corpus();

}  // namespace charkit
