#pragma once

#include <vector>

#include "charkit/character.hpp"
#include "charkit/group.hpp"

namespace charkit {

// A subgroup of a root group re-closed as a permutation group in its own
// right, so it has its own classes and character table. Local element i is
// root element to_root[i]; both orders are lexicographic, so to_root ascends.
struct GroupView {
  Subgroup subgroup;
  GroupPtr group;
  std::vector<Index> to_root;

  Index to_local(Index root) const;
};

GroupView make_view(const Subgroup& s);

// Restriction of a class function on `source` to the smaller `target`. The
// eigenvalue multiplicities move to the target's exponent, the modular image
// is copied class by class, the prime is unchanged.
ClassFunction restrict(const ClassFunction& f, const GroupView& source, const GroupView& target);

inline bool is_irreducible(const ClassFunction& f) { return inner_product(f, f) == 1; }

}  // namespace charkit
