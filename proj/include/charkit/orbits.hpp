#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "charkit/group.hpp"

namespace charkit {

// Matrix group over the prime field GF(q) acting on column vectors, v -> A v.
struct VectorAction {
  std::uint32_t q = 2;
  std::size_t dim = 1;
  std::vector<std::vector<std::int64_t>> generators;  // each dim*dim, row-major
};

struct OrbitSummary {
  std::size_t orbit_count = 0;  // orbits on nonzero vectors
  std::size_t group_order = 0;
  std::size_t derived_length = 0;
  std::vector<std::size_t> orbit_sizes;  // ordered by smallest vector in the orbit
};

// Default cap on q^dim: 65535, the largest permutation degree.
constexpr std::size_t kDefaultVectorCap = 65535;

// Throws InputError for a non-prime q, malformed or singular generators, and
// SizeError if q^dim exceeds `vector_cap` or the group exceeds the order cap.
OrbitSummary orbit_count(const VectorAction& action, std::size_t vector_cap = kDefaultVectorCap);

// The action as a permutation group on all q^dim vectors (index = digits base q).
GroupPtr vector_permutation_group(const VectorAction& action, std::size_t vector_cap = kDefaultVectorCap);

}  // namespace charkit
