#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charkit/element_set.hpp"
#include "charkit/permutation.hpp"

namespace charkit {

using Index = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Order cap used when none is given: 5000, or CHARKIT_MAX_ORDER if set.
std::size_t default_order_cap();

struct ClosureOptions {
  std::size_t order_cap = 0;  // 0 selects default_order_cap()
  std::string name;
};

// A finite permutation group with every element enumerated. Elements are
// sorted lexicographically by their image arrays, so the identity is index 0
// and indices are reproducible. Immutable once built.
class Group {
 public:
  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::uint64_t exponent() const { return exponent_; }

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Index>& generator_indices() const { return generator_indices_; }

  const Permutation& element(Index i) const { return elements_[i]; }
  std::optional<Index> index_of(const Permutation& p) const;

  static constexpr Index identity() { return 0; }
  Index multiply(Index a, Index b) const { return table_[std::size_t{a} * order() + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  // x^-1 g x
  Index conjugate(Index g, Index x) const { return multiply(multiply(inverse(x), g), x); }
  // a^-1 b^-1 a b
  Index commutator(Index a, Index b) const {
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
  }
  Index power(Index a, std::uint64_t k) const;
  std::uint32_t element_order(Index a) const { return element_orders_[a]; }

  // Conjugacy classes, ordered by their smallest element, which is also the
  // stored representative. Class 0 is the identity class.
  std::size_t class_count() const { return classes_.size(); }
  std::uint32_t class_of(Index g) const { return class_of_[g]; }
  const std::vector<Index>& class_members(std::size_t c) const { return classes_[c]; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  Index class_representative(std::size_t c) const { return classes_[c].front(); }
  std::uint32_t inverse_class(std::size_t c) const { return inverse_class_[c]; }
  // Class of rep^k.
  std::uint32_t power_class(std::size_t c, std::uint64_t k) const {
    return class_of(power(class_representative(c), k));
  }

 private:
  friend GroupPtr closure(std::size_t degree, std::span<const Permutation> generators,
                          const ClosureOptions& options);
  Group() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::uint64_t exponent_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Index> generator_indices_;
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> table_;
  std::vector<Index> inverse_;
  std::vector<std::uint32_t> element_orders_;
  std::vector<std::vector<Index>> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> inverse_class_;
};

// Breadth-first closure of the generators. Throws InputError on malformed
// generators and SizeError once the order exceeds the cap.
GroupPtr closure(std::size_t degree, std::span<const Permutation> generators,
                 const ClosureOptions& options = {});

// A subgroup of a parent group, stored as a set of parent element indices.
class Subgroup {
 public:
  // Throws InputError if `members` is not closed under multiplication.
  Subgroup(GroupPtr parent, ElementSet members);

  static Subgroup trivial(const GroupPtr& parent);
  static Subgroup whole(const GroupPtr& parent);

  const Group& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const ElementSet& members() const { return members_; }
  std::size_t order() const { return order_; }
  bool contains(Index g) const { return members_.test(g); }
  bool is_normal() const { return normal_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }
  // Small generating set, picked greedily in ascending element order.
  const std::vector<Index>& generators() const { return generators_; }
  std::vector<Index> elements() const { return members_.indices(); }

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  struct Trusted {};
  Subgroup(GroupPtr parent, ElementSet members, std::vector<Index> generators, Trusted);
  friend Subgroup generated_subgroup(const GroupPtr&, std::span<const Index>);

  GroupPtr parent_;
  ElementSet members_;
  std::vector<Index> generators_;
  std::size_t order_ = 0;
  bool normal_ = false;
};

// Canonical order: ascending order, then canonical_compare on member sets.
bool canonical_less(const Subgroup& a, const Subgroup& b);

Subgroup generated_subgroup(const GroupPtr& parent, std::span<const Index> generators);
// Smallest subgroup of `ambient` containing `seeds` that is normalized by `ambient`.
Subgroup normal_closure_in(const Subgroup& ambient, std::span<const Index> seeds);
Subgroup normal_closure(const GroupPtr& parent, std::span<const Index> seeds);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup center(const GroupPtr& parent);
bool is_abelian(const Subgroup& h);

// [H, H]
Subgroup commutator_subgroup(const Subgroup& h);
// H, H', H'', ... down to the first repeated term.
std::vector<Subgroup> derived_series(const Subgroup& h);

// Least i with K^(i) contained in N, i.e. the derived length of K/N.
// Throws ContainmentError if N is not inside K, PreconditionError if N is
// not normal in the parent, InputError if K/N is not solvable.
std::size_t derived_length_of_quotient(const Subgroup& k, const Subgroup& n);

// All normal subgroups sorted canonically.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

struct Classification {
  bool solvable = false;
  bool supersolvable = false;
  std::vector<Subgroup> chief_series;  // 1 = N_0 < N_1 < ... < N_k = G
};

Classification classify(const GroupPtr& g);

}  // namespace charkit
