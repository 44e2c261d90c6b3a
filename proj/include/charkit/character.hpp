#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "charkit/group.hpp"
#include "charkit/modular.hpp"

namespace charkit {

// A class function whose value on each class is sum_j m[j] zeta_e^j, kept
// alongside its image in F_p. For characters the m[j] are the eigenvalue
// multiplicities of the representing matrices, which makes them canonical;
// equality tests still go through the modular image.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, ModularField field, std::vector<std::int32_t> multiplicities,
                std::vector<std::uint32_t> values);
  // Modular image obtained by evaluating the multiplicities.
  static ClassFunction from_multiplicities(GroupPtr group, ModularField field,
                                           std::vector<std::int32_t> multiplicities);
  static ClassFunction principal(GroupPtr group, ModularField field);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const ModularField& field() const { return field_; }
  std::size_t class_count() const { return values_.size(); }

  // Value at the identity class.
  std::int64_t degree() const;
  bool is_linear() const { return degree() == 1; }

  std::span<const std::int32_t> multiplicities(std::size_t c) const {
    return {multiplicities_.data() + c * field_.e, field_.e};
  }
  const std::vector<std::int32_t>& all_multiplicities() const { return multiplicities_; }
  std::uint32_t value(std::size_t c) const { return values_[c]; }
  const std::vector<std::uint32_t>& values() const { return values_; }
  std::complex<double> complex_value(std::size_t c) const;

  bool same_values(const ClassFunction& other) const { return values_ == other.values_; }

 private:
  GroupPtr group_;
  ModularField field_;
  std::vector<std::int32_t> multiplicities_;  // class-major, e entries per class
  std::vector<std::uint32_t> values_;
};

// Irr(G) in canonical order: ascending degree, then lexicographic on the
// modular images in class order. The principal character is index 0.
class CharacterTable {
 public:
  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const ModularField& field() const { return field_; }
  std::size_t size() const { return irreducibles_.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles_[i]; }
  auto begin() const { return irreducibles_.begin(); }
  auto end() const { return irreducibles_.end(); }

  // Index of the irreducible with the same modular image, if any.
  std::optional<std::size_t> find(const ClassFunction& f) const;
  std::size_t conjugate_index(std::size_t i) const { return conjugates_[i]; }
  std::size_t linear_count() const;
  // How many primes were rejected before the class matrices split.
  std::size_t prime_retries() const { return retries_; }

 private:
  friend CharacterTable character_table(const GroupPtr&, const ModularField*);
  GroupPtr group_;
  ModularField field_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::size_t> conjugates_;
  std::size_t retries_ = 0;
};

// Dixon-style table: simultaneous eigenspaces of the class-sum matrices over
// F_p, lifted to eigenvalue multiplicities through the power maps.
// With `ambient` the table reuses that field's prime (which must suit this
// group's exponent); otherwise the smallest admissible prime is used.
CharacterTable character_table(const GroupPtr& g, const ModularField* ambient = nullptr);

// Row k, column l of the class-sum matrix for class j: the number of x in
// C_j with x^-1 z_l in C_k, z_l the representative of class l.
std::vector<std::int64_t> class_matrix(const Group& g, std::size_t j);

struct Constituent {
  std::size_t index;
  std::int64_t multiplicity;
  bool operator==(const Constituent&) const = default;
};

struct Decomposition {
  std::vector<Constituent> constituents;  // ascending index
  std::size_t eta() const { return constituents.size(); }
  std::int64_t multiplicity_of(std::size_t index) const;
  bool contains(std::size_t index) const { return multiplicity_of(index) > 0; }
};

// [f, g] = |G|^-1 sum_x f(x) conj(g(x)), lifted from F_p to [0, p).
std::uint64_t inner_product(const ClassFunction& f, const ClassFunction& g);
ClassFunction conjugate(const ClassFunction& f);
ClassFunction product(const ClassFunction& f, const ClassFunction& g);
// Throws NotACharacter if the constituents do not reconstruct `theta`.
Decomposition decompose(const ClassFunction& theta, const CharacterTable& table);
// sum a_i chi_i
ClassFunction compose(const Decomposition& d, const CharacterTable& table);

Subgroup kernel(const ClassFunction& f);
// {g : (chi psi)(g) = chi(1) psi(1)}, read off the eigenvalue multisets:
// chi(g) is a scalar eps and psi(g) the scalar eps^-1.
Subgroup kernel_of_product(const ClassFunction& chi, const ClassFunction& psi);

}  // namespace charkit
