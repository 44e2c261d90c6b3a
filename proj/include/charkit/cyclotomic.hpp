#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace charkit {

// Z[zeta_e] in the power basis 1, zeta, ..., zeta^(phi(e)-1). Used for exact
// checks that must not rely on the modular image.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(std::uint32_t e);

  std::uint32_t order() const { return e_; }
  std::size_t rank() const { return phi_.size() - 1; }
  // Monic coefficients of the e-th cyclotomic polynomial, constant term first.
  const std::vector<std::int64_t>& polynomial() const { return phi_; }

  // Reduces an element of Z[x]/(x^e - 1) (length e) to the canonical basis.
  std::vector<std::int64_t> reduce(std::span<const std::int64_t> cyclic) const;

 private:
  std::uint32_t e_;
  std::vector<std::int64_t> phi_;
};

// Cyclic convolution in Z[x]/(x^e - 1), accumulated into `out` with weight `w`:
// out += w * (a * b).
void accumulate_cyclic_product(std::span<std::int64_t> out, std::span<const std::int32_t> a,
                               std::span<const std::int32_t> b, std::int64_t w);

}  // namespace charkit
