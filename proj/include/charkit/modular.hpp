#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace charkit {

namespace modp {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint64_t n);
// Smallest generator of the multiplicative group mod p.
std::uint32_t primitive_root(std::uint32_t p);

inline std::uint32_t reduce_signed(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace modp

// Arithmetic mod a prime p with p = 1 (mod e) and a fixed primitive e-th root
// of unity zeta, so that the cyclotomic integers Z[exp(2 pi i / e)] map to
// F_p by sending the root of unity to zeta.
struct ModularField {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::uint32_t zeta = 1;
  std::vector<std::uint32_t> zeta_powers;  // zeta^0 .. zeta^(e-1)

  // Smallest prime p = 1 (mod e) with p > max(2 * order, above).
  static ModularField for_exponent(std::uint64_t e, std::size_t order, std::uint32_t above = 0);
  // Same prime, e' | e, root zeta^(e/e').
  ModularField restricted_to(std::uint64_t e_sub) const;

  std::uint32_t root_power(std::int64_t j) const {
    const std::int64_t m = j % static_cast<std::int64_t>(e);
    return zeta_powers[static_cast<std::size_t>(m < 0 ? m + e : m)];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t inv(std::uint32_t a) const { return modp::inv_mod(a, p); }
  std::uint32_t from_int(std::int64_t v) const { return modp::reduce_signed(v, p); }

  // sum_j m[j] zeta^j
  std::uint32_t evaluate(std::span<const std::int32_t> multiplicities) const;

  bool operator==(const ModularField& o) const { return p == o.p && e == o.e && zeta == o.zeta; }
};

// Dense row-major matrix over F_p.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

// In-place reduced row echelon form; returns the pivot columns. Rows past the
// rank are left zero.
std::vector<std::size_t> rref(ModMatrix& m, std::uint32_t p);

// Basis (as rows, in RREF) of {x : A x = 0}.
ModMatrix nullspace(const ModMatrix& a, std::uint32_t p);

// Coefficients c_0..c_n of det(x I - A), via reduction to Hessenberg form.
std::vector<std::uint32_t> characteristic_polynomial(const ModMatrix& a, std::uint32_t p);

// All roots in F_p, ascending, without multiplicity.
std::vector<std::uint32_t> roots_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace charkit
