#include "charkit/modular.hpp"

#include <string>

#include "charkit/error.hpp"
#include "charkit/simd/kernels.hpp"

namespace charkit {

namespace modp {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % m);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % m);
    exp >>= 1;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw InternalError("inverse of zero mod " + std::to_string(p));
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalError("no primitive root");
}

}  // namespace modp

ModularField ModularField::for_exponent(std::uint64_t e, std::size_t order, std::uint32_t above) {
  std::uint64_t lower = std::max<std::uint64_t>(2 * std::uint64_t{order}, above);
  // First p = 1 (mod e) strictly above `lower`.
  std::uint64_t p = (lower / e + 1) * e + 1;
  while (!modp::is_prime(p)) p += e;
  if (p > simd::kMaxModulus) throw SizeError("working prime exceeds 2^26");
  ModularField f;
  f.p = static_cast<std::uint32_t>(p);
  f.e = static_cast<std::uint32_t>(e);
  f.zeta = static_cast<std::uint32_t>(modp::pow_mod(modp::primitive_root(f.p), (p - 1) / e, p));
  f.zeta_powers.resize(f.e);
  std::uint32_t z = 1;
  for (std::uint32_t j = 0; j < f.e; ++j) {
    f.zeta_powers[j] = z;
    z = f.mul(z, f.zeta);
  }
  return f;
}

ModularField ModularField::restricted_to(std::uint64_t e_sub) const {
  if (e_sub == 0 || e % e_sub != 0) throw InternalError("sub-exponent does not divide exponent");
  ModularField f;
  f.p = p;
  f.e = static_cast<std::uint32_t>(e_sub);
  const std::uint32_t step = e / f.e;
  f.zeta = zeta_powers[step % e];
  f.zeta_powers.resize(f.e);
  for (std::uint32_t j = 0; j < f.e; ++j) f.zeta_powers[j] = zeta_powers[(j * step) % e];
  return f;
}

std::uint32_t ModularField::evaluate(std::span<const std::int32_t> multiplicities) const {
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < multiplicities.size(); ++j) {
    if (multiplicities[j] == 0) continue;
    acc += std::uint64_t{from_int(multiplicities[j])} * zeta_powers[j] % p;
  }
  return static_cast<std::uint32_t>(acc % p);
}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = row(a), rb = row(b);
  for (std::size_t c = 0; c < cols_; ++c) std::swap(ra[c], rb[c]);
}

std::vector<std::size_t> rref(ModMatrix& m, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, r);
    const std::uint32_t inv = modp::inv_mod(m.at(r, c), p);
    for (auto& v : m.row(r)) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      simd::axpy_mod(m.row(i), m.row(r), p - m.at(i, c), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

ModMatrix nullspace(const ModMatrix& a, std::uint32_t p) {
  ModMatrix m = a;
  const auto pivots = rref(m, p);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  ModMatrix basis(n - pivots.size(), n);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.at(k, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.at(k, pivots[i]) = m.at(i, free) ? p - m.at(i, free) : 0;
    ++k;
  }
  rref(basis, p);
  return basis;
}

std::vector<std::uint32_t> characteristic_polynomial(const ModMatrix& a, std::uint32_t p) {
  const std::size_t n = a.rows();
  ModMatrix h = a;
  auto mulp = [p](std::uint32_t x, std::uint32_t y) {
    return static_cast<std::uint32_t>(std::uint64_t{x} * y % p);
  };
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 0; m + 2 < n; ++m) {
    std::size_t i = m + 1;
    while (i < n && h.at(i, m) == 0) ++i;
    if (i == n) continue;
    if (i != m + 1) {
      h.swap_rows(i, m + 1);
      for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, i), h.at(r, m + 1));
    }
    const std::uint32_t inv = modp::inv_mod(h.at(m + 1, m), p);
    for (std::size_t r = m + 2; r < n; ++r) {
      const std::uint32_t u = mulp(h.at(r, m), inv);
      if (u == 0) continue;
      simd::axpy_mod(h.row(r), h.row(m + 1), p - u, p);
      for (std::size_t rr = 0; rr < n; ++rr)
        h.at(rr, m + 1) = static_cast<std::uint32_t>((h.at(rr, m + 1) + std::uint64_t{u} * h.at(rr, r)) % p);
    }
  }
  // polys[k] = det(x I - H_k) for the leading k x k block.
  std::vector<std::vector<std::uint32_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint32_t> next(k + 1, 0);
    const auto& prev = polys[k - 1];
    const std::uint32_t diag = h.at(k - 1, k - 1);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j + 1] = (next[j + 1] + prev[j]) % p;
      next[j] = (next[j] + p - mulp(diag, prev[j])) % p;
    }
    std::uint32_t t = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      // t = prod_{j=i+1}^{k-1} h[j][j-1]
      t = mulp(t, h.at(i + 1, i));
      const std::uint32_t coeff = mulp(t, h.at(i, k - 1));
      if (coeff == 0) continue;
      const auto& q = polys[i];
      for (std::size_t j = 0; j < q.size(); ++j) next[j] = (next[j] + p - mulp(coeff, q[j])) % p;
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

std::vector<std::uint32_t> roots_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  std::vector<std::uint32_t> roots;
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t j = poly.size(); j-- > 0;) acc = (acc * x + poly[j]) % p;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace charkit
