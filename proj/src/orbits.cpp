#include "charkit/orbits.hpp"

#include <algorithm>

#include "charkit/error.hpp"
#include "charkit/modular.hpp"

namespace charkit {

namespace {

std::uint32_t determinant(std::vector<std::uint32_t> m, std::size_t n, std::uint32_t q) {
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[piv * n + k], m[col * n + k]);
      det = (q - det) % q;
    }
    const std::uint32_t a = m[col * n + col];
    det = det * a % q;
    const std::uint32_t inv = modp::inv_mod(a, q);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint64_t f = std::uint64_t{m[r * n + col]} * inv % q;
      if (f == 0) continue;
      for (std::size_t k = col; k < n; ++k)
        m[r * n + k] = static_cast<std::uint32_t>((m[r * n + k] + q - f * m[col * n + k] % q) % q);
    }
  }
  return static_cast<std::uint32_t>(det);
}

std::size_t vector_count(const VectorAction& a, std::size_t cap) {
  if (a.q < 2 || !modp::is_prime(a.q)) throw InputError("only prime fields are supported");
  if (a.dim == 0) throw InputError("dimension must be positive");
  std::size_t count = 1;
  for (std::size_t i = 0; i < a.dim; ++i) {
    count *= a.q;
    if (count > cap) throw SizeError("vector space exceeds the configured cap");
  }
  return count;
}

}  // namespace

GroupPtr vector_permutation_group(const VectorAction& action, std::size_t vector_cap) {
  const std::size_t total = vector_count(action, std::min(vector_cap, Permutation::kMaxDegree));
  const std::size_t n = action.dim;
  const std::uint32_t q = action.q;
  std::vector<Permutation> perms;
  for (const auto& g : action.generators) {
    if (g.size() != n * n) throw InputError("generator matrix has the wrong shape");
    std::vector<std::uint32_t> m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) m[i] = modp::reduce_signed(g[i], q);
    if (determinant(m, n, q) == 0) throw InputError("generator matrix is singular");
    std::vector<Point> img(total);
    std::vector<std::uint32_t> v(n), w(n);
    for (std::size_t x = 0; x < total; ++x) {
      for (std::size_t i = 0, t = x; i < n; ++i, t /= q) v[i] = static_cast<std::uint32_t>(t % q);
      std::size_t y = 0;
      for (std::size_t i = n; i-- > 0;) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += std::uint64_t{m[i * n + k]} * v[k];
        y = y * q + s % q;
      }
      img[x] = static_cast<Point>(y);
    }
    perms.emplace_back(std::move(img));
  }
  if (perms.empty()) perms.push_back(Permutation::identity(total));
  return closure(total, perms);
}

OrbitSummary orbit_count(const VectorAction& action, std::size_t vector_cap) {
  const GroupPtr g = vector_permutation_group(action, vector_cap);
  const std::size_t total = g->degree();
  OrbitSummary out;
  out.group_order = g->order();
  out.derived_length = derived_length_of_quotient(Subgroup::whole(g), Subgroup::trivial(g));

  std::vector<bool> seen(total, false);
  std::vector<std::size_t> stack;
  for (std::size_t v = 1; v < total; ++v) {
    if (seen[v]) continue;
    std::size_t size = 0;
    seen[v] = true;
    stack.push_back(v);
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& p : g->generators()) {
        const std::size_t y = p[x];
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    out.orbit_sizes.push_back(size);
  }
  out.orbit_count = out.orbit_sizes.size();
  return out;
}

}  // namespace charkit
