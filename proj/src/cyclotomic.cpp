#include "charkit/cyclotomic.hpp"

#include "charkit/error.hpp"

namespace charkit {
namespace {

using Poly = std::vector<std::int64_t>;

// Exact division by a monic polynomial.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw InternalError("cyclotomic division left a remainder");
  return quot;
}

Poly cyclotomic(std::uint32_t n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic(d));
  return p;
}

}  // namespace

CyclotomicRing::CyclotomicRing(std::uint32_t e) : e_(e), phi_(cyclotomic(e)) {}

std::vector<std::int64_t> CyclotomicRing::reduce(std::span<const std::int64_t> cyclic) const {
  Poly r(cyclic.begin(), cyclic.end());
  const std::size_t dn = rank();
  for (std::size_t i = r.size(); i-- > dn;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) r[i - dn + j] -= c * phi_[j];
  }
  r.resize(dn);
  return r;
}

void accumulate_cyclic_product(std::span<std::int64_t> out, std::span<const std::int32_t> a,
                               std::span<const std::int32_t> b, std::int64_t w) {
  const std::size_t e = out.size();
  for (std::size_t i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      if (b[j] == 0) continue;
      out[(i + j) % e] += w * a[i] * b[j];
    }
  }
}

}  // namespace charkit
