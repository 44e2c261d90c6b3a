#include "charkit/character.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "charkit/error.hpp"
#include "charkit/simd/kernels.hpp"

namespace charkit {

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(GroupPtr group, ModularField field,
                             std::vector<std::int32_t> multiplicities,
                             std::vector<std::uint32_t> values)
    : group_(std::move(group)),
      field_(std::move(field)),
      multiplicities_(std::move(multiplicities)),
      values_(std::move(values)) {
  const std::size_t r = group_->class_count();
  if (values_.size() != r || multiplicities_.size() != r * field_.e)
    throw InputError("class function has the wrong shape for its group");
  if (field_.e % group_->exponent() != 0)
    throw InputError("field exponent is not a multiple of the group exponent");
}

ClassFunction ClassFunction::from_multiplicities(GroupPtr group, ModularField field,
                                                 std::vector<std::int32_t> multiplicities) {
  const std::size_t r = group->class_count();
  std::vector<std::uint32_t> values(r);
  for (std::size_t c = 0; c < r; ++c)
    values[c] = field.evaluate({multiplicities.data() + c * field.e, field.e});
  return ClassFunction(std::move(group), std::move(field), std::move(multiplicities),
                       std::move(values));
}

ClassFunction ClassFunction::principal(GroupPtr group, ModularField field) {
  const std::size_t r = group->class_count();
  std::vector<std::int32_t> m(r * field.e, 0);
  for (std::size_t c = 0; c < r; ++c) m[c * field.e] = 1;
  return ClassFunction(std::move(group), std::move(field), std::move(m),
                       std::vector<std::uint32_t>(r, 1));
}

std::int64_t ClassFunction::degree() const {
  std::int64_t d = 0;
  for (auto m : multiplicities(0)) d += m;
  return d;
}

std::complex<double> ClassFunction::complex_value(std::size_t c) const {
  std::complex<double> z = 0;
  const auto m = multiplicities(c);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / field_.e;
    z += static_cast<double>(m[j]) * std::polar(1.0, angle);
  }
  return z;
}

// ---------------------------------------------------------------------------
// Table construction

std::vector<std::int64_t> class_matrix(const Group& g, std::size_t j) {
  const std::size_t r = g.class_count();
  std::vector<std::int64_t> a(r * r, 0);
  for (std::size_t l = 0; l < r; ++l) {
    const Index z = g.class_representative(l);
    for (Index x : g.class_members(j)) a[g.class_of(g.multiply(g.inverse(x), z)) * r + l] += 1;
  }
  return a;
}

namespace {

// Coordinates of A w in the basis W (RREF rows) are its entries at the pivots.
ModMatrix restrict_to_subspace(const ModMatrix& a, const ModMatrix& w,
                               const std::vector<std::size_t>& pivots, std::uint32_t p) {
  const std::size_t k = w.rows();
  ModMatrix b(k, k);
  for (std::size_t col = 0; col < k; ++col)
    for (std::size_t i = 0; i < k; ++i) b.at(i, col) = simd::dot_mod(a.row(pivots[i]), w.row(col), p);
  return b;
}

std::vector<std::size_t> pivot_columns(const ModMatrix& w) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    std::size_t c = 0;
    while (w.at(i, c) == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

// Splits every common eigenspace of dimension > 1 with the class matrices,
// smallest classes first. Returns false if some space never splits.
bool split_eigenspaces(const Group& g, const ModularField& f, std::vector<ModMatrix>& spaces) {
  const std::size_t r = g.class_count();
  const std::uint32_t p = f.p;
  std::vector<std::size_t> order;
  for (std::size_t c = 1; c < r; ++c) order.push_back(c);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.class_size(a) < g.class_size(b); });

  ModMatrix whole(r, r);
  for (std::size_t i = 0; i < r; ++i) whole.at(i, i) = 1;
  spaces = {whole};

  for (std::size_t j : order) {
    if (spaces.size() == r) break;
    const auto counts = class_matrix(g, j);
    ModMatrix a(r, r);
    for (std::size_t i = 0; i < r * r; ++i) a.at(i / r, i % r) = f.from_int(counts[i]);

    std::vector<ModMatrix> next;
    for (auto& w : spaces) {
      if (w.rows() == 1) {
        next.push_back(std::move(w));
        continue;
      }
      const auto piv = pivot_columns(w);
      const ModMatrix b = restrict_to_subspace(a, w, piv, p);
      const auto roots = roots_mod_p(characteristic_polynomial(b, p), p);
      std::size_t total = 0;
      for (std::uint32_t lambda : roots) {
        ModMatrix shifted = b;
        for (std::size_t i = 0; i < b.rows(); ++i) shifted.at(i, i) = f.sub(shifted.at(i, i), lambda);
        const ModMatrix null = nullspace(shifted, p);
        ModMatrix sub(null.rows(), r);
        for (std::size_t v = 0; v < null.rows(); ++v)
          for (std::size_t i = 0; i < w.rows(); ++i)
            if (null.at(v, i)) simd::axpy_mod(sub.row(v), w.row(i), null.at(v, i), p);
        rref(sub, p);
        total += sub.rows();
        next.push_back(std::move(sub));
      }
      if (total != w.rows()) throw InternalError("class matrix is not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  return spaces.size() == r;
}

std::optional<std::vector<ClassFunction>> irreducibles_mod(const GroupPtr& gp, const ModularField& f) {
  const Group& g = *gp;
  const std::size_t r = g.class_count();
  const std::uint32_t p = f.p;
  std::vector<ModMatrix> spaces;
  if (!split_eigenspaces(g, f, spaces)) return std::nullopt;

  const std::uint32_t order_mod = f.from_int(static_cast<std::int64_t>(g.order()));
  std::vector<std::uint32_t> inv_size(r);
  for (std::size_t c = 0; c < r; ++c) inv_size[c] = f.inv(f.from_int(static_cast<std::int64_t>(g.class_size(c))));

  // zinv[k][t] = zeta^(-k t); power_classes[c][t] = class of rep_c^t.
  const std::uint32_t e = f.e;
  std::vector<std::uint32_t> zinv(std::size_t{e} * e);
  for (std::uint32_t k = 0; k < e; ++k)
    for (std::uint32_t t = 0; t < e; ++t) zinv[k * e + t] = f.root_power(-static_cast<std::int64_t>(k) * t);
  std::vector<std::uint32_t> power_classes(r * e);
  for (std::size_t c = 0; c < r; ++c)
    for (std::uint32_t t = 0; t < e; ++t) power_classes[c * e + t] = g.power_class(c, t);
  const std::uint32_t inv_e = f.inv(e % p);

  std::vector<ClassFunction> chars;
  for (const auto& w : spaces) {
    // Central character omega, normalized so omega(identity class) = 1.
    if (w.at(0, 0) == 0) return std::nullopt;
    const std::uint32_t scale = f.inv(w.at(0, 0));
    std::vector<std::uint32_t> omega(r);
    for (std::size_t c = 0; c < r; ++c) omega[c] = f.mul(w.at(0, c), scale);

    // sum_c omega(c) omega(c*) / |C_c| = |G| / chi(1)^2
    std::uint32_t t = 0;
    for (std::size_t c = 0; c < r; ++c)
      t = f.add(t, f.mul(f.mul(omega[c], omega[g.inverse_class(c)]), inv_size[c]));
    if (t == 0) return std::nullopt;
    const std::uint64_t d2 = f.mul(order_mod, f.inv(t));
    const auto d = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d2))));
    if (static_cast<std::uint64_t>(d * d) != d2 || g.order() % static_cast<std::uint64_t>(d) != 0)
      return std::nullopt;
    const std::uint32_t dm = f.from_int(d);
    std::vector<std::uint32_t> values(r);
    for (std::size_t c = 0; c < r; ++c) values[c] = f.mul(f.mul(omega[c], dm), inv_size[c]);

    std::vector<std::int32_t> mults(r * e);
    std::vector<std::uint32_t> orbit(e);
    for (std::size_t c = 0; c < r; ++c) {
      for (std::uint32_t s = 0; s < e; ++s) orbit[s] = values[power_classes[c * e + s]];
      std::int64_t total = 0;
      for (std::uint32_t k = 0; k < e; ++k) {
        const std::uint32_t m =
            f.mul(inv_e, simd::dot_mod({zinv.data() + std::size_t{k} * e, e}, orbit, p));
        if (m > d) return std::nullopt;
        mults[c * e + k] = static_cast<std::int32_t>(m);
        total += m;
      }
      if (total != d) return std::nullopt;
    }
    chars.emplace_back(gp, f, std::move(mults), std::move(values));
  }
  std::sort(chars.begin(), chars.end(), [](const ClassFunction& a, const ClassFunction& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.values() < b.values();
  });
  return chars;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g, const ModularField* ambient) {
  CharacterTable table;
  table.group_ = g;
  if (ambient) {
    if (ambient->e % g->exponent() != 0) throw InputError("ambient field does not fit group exponent");
    if (ambient->p <= 2 * g->order()) throw InputError("ambient prime too small for group");
    ModularField f = ambient->restricted_to(g->exponent());
    auto chars = irreducibles_mod(g, f);
    if (!chars) throw InternalError("class matrices failed to split over the ambient prime");
    table.field_ = std::move(f);
    table.irreducibles_ = std::move(*chars);
  } else {
    ModularField f = ModularField::for_exponent(g->exponent(), g->order());
    for (;;) {
      auto chars = irreducibles_mod(g, f);
      if (chars) {
        table.irreducibles_ = std::move(*chars);
        break;
      }
      if (++table.retries_ > 16) throw InternalError("class matrices failed to split for 16 primes");
      f = ModularField::for_exponent(g->exponent(), g->order(), f.p);
    }
    table.field_ = std::move(f);
  }
  table.conjugates_.resize(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto idx = table.find(conjugate(table[i]));
    if (!idx) throw InternalError("conjugate of an irreducible is missing from the table");
    table.conjugates_[i] = *idx;
  }
  return table;
}

std::optional<std::size_t> CharacterTable::find(const ClassFunction& f) const {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    if (irreducibles_[i].same_values(f)) return i;
  return std::nullopt;
}

std::size_t CharacterTable::linear_count() const {
  return static_cast<std::size_t>(std::count_if(irreducibles_.begin(), irreducibles_.end(),
                                                [](const ClassFunction& c) { return c.is_linear(); }));
}

// ---------------------------------------------------------------------------
// Class function algebra

namespace {

void require_compatible(const ClassFunction& f, const ClassFunction& g) {
  if (&f.group() != &g.group() || !(f.field() == g.field()))
    throw InputError("class functions belong to different groups");
}

}  // namespace

std::int64_t Decomposition::multiplicity_of(std::size_t index) const {
  for (const auto& c : constituents)
    if (c.index == index) return c.multiplicity;
  return 0;
}

std::uint64_t inner_product(const ClassFunction& f, const ClassFunction& g) {
  require_compatible(f, g);
  const Group& grp = f.group();
  const ModularField& fd = f.field();
  const std::size_t r = f.class_count();
  std::vector<std::uint32_t> weighted(r), conj_g(r);
  for (std::size_t c = 0; c < r; ++c) {
    weighted[c] = fd.mul(fd.from_int(static_cast<std::int64_t>(grp.class_size(c))), f.value(c));
    conj_g[c] = g.value(grp.inverse_class(c));
  }
  const std::uint32_t s = simd::dot_mod(weighted, conj_g, fd.p);
  return fd.mul(s, fd.inv(fd.from_int(static_cast<std::int64_t>(grp.order()))));
}

ClassFunction conjugate(const ClassFunction& f) {
  const Group& g = f.group();
  const std::uint32_t e = f.field().e;
  const std::size_t r = f.class_count();
  std::vector<std::int32_t> m(r * e);
  std::vector<std::uint32_t> v(r);
  for (std::size_t c = 0; c < r; ++c) {
    const auto src = f.multiplicities(c);
    for (std::uint32_t j = 0; j < e; ++j) m[c * e + (e - j) % e] = src[j];
    v[c] = f.value(g.inverse_class(c));
  }
  return ClassFunction(f.group_ptr(), f.field(), std::move(m), std::move(v));
}

ClassFunction product(const ClassFunction& f, const ClassFunction& g) {
  require_compatible(f, g);
  const std::uint32_t e = f.field().e;
  const std::size_t r = f.class_count();
  std::vector<std::int32_t> m(r * e, 0);
  std::vector<std::uint32_t> v(r);
  for (std::size_t c = 0; c < r; ++c) {
    const auto a = f.multiplicities(c);
    const auto b = g.multiplicities(c);
    std::span<std::int32_t> out(m.data() + c * e, e);
    // out[(i + j) mod e] += a[i] b[j], as two contiguous runs per i.
    for (std::uint32_t i = 0; i < e; ++i) {
      if (a[i] == 0) continue;
      simd::axpy_i32(out.subspan(i), b.first(e - i), a[i]);
      if (i) simd::axpy_i32(out.first(i), b.subspan(e - i), a[i]);
    }
    v[c] = f.field().mul(f.value(c), g.value(c));
  }
  return ClassFunction(f.group_ptr(), f.field(), std::move(m), std::move(v));
}

Decomposition decompose(const ClassFunction& theta, const CharacterTable& table) {
  if (&theta.group() != &table.group() || !(theta.field() == table.field()))
    throw InputError("class function and table belong to different groups");
  Decomposition d;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::uint64_t a = inner_product(theta, table[i]);
    if (a) d.constituents.push_back({i, static_cast<std::int64_t>(a)});
  }
  const auto at_identity = theta.multiplicities(0);
  std::int64_t total = 0;
  for (const auto& [i, a] : d.constituents) total += a * table[i].degree();
  if (std::any_of(at_identity.begin() + 1, at_identity.end(), [](std::int32_t m) { return m != 0; }) ||
      total != at_identity[0])
    throw NotACharacter("constituent degrees do not add up: not a character");
  const ModularField& f = table.field();
  for (std::size_t c = 0; c < theta.class_count(); ++c) {
    std::uint32_t s = 0;
    for (const auto& [i, a] : d.constituents) s = f.add(s, f.mul(f.from_int(a), table[i].value(c)));
    if (s != theta.value(c)) throw NotACharacter("constituents do not reconstruct the class function: not a character");
  }
  return d;
}

ClassFunction compose(const Decomposition& d, const CharacterTable& table) {
  const auto& f = table.field();
  const std::size_t r = table.group().class_count();
  std::vector<std::int32_t> m(r * f.e, 0);
  std::vector<std::uint32_t> v(r, 0);
  for (const auto& [i, a] : d.constituents) {
    simd::axpy_i32(m, table[i].all_multiplicities(), static_cast<std::int32_t>(a));
    for (std::size_t c = 0; c < r; ++c) v[c] = f.add(v[c], f.mul(f.from_int(a), table[i].value(c)));
  }
  return ClassFunction(table.group_ptr(), f, std::move(m), std::move(v));
}

Subgroup kernel(const ClassFunction& f) {
  const Group& g = f.group();
  const std::int64_t d = f.degree();
  ElementSet members(g.order());
  for (std::size_t c = 0; c < f.class_count(); ++c)
    if (f.multiplicities(c)[0] == d)
      for (Index x : g.class_members(c)) members.set(x);
  return Subgroup(f.group_ptr(), std::move(members));
}

Subgroup kernel_of_product(const ClassFunction& chi, const ClassFunction& psi) {
  require_compatible(chi, psi);
  const Group& g = chi.group();
  const std::uint32_t e = chi.field().e;
  const std::int64_t dc = chi.degree(), dp = psi.degree();
  ElementSet members(g.order());
  for (std::size_t c = 0; c < chi.class_count(); ++c) {
    const auto mc = chi.multiplicities(c);
    const auto mp = psi.multiplicities(c);
    for (std::uint32_t j = 0; j < e; ++j) {
      if (mc[j] != dc) continue;
      if (mp[(e - j) % e] == dp)
        for (Index x : g.class_members(c)) members.set(x);
      break;
    }
  }
  return Subgroup(chi.group_ptr(), std::move(members));
}

}  // namespace charkit
