#include <algorithm>
#include <complex>

#include "doctest.h"

#include "charkit/character.hpp"
#include "charkit/cyclotomic.hpp"
#include "charkit/error.hpp"
#include "charkit/families.hpp"
#include "support.hpp"

using namespace charkit;

namespace {

std::size_t class_with_order(const Group& g, std::uint32_t ord) {
  for (std::size_t c = 0; c < g.class_count(); ++c)
    if (g.element_order(g.class_representative(c)) == ord) return c;
  FAIL("no class of the requested element order");
  return 0;
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

std::vector<std::int64_t> degrees(const CharacterTable& t) {
  std::vector<std::int64_t> d;
  for (const auto& chi : t) d.push_back(chi.degree());
  return d;
}

// sum_c w_c f(c) conj g(c) reduced in the cyclotomic ring, from the
// multiplicity vectors alone.
std::vector<std::int64_t> exact_pairing(const CyclotomicRing& ring, const ClassFunction& f, const ClassFunction& g) {
  const std::uint32_t e = f.field().e;
  std::vector<std::int32_t> conj(e);
  std::vector<std::int64_t> acc(e, 0);
  for (std::size_t c = 0; c < f.class_count(); ++c) {
    const auto m = g.multiplicities(c);
    for (std::uint32_t j = 0; j < e; ++j) conj[(e - j) % e] = m[j];
    accumulate_cyclic_product(acc, f.multiplicities(c), conj, static_cast<std::int64_t>(f.group().class_size(c)));
  }
  return ring.reduce(acc);
}

}  // namespace

TEST_CASE("cyclic group of order 3") {
  const GroupPtr g = parse_family("cyclic-3");
  const CharacterTable t = character_table(g);
  REQUIRE(t.size() == 3);
  CHECK(t.linear_count() == 3);
  const std::size_t gen = class_with_order(*g, 3);
  std::vector<std::complex<double>> vals;
  for (const auto& chi : t) vals.push_back(chi.complex_value(gen));
  const auto w = std::polar(1.0, 2 * std::numbers::pi / 3);
  for (auto want : {std::complex<double>(1), w, w * w})
    CHECK(std::any_of(vals.begin(), vals.end(), [&](auto v) { return near(v, want); }));
}

TEST_CASE("S3 table") {
  const GroupPtr g = parse_family("S3");
  const CharacterTable t = character_table(g);
  CHECK(degrees(t) == std::vector<std::int64_t>{1, 1, 2});
  const ClassFunction& chi = t[2];
  CHECK(near(chi.complex_value(0), 2));
  CHECK(near(chi.complex_value(class_with_order(*g, 2)), 0));
  CHECK(near(chi.complex_value(class_with_order(*g, 3)), -1));
  CHECK(t[0].same_values(ClassFunction::principal(g, t.field())));
}

TEST_CASE("extraspecial group of order 27") {
  const GroupPtr g = parse_family("extraspecial-27");
  const CharacterTable t = character_table(g);
  std::vector<std::int64_t> want(9, 1);
  want.push_back(3);
  want.push_back(3);
  CHECK(degrees(t) == want);
  const Subgroup z = center(g);
  for (std::size_t i = 9; i < 11; ++i)
    for (std::size_t c = 0; c < g->class_count(); ++c)
      if (!z.contains(g->class_representative(c))) CHECK(near(t[i].complex_value(c), 0));
  CHECK(t.conjugate_index(9) == 10);
}

TEST_CASE("inner products") {
  const GroupPtr g = parse_family("S3");
  const CharacterTable t = character_table(g);
  for (const auto& chi : t) {
    CHECK(inner_product(chi, chi) == 1);
    CHECK(inner_product(product(chi, conjugate(chi)), t[0]) == 1);
  }
  CHECK(inner_product(product(t[2], t[2]), t[2]) == 1);
  const CharacterTable other = character_table(parse_family("cyclic-6"));
  CHECK_THROWS_AS(inner_product(t[0], other[0]), InputError);
  CHECK_THROWS_AS(product(t[0], other[0]), InputError);
}

TEST_CASE("conjugation") {
  const CharacterTable s3 = character_table(parse_family("S3"));
  for (const auto& chi : s3) CHECK(conjugate(chi).same_values(chi));
  const GroupPtr c3 = parse_family("cyclic-3");
  const CharacterTable t = character_table(c3);
  const std::size_t gen = class_with_order(*c3, 3);
  const auto w = std::polar(1.0, 2 * std::numbers::pi / 3);
  for (const auto& chi : t)
    if (near(chi.complex_value(gen), w)) CHECK(near(conjugate(chi).complex_value(gen), w * w));
  const CharacterTable e = character_table(parse_family("extraspecial-27"));
  CHECK(conjugate(e[9]).same_values(e[10]));
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(conjugate(conjugate(e[i])).same_values(e[i]));
}

TEST_CASE("products") {
  const CharacterTable t = character_table(parse_family("S3"));
  for (const auto& chi : t) CHECK(product(chi, t[0]).same_values(chi));
  CHECK(product(t[1], conjugate(t[1])).same_values(t[0]));
  CHECK(product(t[2], t[1]).same_values(t[2]));
  const CharacterTable c = character_table(parse_family("cyclic-12"));
  for (const auto& lambda : c) CHECK(product(lambda, conjugate(lambda)).same_values(c[0]));
}

TEST_CASE("decompose") {
  {
    const CharacterTable t = character_table(parse_family("S3"));
    const Decomposition d = decompose(t[2], t);
    CHECK(d.eta() == 1);
    CHECK(d.multiplicity_of(2) == 1);
    const Decomposition dd = decompose(product(t[2], conjugate(t[2])), t);
    CHECK(dd.constituents == std::vector<Constituent>{{0, 1}, {1, 1}, {2, 1}});
  }
  {
    const CharacterTable t = character_table(parse_family("extraspecial-27"));
    const Decomposition d = decompose(product(t[9], conjugate(t[9])), t);
    CHECK(d.eta() == 9);
    for (const auto& c : d.constituents) {
      CHECK(c.multiplicity == 1);
      CHECK(t[c.index].is_linear());
    }
  }
}

TEST_CASE("decompose rejects non-characters") {
  const GroupPtr g = parse_family("S3");
  const CharacterTable t = character_table(g);
  const std::uint32_t e = t.field().e;
  // value zeta_6 off the identity: not a class function of any character
  std::vector<std::int32_t> m(g->class_count() * e, 0);
  m[0] = 1;
  for (std::size_t c = 1; c < g->class_count(); ++c) m[c * e + 1] = 1;
  CHECK_THROWS_AS(decompose(ClassFunction::from_multiplicities(g, t.field(), m), t), NotACharacter);
  // difference of two irreducibles
  std::vector<std::int32_t> diff = t[0].all_multiplicities();
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= t[1].all_multiplicities()[i];
  CHECK_THROWS_AS(decompose(ClassFunction::from_multiplicities(g, t.field(), diff), t), NotACharacter);
}

TEST_CASE("kernels") {
  const GroupPtr s3 = parse_family("S3");
  const CharacterTable t = character_table(s3);
  CHECK(kernel(t[0]).order() == 6);
  CHECK(kernel(t[1]).order() == 3);
  CHECK(kernel(t[2]).is_trivial());
  CHECK(kernel_of_product(t[2], t[2]).is_trivial());
  for (const auto& chi : t) CHECK(kernel_of_product(chi, t[0]) == kernel(chi));

  const GroupPtr e = parse_family("extraspecial-27");
  const CharacterTable te = character_table(e);
  CHECK(kernel(te[9]).is_trivial());
  CHECK(kernel_of_product(te[9], conjugate(te[9])) == center(e));
  CHECK(kernel_of_product(te[9], te[10]) == center(e));
}

TEST_CASE("table invariants across the corpus") {
  for (const auto& entry : builtin_corpus()) {
    CAPTURE(entry.name);
    const GroupPtr g = parse_family(entry.name);
    const CharacterTable t = character_table(g);
    const std::size_t k = g->class_count();
    REQUIRE(t.size() == k);
    CHECK(t.field().p > 2 * g->order());
    CHECK((t.field().p - 1) % g->exponent() == 0);

    std::int64_t squares = 0;
    for (const auto& chi : t) squares += chi.degree() * chi.degree();
    CHECK(squares == static_cast<std::int64_t>(g->order()));
    CHECK(t.linear_count() * commutator_subgroup(Subgroup::whole(g)).order() == g->order());

    for (std::size_t i = 0; i < k; ++i) {
      const auto& chi = t[i];
      CHECK(chi.degree() == chi.multiplicities(0)[0]);
      for (std::size_t c = 0; c < k; ++c) {
        const auto m = chi.multiplicities(c);
        CHECK(t.field().evaluate(m) == chi.value(c));
        CHECK(std::all_of(m.begin(), m.end(), [](std::int32_t v) { return v >= 0; }));
        std::int64_t s = 0;
        for (auto v : m) s += v;
        CHECK(s == chi.degree());
      }
      for (std::size_t j = 0; j < k; ++j) CHECK(inner_product(t[i], t[j]) == (i == j ? 1u : 0u));
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
      CHECK(t[i].degree() <= t[i + 1].degree());
      if (t[i].degree() == t[i + 1].degree()) CHECK(t[i].values() < t[i + 1].values());
    }
  }
}

TEST_CASE("exact orthogonality in the cyclotomic ring") {
  for (const char* name : {"S4", "SL23", "extraspecial-27", "semidirect-7-3", "semidirect-5-4", "cyclic-24",
                           "dihedral-8*dihedral-8"}) {
    CAPTURE(name);
    const GroupPtr g = parse_family(name);
    const CharacterTable t = character_table(g);
    const CyclotomicRing ring(t.field().e);
    const std::size_t k = t.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        auto r = exact_pairing(ring, t[i], t[j]);
        std::vector<std::int64_t> want(r.size(), 0);
        if (i == j) want[0] = static_cast<std::int64_t>(g->order());
        CHECK(r == want);
      }
    // columns: sum_chi chi(a) conj chi(b) = delta_ab |C_G(a)|
    const std::uint32_t e = t.field().e;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        std::vector<std::int64_t> acc(e, 0);
        std::vector<std::int32_t> conj(e);
        for (const auto& chi : t) {
          const auto m = chi.multiplicities(b);
          for (std::uint32_t j = 0; j < e; ++j) conj[(e - j) % e] = m[j];
          accumulate_cyclic_product(acc, chi.multiplicities(a), conj, 1);
        }
        auto r = ring.reduce(acc);
        std::vector<std::int64_t> want(r.size(), 0);
        if (a == b) want[0] = static_cast<std::int64_t>(g->order() / g->class_size(a));
        CHECK(r == want);
      }
  }
}

TEST_CASE("exact tables match the floating-point oracle") {
  for (const auto& entry : builtin_corpus()) {
    if (entry.order > 48) continue;
    CAPTURE(entry.name);
    const GroupPtr g = parse_family(entry.name);
    const CharacterTable t = character_table(g);
    const auto cls = support::class_lists(*g);
    CHECK(oracle::same_rows_up_to_permutation(support::exact_rows(t), oracle::float_table(cls, g->order()), 1e-6));
  }
}

TEST_CASE("the floating-point oracle notices a wrong table") {
  const GroupPtr g = parse_family("S3");
  auto rows = support::exact_rows(character_table(g));
  const auto cls = support::class_lists(*g);
  const auto numeric = oracle::float_table(cls, g->order());
  REQUIRE(oracle::same_rows_up_to_permutation(rows, numeric, 1e-6));
  for (auto& r : rows) std::swap(r[1], r[2]);
  CHECK_FALSE(oracle::same_rows_up_to_permutation(rows, numeric, 1e-6));
}

TEST_CASE("decomposition round trip and product kernels") {
  for (const auto& entry : builtin_corpus()) {
    if (entry.order > 48) continue;
    CAPTURE(entry.name);
    const GroupPtr g = parse_family(entry.name);
    const CharacterTable t = character_table(g);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) {
        const ClassFunction chipsi = product(t[i], t[j]);
        const Decomposition d = decompose(chipsi, t);
        CHECK(compose(d, t).same_values(chipsi));
        std::int64_t deg = 0;
        for (const auto& c : d.constituents) deg += c.multiplicity * t[c.index].degree();
        CHECK(deg == t[i].degree() * t[j].degree());
        CHECK(decompose(compose(d, t), t).constituents == d.constituents);
        CHECK(kernel(chipsi) == kernel_of_product(t[i], t[j]));
      }
  }
}

TEST_CASE("cyclotomic ring") {
  CHECK(CyclotomicRing(1).rank() == 1);
  CHECK(CyclotomicRing(12).rank() == 4);
  CHECK(CyclotomicRing(12).polynomial() == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // 1 + zeta + zeta^2 = 0 for zeta a primitive cube root
  const CyclotomicRing r3(3);
  CHECK(r3.reduce(std::vector<std::int64_t>{1, 1, 1}) == std::vector<std::int64_t>{0, 0});
  CHECK(r3.reduce(std::vector<std::int64_t>{0, 0, 1}) == std::vector<std::int64_t>{-1, -1});
}
