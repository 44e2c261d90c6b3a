#include <random>
#include <vector>

#include "doctest.h"

#include "charkit/character.hpp"
#include "charkit/families.hpp"
#include "charkit/simd/kernels.hpp"

using namespace charkit;

namespace {

struct IsaGuard {
  simd::Isa saved = simd::active_isa();
  ~IsaGuard() { simd::set_active(saved); }
};

std::vector<const simd::KernelTable*> variants() {
  std::vector<const simd::KernelTable*> v{&simd::scalar_kernels()};
  if (auto* a = simd::avx2_kernels()) v.push_back(a);
  return v;
}

}  // namespace

TEST_CASE("modular kernels agree with 64-bit reference arithmetic") {
  std::mt19937_64 rng(7);
  const std::uint32_t primes[] = {2, 3, 97, 65537, 8388593, simd::kMaxModulus - 2, 67108859};
  for (const auto* k : variants()) {
    CAPTURE(k->name);
    for (std::uint32_t p : primes) {
      if (p > simd::kMaxModulus) continue;
      for (std::size_t n = 0; n <= 67; ++n) {
        std::vector<std::uint32_t> x(n), y(n);
        for (auto& v : x) v = static_cast<std::uint32_t>(rng() % p);
        for (auto& v : y) v = static_cast<std::uint32_t>(rng() % p);
        const auto c = static_cast<std::uint32_t>(rng() % p);

        std::uint64_t dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot = (dot + std::uint64_t{x[i]} * y[i]) % p;
        CHECK(k->dot_mod(x.data(), y.data(), n, p) == dot);

        std::vector<std::uint32_t> want(n);
        for (std::size_t i = 0; i < n; ++i) want[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{c} * x[i]) % p);
        k->axpy_mod(y.data(), x.data(), n, c, p);
        CHECK(y == want);
      }
    }
  }
}

TEST_CASE("dot_mod survives long inputs of maximal residues") {
  const std::uint32_t p = 67108859;  // largest prime below 2^26
  for (std::size_t n : {2047u, 2048u, 2049u, 5000u}) {
    std::vector<std::uint32_t> a(n, p - 1), b(n, p - 1);
    std::uint64_t want = 0;
    for (std::size_t i = 0; i < n; ++i) want = (want + std::uint64_t{p - 1} * (p - 1)) % p;
    for (const auto* k : variants()) CHECK(k->dot_mod(a.data(), b.data(), n, p) == want);
  }
}

TEST_CASE("integer and bitset kernels agree across variants") {
  std::mt19937_64 rng(11);
  const auto ref = variants().front();
  for (const auto* k : variants()) {
    for (std::size_t n = 0; n <= 67; ++n) {
      std::vector<std::int32_t> x(n), y(n);
      for (auto& v : x) v = static_cast<std::int32_t>(rng() % 2001) - 1000;
      for (auto& v : y) v = static_cast<std::int32_t>(rng() % 2001) - 1000;
      auto y2 = y;
      const auto c = static_cast<std::int32_t>(rng() % 41) - 20;
      k->axpy_i32(y.data(), x.data(), n, c);
      for (std::size_t i = 0; i < n; ++i) y2[i] += c * x[i];
      CHECK(y == y2);

      std::vector<std::uint64_t> a(n), b(n);
      for (auto& w : a) w = rng();
      for (std::size_t i = 0; i < n; ++i) b[i] = n % 2 ? rng() : rng() | a[i];
      auto a_and = a, a_or = a, r_and = a, r_or = a;
      k->and_words(a_and.data(), b.data(), n);
      k->or_words(a_or.data(), b.data(), n);
      ref->and_words(r_and.data(), b.data(), n);
      ref->or_words(r_or.data(), b.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(r_and[i] == (a[i] & b[i]));
        CHECK(r_or[i] == (a[i] | b[i]));
      }
      CHECK(a_and == r_and);
      CHECK(a_or == r_or);
      CHECK(k->subset_words(a_and.data(), a.data(), n));
      CHECK(k->subset_words(a.data(), a_or.data(), n));
      bool subset = true;
      for (std::size_t i = 0; i < n; ++i) subset = subset && (a[i] & ~b[i]) == 0;
      CHECK(k->subset_words(a.data(), b.data(), n) == subset);
    }
  }
}

TEST_CASE("character tables are identical under every kernel set") {
  if (!simd::avx2_kernels()) {
    MESSAGE("AVX2 kernels unavailable; scalar only");
    return;
  }
  IsaGuard guard;
  for (const char* name : {"S4", "SL23", "extraspecial-125", "dihedral-8*dihedral-8", "semidirect-5-4"}) {
    CAPTURE(name);
    const GroupPtr g = parse_family(name);
    REQUIRE(simd::set_active(simd::Isa::Scalar));
    const CharacterTable scalar = character_table(g);
    REQUIRE(simd::set_active(simd::Isa::Avx2));
    const CharacterTable avx = character_table(g);
    REQUIRE(scalar.size() == avx.size());
    CHECK(scalar.field() == avx.field());
    for (std::size_t i = 0; i < scalar.size(); ++i) {
      CHECK(scalar[i].values() == avx[i].values());
      CHECK(scalar[i].all_multiplicities() == avx[i].all_multiplicities());
    }
  }
}

TEST_CASE("kernel selection reports its state") {
  IsaGuard guard;
  CHECK(simd::set_active(simd::Isa::Scalar));
  CHECK(simd::active_isa() == simd::Isa::Scalar);
  CHECK(simd::isa_name(simd::Isa::Scalar) == "scalar");
  if (simd::avx2_kernels()) {
    CHECK(simd::set_active(simd::Isa::Avx2));
    CHECK(simd::active_isa() == simd::Isa::Avx2);
  } else {
    CHECK_FALSE(simd::set_active(simd::Isa::Avx2));
  }
}
