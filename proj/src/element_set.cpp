#include "charkit/element_set.hpp"

#include <bit>

#include "charkit/simd/kernels.hpp"

namespace charkit {

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.set(i);
  return s;
}

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return simd::active().subset_words(words_.data(), other.words_.data(), words_.size());
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  simd::active().and_words(words_.data(), other.words_.data(), words_.size());
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  simd::active().or_words(words_.data(), other.words_.data(), words_.size());
  return *this;
}

std::vector<std::uint32_t> ElementSet::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering canonical_compare(const ElementSet& a, const ElementSet& b) {
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[w] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace charkit
