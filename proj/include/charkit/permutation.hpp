#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace charkit {

using Point = std::uint16_t;

// A bijection of {0, ..., degree-1}. Products compose left to right:
// (a * b)[x] = b[a[x]].
class Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 65535;

  Permutation() = default;
  // Throws InputError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Builds from disjoint cycles, e.g. from_cycles(4, {{0, 1, 2, 3}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

}  // namespace charkit
