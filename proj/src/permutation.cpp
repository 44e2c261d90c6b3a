#include "charkit/permutation.hpp"

#include <sstream>

#include "charkit/error.hpp"

namespace charkit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InputError("permutation images are not a bijection on 0.." +
                       std::to_string(images_.size()));
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxDegree) throw InputError("permutation degree too large");
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> im(identity(degree).images_);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    const Point* c = cycle.begin();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (c[i] >= degree) throw InputError("cycle point out of range");
      im[c[i]] = c[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InputError("permutation degrees differ");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = rhs.images_[images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

}  // namespace charkit
