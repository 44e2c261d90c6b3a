#pragma once

#include <complex>
#include <vector>

#include "charkit/character.hpp"
#include "charkit/group.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Perm to_perm(const charkit::Permutation& p) {
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline oracle::PermSet elements(const charkit::Group& g) {
  oracle::PermSet s;
  for (charkit::Index i = 0; i < g.order(); ++i) s.insert(to_perm(g.element(i)));
  return s;
}

inline oracle::PermSet members(const charkit::Subgroup& h) {
  oracle::PermSet s;
  for (auto i : h.elements()) s.insert(to_perm(h.parent().element(i)));
  return s;
}

inline std::vector<std::vector<oracle::Perm>> class_lists(const charkit::Group& g) {
  std::vector<std::vector<oracle::Perm>> out(g.class_count());
  for (std::size_t c = 0; c < g.class_count(); ++c)
    for (auto i : g.class_members(c)) out[c].push_back(to_perm(g.element(i)));
  return out;
}

inline std::vector<oracle::Row> exact_rows(const charkit::CharacterTable& t) {
  std::vector<oracle::Row> out;
  for (const auto& chi : t) {
    oracle::Row r;
    for (std::size_t c = 0; c < chi.class_count(); ++c) r.push_back(chi.complex_value(c));
    out.push_back(std::move(r));
  }
  return out;
}

inline charkit::GroupPtr from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<std::initializer_list<charkit::Point>>> gens) {
  std::vector<charkit::Permutation> perms;
  for (const auto& cycles : gens) perms.push_back(charkit::Permutation::from_cycles(degree, cycles));
  return charkit::closure(degree, perms);
}

}  // namespace support
