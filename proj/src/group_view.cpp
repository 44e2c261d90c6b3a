#include "charkit/group_view.hpp"

#include <algorithm>

#include "charkit/error.hpp"

namespace charkit {

Index GroupView::to_local(Index root) const {
  auto it = std::lower_bound(to_root.begin(), to_root.end(), root);
  if (it == to_root.end() || *it != root) throw ContainmentError("element is not in the subgroup");
  return static_cast<Index>(it - to_root.begin());
}

GroupView make_view(const Subgroup& s) {
  const Group& parent = s.parent();
  GroupView v{s, nullptr, s.elements()};
  if (s.order() == parent.order()) {
    v.group = s.parent_ptr();
    return v;
  }
  std::vector<Permutation> gens;
  for (Index x : s.generators()) gens.push_back(parent.element(x));
  v.group = closure(parent.degree(), gens, {.order_cap = parent.order(), .name = parent.name()});
  if (v.group->order() != s.order()) throw InternalError("re-closed subgroup has the wrong order");
  for (std::size_t i = 0; i < v.to_root.size(); ++i)
    if (v.group->element(static_cast<Index>(i)) != parent.element(v.to_root[i]))
      throw InternalError("re-closed subgroup is not ordered like its parent");
  return v;
}

ClassFunction restrict(const ClassFunction& f, const GroupView& source, const GroupView& target) {
  if (&f.group() != source.group.get()) throw InputError("class function does not live on the source view");
  if (!target.subgroup.is_subgroup_of(source.subgroup))
    throw ContainmentError("restriction target is not inside the source");
  const Group& tg = *target.group;
  const Group& sg = *source.group;
  const ModularField field = f.field().restricted_to(tg.exponent());
  const std::uint32_t es = f.field().e, et = field.e, step = es / et;
  const std::size_t r = tg.class_count();
  std::vector<std::int32_t> m(r * et, 0);
  std::vector<std::uint32_t> v(r);
  for (std::size_t c = 0; c < r; ++c) {
    const Index root = target.to_root[tg.class_representative(c)];
    const std::uint32_t sc = sg.class_of(source.to_local(root));
    const auto src = f.multiplicities(sc);
    for (std::uint32_t j = 0; j < es; ++j) {
      if (src[j] == 0) continue;
      if (j % step != 0) throw InternalError("eigenvalue order exceeds the subgroup exponent");
      m[c * et + j / step] = src[j];
    }
    v[c] = f.value(sc);
  }
  return ClassFunction(target.group, field, std::move(m), std::move(v));
}

}  // namespace charkit
