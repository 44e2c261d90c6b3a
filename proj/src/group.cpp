#include "charkit/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "charkit/error.hpp"

namespace charkit {

std::size_t default_order_cap() {
  if (const char* env = std::getenv("CHARKIT_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5000;
}

GroupPtr closure(std::size_t degree, std::span<const Permutation> generators,
                 const ClosureOptions& options) {
  const std::size_t cap = options.order_cap ? options.order_cap : default_order_cap();
  if (degree > Permutation::kMaxDegree) throw InputError("degree exceeds 65535");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InputError("generator " + g.to_string() + " does not have degree " +
                       std::to_string(degree));
  // Multiplication table indices are 16-bit.
  const std::size_t hard_cap = std::min<std::size_t>(cap, 65535);

  // Breadth-first search; bfs_parent/bfs_gen record how each element was reached.
  std::map<Permutation, Index> seen;
  std::vector<const Permutation*> bfs;
  std::vector<Index> bfs_parent;
  std::vector<std::uint32_t> bfs_gen;
  auto root = seen.emplace(Permutation::identity(degree), 0).first;
  bfs.push_back(&root->first);
  bfs_parent.push_back(0);
  bfs_gen.push_back(0);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    for (std::uint32_t s = 0; s < generators.size(); ++s) {
      Permutation next = *bfs[head] * generators[s];
      auto [it, inserted] = seen.emplace(std::move(next), static_cast<Index>(bfs.size()));
      if (!inserted) continue;
      if (bfs.size() + 1 > hard_cap)
        throw SizeError("group order exceeds cap of " + std::to_string(hard_cap));
      bfs.push_back(&it->first);
      bfs_parent.push_back(static_cast<Index>(head));
      bfs_gen.push_back(s);
    }
  }

  auto group = std::shared_ptr<Group>(new Group());
  Group& g = *group;
  g.name_ = options.name;
  g.degree_ = degree;
  g.generators_.assign(generators.begin(), generators.end());
  const std::size_t n = seen.size();
  std::vector<Index> sorted_of_bfs(n);
  g.elements_.reserve(n);
  for (const auto& [perm, bfs_id] : seen) {
    sorted_of_bfs[bfs_id] = static_cast<Index>(g.elements_.size());
    g.elements_.push_back(perm);
  }

  // Right multiplication by each generator, then every column b of the table
  // from its BFS parent: a*b = (a*parent)*s.
  std::vector<std::vector<Index>> right_gen(generators.size(), std::vector<Index>(n));
  for (std::size_t s = 0; s < generators.size(); ++s) {
    for (std::size_t a = 0; a < n; ++a)
      right_gen[s][a] = *g.index_of(g.elements_[a] * generators[s]);
    g.generator_indices_.push_back(*g.index_of(generators[s]));
  }
  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) g.table_[a * n] = static_cast<std::uint16_t>(a);
  for (std::size_t k = 1; k < n; ++k) {
    const Index b = sorted_of_bfs[k];
    const Index parent = sorted_of_bfs[bfs_parent[k]];
    const auto& rs = right_gen[bfs_gen[k]];
    for (std::size_t a = 0; a < n; ++a)
      g.table_[a * n + b] = static_cast<std::uint16_t>(rs[g.table_[a * n + parent]]);
  }

  g.inverse_.resize(n);
  g.element_orders_.resize(n);
  for (Index a = 0; a < n; ++a) {
    g.inverse_[a] = *g.index_of(g.elements_[a].inverse());
    std::uint32_t ord = 1;
    for (Index x = a; x != Group::identity(); x = g.multiply(x, a)) ++ord;
    g.element_orders_[a] = ord;
  }
  for (Index a = 0; a < n; ++a) g.exponent_ = std::lcm(g.exponent_, std::uint64_t{g.element_orders_[a]});

  constexpr std::uint32_t kUnassigned = ~0u;
  g.class_of_.assign(n, kUnassigned);
  for (Index a = 0; a < n; ++a) {
    if (g.class_of_[a] != kUnassigned) continue;
    const auto c = static_cast<std::uint32_t>(g.classes_.size());
    std::vector<Index> members{a};
    g.class_of_[a] = c;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Index s : g.generator_indices_) {
        const Index y = g.conjugate(members[head], s);
        if (g.class_of_[y] == kUnassigned) {
          g.class_of_[y] = c;
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    g.classes_.push_back(std::move(members));
  }
  g.inverse_class_.resize(g.classes_.size());
  for (std::size_t c = 0; c < g.classes_.size(); ++c)
    g.inverse_class_[c] = g.class_of_[g.inverse_[g.class_representative(c)]];
  return group;
}

std::optional<Index> Group::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<Index>(it - elements_.begin());
}

Index Group::power(Index a, std::uint64_t k) const {
  k %= element_orders_[a];
  Index result = identity();
  Index base = a;
  while (k) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

// Closure of {1} under right multiplication by the generators.
ElementSet generate(const Group& g, std::span<const Index> generators) {
  ElementSet set(g.order());
  std::vector<Index> list{Group::identity()};
  set.set(Group::identity());
  for (std::size_t head = 0; head < list.size(); ++head)
    for (Index s : generators) {
      const Index y = g.multiply(list[head], s);
      if (!set.test(y)) {
        set.set(y);
        list.push_back(y);
      }
    }
  return set;
}

// Greedy generating set of a subgroup given by its members.
std::vector<Index> greedy_generators(const Group& g, const ElementSet& members,
                                     ElementSet* span_out) {
  std::vector<Index> gens;
  ElementSet span = generate(g, gens);
  members.for_each([&](Index x) {
    if (span.test(x)) return;
    gens.push_back(x);
    span = generate(g, gens);
  });
  if (span_out) *span_out = std::move(span);
  return gens;
}

bool normalized_by(const Group& g, const ElementSet& members, std::span<const Index> generators,
                   std::span<const Index> conjugators) {
  for (Index x : conjugators)
    for (Index h : generators)
      if (!members.test(g.conjugate(h, x))) return false;
  return true;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, ElementSet members) : parent_(std::move(parent)) {
  if (members.universe() != parent_->order()) throw InputError("member set has wrong universe");
  ElementSet span;
  generators_ = greedy_generators(*parent_, members, &span);
  if (span != members) throw InputError("member set is not closed under multiplication");
  members_ = std::move(members);
  order_ = members_.count();
  normal_ = normalized_by(*parent_, members_, generators_, parent_->generator_indices());
}

Subgroup::Subgroup(GroupPtr parent, ElementSet members, std::vector<Index> generators, Trusted)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  order_ = members_.count();
  normal_ = normalized_by(*parent_, members_, generators_, parent_->generator_indices());
}

Subgroup Subgroup::trivial(const GroupPtr& parent) {
  ElementSet s(parent->order());
  s.set(Group::identity());
  return Subgroup(parent, std::move(s), {}, Trusted{});
}

Subgroup Subgroup::whole(const GroupPtr& parent) {
  return generated_subgroup(parent, parent->generator_indices());
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return canonical_compare(a.members(), b.members()) < 0;
}

Subgroup generated_subgroup(const GroupPtr& parent, std::span<const Index> generators) {
  // Prune generators to a greedy subset.
  std::vector<Index> gens;
  ElementSet span = generate(*parent, gens);
  for (Index x : generators) {
    if (span.test(x)) continue;
    gens.push_back(x);
    span = generate(*parent, gens);
  }
  return Subgroup(parent, std::move(span), std::move(gens), Subgroup::Trusted{});
}

Subgroup normal_closure_in(const Subgroup& ambient, std::span<const Index> seeds) {
  const Group& g = ambient.parent();
  std::vector<Index> gens(seeds.begin(), seeds.end());
  Subgroup current = generated_subgroup(ambient.parent_ptr(), gens);
  for (;;) {
    bool grew = false;
    for (Index x : ambient.generators()) {
      for (Index h : current.generators()) {
        const Index y = g.conjugate(h, x);
        if (!current.contains(y)) {
          gens = current.generators();
          gens.push_back(y);
          current = generated_subgroup(ambient.parent_ptr(), gens);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
    if (!grew) return current;
  }
}

Subgroup normal_closure(const GroupPtr& parent, std::span<const Index> seeds) {
  return normal_closure_in(Subgroup::whole(parent), seeds);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  std::vector<Index> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generated_subgroup(a.parent_ptr(), gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  return Subgroup(a.parent_ptr(), a.members() & b.members());
}

Subgroup center(const GroupPtr& parent) {
  ElementSet s(parent->order());
  for (std::size_t c = 0; c < parent->class_count(); ++c)
    if (parent->class_size(c) == 1) s.set(parent->class_representative(c));
  return Subgroup(parent, std::move(s));
}

bool is_abelian(const Subgroup& h) {
  const Group& g = h.parent();
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.multiply(gens[i], gens[j]) != g.multiply(gens[j], gens[i])) return false;
  return true;
}

Subgroup commutator_subgroup(const Subgroup& h) {
  // [H,H] is the normal closure in H of the commutators of a generating set.
  const Group& g = h.parent();
  const auto& gens = h.generators();
  std::vector<Index> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Index c = g.commutator(gens[i], gens[j]);
      if (c != Group::identity()) seeds.push_back(c);
    }
  return normal_closure_in(h, seeds);
}

std::vector<Subgroup> derived_series(const Subgroup& h) {
  std::vector<Subgroup> series{h};
  for (;;) {
    Subgroup next = commutator_subgroup(series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

std::size_t derived_length_of_quotient(const Subgroup& k, const Subgroup& n) {
  if (!n.is_subgroup_of(k)) throw ContainmentError("denominator is not contained in numerator");
  if (!n.is_normal()) throw PreconditionError("denominator is not normal in the parent group");
  std::size_t i = 0;
  Subgroup current = k;
  while (!current.is_subgroup_of(n)) {
    Subgroup next = commutator_subgroup(current);
    if (next == current) throw InputError("quotient is not solvable");
    current = std::move(next);
    ++i;
  }
  return i;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  // Every normal subgroup is a join of normal closures of single classes.
  std::vector<Subgroup> atoms;
  for (std::size_t c = 1; c < g->class_count(); ++c) {
    const Index rep = g->class_representative(c);
    Subgroup atom = normal_closure(g, std::span<const Index>(&rep, 1));
    if (std::find(atoms.begin(), atoms.end(), atom) == atoms.end()) atoms.push_back(std::move(atom));
  }
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  std::map<std::vector<std::uint64_t>, bool> known{{found[0].members().words(), true}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& atom : atoms) {
      if (atom.is_subgroup_of(found[head])) continue;
      Subgroup j = join(found[head], atom);
      if (known.emplace(j.members().words(), true).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Classification classify(const GroupPtr& g) {
  Classification out;
  const Subgroup whole = Subgroup::whole(g);
  out.solvable = derived_series(whole).back().is_trivial();

  Subgroup current = Subgroup::trivial(g);
  out.chief_series.push_back(current);
  while (current.order() != g->order()) {
    std::optional<Subgroup> best;
    for (std::size_t c = 1; c < g->class_count(); ++c) {
      const Index rep = g->class_representative(c);
      if (current.contains(rep)) continue;
      Subgroup candidate = join(current, normal_closure(g, std::span<const Index>(&rep, 1)));
      if (!best || canonical_less(candidate, *best)) best = std::move(candidate);
    }
    current = std::move(*best);
    out.chief_series.push_back(current);
  }
  out.supersolvable = true;
  for (std::size_t i = 1; i < out.chief_series.size(); ++i)
    if (!is_prime(out.chief_series[i].order() / out.chief_series[i - 1].order()))
      out.supersolvable = false;
  return out;
}

}  // namespace charkit
