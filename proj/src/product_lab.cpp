#include "charkit/product_lab.hpp"

#include <algorithm>
#include <numeric>

#include "charkit/error.hpp"

namespace charkit {

// ---------------------------------------------------------------------------
// Lab

Lab::Lab(GroupPtr g)
    : group_(std::move(g)),
      table_(character_table(group_)),
      classification_(classify(group_)),
      normals_(normal_subgroups(group_)) {
  for (std::size_t i = 0; i < normals_.size(); ++i) normal_lookup_.emplace(normals_[i].members().words(), i);
  views_.resize(normals_.size());
  kernels_.resize(table_.size());
  derived_.resize(normals_.size());
}

std::size_t Lab::normal_index(const Subgroup& s) const {
  auto it = normal_lookup_.find(s.members().words());
  if (it == normal_lookup_.end()) throw PreconditionError("subgroup is not normal in the root group");
  return it->second;
}

const GroupView& Lab::view(std::size_t n) {
  auto& slot = views_.at(n);
  if (!slot.view) slot.view = std::make_unique<GroupView>(make_view(normals_[n]));
  return *slot.view;
}

const CharacterTable& Lab::view_table(std::size_t n) {
  auto& slot = views_.at(n);
  if (!slot.table) {
    if (n == whole_index())
      slot.table = std::make_unique<CharacterTable>(table_);
    else
      slot.table = std::make_unique<CharacterTable>(character_table(view(n).group, &table_.field()));
  }
  return *slot.table;
}

std::size_t Lab::kernel_index(std::size_t chi) {
  auto& k = kernels_.at(chi);
  if (!k) k = normal_index(kernel(table_[chi]));
  return *k;
}

namespace {

std::vector<std::int64_t> multiplicity_vector(const ClassFunction& f, const CharacterTable& t) {
  std::vector<std::int64_t> out(t.size(), 0);
  for (const auto& c : decompose(f, t).constituents) out[c.index] = c.multiplicity;
  return out;
}

}  // namespace

const std::vector<std::int64_t>& Lab::restriction(std::size_t n, std::size_t chi) {
  auto key = std::make_pair(n, chi);
  auto it = root_restrictions_.find(key);
  if (it != root_restrictions_.end()) return it->second;
  const ClassFunction r = restrict(table_[chi], view(whole_index()), view(n));
  return root_restrictions_.emplace(key, multiplicity_vector(r, view_table(n))).first->second;
}

const std::vector<std::int64_t>& Lab::restriction(std::size_t n, std::size_t theta, std::size_t m) {
  auto key = std::make_tuple(n, theta, m);
  auto it = restrictions_.find(key);
  if (it != restrictions_.end()) return it->second;
  const ClassFunction r = restrict(view_table(n)[theta], view(n), view(m));
  return restrictions_.emplace(key, multiplicity_vector(r, view_table(m))).first->second;
}

std::size_t Lab::derived_subgroup(std::size_t k) {
  auto& d = derived_.at(k);
  if (!d) d = normal_index(commutator_subgroup(normals_[k]));
  return *d;
}

std::size_t Lab::quotient_derived_length(std::size_t k, std::size_t n) {
  auto key = std::make_pair(k, n);
  if (auto it = quotient_dl_.find(key); it != quotient_dl_.end()) return it->second;
  if (!normals_[n].is_subgroup_of(normals_[k]))
    throw ContainmentError("denominator is not contained in numerator");
  std::size_t i = 0, cur = k;
  while (!normals_[cur].is_subgroup_of(normals_[n])) {
    const std::size_t next = derived_subgroup(cur);
    if (next == cur) throw InputError("quotient is not solvable");
    cur = next;
    ++i;
  }
  quotient_dl_.emplace(key, i);
  return i;
}

// ---------------------------------------------------------------------------
// Constructions

std::size_t common_constituent(Lab& lab, std::size_t chi, std::size_t psi, std::size_t alpha) {
  const std::size_t k = lab.kernel_index(alpha);
  const auto& under_chi = lab.restriction(k, chi);
  const auto& under_psibar = lab.restriction(k, lab.table().conjugate_index(psi));
  for (std::size_t t = 0; t < under_chi.size(); ++t)
    if (under_chi[t] > 0 && under_psibar[t] > 0) return t;
  throw TheoremViolation("no irreducible of Ker(alpha) lies under both chi and conj(psi)");
}

namespace {

std::int64_t norm(const std::vector<std::int64_t>& multiplicities) {
  std::int64_t s = 0;
  for (auto a : multiplicities) s += a * a;
  return s;
}

}  // namespace

ExtremeTriple find_extreme_triple(Lab& lab, std::size_t n, std::size_t theta) {
  const auto key = std::make_pair(n, theta);
  if (auto it = lab.triples_.find(key); it != lab.triples_.end()) return it->second;
  if (lab.view_table(n)[theta].is_linear())
    throw PreconditionError("extreme triples need a nonlinear character");
  const Subgroup& top = lab.normal(n);
  std::vector<std::size_t> candidates;
  for (std::size_t m = 0; m < lab.normals().size(); ++m) {
    const Subgroup& s = lab.normal(m);
    if (s.order() >= top.order() || !s.is_subgroup_of(top)) continue;
    if (norm(lab.restriction(n, theta, m)) > 1) candidates.push_back(m);
  }
  // First maximal candidate in canonical order.
  for (std::size_t m : candidates) {
    const bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](std::size_t o) {
      return o != m && lab.normal(m).order() < lab.normal(o).order() &&
             lab.normal(m).is_subgroup_of(lab.normal(o));
    });
    if (maximal) {
      ExtremeTriple t{n, m, theta};
      lab.triples_.emplace(key, t);
      return t;
    }
  }
  throw InternalError("no reducible restriction below a nonlinear character");
}

std::vector<std::size_t> s_delta(Lab& lab, const Decomposition& delta, std::size_t n, std::size_t m) {
  const Subgroup& top = lab.normal(n);
  const Subgroup& bottom = lab.normal(m);
  if (!bottom.is_subgroup_of(top)) throw ContainmentError("S_delta needs M inside N");
  std::vector<std::size_t> out;
  for (const auto& c : delta.constituents) {
    const Subgroup& k = lab.normal(lab.kernel_index(c.index));
    if (bottom.is_subgroup_of(k) && !top.is_subgroup_of(k)) out.push_back(c.index);
  }
  return out;
}

Chain build_chain(Lab& lab, std::size_t chi, std::size_t psi, std::size_t alpha) {
  const std::size_t k0 = lab.kernel_index(alpha);
  const std::size_t nu0 = common_constituent(lab, chi, psi, alpha);
  const auto key = std::make_pair(k0, nu0);
  if (auto it = lab.chains_.find(key); it != lab.chains_.end()) return it->second;

  Chain chain{{k0}, {nu0}, {}};
  while (!lab.view_table(chain.links.back())[chain.characters.back()].is_linear()) {
    const ExtremeTriple t = find_extreme_triple(lab, chain.links.back(), chain.characters.back());
    const auto& below = lab.restriction(t.n, t.theta, t.m);
    const auto first = std::find_if(below.begin(), below.end(), [](std::int64_t a) { return a > 0; });
    if (first == below.end()) throw InternalError("restriction has no constituent");
    chain.triples.push_back(t);
    chain.links.push_back(t.m);
    chain.characters.push_back(static_cast<std::size_t>(first - below.begin()));
  }
  lab.chains_.emplace(key, chain);
  return chain;
}

bool check_centralizer_section(Lab& lab, const ExtremeTriple& triple, std::size_t l) {
  const auto key = std::make_tuple(triple.n, triple.m, l);
  if (auto it = lab.centralizer_checks_.find(key); it != lab.centralizer_checks_.end()) return it->second;
  const Group& g = lab.group();
  const Subgroup& top = lab.normal(triple.n);
  const Subgroup& bottom = lab.normal(triple.m);
  const Subgroup& mid = lab.normal(l);
  if (!bottom.is_subgroup_of(mid) || mid.order() == bottom.order() || !mid.is_subgroup_of(top))
    throw PreconditionError("centralizer check needs M < L <= N");
  if (!lab.normal(lab.derived_subgroup(l)).is_subgroup_of(bottom))
    throw PreconditionError("centralizer check needs L/M abelian");

  ElementSet c(g.order());
  top.members().for_each([&](Index x) {
    for (Index h : mid.generators())
      if (!bottom.contains(g.commutator(x, h))) return;
    c.set(x);
  });
  const Subgroup centralizer(lab.group_ptr(), std::move(c));
  bool abelian = true;
  const auto& gens = centralizer.generators();
  for (std::size_t i = 0; i < gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!bottom.contains(g.commutator(gens[i], gens[j]))) {
        abelian = false;
        break;
      }
  lab.centralizer_checks_.emplace(key, abelian);
  return abelian;
}

bool check_sdelta_nonempty(Lab& lab, const Decomposition& delta, const ExtremeTriple& triple,
                         std::size_t /*chi*/, std::size_t /*psi*/) {
  const CharacterTable& nt = lab.view_table(triple.n);
  std::vector<std::int64_t> delta_n(nt.size(), 0);
  for (const auto& c : delta.constituents) {
    const auto& r = lab.restriction(triple.n, c.index);
    for (std::size_t i = 0; i < r.size(); ++i) delta_n[i] += c.multiplicity * r[i];
  }
  const ClassFunction& theta = nt[triple.theta];
  const Decomposition tt = decompose(product(theta, conjugate(theta)), nt);
  for (const auto& c : tt.constituents)
    if (delta_n[c.index] < c.multiplicity)
      throw PreconditionError("theta conj(theta) is not a constituent of the restricted character");
  return !s_delta(lab, delta, triple.n, triple.m).empty();
}

// ---------------------------------------------------------------------------
// Records

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::NotApplicable: return "n/a";
  }
  return "n/a";
}

bool VerificationRecord::holds() const {
  return std::none_of(predicates.begin(), predicates.end(),
                      [](const auto& kv) { return kv.second == Outcome::Fail; });
}

namespace {

Outcome verdict(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

std::size_t distinct_primes(std::int64_t n) {
  std::size_t k = 0;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ++k;
      while (n % d == 0) n /= d;
    }
  return k + (n > 1 ? 1 : 0);
}

std::size_t prime_factors_with_multiplicity(std::int64_t n) {
  std::size_t k = 0;
  for (std::int64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      n /= d;
      ++k;
    }
  return k + (n > 1 ? 1 : 0);
}

VerificationRecord base_record(Lab& lab, std::size_t chi, std::size_t psi, const Decomposition& delta,
                               std::string kind) {
  const auto& t = lab.table();
  VerificationRecord rec;
  rec.group = lab.group().name();
  rec.kind = std::move(kind);
  rec.chi = chi;
  rec.psi = psi;
  rec.eta = delta.eta();
  rec.coprime_degrees = std::gcd(t[chi].degree(), t[psi].degree()) == 1;
  rec.has_linear_constituent = std::any_of(delta.constituents.begin(), delta.constituents.end(),
                                           [&](const Constituent& c) { return t[c.index].is_linear(); });
  rec.supersolvable = lab.classification().supersolvable;
  return rec;
}

}  // namespace

std::vector<VerificationRecord> check_all(Lab& lab, std::size_t chi, std::size_t psi,
                                          const CheckOptions& options) {
  const auto& t = lab.table();
  const Decomposition delta = decompose(product(t[chi], t[psi]), t);
  const std::size_t z = lab.normal_index(kernel_of_product(t[chi], t[psi]));
  const std::size_t eta = delta.eta();

  std::vector<VerificationRecord> out;
  for (const auto& constituent : delta.constituents) {
    VerificationRecord rec = base_record(lab, chi, psi, delta, "constituent");
    rec.alpha = constituent.index;
    const std::size_t k = lab.kernel_index(constituent.index);
    const std::size_t dl = lab.quotient_derived_length(k, z);
    rec.dl = dl;

    if (options.coprime) {
      rec.predicates["coprime_abelian_section"] =
          rec.coprime_degrees
              ? verdict(dl <= 1 && lab.normal(lab.derived_subgroup(k)).is_subgroup_of(lab.normal(z)))
              : Outcome::NotApplicable;
    }
    if (options.supersolvable) {
      rec.predicates["supersolvable_bound"] =
          rec.supersolvable ? verdict(dl + 1 <= 2 * eta) : Outcome::NotApplicable;
    }

    if (options.lemmas || options.chains) {
      std::optional<std::size_t> nu0;
      try {
        nu0 = common_constituent(lab, chi, psi, constituent.index);
      } catch (const TheoremViolation& ex) {
        rec.note = ex.what();
      }
      if (options.lemmas) rec.predicates["common_constituent"] = verdict(nu0.has_value());
      if (!nu0) {
        if (options.chains) rec.predicates["chain"] = Outcome::Fail;
        out.push_back(std::move(rec));
        continue;
      }
      const Chain chain = build_chain(lab, chi, psi, constituent.index);
      const std::size_t r = chain.length();
      rec.chain_length = r;

      if (options.chains) {
        rec.predicates["chain_length_below_eta"] = verdict(r < eta);
        std::vector<std::size_t> seen;
        bool disjoint = true;
        std::size_t total = 0;
        for (const auto& tr : chain.triples) {
          const auto s = s_delta(lab, delta, tr.n, tr.m);
          total += s.size();
          for (std::size_t a : s) {
            if (a == constituent.index || std::find(seen.begin(), seen.end(), a) != seen.end())
              disjoint = false;
            seen.push_back(a);
          }
        }
        rec.predicates["chain_sdelta_disjoint"] = verdict(disjoint && total < eta);
        const std::size_t tail = chain.links.back();
        rec.predicates["chain_abelian_tail"] =
            verdict(lab.normal(z).is_subgroup_of(lab.normal(tail)) &&
                    lab.normal(lab.derived_subgroup(tail)).is_subgroup_of(lab.normal(z)));
      }

      if (options.lemmas) {
        if (chain.triples.empty()) {
          rec.predicates["sdelta_nonempty"] = Outcome::NotApplicable;
          rec.predicates["centralizer_abelian"] = Outcome::NotApplicable;
        } else {
          bool nonempty = true;
          bool centralizers = true;
          bool any_section = false;
          for (const auto& tr : chain.triples) {
            nonempty = nonempty && check_sdelta_nonempty(lab, delta, tr, chi, psi);
            const Subgroup& top = lab.normal(tr.n);
            const Subgroup& bottom = lab.normal(tr.m);
            for (std::size_t l = 0; l < lab.normals().size(); ++l) {
              const Subgroup& mid = lab.normal(l);
              if (mid.order() <= bottom.order() || !bottom.is_subgroup_of(mid) || !mid.is_subgroup_of(top))
                continue;
              if (!lab.normal(lab.derived_subgroup(l)).is_subgroup_of(bottom)) continue;
              any_section = true;
              centralizers = centralizers && check_centralizer_section(lab, tr, l);
            }
          }
          rec.predicates["sdelta_nonempty"] = verdict(nonempty);
          rec.predicates["centralizer_abelian"] = any_section ? verdict(centralizers) : Outcome::NotApplicable;
        }
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

VerificationRecord check_linear_constituent(Lab& lab, std::size_t chi, std::size_t psi) {
  const auto& t = lab.table();
  const ClassFunction& x = t[chi];
  const Decomposition delta = decompose(product(x, t[psi]), t);
  VerificationRecord rec = base_record(lab, chi, psi, delta, "linear_constituent");
  auto linear = std::find_if(delta.constituents.begin(), delta.constituents.end(),
                             [&](const Constituent& c) { return t[c.index].is_linear(); });
  if (linear == delta.constituents.end()) {
    rec.note = "skipped: no linear constituent";
    return rec;
  }
  const std::size_t a1 = linear->index;
  rec.alpha = a1;
  const std::size_t z = lab.normal_index(kernel_of_product(x, t[psi]));
  rec.dl = lab.quotient_derived_length(lab.kernel_index(a1), z);

  rec.predicates["linear_twist"] = verdict(product(t[a1], conjugate(x)).same_values(t[psi]));

  // {alpha_i} -> {conj(alpha_1) alpha_i} must be the decomposition of chi conj(chi).
  const ClassFunction a1bar = conjugate(t[a1]);
  std::vector<Constituent> mapped;
  bool all_irreducible = true;
  for (const auto& c : delta.constituents) {
    auto idx = t.find(product(a1bar, t[c.index]));
    if (!idx) {
      all_irreducible = false;
      break;
    }
    mapped.push_back({*idx, c.multiplicity});
  }
  std::sort(mapped.begin(), mapped.end(), [](const Constituent& a, const Constituent& b) { return a.index < b.index; });
  const Decomposition self = decompose(product(x, conjugate(x)), t);
  rec.predicates["self_product_match"] =
      verdict(all_irreducible && mapped == self.constituents && self.eta() == delta.eta());

  if (x.degree() > 1) {
    const bool solvable = lab.classification().solvable;
    const auto eta = static_cast<std::int64_t>(delta.eta());
    rec.predicates["equal_degrees"] = verdict(x.degree() == t[psi].degree());
    if (solvable) {
      rec.predicates["prime_divisor_bound"] =
          verdict(static_cast<std::int64_t>(distinct_primes(x.degree())) <= eta - 1);
      const bool other_unit = std::any_of(delta.constituents.begin(), delta.constituents.end(),
                                          [&](const Constituent& c) { return c.index != a1 && c.multiplicity == 1; });
      const bool linear_units = std::all_of(delta.constituents.begin(), delta.constituents.end(), [&](const Constituent& c) {
        return !t[c.index].is_linear() || c.multiplicity == 1;
      });
      rec.predicates["unit_multiplicities"] = verdict(linear_units && other_unit);
    } else {
      rec.predicates["prime_divisor_bound"] = Outcome::NotApplicable;
      rec.predicates["unit_multiplicities"] = Outcome::NotApplicable;
    }
    rec.predicates["prime_factor_bound"] =
        rec.supersolvable
            ? verdict(static_cast<std::int64_t>(prime_factors_with_multiplicity(x.degree())) <= eta - 2)
            : Outcome::NotApplicable;
  } else {
    rec.note = "linear chi: degree bounds not applicable";
  }
  return rec;
}

}  // namespace charkit
