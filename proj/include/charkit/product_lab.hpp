#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "charkit/character.hpp"
#include "charkit/group.hpp"
#include "charkit/group_view.hpp"

namespace charkit {

// Irreducible theta of N such that for every normal K of G with
// M < K <= N theta_K is irreducible, while theta_M is reducible.
struct ExtremeTriple {
  std::size_t n = 0;      // normal index of N
  std::size_t m = 0;      // normal index of M
  std::size_t theta = 0;  // index into the table of N
};

// A descending series K_0 > K_1 > ... > K_r of normal subgroups with
// characters nu_i of K_i; (K_i, K_{i+1}, nu_i) are extreme triples and nu_r
// is linear.
struct Chain {
  std::vector<std::size_t> links;       // normal indices
  std::vector<std::size_t> characters;  // nu_i, index into the table of K_i
  std::vector<ExtremeTriple> triples;   // r entries
  std::size_t length() const { return triples.size(); }
};

// Per-group working context for the product constructions. Every subgroup
// the constructions touch is normal in the root group, so they are addressed
// by their position in normals(). Views, subgroup tables and restrictions are
// built on first use. Not thread-safe; use one Lab per thread.
class Lab {
 public:
  explicit Lab(GroupPtr g);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const CharacterTable& table() const { return table_; }
  const Classification& classification() const { return classification_; }

  const std::vector<Subgroup>& normals() const { return normals_; }
  const Subgroup& normal(std::size_t n) const { return normals_[n]; }
  // Throws PreconditionError if `s` is not a normal subgroup.
  std::size_t normal_index(const Subgroup& s) const;
  std::size_t trivial_index() const { return 0; }
  std::size_t whole_index() const { return normals_.size() - 1; }

  const GroupView& view(std::size_t n);
  const CharacterTable& view_table(std::size_t n);

  // Ker of the root irreducible `chi`.
  std::size_t kernel_index(std::size_t chi);
  // Multiplicities of the irreducibles of N in the restriction of root irreducible chi.
  const std::vector<std::int64_t>& restriction(std::size_t n, std::size_t chi);
  // Same, for an irreducible theta of N restricted to M (M inside N).
  const std::vector<std::int64_t>& restriction(std::size_t n, std::size_t theta, std::size_t m);

  // [K, K] as a normal index.
  std::size_t derived_subgroup(std::size_t k);
  // Least i with K^(i) inside N.
  std::size_t quotient_derived_length(std::size_t k, std::size_t n);

 private:
  struct ViewSlot {
    std::unique_ptr<GroupView> view;
    std::unique_ptr<CharacterTable> table;
  };

  GroupPtr group_;
  CharacterTable table_;
  Classification classification_;
  std::vector<Subgroup> normals_;
  std::map<std::vector<std::uint64_t>, std::size_t> normal_lookup_;
  std::vector<ViewSlot> views_;
  std::vector<std::optional<std::size_t>> kernels_;
  std::vector<std::optional<std::size_t>> derived_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::int64_t>> root_restrictions_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::int64_t>> restrictions_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> quotient_dl_;

  friend ExtremeTriple find_extreme_triple(Lab&, std::size_t, std::size_t);
  friend Chain build_chain(Lab&, std::size_t, std::size_t, std::size_t);
  friend bool check_centralizer_section(Lab&, const ExtremeTriple&, std::size_t);
  std::map<std::pair<std::size_t, std::size_t>, ExtremeTriple> triples_;
  std::map<std::pair<std::size_t, std::size_t>, Chain> chains_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> centralizer_checks_;
};

// Irreducible theta of K = Ker(alpha) lying under both chi and conj(psi):
// the first such in K's canonical order. Throws TheoremViolation if none.
std::size_t common_constituent(Lab& lab, std::size_t chi, std::size_t psi, std::size_t alpha);

// M is an inclusion-maximal normal subgroup of G inside N with theta_M
// reducible; ties go to the smaller order, then canonical order.
// Throws PreconditionError for linear theta.
ExtremeTriple find_extreme_triple(Lab& lab, std::size_t n, std::size_t theta);

// Constituents alpha of delta with M <= Ker(alpha) and N not <= Ker(alpha).
std::vector<std::size_t> s_delta(Lab& lab, const Decomposition& delta, std::size_t n, std::size_t m);

Chain build_chain(Lab& lab, std::size_t chi, std::size_t psi, std::size_t alpha);

// L normal with M < L <= N and L/M abelian. Returns whether C/M is abelian,
// C = {x in N : [x, L] <= M}.
bool check_centralizer_section(Lab& lab, const ExtremeTriple& triple, std::size_t l);

// Requires theta conj(theta) to be a constituent of (chi psi)_N; returns
// whether S_delta(N/M) is nonempty.
bool check_sdelta_nonempty(Lab& lab, const Decomposition& delta, const ExtremeTriple& triple,
                         std::size_t chi, std::size_t psi);

enum class Outcome { Pass, Fail, NotApplicable };
std::string_view outcome_name(Outcome o);

struct VerificationRecord {
  std::string group;
  std::string kind;  // "constituent" or "linear_constituent"
  std::size_t chi = 0;
  std::size_t psi = 0;
  std::optional<std::size_t> alpha;
  std::size_t eta = 0;
  std::optional<std::size_t> dl;
  std::optional<std::size_t> chain_length;
  bool coprime_degrees = false;
  bool has_linear_constituent = false;
  bool supersolvable = false;
  std::string note;
  std::map<std::string, Outcome> predicates;

  bool holds() const;
  double dl_over_eta() const { return dl && eta ? static_cast<double>(*dl) / static_cast<double>(eta) : 0.0; }
};

struct CheckOptions {
  bool chains = true;          // chain invariants, dl/eta report
  bool coprime = true;         // coprime degrees give an abelian section
  bool supersolvable = true;   // dl <= 2 eta - 1
  bool lemmas = true;          // common constituent, S_delta, centralizer
  bool linear = true;          // linear-constituent consequences
};

// One record per constituent alpha of chi psi.
std::vector<VerificationRecord> check_all(Lab& lab, std::size_t chi, std::size_t psi,
                                          const CheckOptions& options = {});

// Consequences of chi psi having a linear constituent; the record is marked
// skipped (note set, no predicates) when it has none.
VerificationRecord check_linear_constituent(Lab& lab, std::size_t chi, std::size_t psi);

}  // namespace charkit
