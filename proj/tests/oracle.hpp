#pragma once

// Brute-force reference implementations for tests. Deliberately naive: they
// work on raw image vectors and never call the library algorithms.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Eigenvalues>

namespace oracle {

using Perm = std::vector<int>;
using PermSet = std::set<Perm>;

inline Perm mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

inline Perm inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
  return r;
}

inline Perm identity(std::size_t n) {
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(i);
  return r;
}

// Multiply everything by everything until nothing new appears.
inline PermSet generated(const std::vector<Perm>& seeds, std::size_t degree) {
  PermSet g{identity(degree)};
  g.insert(seeds.begin(), seeds.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Perm> cur(g.begin(), g.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (g.insert(mul(a, b)).second) grew = true;
  }
  return g;
}

inline std::vector<PermSet> classes(const PermSet& g) {
  std::vector<PermSet> out;
  PermSet seen;
  for (const auto& x : g) {
    if (seen.count(x)) continue;
    PermSet cls;
    for (const auto& y : g) cls.insert(mul(mul(inv(y), x), y));
    seen.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

inline PermSet commutator_subgroup(const PermSet& h) {
  std::vector<Perm> comms;
  for (const auto& a : h)
    for (const auto& b : h) comms.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
  return generated(comms, h.begin()->size());
}

inline bool is_normal(const PermSet& h, const PermSet& g) {
  for (const auto& x : g)
    for (const auto& y : h)
      if (!h.count(mul(mul(inv(x), y), x))) return false;
  return true;
}

inline bool closed(const PermSet& s) {
  for (const auto& a : s)
    for (const auto& b : s)
      if (!s.count(mul(a, b))) return false;
  return true;
}

// Every union of classes containing the identity that is closed. Exponential
// in the class count; keep it to small groups.
inline std::vector<PermSet> normal_subgroups(const PermSet& g) {
  const auto cls = classes(g);
  std::vector<PermSet> out;
  const std::size_t k = cls.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << (k - 1)); ++mask) {
    PermSet s = cls[0];
    for (std::size_t i = 1; i < k; ++i)
      if (mask >> (i - 1) & 1) s.insert(cls[i].begin(), cls[i].end());
    if (closed(s)) out.push_back(std::move(s));
  }
  return out;
}

// Least i with K^(i) inside N; -1 if the series stalls outside N.
inline int derived_length(PermSet k, const PermSet& n) {
  for (int i = 0;; ++i) {
    if (std::includes(n.begin(), n.end(), k.begin(), k.end())) return i;
    PermSet next = commutator_subgroup(k);
    if (next == k) return -1;
    k = std::move(next);
  }
}

using Row = std::vector<std::complex<double>>;

// Irreducible characters by numerically diagonalising a random combination of
// class-sum matrices. `cls[0]` must be the identity class. Rows in no
// particular order.
inline std::vector<Row> float_table(const std::vector<std::vector<Perm>>& cls, std::size_t order,
                                    unsigned seed = 12345) {
  const std::size_t k = cls.size();
  std::map<Perm, std::size_t> class_of;
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& x : cls[c]) class_of[x] = c;
  // M_j[l][kk] = #{x in C_j : x^-1 z_kk in C_l}, so M_j omega = omega_j omega.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const double r = coef(rng);
    for (std::size_t kk = 0; kk < k; ++kk) {
      const Perm& z = cls[kk].front();
      for (const auto& x : cls[j]) m(class_of.at(mul(inv(x), z)), kk) += r;
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.cast<std::complex<double>>());
  std::vector<Row> out;
  for (std::size_t col = 0; col < k; ++col) {
    Eigen::VectorXcd w = solver.eigenvectors().col(static_cast<Eigen::Index>(col));
    w /= w(0);
    double s = 0;
    for (std::size_t j = 0; j < k; ++j) s += std::norm(w(static_cast<Eigen::Index>(j))) / static_cast<double>(cls[j].size());
    const double degree = std::sqrt(static_cast<double>(order) / s);
    Row row(k);
    for (std::size_t j = 0; j < k; ++j)
      row[j] = w(static_cast<Eigen::Index>(j)) * degree / static_cast<double>(cls[j].size());
    out.push_back(std::move(row));
  }
  return out;
}

// Rows of `a` matched one-to-one to rows of `b` within `tol` entrywise.
inline bool same_rows_up_to_permutation(const std::vector<Row>& a, const std::vector<Row>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& r : a) {
    bool found = false;
    for (std::size_t i = 0; i < b.size() && !found; ++i) {
      if (used[i] || b[i].size() != r.size()) continue;
      bool close = true;
      for (std::size_t c = 0; c < r.size() && close; ++c) close = std::abs(r[c] - b[i][c]) < tol;
      if (close) used[i] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
