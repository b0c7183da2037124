// Brute-force reference implementations the tests compare the engine
// against.  Deliberately written in the most direct style available, sharing
// no algorithmic structure with the library.
#ifndef RELCOMM_TESTS_ORACLES_HPP
#define RELCOMM_TESTS_ORACLES_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "relcomm/algebra.hpp"

namespace oracles {

using relcomm::AlgebraPtr;
using relcomm::Kind;
using relcomm::Op;

// All partitions of {0..n-1} as restricted growth strings (Bell(n) many).
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  while (true) {
    out.push_back(a);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(a.begin(), a.begin() + i) + 1;
      if (a[i] < cap) break;
    }
    if (i == 0) break;
    ++a[i];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
  return out;
}

inline bool partition_compatible(const AlgebraPtr& alg,
                                 const std::vector<int>& blk) {
  const int n = alg->order();
  for (Op op : relcomm::binary_ops(alg->kind()))
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (blk[a] != blk[b]) continue;
        for (int c = 0; c < n; ++c) {
          if (blk[alg->op(op, a, c)] != blk[alg->op(op, b, c)]) return false;
          if (blk[alg->op(op, c, a)] != blk[alg->op(op, c, b)]) return false;
        }
      }
  if (alg->kind() == Kind::group)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (blk[a] == blk[b] && blk[alg->inv(a)] != blk[alg->inv(b)])
          return false;
  return true;
}

// Least compatible partition containing the seed pairs, as the blockwise
// meet of every compatible partition that contains them.
inline std::vector<int> min_congruence(
    const AlgebraPtr& alg, const std::vector<std::pair<int, int>>& seed) {
  const int n = alg->order();
  std::vector<int> acc(n, 0);  // start at the total partition
  bool found = false;
  for (const auto& blk : all_partitions(n)) {
    bool holds = true;
    for (auto [x, y] : seed)
      if (blk[x] != blk[y]) {
        holds = false;
        break;
      }
    if (!holds || !partition_compatible(alg, blk)) continue;
    found = true;
    // meet with acc: label pairs, renumbered by first occurrence
    std::vector<std::pair<int, int>> tag(n);
    for (int e = 0; e < n; ++e) tag[e] = {acc[e], blk[e]};
    std::vector<int> next(n, -1);
    int fresh = 0;
    for (int e = 0; e < n; ++e) {
      if (next[e] >= 0) continue;
      for (int j = e; j < n; ++j)
        if (next[j] < 0 && tag[j] == tag[e]) next[j] = fresh;
      ++fresh;
    }
    acc = next;
  }
  if (!found) acc.assign(n, -1);  // cannot happen: total partition qualifies
  return acc;
}

// Subgroup of a group generated by a set, by plain orbit closure.
inline std::vector<int> subgroup_generated(const AlgebraPtr& g,
                                           std::vector<int> gens) {
  std::set<int> s{0};
  for (int x : gens) s.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur) {
        if (s.insert(g->mul(a, b)).second) grew = true;
        if (s.insert(g->inv(a)).second) grew = true;
      }
  }
  return {s.begin(), s.end()};
}

inline std::vector<int> normal_closure(const AlgebraPtr& g,
                                       const std::vector<int>& gens) {
  std::vector<int> cur(gens);
  cur.push_back(0);
  while (true) {
    auto sub = subgroup_generated(g, cur);
    std::set<int> wider(sub.begin(), sub.end());
    for (int x : sub)
      for (int a = 0; a < g->order(); ++a)
        wider.insert(g->mul(g->mul(a, x), g->inv(a)));
    if (wider.size() == sub.size()) return sub;
    cur.assign(wider.begin(), wider.end());
  }
}

// Classical commutator subgroup [M,N]: subgroup generated by all
// m n m^-1 n^-1.  For normal M,N this is itself normal.
inline std::vector<int> commutator_subgroup(const AlgebraPtr& g,
                                            const std::vector<int>& ms,
                                            const std::vector<int>& ns) {
  std::vector<int> vals;
  for (int m : ms)
    for (int n : ns)
      vals.push_back(g->mul(g->mul(g->mul(m, n), g->inv(m)), g->inv(n)));
  return subgroup_generated(g, vals);
}

}  // namespace oracles

#endif
