#include "relcomm/ideal.hpp"

#include <algorithm>

#include "relcomm/error.hpp"

namespace relcomm {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Normal-subgroup closure: start from the generators, close under inverse,
// pairwise products and conjugation by every group element.
std::vector<int> group_normal_closure(const FiniteAlgebra& a,
                                      const std::vector<int>& gens) {
  const int n = a.order();
  std::vector<char> in(n, 0);
  std::vector<int> members;
  std::vector<int> work;
  auto add = [&](int e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  add(0);
  for (int g : gens) add(g);
  while (!work.empty()) {
    int t = work.back();
    work.pop_back();
    add(a.inv(t));
    for (int c = 0; c < n; ++c) add(a.mul(a.mul(c, t), a.inv(c)));
    // members grows while looping; new entries pair with t when they pop.
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(a.mul(t, members[i]));
      add(a.mul(members[i], t));
    }
  }
  return sorted_unique(std::move(members));
}

// Coset partition of a normal subgroup, labelled by first occurrence.
Congruence coset_congruence(const AlgebraPtr& a,
                            const std::vector<int>& members) {
  const int n = a->order();
  std::vector<int> raw(n, -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    if (raw[e] >= 0) continue;
    for (int m : members) raw[a->mul(e, m)] = next;
    ++next;
  }
  Congruence c;
  c.parent = a;
  c.block = std::move(raw);
  c.n_blocks = next;
  return c;
}

Ideal wrap(const AlgebraPtr& a, std::vector<int> members, Congruence witness) {
  require_internal(witness.one_class() == members,
                   "ideal: witness 1-class differs from member set");
  if (a->order() <= 256)
    require_internal(witness.is_compatible(),
                     "ideal: witness partition is not a congruence");
  Ideal out;
  out.parent = a;
  out.members = std::move(members);
  out.witness = std::move(witness);
  return out;
}

}  // namespace

Ideal ideal_from_witness(const AlgebraPtr& a, Congruence witness) {
  require_internal(witness.parent == a, "ideal_from_witness: parent mismatch");
  auto members = witness.one_class();
  return wrap(a, std::move(members), std::move(witness));
}

bool Ideal::contains(int e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

AlgebraPtr Ideal::as_algebra() const {
  // The member set is the 1-class of the witness congruence, so it is closed
  // under the operations already; skip the quadratic closure scan.
  return FiniteAlgebra::make_sub_view(parent->id() + "#sub", parent, members,
                                      false);
}

Ideal trivial_ideal(const AlgebraPtr& a) {
  return wrap(a, {0}, Congruence::discrete(a));
}

Ideal full_ideal(const AlgebraPtr& a) {
  std::vector<int> all(a->order());
  for (int e = 0; e < a->order(); ++e) all[e] = e;
  return wrap(a, std::move(all), Congruence::total(a));
}

Ideal ideal_closure(const AlgebraPtr& a, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= a->order())
      throw_error(ErrorCode::InvalidArgument, "ideal_closure: generator out of range");
  if (a->kind() == Kind::group) {
    auto members = group_normal_closure(*a, gens);
    return wrap(a, members, coset_congruence(a, members));
  }
  std::vector<std::pair<int, int>> seed;
  seed.reserve(gens.size());
  for (int g : gens) seed.emplace_back(g, 0);
  Congruence c = congruence_generated(a, seed);
  auto members = c.one_class();
  return wrap(a, std::move(members), std::move(c));
}

Ideal ideal_from_members(const AlgebraPtr& a, std::vector<int> members) {
  members = sorted_unique(std::move(members));
  Ideal closed = ideal_closure(a, members);
  if (closed.members != members)
    throw_error(ErrorCode::InvalidArgument,
                "ideal_from_members: set is not closed (closure adds elements)");
  return closed;
}

Ideal product_ideal(const Ideal& m, const Ideal& n) {
  require_internal(m.parent == n.parent, "product_ideal: different parents");
  const auto& a = *m.parent;
  std::vector<char> in(a.order(), 0);
  std::vector<int> prod;
  for (int x : m.members)
    for (int y : n.members) {
      int e = a.mul(x, y);
      if (!in[e]) {
        in[e] = 1;
        prod.push_back(e);
      }
    }
  prod = sorted_unique(std::move(prod));
  std::vector<int> both(m.members);
  both.insert(both.end(), n.members.begin(), n.members.end());
  Ideal join = ideal_closure(m.parent, sorted_unique(std::move(both)));
  require_internal(join.members == prod,
                   "product_ideal: M.N differs from the join of M and N");
  return join;
}

Ideal intersect_ideal(const Ideal& m, const Ideal& n) {
  require_internal(m.parent == n.parent, "intersect_ideal: different parents");
  std::vector<int> common;
  std::set_intersection(m.members.begin(), m.members.end(), n.members.begin(),
                        n.members.end(), std::back_inserter(common));
  return wrap(m.parent, common, meet(m.witness, n.witness));
}

bool same_members(const Ideal& m, const Ideal& n) {
  return m.parent == n.parent && m.members == n.members;
}

}  // namespace relcomm
