#include "relcomm/hom.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "relcomm/error.hpp"

namespace relcomm {

namespace {

void compute_flags(Homomorphism& h) {
  std::vector<char> hit(h.dst->order(), 0);
  bool inj = true;
  int covered = 0;
  for (int v : h.map) {
    if (hit[v])
      inj = false;
    else {
      hit[v] = 1;
      ++covered;
    }
  }
  h.surjective = covered == h.dst->order();
  h.injective = inj;
}

}  // namespace

Homomorphism make_hom(AlgebraPtr src, AlgebraPtr dst, std::vector<int> map,
                      Verify v) {
  if (src->kind() != dst->kind())
    throw_error(ErrorCode::SignatureMismatch,
                "make_hom: " + src->id() + " and " + dst->id() +
                    " have different kinds");
  if (static_cast<int>(map.size()) != src->order())
    throw_error(ErrorCode::InvalidArgument, "make_hom: map length != order");
  for (int e : map)
    if (e < 0 || e >= dst->order())
      throw_error(ErrorCode::InvalidArgument, "make_hom: value out of range");
  if (map[0] != 0)
    throw_error(ErrorCode::InvalidArgument, "make_hom: unit not preserved");
  if (v == Verify::full) {
    const int n = src->order();
    for (Op op : binary_ops(src->kind()))
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (map[src->op(op, x, y)] != dst->op(op, map[x], map[y]))
            throw_error(ErrorCode::InvalidArgument,
                        "make_hom: map does not commute with operations");
    if (src->kind() == Kind::group)
      for (int x = 0; x < n; ++x)
        if (map[src->inv(x)] != dst->inv(map[x]))
          throw_error(ErrorCode::InvalidArgument,
                      "make_hom: map does not commute with inv");
  }
  Homomorphism h;
  h.src = std::move(src);
  h.dst = std::move(dst);
  h.map = std::move(map);
  compute_flags(h);
  return h;
}

Homomorphism identity_hom(const AlgebraPtr& a) {
  std::vector<int> m(a->order());
  for (int e = 0; e < a->order(); ++e) m[e] = e;
  return make_hom(a, a, std::move(m), Verify::structural);
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  require_internal(f.dst == g.src, "compose: middle objects differ");
  std::vector<int> m(f.map.size());
  for (std::size_t e = 0; e < f.map.size(); ++e) m[e] = g.map[f.map[e]];
  return make_hom(f.src, g.dst, std::move(m), Verify::structural);
}

Ideal kernel(const Homomorphism& f) {
  return ideal_from_witness(f.src, Congruence::from_blocks(f.src, f.map));
}

Quotient quotient(const AlgebraPtr& a, const Congruence& c) {
  require_internal(c.parent == a, "quotient: congruence on a different algebra");
  const int k = c.n_blocks;
  std::vector<int> rep(k, -1);
  for (int e = 0; e < a->order(); ++e)
    if (rep[c.block[e]] < 0) rep[c.block[e]] = e;
  std::vector<int> mul(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mul[i * k + j] = c.block[a->mul(rep[i], rep[j])];
  const std::string id = a->id() + "/~";
  AlgebraPtr q = a->kind() == Kind::group
                     ? FiniteAlgebra::make_group(id, k, std::move(mul))
                     : FiniteAlgebra::make_loop(id, k, std::move(mul));
  Verify v = a->order() <= 512 ? Verify::full : Verify::structural;
  return {q, make_hom(a, q, c.block, v)};
}

KernelPair kernel_pair(const Homomorphism& f) {
  const int n = f.src->order();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f.map[x] == f.map[y]) pairs.emplace_back(x, y);
  AlgebraPtr rel = FiniteAlgebra::make_pair_view("R[" + f.src->id() + "]",
                                                 f.src, f.src, pairs);
  // Fiber labels make the relation a congruence view, which the verbal
  // value-set computation exploits.
  rel->set_equiv_classes(Congruence::from_blocks(f.src, f.map).block);
  const int m = rel->order();
  std::vector<int> m0(m), m1(m);
  for (int e = 0; e < m; ++e) {
    m0[e] = rel->left(e);
    m1[e] = rel->right(e);
  }
  KernelPair kp;
  kp.rel = rel;
  kp.p0 = make_hom(rel, f.src, std::move(m0), Verify::structural);
  kp.p1 = make_hom(rel, f.src, std::move(m1), Verify::structural);
  return kp;
}

PullbackCone pullback(const Homomorphism& f, const Homomorphism& g) {
  require_internal(f.dst == g.dst, "pullback: codomains differ");
  std::vector<std::pair<int, int>> pairs;
  for (int d = 0; d < f.src->order(); ++d)
    for (int c = 0; c < g.src->order(); ++c)
      if (f.map[d] == g.map[c]) pairs.emplace_back(d, c);
  AlgebraPtr apex = FiniteAlgebra::make_pair_view(
      f.src->id() + "x_Z" + g.src->id(), f.src, g.src, pairs);
  const int m = apex->order();
  std::vector<int> m0(m), m1(m);
  for (int e = 0; e < m; ++e) {
    m0[e] = apex->left(e);
    m1[e] = apex->right(e);
  }
  PullbackCone pc;
  pc.apex = apex;
  pc.p0 = make_hom(apex, f.src, std::move(m0), Verify::structural);
  pc.p1 = make_hom(apex, g.src, std::move(m1), Verify::structural);
  return pc;
}

bool is_pullback_square(const Homomorphism& top, const Homomorphism& left,
                        const Homomorphism& right, const Homomorphism& bottom) {
  require_internal(top.src == left.src && top.dst == right.src &&
                       left.dst == bottom.src && right.dst == bottom.dst,
                   "is_pullback_square: objects do not form a square");
  const int np = top.src->order();
  for (int x = 0; x < np; ++x)
    if (right.map[top.map[x]] != bottom.map[left.map[x]])
      throw_error(ErrorCode::NonCommutingSquare,
                  "square does not commute at element " + std::to_string(x));
  // Comparison x -> (left(x), top(x)) must hit {(t,q) | bottom(t)=right(q)}
  // bijectively.
  const int nq = top.dst->order();
  std::vector<long long> image(np);
  for (int x = 0; x < np; ++x)
    image[x] = static_cast<long long>(left.map[x]) * nq + top.map[x];
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    return false;  // comparison not injective
  long long fibered = 0;
  for (int t = 0; t < bottom.src->order(); ++t)
    for (int q = 0; q < nq; ++q)
      if (bottom.map[t] == right.map[q]) ++fibered;
  return fibered == static_cast<long long>(np);
}

std::vector<std::vector<int>> all_isomorphisms(const AlgebraPtr& a,
                                               const AlgebraPtr& b) {
  std::vector<std::vector<int>> out;
  if (a->kind() != b->kind() || a->order() != b->order()) return out;
  const int n = a->order();
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  img[0] = 0;  // units correspond
  used[0] = 1;
  std::function<void(int)> assign = [&](int pos) {
    if (pos == n) {
      out.push_back(img);
      return;
    }
    for (int cand = 1; cand < n; ++cand) {
      if (used[cand]) continue;
      img[pos] = cand;
      used[cand] = 1;
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        if (img[u] < 0) continue;
        for (int v = 0; v < n; ++v) {
          if (img[v] < 0) continue;
          int m = img[a->mul(u, v)];
          if (m >= 0 && b->mul(img[u], img[v]) != m) {
            ok = false;
            break;
          }
        }
      }
      if (ok) assign(pos + 1);
      img[pos] = -1;
      used[cand] = 0;
    }
  };
  assign(1);
  return out;
}

}  // namespace relcomm
