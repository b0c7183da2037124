#include "relcomm/congruence.hpp"

#include <algorithm>
#include <numeric>

#include "relcomm/error.hpp"

namespace relcomm {

namespace {

// Plain union-find with path halving and union by size.
struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;
  int classes;

  explicit UnionFind(int n) : parent(n), size(n, 1), classes(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns true when the pair was not already joined.
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    --classes;
    return true;
  }
};

std::vector<int> normalize_labels(std::vector<int> raw, int* out_blocks) {
  const int n = static_cast<int>(raw.size());
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    int& slot = remap[raw[e]];
    if (slot < 0) slot = next++;
    raw[e] = slot;
  }
  *out_blocks = next;
  return raw;
}

}  // namespace

Congruence Congruence::discrete(AlgebraPtr a) {
  Congruence c;
  c.parent = std::move(a);
  c.block.resize(c.parent->order());
  std::iota(c.block.begin(), c.block.end(), 0);
  c.n_blocks = c.parent->order();
  return c;
}

Congruence Congruence::total(AlgebraPtr a) {
  Congruence c;
  c.parent = std::move(a);
  c.block.assign(c.parent->order(), 0);
  c.n_blocks = 1;
  return c;
}

Congruence Congruence::from_blocks(AlgebraPtr a, std::vector<int> raw) {
  require_internal(static_cast<int>(raw.size()) == a->order(),
                   "from_blocks: label count != order");
  for (int v : raw)
    require_internal(v >= 0 && v < static_cast<int>(raw.size()),
                     "from_blocks: label out of range");
  Congruence c;
  c.parent = std::move(a);
  c.block = normalize_labels(std::move(raw), &c.n_blocks);
  return c;
}

std::vector<int> Congruence::one_class() const {
  std::vector<int> out;
  const int unit_block = block[0];
  for (int e = 0; e < static_cast<int>(block.size()); ++e)
    if (block[e] == unit_block) out.push_back(e);
  return out;
}

std::vector<std::vector<int>> Congruence::classes() const {
  std::vector<std::vector<int>> out(n_blocks);
  for (int e = 0; e < static_cast<int>(block.size()); ++e)
    out[block[e]].push_back(e);
  return out;
}

bool Congruence::is_compatible() const {
  const auto& a = *parent;
  const int n = a.order();
  const auto ops = binary_ops(a.kind());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (block[x] != block[y]) continue;
      for (Op op : ops)
        for (int c = 0; c < n; ++c) {
          if (block[a.op(op, x, c)] != block[a.op(op, y, c)]) return false;
          if (block[a.op(op, c, x)] != block[a.op(op, c, y)]) return false;
        }
      if (a.kind() == Kind::group &&
          block[a.inv(x)] != block[a.inv(y)])
        return false;
    }
  return true;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  require_internal(a.parent == b.parent, "meet: congruences on different algebras");
  const int n = a.parent->order();
  std::vector<int> raw(n);
  // Pair of labels, packed; normalize_labels compresses afterwards.
  for (int e = 0; e < n; ++e) raw[e] = a.block[e] * b.n_blocks + b.block[e];
  // Packed values may exceed n; remap through a dense translation first.
  std::vector<int> sorted(raw);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int& v : raw)
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                         sorted.begin());
  return Congruence::from_blocks(a.parent, std::move(raw));
}

Congruence congruence_generated(const AlgebraPtr& a,
                                const std::vector<std::pair<int, int>>& seed) {
  const int n = a->order();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  for (auto [x, y] : seed) {
    require_internal(x >= 0 && x < n && y >= 0 && y < n,
                     "congruence_generated: seed out of range");
    if (uf.join(x, y)) work.emplace_back(x, y);
  }
  const auto ops = binary_ops(a->kind());
  while (!work.empty() && uf.classes > 1) {
    auto [x, y] = work.back();
    work.pop_back();
    auto push = [&](int u, int v) {
      if (uf.join(u, v)) work.emplace_back(u, v);
    };
    for (Op op : ops)
      for (int c = 0; c < n; ++c) {
        push(a->op(op, x, c), a->op(op, y, c));
        push(a->op(op, c, x), a->op(op, c, y));
      }
    if (a->kind() == Kind::group) push(a->inv(x), a->inv(y));
  }
  std::vector<int> raw(n);
  for (int e = 0; e < n; ++e) raw[e] = uf.find(e);
  Congruence c;
  c.parent = a;
  c.block = normalize_labels(std::move(raw), &c.n_blocks);
  return c;
}

}  // namespace relcomm
