#include "relcomm/corpus.hpp"

#include <algorithm>

#include "relcomm/error.hpp"
#include "relcomm/loops.hpp"
#include "relcomm/word.hpp"

namespace relcomm {

namespace {

// Permutations of {0..k-1} in lexicographic order, optionally even only.
std::vector<std::vector<int>> perms(int k, bool even_only) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

AlgebraPtr perm_group(const std::string& id, int k, bool even_only) {
  auto ps = perms(k, even_only);
  const int n = static_cast<int>(ps.size());
  auto rank = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(ps.begin(), ps.end(), q) -
                            ps.begin());
  };
  std::vector<int> mul(n * n);
  std::vector<int> comp(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < k; ++x) comp[x] = ps[a][ps[b][x]];
      mul[a * n + b] = rank(comp);
    }
  return FiniteAlgebra::make_group(id, n, std::move(mul));
}

}  // namespace

AlgebraPtr corpus_zn(int n) {
  require_internal(n >= 1, "corpus_zn: order must be positive");
  std::vector<int> mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return FiniteAlgebra::make_group("z" + std::to_string(n), n, std::move(mul));
}

AlgebraPtr corpus_v4() {
  std::vector<int> mul(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a * 4 + b] = a ^ b;
  return FiniteAlgebra::make_group("v4", 4, std::move(mul));
}

AlgebraPtr corpus_s3() { return perm_group("s3", 3, false); }

AlgebraPtr corpus_a4() { return perm_group("a4", 4, true); }

AlgebraPtr corpus_d4() {
  // (r^k s^e)(r^l s^f) = r^(k + l or k - l) s^(e xor f), index k + 4e.
  std::vector<int> mul(64);
  for (int k = 0; k < 4; ++k)
    for (int e = 0; e < 2; ++e)
      for (int l = 0; l < 4; ++l)
        for (int f = 0; f < 2; ++f) {
          const int rot = (k + (e ? (4 - l) % 4 : l)) % 4;
          mul[(k + 4 * e) * 8 + (l + 4 * f)] = rot + 4 * (e ^ f);
        }
  return FiniteAlgebra::make_group("d4", 8, std::move(mul));
}

AlgebraPtr corpus_q8() {
  // i^a j^b with j^2 = i^2 and j i = i^3 j, index a + 4b.
  std::vector<int> mul(64);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 2; ++d) {
          const int rot = (a + (b ? (4 - c) % 4 : c) + 2 * (b & d)) % 4;
          mul[(a + 4 * b) * 8 + (c + 4 * d)] = rot + 4 * (b ^ d);
        }
  return FiniteAlgebra::make_group("q8", 8, std::move(mul));
}

AlgebraPtr corpus_l5() {
  const Word assoc = associator_word();
  for (const auto& table : gen_loop_tables(5)) {
    AlgebraPtr cand = FiniteAlgebra::make_loop("l5", 5, table);
    bool nonassoc = false;
    for (int x = 0; x < 5 && !nonassoc; ++x)
      for (int y = 0; y < 5 && !nonassoc; ++y)
        for (int z = 0; z < 5 && !nonassoc; ++z) {
          const int args[] = {x, y, z};
          if (eval_word(assoc, *cand, args) != 0) nonassoc = true;
        }
    if (nonassoc) return cand;
  }
  throw_error(ErrorCode::InternalError, "no nonassociative loop of order 5 found");
}

std::vector<AlgebraPtr> corpus_groups() {
  return {corpus_zn(2), corpus_zn(4), corpus_v4(), corpus_zn(6),
          corpus_s3(),  corpus_d4(),  corpus_q8(), corpus_a4()};
}

AlgebraPtr bundled_algebra(const std::string& name) {
  if (name == "z2") return corpus_zn(2);
  if (name == "z4") return corpus_zn(4);
  if (name == "v4") return corpus_v4();
  if (name == "z6") return corpus_zn(6);
  if (name == "s3") return corpus_s3();
  if (name == "d4") return corpus_d4();
  if (name == "q8") return corpus_q8();
  if (name == "a4") return corpus_a4();
  if (name == "l5") return corpus_l5();
  return nullptr;
}

std::vector<std::string> bundled_names() {
  return {"z2", "z4", "v4", "z6", "s3", "d4", "q8", "a4", "l5"};
}

}  // namespace relcomm
