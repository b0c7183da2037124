#ifndef RELCOMM_CONGRUENCE_HPP
#define RELCOMM_CONGRUENCE_HPP

#include <utility>
#include <vector>

#include "relcomm/algebra.hpp"

namespace relcomm {

// A congruence on `parent`, stored as a block-id partition.  Block ids are
// normalized by first occurrence, so the unit's block is always block 0.
struct Congruence {
  AlgebraPtr parent;
  std::vector<int> block;
  int n_blocks = 0;

  static Congruence discrete(AlgebraPtr a);
  static Congruence total(AlgebraPtr a);
  // Normalizes the labels; does not check compatibility.
  static Congruence from_blocks(AlgebraPtr a, std::vector<int> raw);

  std::vector<int> one_class() const;
  std::vector<std::vector<int>> classes() const;
  bool same(int a, int b) const { return block[a] == block[b]; }

  // Exhaustive compatibility check (quadratic per operation); main use is
  // tests and small-order validation.
  bool is_compatible() const;
};

Congruence meet(const Congruence& a, const Congruence& b);

// The least congruence identifying every seed pair: union-find closed under
// the one-position translations of every basic operation (mul/inv for
// groups, mul/ldiv/rdiv for loops).
Congruence congruence_generated(const AlgebraPtr& a,
                                const std::vector<std::pair<int, int>>& seed);

}  // namespace relcomm

#endif
