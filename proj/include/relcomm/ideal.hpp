#ifndef RELCOMM_IDEAL_HPP
#define RELCOMM_IDEAL_HPP

#include <vector>

#include "relcomm/algebra.hpp"
#include "relcomm/congruence.hpp"

namespace relcomm {

// A normal subobject of `parent` (normal subgroup or normal subloop):
// the 1-class of some congruence, stored with that congruence as witness.
// `members` is sorted and always contains the unit.
struct Ideal {
  AlgebraPtr parent;
  std::vector<int> members;
  Congruence witness;

  bool contains(int e) const;
  bool is_trivial() const { return members.size() == 1; }
  bool is_full() const {
    return static_cast<int>(members.size()) == parent->order();
  }
  AlgebraPtr as_algebra() const;  // sub view on the member set
};

Ideal trivial_ideal(const AlgebraPtr& a);
Ideal full_ideal(const AlgebraPtr& a);

// Least ideal containing the generators.  For loops this is the 1-class of
// the congruence generated by {(g, 1)}.  For groups the members are found
// by a conjugation-and-product closure and the witness is the coset
// partition, which is cheaper on large carriers.
Ideal ideal_closure(const AlgebraPtr& a, const std::vector<int>& gens);

// Checks that `members` is an ideal as given (no new elements appear under
// closure) and wraps it; throws InvalidArgument otherwise.
Ideal ideal_from_members(const AlgebraPtr& a, std::vector<int> members);

// Wraps a congruence as the ideal given by its 1-class.  Validates the
// 1-class/member agreement, and compatibility on small carriers.
Ideal ideal_from_witness(const AlgebraPtr& a, Congruence witness);

// Elementwise product M.N = {mn}.  In the Mal'cev varieties handled here
// the product of two ideals equals their join; this is asserted against
// ideal_closure(M u N) and an InternalError signals a violation.
Ideal product_ideal(const Ideal& m, const Ideal& n);

Ideal intersect_ideal(const Ideal& m, const Ideal& n);

bool same_members(const Ideal& m, const Ideal& n);

}  // namespace relcomm

#endif
