#ifndef RELCOMM_HOM_HPP
#define RELCOMM_HOM_HPP

#include <vector>

#include "relcomm/algebra.hpp"
#include "relcomm/congruence.hpp"
#include "relcomm/ideal.hpp"

namespace relcomm {

struct Homomorphism {
  AlgebraPtr src;
  AlgebraPtr dst;
  std::vector<int> map;
  bool surjective = false;
  bool injective = false;

  int operator()(int e) const { return map[e]; }
};

// full: exhaustive operation-compatibility scan (quadratic).  structural:
// skip the scan for maps that are homomorphisms by construction (quotient
// projections, componentwise pair projections); range and unit are still
// checked and the flags are always computed.
enum class Verify { full, structural };

Homomorphism make_hom(AlgebraPtr src, AlgebraPtr dst, std::vector<int> map,
                      Verify v = Verify::full);
Homomorphism identity_hom(const AlgebraPtr& a);
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);  // g after f

Ideal kernel(const Homomorphism& f);

struct Quotient {
  AlgebraPtr alg;
  Homomorphism pi;
};
// Quotient by a congruence; the result is rebuilt through the validating
// factories, so kind preservation is verified rather than assumed.
Quotient quotient(const AlgebraPtr& a, const Congruence& c);

struct KernelPair {
  AlgebraPtr rel;  // pair view on {(a,a') | f(a)=f(a')}, fiber classes attached
  Homomorphism p0;
  Homomorphism p1;
};
KernelPair kernel_pair(const Homomorphism& f);

struct PullbackCone {
  AlgebraPtr apex;  // pair view on {(d,c) | f(d)=g(c)}
  Homomorphism p0;  // to f.src
  Homomorphism p1;  // to g.src
};
PullbackCone pullback(const Homomorphism& f, const Homomorphism& g);

// Square
//      P --top--> Q
//    left       right
//      v          v
//      T --bot--> U
// True iff the comparison map P -> T x_U Q is a bijection.
bool is_pullback_square(const Homomorphism& top, const Homomorphism& left,
                        const Homomorphism& right, const Homomorphism& bottom);

// Every isomorphism a -> b, as raw maps; empty when the algebras are not
// isomorphic.  Backtracking with pairwise product checks; meant for the
// small orders handled here.
std::vector<std::vector<int>> all_isomorphisms(const AlgebraPtr& a,
                                               const AlgebraPtr& b);

}  // namespace relcomm

#endif
