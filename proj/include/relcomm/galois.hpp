#ifndef RELCOMM_GALOIS_HPP
#define RELCOMM_GALOIS_HPP

#include <array>
#include <cstdint>

#include "relcomm/algebra.hpp"
#include "relcomm/hom.hpp"
#include "relcomm/ideal.hpp"
#include "relcomm/variety.hpp"

namespace relcomm {

// Surjection with its kernel data cached.
struct Extension {
  Homomorphism f;
  Ideal K;        // kernel(f)
  KernelPair rf;  // kernel pair with projections f0, f1
};
Extension make_extension(const Homomorphism& f);

// True when the naturality square of the reflection unit over f is a
// pullback: A -> B on top, the two units down, induced map between the
// reflections below.
bool is_trivial_extension(const Extension& e, const VarietyDescriptor& v,
                          std::uint64_t budget = default_budget());

// [K,A] relative to the subvariety: the image under the second projection
// of the kernel of the first, both restricted to the verbal subobject of
// the kernel-pair algebra.  Returned embedded in A; the raw image is
// checked to already be an ideal there.
Ideal relative_commutator_of_extension(const Extension& e,
                                       const VarietyDescriptor& v,
                                       std::uint64_t budget = default_budget());

bool is_central_extension(const Extension& e, const VarietyDescriptor& v,
                          std::uint64_t budget = default_budget());

struct Centralisation {
  Extension ext;     // A/[K,A] -> B, central by construction (asserted)
  Homomorphism rho;  // A -> A/[K,A]
};
Centralisation centralisation(const Extension& e, const VarietyDescriptor& v,
                              std::uint64_t budget = default_budget());

// Largest double equivalence relation on two equivalence relations r, s
// over a common base X: all quadruples
//      x y      columns (x,z), (y,t) in r
//      z t      rows    (x,y), (z,t) in s
// Stored as a pair view over the smaller of r, s, with the class labels of
// the other relation attached so value-set sweeps stay block-local.
struct QuadrupleAlgebra {
  AlgebraPtr alg;   // the quadruple carrier
  AlgebraPtr base;  // X
  AlgebraPtr r;
  AlgebraPtr s;
  bool over_rows;   // alg's elements are (row0, row1) pairs instead of cols

  std::array<int, 4> quad(int e) const;  // (x, y, z, t)
};
QuadrupleAlgebra double_relation(const AlgebraPtr& r, const AlgebraPtr& s);

// Face projections: column i to r ((x,z) for i=0, (y,t) for i=1), row j to
// s ((x,y) for j=0, (z,t) for j=1.)
Homomorphism quad_col(const QuadrupleAlgebra& q, int i);
Homomorphism quad_row(const QuadrupleAlgebra& q, int j);

// Commuting square of surjection candidates
//      X --c--> C
//      d        g
//      v        v
//      D --f--> Z
struct Square {
  Homomorphism c;
  Homomorphism d;
  Homomorphism g;
  Homomorphism f;
};

// All four maps surjective and the comparison (d,c): X -> D x_Z C
// surjective.  Throws NonCommutingSquare when the square fails to commute.
bool is_double_extension(const Square& sq);

struct DoubleExtension {
  Extension c, d, g, f;
  PullbackCone pb;          // D x_Z C
  Homomorphism comparison;  // x -> (d(x), c(x))
};
DoubleExtension make_double_extension(const Square& sq);

// One probe of the pullback-style centrality definition: pull e back along
// the extension g (same codomain) and test the result for triviality.
// Callers drive this as a bounded search over candidate g; a miss only
// means the candidate family is exhausted, never that no witness exists.
bool pullback_extension_is_trivial(const Extension& e, const Homomorphism& g,
                                   const VarietyDescriptor& v,
                                   std::uint64_t budget = default_budget());

// Running tally of pullback-square verdicts, for reporting how much of the
// four-squares-agree claim a sweep actually exercised.
struct FourSquareStats {
  long calls = 0;
  long squares = 0;
};

// Double centrality via the verbal pullback test: restrict the face
// projections of double_relation(R[c], R[d]) to verbal subobjects and ask
// whether the resulting square is a pullback.  All four induced squares
// are computed and must agree; the common verdict is returned.
bool is_double_central(const DoubleExtension& sq, const VarietyDescriptor& v,
                       std::uint64_t budget = default_budget(),
                       FourSquareStats* stats = nullptr);

}  // namespace relcomm

#endif
