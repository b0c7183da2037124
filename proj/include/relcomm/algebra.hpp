#ifndef RELCOMM_ALGEBRA_HPP
#define RELCOMM_ALGEBRA_HPP

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relcomm/error.hpp"

namespace relcomm {

enum class Kind { group, loop };

const char* kind_name(Kind k);

enum class Op { mul, ldiv, rdiv, inv };

// The binary operations a congruence must respect.  For groups mul alone
// suffices (divisions are derived from mul and inv); loops carry all three.
inline std::span<const Op> binary_ops(Kind k) {
  static constexpr Op group_ops[] = {Op::mul};
  static constexpr Op loop_ops[] = {Op::mul, Op::ldiv, Op::rdiv};
  if (k == Kind::group) return {group_ops, 1};
  return {loop_ops, 3};
}

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// A finite group or loop on carrier {0, ..., n-1} with element 0 the unit.
// Three storage shapes share this interface:
//   - table: explicit operation tables (all base algebras, quotients);
//   - pair view: a subalgebra of LB x RB given by its pair list, operations
//     componentwise (kernel pairs, pullbacks, double relations);
//   - sub view: a subalgebra of a base algebra given by its member list
//     (products of ideals, verbal subobjects).
// Instances are immutable after construction and always validated (pair and
// sub views only structurally: closure under the operations is the caller's
// obligation on the trusted construction paths and is checked in tests).
class FiniteAlgebra : public std::enable_shared_from_this<FiniteAlgebra> {
 public:
  // Validates: unit laws for element 0, Latin property, and associativity
  // plus two-sided inverses for groups.  Division tables are derived when not
  // supplied and checked against the loop axioms when they are.
  static AlgebraPtr make_group(std::string id, int n, std::vector<int> mul);
  static AlgebraPtr make_loop(std::string id, int n, std::vector<int> mul,
                              std::vector<int> ldiv = {},
                              std::vector<int> rdiv = {});

  // Subalgebra of left_base x right_base.  `pairs` must contain (0,0), be
  // duplicate-free, and be closed under the componentwise operations when
  // `check_closure` is set (trusted constructions may skip the quadratic
  // check).  Pairs are sorted lexicographically, so (0,0) gets index 0.
  static AlgebraPtr make_pair_view(std::string id, AlgebraPtr left_base,
                                   AlgebraPtr right_base,
                                   std::vector<std::pair<int, int>> pairs,
                                   bool check_closure = true);

  // Subalgebra of `base` on the given members (must contain 0; sorted, so the
  // unit keeps index 0).  Closure under the operations is checked unless the
  // caller vouches for it.
  static AlgebraPtr make_sub_view(std::string id, AlgebraPtr base,
                                  std::vector<int> members,
                                  bool check_closure = true);

  Kind kind() const { return kind_; }
  int order() const { return n_; }
  const std::string& id() const { return id_; }

  int mul(int a, int b) const;
  int ldiv(int a, int b) const;  // x = a \ b, the unique x with a*x = b
  int rdiv(int a, int b) const;  // x = a / b, the unique x with x*b = a
  int inv(int a) const;          // groups only; SignatureMismatch on loops
  int op(Op o, int a, int b) const;

  bool associative() const;  // exhaustive scan, cached at construction

  // Pair-view accessors.
  bool is_pair_view() const { return pair_tag_; }
  const AlgebraPtr& left_base() const;
  const AlgebraPtr& right_base() const;
  int left(int e) const;   // left component of element e
  int right(int e) const;  // right component
  // Index of (l, r) in this view, or -1 when the pair is not a member.
  int pair_index(int l, int r) const;
  // True when this view is all of left_base x right_base with equal bases.
  bool is_full_square() const;

  // Sub-view accessors.
  bool is_sub_view() const { return sub_base_ != nullptr; }
  const AlgebraPtr& sub_base() const;
  int base_element(int e) const;      // element of the base algebra
  int sub_index(int base_elem) const; // -1 when not a member
  const std::vector<int>& sub_members() const;

  // Optional class labels turning a pair view into the relation of a
  // congruence on its (equal) bases: element e relates left(e) ~ right(e),
  // and the view is exactly {(a,b) : cls[a] == cls[b]}.  Set by kernel_pair
  // and double_relation; enables the bucketed value-set computation.
  bool has_equiv_classes() const { return !equiv_cls_.empty(); }
  const std::vector<int>& equiv_classes() const { return equiv_cls_; }
  void set_equiv_classes(std::vector<int> cls) const;  // set-once cache

 private:
  FiniteAlgebra() = default;

  void derive_group_divisions();
  void derive_loop_divisions(bool had_ldiv, bool had_rdiv);
  void tabulate_ops();

  std::string id_;
  Kind kind_ = Kind::group;
  int n_ = 0;

  // Table storage.  Views up to kViewTableLimit elements are tabulated at
  // construction so op() stays a flat lookup; larger views compute lazily.
  std::vector<int> mul_, ldiv_, rdiv_, inv_;

  // Pair-view storage.
  bool pair_tag_ = false;
  AlgebraPtr pair_left_base_, pair_right_base_;
  std::vector<int> pair_packed_;  // l * right_base->order() + r, sorted
  std::vector<int> pair_index_;   // dense packed -> element id, -1 absent
  mutable std::vector<int> equiv_cls_;

  // Sub-view storage.
  AlgebraPtr sub_base_;
  std::vector<int> sub_members_;  // sorted ascending, sub_members_[0] == 0
  std::vector<int> sub_index_;    // dense base elem -> id, -1 absent

  mutable int associative_cache_ = -1;  // -1 unknown, else 0/1
};

// The one-element algebra of the given kind.
AlgebraPtr trivial_algebra(Kind k);

// Spec-facing validation entry: returns the (already validated) algebra.
// Construction is validation, so this is the identity on live objects; it
// exists so callers can write validate(load(...)).
inline const AlgebraPtr& validate(const AlgebraPtr& a) { return a; }

}  // namespace relcomm

#endif
