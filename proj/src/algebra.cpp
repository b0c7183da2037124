#include "relcomm/algebra.hpp"

#include <algorithm>
#include <utility>

namespace relcomm {

const char* kind_name(Kind k) { return k == Kind::group ? "group" : "loop"; }

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::KindUnsupported: return "KindUnsupported";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonCommutingSquare: return "NonCommutingSquare";
    case ErrorCode::NotEquivalenceRelation: return "NotEquivalenceRelation";
    case ErrorCode::NoCentralizingIdeal: return "NoCentralizingIdeal";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Error";
}

namespace {

// Views at or below this order get flat op tables at construction.  Beyond it
// the quadratic table cost stops paying for itself; such views stay lazy.
constexpr int kViewTableLimit = 256;

void check_table_shape(const std::string& id, int n,
                       const std::vector<int>& tab, const char* name) {
  if (static_cast<int>(tab.size()) != n * n) {
    throw_error(ErrorCode::InvalidArgument,
                id + ": " + name + " table has " + std::to_string(tab.size()) +
                    " entries, expected " + std::to_string(n * n));
  }
  for (int v : tab) {
    if (v < 0 || v >= n) {
      throw_error(ErrorCode::InvalidArgument,
                  id + ": " + name + " entry " + std::to_string(v) +
                      " out of range for order " + std::to_string(n));
    }
  }
}

void check_latin(const std::string& id, int n, const std::vector<int>& mul) {
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = mul[a * n + b];
      if (seen[v]) {
        throw_error(ErrorCode::NotLatinSquare,
                    id + ": row " + std::to_string(a) + " repeats element " +
                        std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int v = mul[a * n + b];
      if (seen[v]) {
        throw_error(ErrorCode::NotLatinSquare,
                    id + ": column " + std::to_string(b) +
                        " repeats element " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
}

void check_unit(const std::string& id, int n, const std::vector<int>& mul) {
  for (int x = 0; x < n; ++x) {
    if (mul[0 * n + x] != x || mul[x * n + 0] != x) {
      throw_error(ErrorCode::NoUnit,
                  id + ": element 0 is not a two-sided unit at " +
                      std::to_string(x));
    }
  }
}

}  // namespace

AlgebraPtr FiniteAlgebra::make_group(std::string id, int n,
                                     std::vector<int> mul) {
  if (n <= 0) {
    throw_error(ErrorCode::InvalidArgument, id + ": order must be positive");
  }
  check_table_shape(id, n, mul, "mul");
  check_unit(id, n, mul);
  check_latin(id, n, mul);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = mul[a * n + b];
      for (int c = 0; c < n; ++c) {
        if (mul[ab * n + c] != mul[a * n + mul[b * n + c]]) {
          throw_error(ErrorCode::NotAssociative,
                      id + ": (" + std::to_string(a) + "*" +
                          std::to_string(b) + ")*" + std::to_string(c) +
                          " != " + std::to_string(a) + "*(" +
                          std::to_string(b) + "*" + std::to_string(c) + ")");
        }
      }
    }
  }
  auto alg = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra());
  alg->id_ = std::move(id);
  alg->kind_ = Kind::group;
  alg->n_ = n;
  alg->mul_ = std::move(mul);
  alg->derive_group_divisions();
  alg->associative_cache_ = 1;
  return alg;
}

void FiniteAlgebra::derive_group_divisions() {
  int n = n_;
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul_[a * n + b] == 0) {
        inv_[a] = b;
        break;
      }
    }
    // Latin rows guarantee a solution; associativity makes it two-sided.
    require_internal(inv_[a] >= 0 && mul_[inv_[a] * n + a] == 0,
                     id_ + ": inverse derivation failed");
  }
  ldiv_.resize(n * n);
  rdiv_.resize(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ldiv_[a * n + b] = mul_[inv_[a] * n + b];
      rdiv_[a * n + b] = mul_[a * n + inv_[b]];
    }
  }
}

AlgebraPtr FiniteAlgebra::make_loop(std::string id, int n,
                                    std::vector<int> mul,
                                    std::vector<int> ldiv,
                                    std::vector<int> rdiv) {
  if (n <= 0) {
    throw_error(ErrorCode::InvalidArgument, id + ": order must be positive");
  }
  check_table_shape(id, n, mul, "mul");
  check_unit(id, n, mul);
  check_latin(id, n, mul);
  bool had_ldiv = !ldiv.empty();
  bool had_rdiv = !rdiv.empty();
  if (had_ldiv) check_table_shape(id, n, ldiv, "ldiv");
  if (had_rdiv) check_table_shape(id, n, rdiv, "rdiv");

  auto alg = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra());
  alg->id_ = std::move(id);
  alg->kind_ = Kind::loop;
  alg->n_ = n;
  alg->mul_ = std::move(mul);
  alg->ldiv_ = std::move(ldiv);
  alg->rdiv_ = std::move(rdiv);
  alg->derive_loop_divisions(had_ldiv, had_rdiv);
  return alg;
}

void FiniteAlgebra::derive_loop_divisions(bool had_ldiv, bool had_rdiv) {
  int n = n_;
  // The Latin property gives unique division solutions; derive both tables,
  // then compare against supplied ones so a wrong table names the axiom it
  // breaks instead of a bare mismatch.
  std::vector<int> dl(n * n), dr(n * n);
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      dl[a * n + mul_[a * n + x]] = x;  // a \ (a*x) = x
      dr[mul_[x * n + a] * n + a] = x;  // (x*a) / a = x
    }
  }
  if (had_ldiv) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (ldiv_[a * n + b] != dl[a * n + b]) {
          throw_error(ErrorCode::AxiomViolation,
                      id_ + ": y = x*(x\\y) fails at x=" + std::to_string(a) +
                          " y=" + std::to_string(b) + " (x*(x\\y)=" +
                          std::to_string(mul_[a * n + ldiv_[a * n + b]]) +
                          ")");
        }
      }
    }
  } else {
    ldiv_ = std::move(dl);
  }
  if (had_rdiv) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (rdiv_[a * n + b] != dr[a * n + b]) {
          throw_error(ErrorCode::AxiomViolation,
                      id_ + ": x = (x/y)*y fails at x=" + std::to_string(a) +
                          " y=" + std::to_string(b) + " ((x/y)*y=" +
                          std::to_string(mul_[rdiv_[a * n + b] * n + b]) +
                          ")");
        }
      }
    }
  } else {
    rdiv_ = std::move(dr);
  }
}

void FiniteAlgebra::tabulate_ops() {
  // Evaluate every operation through the view logic once and keep the flat
  // tables; afterwards op() takes the table branch.  A view whose carrier is
  // not closed throws during the fill: commit nothing, leave it lazy, and let
  // op() report the escape at the offending call as before.
  std::vector<int> m(n_ * n_), dl(n_ * n_), dr(n_ * n_), iv;
  try {
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        m[a * n_ + b] = op(Op::mul, a, b);
        dl[a * n_ + b] = op(Op::ldiv, a, b);
        dr[a * n_ + b] = op(Op::rdiv, a, b);
      }
    }
    if (kind_ == Kind::group) {
      iv.resize(n_);
      for (int a = 0; a < n_; ++a) iv[a] = inv(a);
    }
  } catch (const Error&) {
    return;
  }
  ldiv_ = std::move(dl);
  rdiv_ = std::move(dr);
  inv_ = std::move(iv);
  mul_ = std::move(m);  // last: a nonempty mul_ switches op() to the tables
}

AlgebraPtr FiniteAlgebra::make_pair_view(std::string id, AlgebraPtr left_base,
                                         AlgebraPtr right_base,
                                         std::vector<std::pair<int, int>> pairs,
                                         bool check_closure) {
  if (!left_base || !right_base) {
    throw_error(ErrorCode::InvalidArgument, id + ": null base algebra");
  }
  if (left_base->kind() != right_base->kind()) {
    throw_error(ErrorCode::SignatureMismatch,
                id + ": pair view over mixed kinds");
  }
  int ln = left_base->order();
  int rn = right_base->order();
  auto alg = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra());
  alg->id_ = std::move(id);
  alg->kind_ = left_base->kind();
  alg->pair_tag_ = true;
  alg->pair_left_base_ = std::move(left_base);
  alg->pair_right_base_ = std::move(right_base);
  alg->pair_packed_.reserve(pairs.size());
  for (auto [l, r] : pairs) {
    if (l < 0 || l >= ln || r < 0 || r >= rn) {
      throw_error(ErrorCode::InvalidArgument,
                  alg->id_ + ": pair out of range");
    }
    alg->pair_packed_.push_back(l * rn + r);
  }
  std::sort(alg->pair_packed_.begin(), alg->pair_packed_.end());
  alg->pair_packed_.erase(
      std::unique(alg->pair_packed_.begin(), alg->pair_packed_.end()),
      alg->pair_packed_.end());
  alg->n_ = static_cast<int>(alg->pair_packed_.size());
  if (alg->n_ == 0 || alg->pair_packed_[0] != 0) {
    throw_error(ErrorCode::NoUnit, alg->id_ + ": pair view must contain (0,0)");
  }
  alg->pair_index_.assign(static_cast<size_t>(ln) * rn, -1);
  for (int e = 0; e < alg->n_; ++e) {
    alg->pair_index_[alg->pair_packed_[e]] = e;
  }
  if (check_closure) {
    const Op binary[] = {Op::mul, Op::ldiv, Op::rdiv};
    for (int e = 0; e < alg->n_; ++e) {
      for (int f = 0; f < alg->n_; ++f) {
        for (Op o : binary) {
          int l = alg->pair_left_base_->op(o, alg->left(e), alg->left(f));
          int r = alg->pair_right_base_->op(o, alg->right(e), alg->right(f));
          if (alg->pair_index_[l * rn + r] < 0) {
            throw_error(ErrorCode::InvalidArgument,
                        alg->id_ + ": pair set not closed under operations");
          }
        }
      }
    }
  }
  if (alg->n_ <= kViewTableLimit) alg->tabulate_ops();
  return alg;
}

AlgebraPtr FiniteAlgebra::make_sub_view(std::string id, AlgebraPtr base,
                                        std::vector<int> members,
                                        bool check_closure) {
  if (!base) {
    throw_error(ErrorCode::InvalidArgument, id + ": null base algebra");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] != 0) {
    throw_error(ErrorCode::NoUnit, id + ": subalgebra must contain the unit");
  }
  if (members.back() >= base->order() || members[0] < 0) {
    throw_error(ErrorCode::InvalidArgument, id + ": member out of range");
  }
  auto alg = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra());
  alg->id_ = std::move(id);
  alg->kind_ = base->kind();
  alg->n_ = static_cast<int>(members.size());
  alg->sub_base_ = std::move(base);
  alg->sub_members_ = std::move(members);
  alg->sub_index_.assign(alg->sub_base_->order(), -1);
  for (int e = 0; e < alg->n_; ++e) {
    alg->sub_index_[alg->sub_members_[e]] = e;
  }
  if (check_closure) {
    const Op binary[] = {Op::mul, Op::ldiv, Op::rdiv};
    for (int e = 0; e < alg->n_; ++e) {
      for (int f = 0; f < alg->n_; ++f) {
        for (Op o : binary) {
          int v = alg->sub_base_->op(o, alg->sub_members_[e],
                                     alg->sub_members_[f]);
          if (alg->sub_index_[v] < 0) {
            throw_error(ErrorCode::InvalidArgument,
                        alg->id_ + ": member set not closed under operations");
          }
        }
      }
    }
  }
  if (alg->n_ <= kViewTableLimit) alg->tabulate_ops();
  return alg;
}

int FiniteAlgebra::mul(int a, int b) const { return op(Op::mul, a, b); }
int FiniteAlgebra::ldiv(int a, int b) const { return op(Op::ldiv, a, b); }
int FiniteAlgebra::rdiv(int a, int b) const { return op(Op::rdiv, a, b); }

int FiniteAlgebra::op(Op o, int a, int b) const {
  if (!mul_.empty()) {
    switch (o) {
      case Op::mul: return mul_[a * n_ + b];
      case Op::ldiv: return ldiv_[a * n_ + b];
      case Op::rdiv: return rdiv_[a * n_ + b];
      case Op::inv: return inv(a);
    }
  }
  if (pair_tag_) {
    if (o == Op::inv) return inv(a);
    int rn = pair_right_base_->order();
    int pa = pair_packed_[a], pb = pair_packed_[b];
    int l = pair_left_base_->op(o, pa / rn, pb / rn);
    int r = pair_right_base_->op(o, pa % rn, pb % rn);
    int e = pair_index_[l * rn + r];
    // hot path: build the message only on failure
    if (e < 0) throw_error(ErrorCode::InternalError,
                           id_ + ": operation left the pair view");
    return e;
  }
  if (o == Op::inv) return inv(a);
  int v = sub_base_->op(o, sub_members_[a], sub_members_[b]);
  int e = sub_index_[v];
  if (e < 0) throw_error(ErrorCode::InternalError,
                         id_ + ": operation left the subalgebra");
  return e;
}

int FiniteAlgebra::inv(int a) const {
  if (kind_ != Kind::group) {
    throw_error(ErrorCode::SignatureMismatch,
                id_ + ": inv is not a loop operation");
  }
  if (!inv_.empty()) return inv_[a];
  if (pair_tag_) {
    int rn = pair_right_base_->order();
    int pa = pair_packed_[a];
    int e = pair_index_[pair_left_base_->inv(pa / rn) * rn +
                        pair_right_base_->inv(pa % rn)];
    if (e < 0) throw_error(ErrorCode::InternalError,
                           id_ + ": inverse left the pair view");
    return e;
  }
  int e = sub_index_[sub_base_->inv(sub_members_[a])];
  if (e < 0) throw_error(ErrorCode::InternalError,
                         id_ + ": inverse left the subalgebra");
  return e;
}

bool FiniteAlgebra::associative() const {
  if (associative_cache_ < 0) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) {
      for (int b = 0; b < n_ && ok; ++b) {
        int ab = mul(a, b);
        for (int c = 0; c < n_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            ok = false;
            break;
          }
        }
      }
    }
    associative_cache_ = ok ? 1 : 0;
  }
  return associative_cache_ == 1;
}

const AlgebraPtr& FiniteAlgebra::left_base() const {
  if (!pair_tag_) throw_error(ErrorCode::InternalError, id_ + ": not a pair view");
  return pair_left_base_;
}

const AlgebraPtr& FiniteAlgebra::right_base() const {
  if (!pair_tag_) throw_error(ErrorCode::InternalError, id_ + ": not a pair view");
  return pair_right_base_;
}

int FiniteAlgebra::left(int e) const {
  return pair_packed_[e] / pair_right_base_->order();
}

int FiniteAlgebra::right(int e) const {
  return pair_packed_[e] % pair_right_base_->order();
}

int FiniteAlgebra::pair_index(int l, int r) const {
  return pair_index_[l * pair_right_base_->order() + r];
}

bool FiniteAlgebra::is_full_square() const {
  return pair_tag_ && pair_left_base_ == pair_right_base_ &&
         n_ == pair_left_base_->order() * pair_right_base_->order();
}

const AlgebraPtr& FiniteAlgebra::sub_base() const {
  if (sub_base_ == nullptr) throw_error(ErrorCode::InternalError, id_ + ": not a sub view");
  return sub_base_;
}

int FiniteAlgebra::base_element(int e) const { return sub_members_[e]; }

int FiniteAlgebra::sub_index(int base_elem) const {
  return sub_index_[base_elem];
}

const std::vector<int>& FiniteAlgebra::sub_members() const {
  return sub_members_;
}

void FiniteAlgebra::set_equiv_classes(std::vector<int> cls) const {
  require_internal(pair_tag_ && pair_left_base_ == pair_right_base_,
                   id_ + ": class labels need a pair view over one base");
  require_internal(static_cast<int>(cls.size()) == pair_left_base_->order(),
                   id_ + ": class label size mismatch");
  require_internal(equiv_cls_.empty(), id_ + ": class labels already set");
  // The view must be exactly {(u,v) | cls[u] == cls[v]}: every stored pair
  // has equal labels, and the class sizes account for every stored pair.
  std::vector<long long> size_of;
  for (int e = 0; e < order(); ++e) {
    const int lu = cls[left(e)];
    const int rv = cls[right(e)];
    if (lu < 0 || lu != rv)
      throw_error(ErrorCode::InternalError, id_ + ": pair crosses class labels");
  }
  for (int v : cls) {
    if (v >= static_cast<int>(size_of.size())) size_of.resize(v + 1, 0);
    ++size_of[v];
  }
  long long expect = 0;
  for (long long s : size_of) expect += s * s;
  require_internal(expect == order(),
                   id_ + ": class labels do not partition the relation");
  equiv_cls_ = std::move(cls);
}

AlgebraPtr trivial_algebra(Kind k) {
  if (k == Kind::group) {
    return FiniteAlgebra::make_group("1", 1, {0});
  }
  return FiniteAlgebra::make_loop("1", 1, {0});
}

}  // namespace relcomm
