#include "relcomm/variety.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "relcomm/error.hpp"

namespace relcomm {

std::uint64_t default_budget() {
  static const std::uint64_t cached = [] {
    if (const char* env = std::getenv("RELCOMM_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(100000000);  // 1e8
  }();
  return cached;
}

namespace {

// Multiplies set sizes with saturation so budget comparisons never overflow.
std::uint64_t checked_product(const std::vector<std::uint64_t>& sizes) {
  std::uint64_t total = 1;
  for (std::uint64_t s : sizes) {
    if (s == 0) return 0;
    if (total > UINT64_MAX / s) return UINT64_MAX;
    total *= s;
  }
  return total;
}

std::vector<int> dedupe(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Direct product-space enumeration of one stage: each argument ranges over
// its own id list.
std::vector<int> enumerate_stage(const Word& w,
                                 const std::vector<const std::vector<int>*>& args,
                                 const FiniteAlgebra& a, std::uint64_t budget,
                                 const std::string& where) {
  const int r = w.arity();
  std::vector<std::uint64_t> sizes;
  for (const auto* s : args) sizes.push_back(s->size());
  const std::uint64_t est = checked_product(sizes);
  if (est > budget) throw BudgetExceededError(est, budget, where);
  std::vector<char> seen(a.order(), 0);
  std::vector<int> out;
  std::vector<int> idx(r, 0);
  std::vector<int> tuple(r);
  if (est == 0) return out;
  while (true) {
    for (int i = 0; i < r; ++i) tuple[i] = (*args[i])[idx[i]];
    const int val = eval_word(w, a, tuple);
    if (!seen[val]) {
      seen[val] = 1;
      out.push_back(val);
    }
    int pos = r - 1;
    while (pos >= 0 && ++idx[pos] == static_cast<int>(args[pos]->size())) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Leaf stage over a congruence pair view: every argument ranges over the
// whole relation {(u,v) | u ~ v}.  Within a fixed tuple of blocks the two
// sides are independent, so the value set is a union of squares V x V with
// V the word's values on base tuples from those blocks.  Costs |base|^r
// instead of |relation|^r.
std::vector<int> bucketed_leaf(const Word& w, const FiniteAlgebra& rel,
                               std::uint64_t budget, const std::string& where) {
  const AlgebraPtr& base = rel.left_base();
  const std::vector<int>& cls = rel.equiv_classes();
  const int n = base->order();
  const int r = w.arity();
  std::uint64_t est = 1;
  for (int i = 0; i < r; ++i) {
    if (est > budget) break;
    est *= static_cast<std::uint64_t>(n);
  }
  if (est > budget) throw BudgetExceededError(est, budget, where);

  std::map<std::vector<int>, std::vector<int>> buckets;
  std::vector<int> tuple(r, 0);
  std::vector<int> key(r);
  while (true) {
    for (int i = 0; i < r; ++i) key[i] = cls[tuple[i]];
    buckets[key].push_back(eval_word(w, *base, tuple));
    int pos = r - 1;
    while (pos >= 0 && ++tuple[pos] == n) {
      tuple[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::vector<char> seen(rel.order(), 0);
  std::vector<int> out;
  for (auto& [k, vals] : buckets) {
    auto vs = dedupe(std::move(vals));
    for (int a2 : vs)
      for (int b2 : vs) {
        const int id = rel.pair_index(a2, b2);
        require_internal(id >= 0,
                         "value pair escaped the relation: labels are not a congruence");
        if (!seen[id]) {
          seen[id] = 1;
          out.push_back(id);
        }
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_congruence_view(const FiniteAlgebra& a) {
  return a.is_pair_view() && a.has_equiv_classes() &&
         a.left_base() == a.right_base();
}

Word left_normed_commutator(int weight) {
  Word acc = commutator_word();  // weight 2, variables 0,1
  for (int k = 2; k < weight; ++k) {
    std::vector<Word> args = {acc, Word::var(k)};
    acc = commutator_word().substitute(args);
  }
  return acc;
}

Word derived_word(int depth) {
  if (depth == 1) return commutator_word();
  Word inner = derived_word(depth - 1);
  const int r = inner.arity();
  std::vector<Word> shift;
  for (int i = 0; i < r; ++i) shift.push_back(Word::var(r + i));
  std::vector<Word> args = {inner, inner.substitute(shift)};
  return commutator_word().substitute(args);
}

}  // namespace

VarietyDescriptor builtin_variety(const std::string& name) {
  const Word c = commutator_word();
  VarietyDescriptor v;
  v.name = name;
  if (name == "Ab") {
    v.kind = Kind::group;
    v.wgen = {c};
    v.plans = {{{c, {-1, -1}}}};
  } else if (name == "Nil2") {
    v.kind = Kind::group;
    v.wgen = {left_normed_commutator(3)};
    v.plans = {{{c, {-1, -1}}, {c, {0, -1}}}};
  } else if (name == "Nil3") {
    v.kind = Kind::group;
    v.wgen = {left_normed_commutator(4)};
    v.plans = {{{c, {-1, -1}}, {c, {0, -1}}, {c, {1, -1}}}};
  } else if (name == "Sol2") {
    v.kind = Kind::group;
    v.wgen = {derived_word(2)};
    v.plans = {{{c, {-1, -1}}, {c, {0, 0}}}};
  } else if (name == "Sol3") {
    v.kind = Kind::group;
    v.wgen = {derived_word(3)};
    v.plans = {{{c, {-1, -1}}, {c, {0, 0}}, {c, {1, 1}}}};
  } else if (name == "Gp") {
    v.kind = Kind::loop;
    v.wgen = {associator_word()};
    v.plans = {{{associator_word(), {-1, -1, -1}}}};
  } else {
    throw_error(ErrorCode::InvalidArgument, "unknown variety: " + name);
  }
  return v;
}

std::vector<std::string> builtin_variety_names() {
  return {"Ab", "Nil2", "Nil3", "Sol2", "Sol3", "Gp"};
}

VarietyDescriptor user_variety(std::string name, Kind kind,
                               std::vector<Word> words) {
  if (words.empty())
    throw_error(ErrorCode::InvalidArgument,
                "variety descriptor needs at least one word");
  VarietyDescriptor v;
  v.name = std::move(name);
  v.kind = kind;
  for (Word& w : words) {
    if (kind == Kind::loop && w.uses_inv())
      throw_error(ErrorCode::SignatureMismatch,
                  "loop-kind variety word uses inv");
    std::vector<Stage> plan = {{w, std::vector<int>(w.arity(), -1)}};
    v.plans.push_back(std::move(plan));
    v.wgen.push_back(std::move(w));
  }
  return v;
}

std::vector<int> word_value_set(const std::vector<Stage>& plan,
                                const AlgebraPtr& a, std::uint64_t budget) {
  require_internal(!plan.empty(), "word_value_set: empty plan");
  std::vector<int> carrier(a->order());
  for (int e = 0; e < a->order(); ++e) carrier[e] = e;
  std::vector<std::vector<int>> results;
  for (const Stage& s : plan) {
    require_internal(static_cast<int>(s.inputs.size()) == s.w.arity(),
                     "word_value_set: stage arity mismatch");
    const bool leaf =
        std::all_of(s.inputs.begin(), s.inputs.end(), [](int i) { return i < 0; });
    if (leaf && is_congruence_view(*a)) {
      results.push_back(bucketed_leaf(s.w, *a, budget, "value set on " + a->id()));
    } else {
      std::vector<const std::vector<int>*> args;
      for (int in : s.inputs) {
        if (in < 0)
          args.push_back(&carrier);
        else {
          require_internal(in < static_cast<int>(results.size()),
                           "word_value_set: stage refers to a later stage");
          args.push_back(&results[in]);
        }
      }
      results.push_back(
          enumerate_stage(s.w, args, *a, budget, "value set on " + a->id()));
    }
  }
  return results.back();
}

std::vector<int> variety_value_set(const VarietyDescriptor& v,
                                   const AlgebraPtr& a, std::uint64_t budget) {
  if (v.kind != a->kind())
    throw_error(ErrorCode::SignatureMismatch,
                "variety " + v.name + " is " + kind_name(v.kind) + "-kind, " +
                    a->id() + " is " + kind_name(a->kind()));
  std::vector<int> all;
  for (const auto& plan : v.plans) {
    auto vs = word_value_set(plan, a, budget);
    all.insert(all.end(), vs.begin(), vs.end());
  }
  return dedupe(std::move(all));
}

Ideal verbal_subobject(const AlgebraPtr& a, const VarietyDescriptor& v,
                       std::uint64_t budget) {
  if (a->is_full_square()) {
    // On a full square B x B everything is componentwise: the value set is
    // V x V, and since V contains the unit its ideal closure is N x N for
    // N the verbal subobject of B, witnessed by the product congruence.
    // This keeps the double-centrality sweeps off the quadratic closure.
    Ideal base = verbal_subobject(a->left_base(), v, budget);
    const Congruence& bw = base.witness;
    std::vector<int> raw(a->order());
    for (int e = 0; e < a->order(); ++e)
      raw[e] = bw.block[a->left(e)] * bw.n_blocks + bw.block[a->right(e)];
    return ideal_from_witness(a, Congruence::from_blocks(a, std::move(raw)));
  }
  Ideal verbal = ideal_closure(a, variety_value_set(v, a, budget));
  // The quotient must satisfy the identities: evaluate every generating word
  // on class representatives.  Skipped when the representative tuple space
  // is large; the value-set construction already guarantees it.
  const Congruence& w = verbal.witness;
  std::vector<int> reps(w.n_blocks, -1);
  for (int e = 0; e < a->order(); ++e)
    if (reps[w.block[e]] < 0) reps[w.block[e]] = e;
  for (const Word& word : v.wgen) {
    std::uint64_t est = 1;
    for (int i = 0; i < word.arity() && est <= 1000000; ++i)
      est *= static_cast<std::uint64_t>(w.n_blocks);
    if (est > 1000000) continue;
    std::vector<int> idx(word.arity(), 0);
    std::vector<int> tuple(word.arity());
    while (true) {
      for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = reps[idx[i]];
      require_internal(verbal.contains(eval_word(word, *a, tuple)),
                       "verbal subobject: quotient violates a defining identity");
      int pos = static_cast<int>(idx.size()) - 1;
      while (pos >= 0 && ++idx[pos] == w.n_blocks) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return verbal;
}

bool in_subvariety(const AlgebraPtr& a, const VarietyDescriptor& v,
                   std::uint64_t budget) {
  auto vs = variety_value_set(v, a, budget);
  return vs == std::vector<int>{0};
}

Reflection reflection(const AlgebraPtr& a, const VarietyDescriptor& v,
                      std::uint64_t budget) {
  Ideal verbal = verbal_subobject(a, v, budget);
  Quotient q = quotient(a, verbal.witness);
  require_internal(in_subvariety(q.alg, v, budget),
                   "reflection: quotient is not in the subvariety");
  return {q.alg, q.pi, std::move(verbal)};
}

Homomorphism induced_verbal_hom(const Homomorphism& f,
                                const VarietyDescriptor& v,
                                std::uint64_t budget) {
  Ideal vs = verbal_subobject(f.src, v, budget);
  Ideal vd = verbal_subobject(f.dst, v, budget);
  AlgebraPtr sv = vs.as_algebra();
  AlgebraPtr dv = vd.as_algebra();
  std::vector<int> map(sv->order());
  for (int e = 0; e < sv->order(); ++e) {
    const int image = f.map[sv->base_element(e)];
    const int id = dv->sub_index(image);
    if (id < 0)
      throw_error(ErrorCode::InvalidArgument,
                  "induced_verbal_hom: map leaves the verbal subobject");
    map[e] = id;
  }
  return make_hom(sv, dv, std::move(map),
                  sv->order() <= 512 ? Verify::full : Verify::structural);
}

}  // namespace relcomm
