#include "relcomm/commutators.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relcomm/error.hpp"
#include "relcomm/loops.hpp"
#include "relcomm/parallel.hpp"
#include "relcomm/word.hpp"

namespace relcomm {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int e) {
  std::uint64_t acc = 1;
  for (int i = 0; i < e; ++i) acc = sat_mul(acc, base);
  return acc;
}

// All r-tuples over mem, flattened; tuple t occupies [t*r, (t+1)*r).  The
// odometer spins the last position fastest, so tuple order is lexicographic
// in the member list.
std::vector<int> tuple_table(const std::vector<int>& mem, int r,
                             std::uint64_t count) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(r));
  std::vector<int> idx(r, 0);
  for (;;) {
    for (int i = 0; i < r; ++i) flat.push_back(mem[idx[i]]);
    int pos = r - 1;
    while (pos >= 0 && ++idx[pos] == static_cast<int>(mem.size())) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return flat;
}

std::span<const int> tuple_at(const std::vector<int>& flat, std::uint64_t t,
                              int r) {
  return {flat.data() + t * static_cast<std::uint64_t>(r),
          static_cast<std::size_t>(r)};
}

// Member set of j reindexed into the sub view xa; every ideal fed through
// here is contained in the view by construction.
Ideal lift_into(const AlgebraPtr& xa, const Ideal& j, const char* who) {
  std::vector<int> mem;
  mem.reserve(j.members.size());
  for (int e : j.members) {
    int s = xa->sub_index(e);
    if (s < 0)
      throw_error(ErrorCode::InternalError,
                  std::string(who) + ": ideal escapes the product");
    mem.push_back(s);
  }
  return ideal_from_members(xa, std::move(mem));
}

}  // namespace

std::vector<Ideal> ideal_lattice(const AlgebraPtr& a, std::uint64_t budget) {
  std::uint64_t order = static_cast<std::uint64_t>(a->order());
  if (order > budget)
    throw BudgetExceededError(order, budget, "ideal_lattice(" + a->id() + ")");

  std::set<std::vector<int>> seen;
  seen.insert(std::vector<int>{0});
  for (int g = 1; g < a->order(); ++g)
    seen.insert(ideal_closure(a, {g}).members);

  // Close under join and meet.  Every ideal is the join of the principal
  // ideals of its elements, so the join closure alone is already complete;
  // the meet pass is kept as a cheap idempotent cross-check of that fact.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(seen.begin(), seen.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t k = i + 1; k < cur.size(); ++k) {
        std::vector<int> uni;
        std::set_union(cur[i].begin(), cur[i].end(), cur[k].begin(),
                       cur[k].end(), std::back_inserter(uni));
        if (seen.insert(ideal_closure(a, uni).members).second) grew = true;
        std::vector<int> cap;
        std::set_intersection(cur[i].begin(), cur[i].end(), cur[k].begin(),
                              cur[k].end(), std::back_inserter(cap));
        if (seen.insert(cap).second) grew = true;
      }
    }
  }

  std::vector<Ideal> out;
  out.reserve(seen.size());
  for (const auto& mem : seen) out.push_back(ideal_from_members(a, mem));
  std::sort(out.begin(), out.end(), [](const Ideal& p, const Ideal& q) {
    if (p.members.size() != q.members.size())
      return p.members.size() < q.members.size();
    return p.members < q.members;
  });
  return out;
}

std::vector<int> ambient_members(const Ideal& j) {
  std::vector<int> mem = j.members;
  AlgebraPtr p = j.parent;
  while (p->is_sub_view()) {
    for (int& e : mem) e = p->base_element(e);
    p = p->sub_base();
  }
  return mem;  // base_element is increasing, so mem stays sorted
}

Ideal relcomm_words(const Ideal& m, const Ideal& n, const VarietyDescriptor& v,
                    std::uint64_t budget, bool no_p_factor) {
  if (m.parent != n.parent)
    throw_error(ErrorCode::InvalidArgument,
                "relcomm_words: ideals live on different algebras");
  const AlgebraPtr& ap = m.parent;
  const FiniteAlgebra& alg = *ap;
  if (alg.kind() != Kind::group)
    throw_error(ErrorCode::KindUnsupported,
                "relcomm_words: generator words need a group; use the "
                "associator form for loops");
  if (v.kind != Kind::group)
    throw_error(ErrorCode::SignatureMismatch,
                "relcomm_words: loop-kind variety " + v.name + " on a group");

  Ideal inter = intersect_ideal(m, n);
  std::uint64_t msz = m.members.size();
  std::uint64_t nsz = n.members.size();
  std::uint64_t isz = inter.members.size();
  for (const Word& w : v.wgen) {
    int r = w.arity();
    std::uint64_t est =
        sat_mul(sat_mul(sat_pow(msz, r), sat_pow(nsz, r)), sat_pow(isz, r));
    if (est > budget)
      throw BudgetExceededError(est, budget,
                                "relcomm_words: arity " + std::to_string(r) +
                                    " word " + w.str());
  }

  Ideal x = product_ideal(m, n);
  AlgebraPtr xa = x.as_algebra();
  if (in_subvariety(xa, v, budget)) return trivial_ideal(xa);

  // Generators w(mn) w(n)^-1 w(m)^-1 w(p), associated left to right.  The
  // p part factors out exactly: p at the unit tuple gives w(mn)w(n)^-1
  // w(m)^-1, and m = n = unit tuples give w(p) alone, so the two families
  // below generate the same ideal as the four-factor products.
  std::vector<char> hit(alg.order(), 0);
  for (const Word& w : v.wgen) {
    int r = w.arity();
    std::uint64_t mcnt = sat_pow(msz, r);
    std::uint64_t ncnt = sat_pow(nsz, r);
    std::vector<int> mt = tuple_table(m.members, r, mcnt);
    std::vector<int> nt = tuple_table(n.members, r, ncnt);
    std::vector<int> wm_inv(mcnt);
    for (std::uint64_t t = 0; t < mcnt; ++t)
      wm_inv[t] = alg.inv(eval_word(w, alg, tuple_at(mt, t, r)));
    std::vector<int> prod(r);
    for (std::uint64_t tn = 0; tn < ncnt; ++tn) {
      std::span<const int> na = tuple_at(nt, tn, r);
      int wn_inv = alg.inv(eval_word(w, alg, na));
      for (std::uint64_t tm = 0; tm < mcnt; ++tm) {
        std::span<const int> ma = tuple_at(mt, tm, r);
        for (int i = 0; i < r; ++i) prod[i] = alg.mul(ma[i], na[i]);
        int g = alg.mul(alg.mul(eval_word(w, alg, prod), wn_inv), wm_inv[tm]);
        hit[g] = 1;
      }
    }
    if (!no_p_factor) {
      std::uint64_t icnt = sat_pow(isz, r);
      std::vector<int> it = tuple_table(inter.members, r, icnt);
      for (std::uint64_t t = 0; t < icnt; ++t)
        hit[eval_word(w, alg, tuple_at(it, t, r))] = 1;
    }
  }

  std::vector<int> gens;
  for (int e = 0; e < alg.order(); ++e) {
    if (!hit[e]) continue;
    int s = xa->sub_index(e);
    require_internal(s >= 0, "relcomm_words: generator outside M.N");
    gens.push_back(s);
  }
  return ideal_closure(xa, gens);
}

Ideal associator_subloop(const Ideal& l, const Ideal& m, const Ideal& n) {
  if (l.parent != m.parent || m.parent != n.parent)
    throw_error(ErrorCode::InvalidArgument,
                "associator_subloop: ideals live on different algebras");
  const AlgebraPtr& ap = l.parent;
  const FiniteAlgebra& alg = *ap;

  Ideal x = product_ideal(product_ideal(m, n), l);
  AlgebraPtr xa = x.as_algebra();

  Word assoc = associator_word();
  const std::vector<int>* sets[3] = {&l.members, &m.members, &n.members};
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<char> hit(alg.order(), 0);
  int args[3];
  for (const auto& p : perms) {
    for (int u : *sets[p[0]]) {
      args[0] = u;
      for (int v : *sets[p[1]]) {
        args[1] = v;
        for (int w : *sets[p[2]]) {
          args[2] = w;
          hit[eval_word(assoc, alg, args)] = 1;
        }
      }
    }
  }

  std::vector<int> gens;
  for (int e = 0; e < alg.order(); ++e) {
    if (!hit[e]) continue;
    int s = xa->sub_index(e);
    require_internal(s >= 0, "associator_subloop: associator outside (M.N).L");
    gens.push_back(s);
  }
  return ideal_closure(xa, gens);
}

Ideal relcomm_loops(const Ideal& m, const Ideal& n) {
  if (m.parent != n.parent)
    throw_error(ErrorCode::InvalidArgument,
                "relcomm_loops: ideals live on different algebras");
  if (m.parent->kind() != Kind::loop)
    throw_error(ErrorCode::KindUnsupported,
                "relcomm_loops: needs a loop; use the word form for groups");
  return associator_subloop(m, n, product_ideal(m, n));
}

DoubleExtension theorem_square(const Ideal& m, const Ideal& n) {
  if (m.parent != n.parent)
    throw_error(ErrorCode::InvalidArgument,
                "theorem_square: ideals live on different algebras");
  Ideal x = product_ideal(m, n);
  AlgebraPtr xa = x.as_algebra();
  Ideal mm = lift_into(xa, m, "theorem_square");
  Ideal nn = lift_into(xa, n, "theorem_square");

  Quotient qm = quotient(xa, mm.witness);
  Quotient qn = quotient(xa, nn.witness);
  AlgebraPtr z = trivial_algebra(xa->kind());
  Homomorphism g = make_hom(qm.alg, z, std::vector<int>(qm.alg->order(), 0));
  Homomorphism f = make_hom(qn.alg, z, std::vector<int>(qn.alg->order(), 0));
  return make_double_extension(Square{qm.pi, qn.pi, g, f});
}

Ideal relcomm_oracle(const Ideal& m, const Ideal& n,
                     const VarietyDescriptor& v, std::uint64_t budget,
                     FourSquareStats* stats) {
  if (m.parent != n.parent)
    throw_error(ErrorCode::InvalidArgument,
                "relcomm_oracle: ideals live on different algebras");
  if (v.kind != m.parent->kind())
    throw_error(ErrorCode::SignatureMismatch,
                "relcomm_oracle: variety " + v.name + " is " +
                    kind_name(v.kind) + "-kind, the algebra is " +
                    kind_name(m.parent->kind()) + "-kind");

  Ideal x = product_ideal(m, n);
  AlgebraPtr xa = x.as_algebra();
  Ideal mm = lift_into(xa, m, "relcomm_oracle");
  Ideal nn = lift_into(xa, n, "relcomm_oracle");

  std::vector<Ideal> lattice = ideal_lattice(xa, budget);
  std::vector<const Ideal*> passing;
  for (const Ideal& j : lattice) {
    Quotient qj = quotient(xa, j.witness);
    auto image = [&](const Ideal& i) {
      std::vector<int> mem;
      mem.reserve(i.members.size());
      for (int e : i.members) mem.push_back(qj.pi.map[e]);
      std::sort(mem.begin(), mem.end());
      mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
      return ideal_from_members(qj.alg, std::move(mem));
    };
    DoubleExtension de = theorem_square(image(mm), image(nn));
    if (is_double_central(de, v, budget, stats)) passing.push_back(&j);
  }
  if (passing.empty())
    throw_error(ErrorCode::NoCentralizingIdeal,
                "relcomm_oracle: no ideal of " + xa->id() +
                    " centralizes the pair");

  Ideal inter = *passing.front();
  for (std::size_t i = 1; i < passing.size(); ++i)
    inter = intersect_ideal(inter, *passing[i]);
  // The lattice is complete, so the intersection was itself tested above;
  // it has to be one of the ideals that passed.
  bool found = false;
  for (const Ideal* p : passing)
    if (p->members == inter.members) found = true;
  if (!found)
    throw_error(ErrorCode::NoCentralizingIdeal,
                "relcomm_oracle: intersection of the centralizing ideals of " +
                    xa->id() + " fails the centrality test");
  return inter;
}

SweepReport theorem31_sweep(const AlgebraPtr& a, const VarietyDescriptor& v,
                            std::uint64_t budget, FourSquareStats* stats) {
  if (v.kind != a->kind())
    throw_error(ErrorCode::SignatureMismatch,
                "theorem31_sweep: variety " + v.name + " is " +
                    kind_name(v.kind) + "-kind, " + a->id() + " is " +
                    kind_name(a->kind()) + "-kind");
  SweepReport rep;
  rep.algebra = a->id();
  rep.variety = v.name;
  std::vector<Ideal> lattice = ideal_lattice(a, budget);
  for (const Ideal& m : lattice) {
    for (const Ideal& n : lattice) {
      SweepEntry e;
      e.m_members = m.members;
      e.n_members = n.members;
      Ideal comm = a->kind() == Kind::group ? relcomm_words(m, n, v, budget)
                                            : relcomm_loops(m, n);
      e.commutator = ambient_members(comm);
      e.vanishes = comm.is_trivial();
      e.central = is_double_central(theorem_square(m, n), v, budget, stats);
      e.agree = e.vanishes == e.central;
      if (!e.agree) rep.all_agree = false;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

Theorem42Report theorem42_sweep(int max_order, std::uint64_t budget,
                                unsigned threads, FourSquareStats* stats) {
  Theorem42Report rep;
  rep.max_order = max_order;
  VarietyDescriptor gp = builtin_variety("Gp");
  for (int ord = 1; ord <= max_order; ++ord) {
    const auto& tables = gen_loop_tables(ord);
    struct PerLoop {
      long pairs = 0;
      std::vector<PairDisagreement> bad;
      FourSquareStats st;
    };
    std::vector<PerLoop> outs = parallel_map<PerLoop>(
        tables.size(), threads, [&](std::size_t t) {
          PerLoop out;
          AlgebraPtr lp = FiniteAlgebra::make_loop(
              "loop" + std::to_string(ord) + "_" + std::to_string(t), ord,
              tables[t]);
          std::vector<Ideal> lattice = ideal_lattice(lp, budget);
          for (const Ideal& m : lattice) {
            for (const Ideal& n : lattice) {
              std::vector<int> lhs = ambient_members(relcomm_loops(m, n));
              std::vector<int> rhs =
                  ambient_members(relcomm_oracle(m, n, gp, budget, &out.st));
              ++out.pairs;
              if (lhs != rhs)
                out.bad.push_back(
                    {lp->id(), m.members, n.members, std::move(lhs),
                     std::move(rhs)});
            }
          }
          return out;
        });
    rep.loops += static_cast<long>(tables.size());
    for (PerLoop& o : outs) {
      rep.pairs += o.pairs;
      if (!o.bad.empty()) {
        rep.all_agree = false;
        for (PairDisagreement& d : o.bad)
          rep.disagreements.push_back(std::move(d));
      }
      if (stats) {
        stats->calls += o.st.calls;
        stats->squares += o.st.squares;
      }
    }
  }
  return rep;
}

CommutatorReport commutator_report(const Ideal& m, const Ideal& n,
                                   const VarietyDescriptor& v,
                                   const std::vector<std::string>& methods,
                                   std::uint64_t budget, bool no_p_factor) {
  CommutatorReport rep;
  rep.algebra = m.parent->id();
  rep.variety = v.name;
  rep.m_members = m.members;
  rep.n_members = n.members;
  for (const std::string& meth : methods) {
    auto t0 = std::chrono::steady_clock::now();
    Ideal r = [&] {
      if (meth == "words") return relcomm_words(m, n, v, budget, no_p_factor);
      if (meth == "associator") return relcomm_loops(m, n);
      if (meth == "oracle") return relcomm_oracle(m, n, v, budget);
      throw_error(ErrorCode::InvalidArgument,
                  "commutator_report: unknown method " + meth);
    }();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    rep.results.push_back({meth, ambient_members(r), dt.count()});
  }
  for (std::size_t i = 1; i < rep.results.size(); ++i)
    if (rep.results[i].members != rep.results[0].members) rep.agree = false;
  return rep;
}

}  // namespace relcomm
