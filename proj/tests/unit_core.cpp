#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "relcomm/algebra.hpp"
#include "relcomm/congruence.hpp"
#include "relcomm/corpus.hpp"
#include "relcomm/error.hpp"
#include "relcomm/hom.hpp"
#include "relcomm/ideal.hpp"
#include "relcomm/loops.hpp"
#include "relcomm/word.hpp"

using namespace relcomm;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;  // reached only when nothing was thrown
}

}  // namespace

TEST_CASE("group validation accepts Z2 and rejects broken tables") {
  auto z2 = FiniteAlgebra::make_group("z2", 2, {0, 1, 1, 0});
  CHECK(z2->order() == 2);
  CHECK(z2->mul(1, 1) == 0);
  CHECK(z2->inv(1) == 1);

  CHECK(code_of([] {
          FiniteAlgebra::make_group("bad", 2, {1, 0, 0, 1});
        }) == ErrorCode::NoUnit);
  // order-5 Latin square that is not a group
  auto l5 = corpus_l5();
  std::vector<int> t(25);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) t[a * 5 + b] = l5->mul(a, b);
  CHECK(code_of([&] {
          FiniteAlgebra::make_group("bad5", 5, t);
        }) == ErrorCode::NotAssociative);
}

TEST_CASE("loop validation enforces the Latin-square property") {
  auto ok = FiniteAlgebra::make_loop("zl2", 2, {0, 1, 1, 0});
  CHECK(ok->kind() == Kind::loop);
  CHECK(code_of([] {
          FiniteAlgebra::make_loop("bad", 2, {0, 1, 1, 1});
        }) == ErrorCode::NotLatinSquare);
}

TEST_CASE("derived loop divisions satisfy the cancellation axioms") {
  for (const auto& t : gen_loop_tables(5)) {
    auto l = FiniteAlgebra::make_loop("l", 5, t);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        REQUIRE(l->mul(x, l->ldiv(x, y)) == y);
        REQUIRE(l->ldiv(x, l->mul(x, y)) == y);
        REQUIRE(l->mul(l->rdiv(x, y), y) == x);
        REQUIRE(l->rdiv(l->mul(x, y), y) == x);
      }
  }
}

TEST_CASE("explicitly provided wrong division tables are rejected") {
  std::vector<int> mul = {0, 1, 2, 1, 2, 0, 2, 0, 1};  // Z3
  std::vector<int> ldiv(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) ldiv[x * 3 + y] = (y - x + 3) % 3;
  auto good = FiniteAlgebra::make_loop("z3", 3, mul, ldiv);
  CHECK(good->ldiv(1, 0) == 2);
  std::swap(ldiv[1], ldiv[2]);
  CHECK(code_of([&] {
          FiniteAlgebra::make_loop("z3bad", 3, mul, ldiv);
        }) == ErrorCode::AxiomViolation);
}

TEST_CASE("bundled corpus groups validate with expected structure") {
  auto groups = corpus_groups();
  REQUIRE(groups.size() == 8);
  std::vector<int> orders;
  for (const auto& g : groups) {
    orders.push_back(g->order());
    CHECK(g->associative());
    for (int x = 0; x < g->order(); ++x) {
      CHECK(g->mul(x, g->inv(x)) == 0);
      CHECK(g->mul(g->inv(x), x) == 0);
    }
  }
  CHECK(orders == std::vector<int>{2, 4, 4, 6, 6, 8, 8, 12});

  auto d4 = corpus_d4();
  std::vector<int> center;
  for (int x = 0; x < 8; ++x) {
    bool central = true;
    for (int y = 0; y < 8; ++y)
      if (d4->mul(x, y) != d4->mul(y, x)) central = false;
    if (central) center.push_back(x);
  }
  CHECK(center == std::vector<int>{0, 2});

  auto q8 = corpus_q8();
  std::vector<int> involutions;
  for (int x = 1; x < 8; ++x)
    if (q8->mul(x, x) == 0) involutions.push_back(x);
  CHECK(involutions == std::vector<int>{2});  // only -1 squares to 1
}

TEST_CASE("word parsing, printing and evaluation") {
  Word c = commutator_word();
  CHECK(c.arity() == 2);
  auto z4 = corpus_zn(4);
  const int a12[] = {1, 3};
  CHECK(eval_word(c, *z4, a12) == 0);

  auto s3 = corpus_s3();
  // r = the 3-cycle at index 3, s = the transposition at index 1
  const int rs[] = {3, 1};
  const int expect =
      s3->mul(s3->mul(s3->mul(3, 1), s3->inv(3)), s3->inv(1));
  CHECK(eval_word(c, *s3, rs) == expect);
  CHECK(expect == s3->mul(3, 3));  // equals r^2

  Word assoc = associator_word();
  CHECK(assoc.arity() == 3);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      for (int z = 0; z < 6; ++z) {
        const int args[] = {x, y, z};
        REQUIRE(eval_word(assoc, *s3, args) == 0);
      }

  Word parsed = Word::parse("(rdiv (mul (mul x y) z) (mul x (mul y z)))");
  CHECK(parsed.arity() == 3);
  auto l5 = corpus_l5();
  bool differs = false;
  for (int x = 0; x < 5 && !differs; ++x)
    for (int y = 0; y < 5 && !differs; ++y)
      for (int z = 0; z < 5 && !differs; ++z) {
        const int args[] = {x, y, z};
        if (eval_word(parsed, *l5, args) != 0) differs = true;
        REQUIRE(eval_word(parsed, *l5, args) ==
                eval_word(assoc, *l5, args));
      }
  CHECK(differs);  // l5 is nonassociative

  // variables bind in order of first appearance
  Word yx = Word::parse("(mul y x)");
  const int args[] = {1, 2};
  CHECK(eval_word(yx, *z4, args) == 3);
  CHECK(Word::parse(yx.str()).str() == yx.str());
}

TEST_CASE("word error cases") {
  CHECK(code_of([] { Word::parse("(mul x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Word::parse("(foo x y)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Word::parse("x trailing"); }) == ErrorCode::ParseError);
  auto z4 = corpus_zn(4);
  CHECK(code_of([&] {
          const int one_arg[] = {1};
          eval_word(commutator_word(), *z4, one_arg);
        }) == ErrorCode::ArityMismatch);
  auto l5 = corpus_l5();
  CHECK(code_of([&] {
          const int args[] = {1, 2};
          eval_word(commutator_word(), *l5, args);
        }) == ErrorCode::SignatureMismatch);
}

TEST_CASE("congruence generation matches the all-partitions oracle") {
  auto z4 = corpus_zn(4);
  Congruence c = congruence_generated(z4, {{2, 0}});
  CHECK(c.n_blocks == 2);
  CHECK(c.block == std::vector<int>{0, 1, 0, 1});

  auto s3 = corpus_s3();
  Congruence cs = congruence_generated(s3, {{3, 0}});
  CHECK(cs.n_blocks == 2);
  CHECK(cs.one_class() == std::vector<int>{0, 3, 4});

  std::vector<AlgebraPtr> small = {corpus_zn(2), corpus_zn(4), corpus_v4(),
                                   corpus_zn(6), corpus_s3(), corpus_l5()};
  auto l4 = FiniteAlgebra::make_loop("l4", 4, gen_loop_tables(4)[1]);
  small.push_back(l4);
  for (const auto& a : small)
    for (int x = 0; x < a->order(); ++x)
      for (int y = 0; y < a->order(); ++y) {
        Congruence got = congruence_generated(a, {{x, y}});
        CHECK(got.block == oracles::min_congruence(a, {{x, y}}));
        CHECK(got.is_compatible());
      }
}

TEST_CASE("empty seed gives the discrete congruence") {
  auto s3 = corpus_s3();
  Congruence c = congruence_generated(s3, {});
  CHECK(c.n_blocks == 6);
  CHECK(c.block == Congruence::discrete(s3).block);
}

TEST_CASE("congruence meet and compatibility checks") {
  auto z6 = corpus_zn(6);
  Congruence by2 = congruence_generated(z6, {{2, 0}});  // blocks mod 2
  Congruence by3 = congruence_generated(z6, {{3, 0}});  // blocks mod 3
  Congruence m = meet(by2, by3);
  CHECK(m.n_blocks == 6);
  CHECK(meet(by2, Congruence::total(z6)).block == by2.block);

  auto s3 = corpus_s3();
  Congruence bad = Congruence::from_blocks(s3, {0, 0, 1, 1, 1, 1});
  CHECK_FALSE(bad.is_compatible());
  CHECK(congruence_generated(s3, {{1, 0}}).n_blocks == 1);
}

TEST_CASE("ideal closure agrees with brute-force normal closure") {
  auto s3 = corpus_s3();
  CHECK(ideal_closure(s3, {}).members == std::vector<int>{0});
  Ideal a3 = ideal_closure(s3, {3});
  CHECK(a3.members == std::vector<int>{0, 3, 4});
  CHECK(a3.members == oracles::normal_closure(s3, {3}));

  auto d4 = corpus_d4();
  Ideal refl = ideal_closure(d4, {4});
  CHECK(refl.members == std::vector<int>{0, 2, 4, 6});
  CHECK(refl.members == oracles::normal_closure(d4, {4}));

  for (const auto& g : corpus_groups())
    for (int x = 0; x < g->order(); ++x)
      CHECK(ideal_closure(g, {x}).members == oracles::normal_closure(g, {x}));
}

TEST_CASE("ideal closure is a closure operator") {
  std::mt19937 rng(20240811);
  std::vector<AlgebraPtr> pool = {corpus_zn(8), corpus_d4(), corpus_q8(),
                                  corpus_zn(6), corpus_l5()};
  for (const auto& a : pool) {
    std::uniform_int_distribution<int> pick(0, a->order() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> s1 = {pick(rng)};
      std::vector<int> s2 = s1;
      s2.push_back(pick(rng));
      Ideal c1 = ideal_closure(a, s1);
      Ideal c2 = ideal_closure(a, s2);
      for (int x : s1) CHECK(c1.contains(x));  // extensive
      CHECK(std::includes(c2.members.begin(), c2.members.end(),
                          c1.members.begin(), c1.members.end()));  // monotone
      CHECK(ideal_closure(a, c1.members).members == c1.members);   // idempotent
    }
  }
}

TEST_CASE("product of ideals equals their join") {
  auto v4 = corpus_v4();
  Ideal m = ideal_closure(v4, {2});
  Ideal n = ideal_closure(v4, {1});
  CHECK(product_ideal(m, n).members == std::vector<int>{0, 1, 2, 3});
  CHECK(product_ideal(m, trivial_ideal(v4)).members == m.members);
  CHECK(product_ideal(m, m).members == m.members);

  for (const auto& g : corpus_groups()) {
    std::vector<Ideal> principal;
    for (int x = 0; x < g->order(); ++x) principal.push_back(ideal_closure(g, {x}));
    for (const auto& a : principal)
      for (const auto& b : principal) {
        std::vector<int> both(a.members);
        both.insert(both.end(), b.members.begin(), b.members.end());
        CHECK(product_ideal(a, b).members == ideal_closure(g, both).members);
      }
  }
}

TEST_CASE("ideal intersection and membership wrapping") {
  auto d4 = corpus_d4();
  Ideal rot = ideal_closure(d4, {1});   // <r>
  Ideal refl = ideal_closure(d4, {4});  // {1, r^2, s, r^2 s}
  CHECK(intersect_ideal(rot, refl).members == std::vector<int>{0, 2});

  auto s3 = corpus_s3();
  CHECK(ideal_from_members(s3, {0, 3, 4}).members == std::vector<int>{0, 3, 4});
  CHECK(code_of([&] { ideal_from_members(s3, {0, 1}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("homomorphisms validate and cache flags") {
  auto z4 = corpus_zn(4);
  auto z2 = corpus_zn(2);
  Homomorphism f = make_hom(z4, z2, {0, 1, 0, 1});
  CHECK(f.surjective);
  CHECK_FALSE(f.injective);
  CHECK(kernel(f).members == std::vector<int>{0, 2});

  auto s3 = corpus_s3();
  Homomorphism sign = make_hom(s3, z2, {0, 1, 1, 0, 0, 1});
  CHECK(kernel(sign).members == std::vector<int>{0, 3, 4});

  CHECK(code_of([&] { make_hom(z4, z2, {0, 1, 1, 0}); }) ==
        ErrorCode::InvalidArgument);
  Homomorphism idz4 = identity_hom(z4);
  CHECK(compose(f, idz4).map == f.map);
  CHECK(compose(identity_hom(z2), f).surjective);
}

TEST_CASE("quotients rebuild validated algebras of the same kind") {
  auto z4 = corpus_zn(4);
  Congruence c = congruence_generated(z4, {{2, 0}});
  Quotient q = quotient(z4, c);
  CHECK(q.alg->order() == 2);
  CHECK(q.alg->kind() == Kind::group);
  CHECK(q.pi.map == std::vector<int>{0, 1, 0, 1});
  CHECK(kernel(q.pi).members == std::vector<int>{0, 2});

  auto s3 = corpus_s3();
  Quotient qs = quotient(s3, congruence_generated(s3, {{3, 0}}));
  CHECK(qs.alg->order() == 2);

  Quotient qid = quotient(z4, Congruence::discrete(z4));
  CHECK(qid.alg->order() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) REQUIRE(qid.alg->mul(a, b) == z4->mul(a, b));

  auto l5 = corpus_l5();
  Quotient ql = quotient(l5, Congruence::total(l5));
  CHECK(ql.alg->order() == 1);
  CHECK(ql.alg->kind() == Kind::loop);

  // kernel of the canonical projection recovers the ideal
  for (const auto& g : corpus_groups())
    for (int x = 0; x < g->order(); ++x) {
      Ideal j = ideal_closure(g, {x});
      CHECK(kernel(quotient(g, j.witness).pi).members == j.members);
    }
}

TEST_CASE("kernel pairs and pullbacks") {
  auto z4 = corpus_zn(4);
  auto z2 = corpus_zn(2);
  Homomorphism f = make_hom(z4, z2, {0, 1, 0, 1});
  KernelPair kp = kernel_pair(f);
  CHECK(kp.rel->order() == 8);
  CHECK(kp.p0.surjective);
  CHECK(kp.rel->has_equiv_classes());

  Homomorphism idz4 = identity_hom(z4);
  KernelPair diag = kernel_pair(idz4);
  CHECK(diag.rel->order() == 4);

  PullbackCone pc = pullback(f, f);
  CHECK(pc.apex->order() == 8);
  for (int e = 0; e < 8; ++e) {
    CHECK(pc.apex->left(e) == kp.rel->left(e));
    CHECK(pc.apex->right(e) == kp.rel->right(e));
  }

  PullbackCone along_id = pullback(f, identity_hom(z2));
  CHECK(along_id.apex->order() == 4);
  CHECK(along_id.p0.injective);
  CHECK(along_id.p0.surjective);

  auto triv = trivial_algebra(Kind::group);
  Homomorphism to0 = make_hom(z4, triv, std::vector<int>(4, 0));
  PullbackCone prod = pullback(to0, to0);
  CHECK(prod.apex->order() == 16);
}

TEST_CASE("pullback-square recognition") {
  auto z4 = corpus_zn(4);
  auto z2 = corpus_zn(2);
  Homomorphism f = make_hom(z4, z2, {0, 1, 0, 1});
  Homomorphism idz2 = identity_hom(z2);
  Homomorphism idz4 = identity_hom(z4);

  CHECK(is_pullback_square(idz4, idz4, idz4, idz4));
  // apex covering the pullback non-injectively is rejected
  CHECK_FALSE(is_pullback_square(f, f, idz2, idz2));
  // Z4 -> Z2 against the identity is a pullback of itself
  CHECK(is_pullback_square(idz4, f, f, idz2));

  Homomorphism zero2 = make_hom(z2, z2, {0, 0});
  CHECK(code_of([&] {
          is_pullback_square(identity_hom(z2), identity_hom(z2), idz2, zero2);
        }) == ErrorCode::NonCommutingSquare);
}

TEST_CASE("loop enumeration counts at unit-test scale") {
  CHECK(gen_loop_tables(1).size() == 1);
  CHECK(gen_loop_tables(2).size() == 1);
  CHECK(gen_loop_tables(3).size() == 1);
  CHECK(gen_loop_tables(4).size() == 4);
  CHECK(gen_loop_tables(5).size() == 56);
  CHECK(code_of([] { gen_loop_tables(7); }) == ErrorCode::BudgetExceeded);

  // every order-4 loop is associative: the smallest nonassociative loops
  // appear at order 5
  Word assoc = associator_word();
  for (const auto& t : gen_loop_tables(4)) {
    auto l = FiniteAlgebra::make_loop("l4", 4, t);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int z = 0; z < 4; ++z) {
          const int args[] = {x, y, z};
          REQUIRE(eval_word(assoc, *l, args) == 0);
        }
  }
  bool some_nonassoc_at_5 = false;
  for (const auto& t : gen_loop_tables(5))
    if (!FiniteAlgebra::make_loop("l", 5, t)->associative())
      some_nonassoc_at_5 = true;
  CHECK(some_nonassoc_at_5);
}

TEST_CASE("sub views expose ideals as algebras") {
  auto s3 = corpus_s3();
  Ideal a3 = ideal_closure(s3, {3});
  AlgebraPtr sub = a3.as_algebra();
  CHECK(sub->order() == 3);
  CHECK(sub->kind() == Kind::group);
  CHECK(sub->mul(1, 2) == 0);  // the two 3-cycles are mutually inverse
  CHECK(sub->base_element(1) == 3);
  CHECK(sub->sub_index(4) == 2);
  CHECK(sub->sub_index(1) == -1);
}
