#include <string>
#include <vector>

#include "doctest.h"
#include "relcomm/corpus.hpp"
#include "relcomm/error.hpp"
#include "relcomm/table_io.hpp"

using namespace relcomm;

namespace {

bool tables_equal(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->kind() != b->kind() || a->order() != b->order()) return false;
  for (Op o : binary_ops(a->kind())) {
    for (int x = 0; x < a->order(); ++x) {
      for (int y = 0; y < a->order(); ++y) {
        if (a->op(o, x, y) != b->op(o, x, y)) return false;
      }
    }
  }
  return true;
}

void check_parse_error(const std::string& text, const std::string& fragment) {
  try {
    parse_table(text, "bad");
    FAIL("expected ParseError for: " << text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("table text round-trips through the parser") {
  for (const std::string& name : bundled_names()) {
    AlgebraPtr a = bundled_algebra(name);
    AlgebraPtr back = parse_table(save_table(a), name);
    CAPTURE(name);
    CHECK(tables_equal(a, back));
    CHECK(back->id() == name);
  }
}

TEST_CASE("parser accepts comments, blank lines, and ragged spacing") {
  AlgebraPtr a = parse_table(
      "# cyclic group of order 3\n"
      "group 3   # trailing comment\n"
      "\n"
      "  0 1 2 \n"
      "1 2 0\n"
      "\t2 0 1\n"
      "# end\n",
      "z3");
  CHECK(a->kind() == Kind::group);
  CHECK(a->order() == 3);
  CHECK(a->mul(1, 1) == 2);
  CHECK(a->mul(2, 2) == 1);
}

TEST_CASE("parser diagnostics carry line numbers") {
  check_parse_error("", "empty table");
  check_parse_error("group\n", "expected header");
  check_parse_error("ring 2\n0 1\n1 0\n", "unknown kind 'ring'");
  check_parse_error("group x\n", "order 'x' is not a number");
  check_parse_error("group 0\n", "out of range");
  check_parse_error("group 2000\n", "out of range");
  check_parse_error("group 2\n0 1\n", "ends after 1 of 2 rows");
  check_parse_error("group 2\n0 1 1\n1 0\n", "line 2: row has 3 entries");
  check_parse_error("group 2\n0 1\n1 q\n", "line 3: table entry 'q'");
  check_parse_error("group 2\n0 1\n1 2\n", "line 3: entry 2 out of range");
  check_parse_error("group 2\n0 1\n1 -1\n", "entry -1 out of range");
  check_parse_error("group 2\n0 1\n1 0\n0 1\n", "unexpected content");
  check_parse_error("group 2\n0 1\n1 0\n%inv\n0 1\n", "unknown section '%inv'");
  check_parse_error("loop 2\n0 1\n1 0\n%ldiv\n0 1\n", "ends after 1 of 2 rows");
  check_parse_error(
      "loop 2\n0 1\n1 0\n%ldiv\n0 1\n1 0\n%ldiv\n0 1\n1 0\n",
      "duplicate %ldiv");
}

TEST_CASE("axiom failures pass through from the factories") {
  // 0 is not a unit.
  CHECK_THROWS_WITH_AS(parse_table("group 2\n1 0\n0 1\n", "bad"),
                       doctest::Contains("unit"), Error);
  // Latin square violated.
  CHECK_THROWS_AS(parse_table("loop 2\n0 0\n1 0\n", "bad"), Error);
  // Z4 written as a loop with a wrong ldiv section.
  try {
    parse_table("loop 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"
                "%ldiv\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n",
                "bad");
    FAIL("expected axiom violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AxiomViolation);
  }
  // Division sections on a group must match the derived tables.
  AlgebraPtr z2 = parse_table("group 2\n0 1\n1 0\n%ldiv\n0 1\n1 0\n", "z2");
  CHECK(z2->ldiv(1, 0) == 1);
  try {
    parse_table("group 2\n0 1\n1 0\n%ldiv\n0 1\n0 1\n", "bad");
    FAIL("expected axiom violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AxiomViolation);
    CHECK(std::string(e.what()).find("%ldiv") != std::string::npos);
  }
}

TEST_CASE("bundled table files match the in-memory corpus") {
  for (const std::string& name : bundled_names()) {
    CorpusEntry entry = load("data/" + name + ".tbl");
    CAPTURE(name);
    CHECK(entry.id == name);
    CHECK(entry.source == "file");
    AlgebraPtr want = bundled_algebra(name);
    CHECK(entry.kind == want->kind());
    CHECK(entry.order == want->order());
    CHECK(tables_equal(entry.alg, want));
  }
  CHECK_THROWS_WITH_AS(load("data/no_such_algebra.tbl"),
                       doctest::Contains("cannot open"), Error);
}
