#ifndef RELCOMM_TABLE_IO_HPP
#define RELCOMM_TABLE_IO_HPP

#include <string>

#include "relcomm/algebra.hpp"

namespace relcomm {

// Cayley-table text format.  Line 1 is `kind order` (kind is `group` or
// `loop`); the next `order` lines are the mul table rows as space-separated
// 0-based indices; loops may follow with `%ldiv` / `%rdiv` sections holding
// their tables.  `#` starts a comment anywhere, element 0 must be the unit.
// ParseError messages carry the 1-based line number; the algebra factories'
// axiom errors pass through untouched.
AlgebraPtr parse_table(const std::string& text, const std::string& id);

// Serialization in the same format; loops get explicit division sections.
std::string save_table(const AlgebraPtr& a);

struct CorpusEntry {
  std::string id;
  Kind kind;
  int order = 0;
  std::string source;  // bundled | file | generated
  AlgebraPtr alg;
};

// Reads and validates one table file; the entry id is the basename without
// its extension.
CorpusEntry load(const std::string& path);

}  // namespace relcomm

#endif
