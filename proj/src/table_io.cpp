#include "relcomm/table_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "relcomm/error.hpp"

namespace relcomm {

namespace {

// Keeps a hostile header like `group 1000000000` from allocating the n*n
// table.  Far above anything the brute-force layers can touch anyway.
constexpr int kMaxOrder = 1024;

[[noreturn]] void fail(int line, const std::string& msg) {
  throw_error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + msg);
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Comment-stripped, whitespace-tokenized, blank lines dropped.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream toks(raw);
    Line line{number, {}};
    std::string tok;
    while (toks >> tok) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) fail(line, what + " '" + tok + "' is not a number");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(line, what + " '" + tok + "' is not a number");
  }
}

int parse_entry(const std::string& tok, int n, int line) {
  int v = parse_int(tok, line, "table entry");
  if (v < 0 || v >= n) {
    fail(line, "entry " + tok + " out of range [0, " + std::to_string(n) + ")");
  }
  return v;
}

}  // namespace

AlgebraPtr parse_table(const std::string& text, const std::string& id) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) {
    throw_error(ErrorCode::ParseError, "empty table: expected a `kind order` header");
  }

  const Line& head = lines[0];
  if (head.tokens.size() != 2) {
    fail(head.number, "expected header `kind order`");
  }
  Kind kind;
  if (head.tokens[0] == "group") {
    kind = Kind::group;
  } else if (head.tokens[0] == "loop") {
    kind = Kind::loop;
  } else {
    fail(head.number,
         "unknown kind '" + head.tokens[0] + "' (expected group or loop)");
  }
  int n = parse_int(head.tokens[1], head.number, "order");
  if (n < 1 || n > kMaxOrder) {
    fail(head.number, "order " + std::to_string(n) + " out of range [1, " +
                          std::to_string(kMaxOrder) + "]");
  }

  std::size_t i = 1;
  auto read_table = [&](const std::string& what) {
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
      if (i >= lines.size()) {
        fail(lines.back().number, what + " table ends after " +
                                      std::to_string(r) + " of " +
                                      std::to_string(n) + " rows");
      }
      const Line& row = lines[i];
      if (row.tokens[0][0] == '%') {
        fail(row.number, what + " table ends after " + std::to_string(r) +
                             " of " + std::to_string(n) + " rows");
      }
      ++i;
      if (static_cast<int>(row.tokens.size()) != n) {
        fail(row.number, "row has " + std::to_string(row.tokens.size()) +
                             " entries, expected " + std::to_string(n));
      }
      for (const std::string& tok : row.tokens) {
        table.push_back(parse_entry(tok, n, row.number));
      }
    }
    return table;
  };

  std::vector<int> mul = read_table("mul");
  std::vector<int> ldiv, rdiv;
  while (i < lines.size()) {
    const Line& sec = lines[i];
    if (sec.tokens.size() != 1 || sec.tokens[0][0] != '%') {
      fail(sec.number,
           "unexpected content after the mul table (expected %ldiv or %rdiv)");
    }
    ++i;
    if (sec.tokens[0] == "%ldiv") {
      if (!ldiv.empty()) fail(sec.number, "duplicate %ldiv section");
      ldiv = read_table("ldiv");
    } else if (sec.tokens[0] == "%rdiv") {
      if (!rdiv.empty()) fail(sec.number, "duplicate %rdiv section");
      rdiv = read_table("rdiv");
    } else {
      fail(sec.number, "unknown section '" + sec.tokens[0] + "'");
    }
  }

  if (kind == Kind::loop) {
    return FiniteAlgebra::make_loop(id, n, std::move(mul), std::move(ldiv),
                                    std::move(rdiv));
  }
  // Groups derive their divisions from inverses; sections are still accepted
  // and checked against the derived tables so exports from other tools load.
  AlgebraPtr g = FiniteAlgebra::make_group(id, n, std::move(mul));
  for (int r = 0; r < n && !ldiv.empty(); ++r) {
    for (int c = 0; c < n; ++c) {
      if (ldiv[r * n + c] != g->ldiv(r, c)) {
        throw_error(ErrorCode::AxiomViolation,
                    "%ldiv table contradicts the group structure at (" +
                        std::to_string(r) + ", " + std::to_string(c) + ")");
      }
    }
  }
  for (int r = 0; r < n && !rdiv.empty(); ++r) {
    for (int c = 0; c < n; ++c) {
      if (rdiv[r * n + c] != g->rdiv(r, c)) {
        throw_error(ErrorCode::AxiomViolation,
                    "%rdiv table contradicts the group structure at (" +
                        std::to_string(r) + ", " + std::to_string(c) + ")");
      }
    }
  }
  return g;
}

std::string save_table(const AlgebraPtr& a) {
  std::ostringstream out;
  out << kind_name(a->kind()) << ' ' << a->order() << '\n';
  auto dump = [&](Op o) {
    for (int r = 0; r < a->order(); ++r) {
      for (int c = 0; c < a->order(); ++c) {
        out << a->op(o, r, c) << (c + 1 == a->order() ? '\n' : ' ');
      }
    }
  };
  dump(Op::mul);
  if (a->kind() == Kind::loop) {
    out << "%ldiv\n";
    dump(Op::ldiv);
    out << "%rdiv\n";
    dump(Op::rdiv);
  }
  return out.str();
}

CorpusEntry load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw_error(ErrorCode::ParseError, path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string id = std::filesystem::path(path).stem().string();
  AlgebraPtr alg = parse_table(buf.str(), id);
  return CorpusEntry{id, alg->kind(), alg->order(), "file", alg};
}

}  // namespace relcomm
