#include "relcomm/word.hpp"

#include <algorithm>
#include <cctype>

namespace relcomm {

Word Word::var(int i) {
  require_internal(i >= 0, "negative variable index");
  Word w;
  w.prog_.push_back({Tag::var, i});
  w.arity_ = i + 1;
  return w;
}

Word Word::one() {
  Word w;
  w.prog_.push_back({Tag::one});
  return w;
}

Word Word::mul(const Word& a, const Word& b) {
  Word w;
  w.prog_ = a.prog_;
  w.prog_.insert(w.prog_.end(), b.prog_.begin(), b.prog_.end());
  w.prog_.push_back({Tag::mul});
  w.arity_ = std::max(a.arity_, b.arity_);
  w.uses_inv_ = a.uses_inv_ || b.uses_inv_;
  return w;
}

Word Word::ldiv(const Word& a, const Word& b) {
  Word w = mul(a, b);
  w.prog_.back().tag = Tag::ldiv;
  return w;
}

Word Word::rdiv(const Word& a, const Word& b) {
  Word w = mul(a, b);
  w.prog_.back().tag = Tag::rdiv;
  return w;
}

Word Word::inv(const Word& a) {
  Word w = a;
  w.prog_.push_back({Tag::inv});
  w.uses_inv_ = true;
  return w;
}

Word Word::substitute(const std::vector<Word>& args) const {
  Word out;
  out.arity_ = 0;
  out.uses_inv_ = uses_inv_;
  for (const Instr& ins : prog_) {
    if (ins.tag == Tag::var) {
      require_internal(ins.var < static_cast<int>(args.size()),
                       "substitute: missing argument word");
      const Word& a = args[ins.var];
      out.prog_.insert(out.prog_.end(), a.prog_.begin(), a.prog_.end());
      out.arity_ = std::max(out.arity_, a.arity_);
      out.uses_inv_ = out.uses_inv_ || a.uses_inv_;
    } else {
      out.prog_.push_back(ins);
    }
  }
  return out;
}

int eval_word(const Word& w, const FiniteAlgebra& a,
              std::span<const int> args) {
  if (static_cast<int>(args.size()) < w.arity()) {
    throw_error(ErrorCode::ArityMismatch,
                "word of arity " + std::to_string(w.arity()) + " applied to " +
                    std::to_string(args.size()) + " arguments");
  }
  if (w.uses_inv() && a.kind() != Kind::group) {
    throw_error(ErrorCode::SignatureMismatch,
                "word uses inv, not available on " + a.id());
  }
  // Words are tiny; a fixed stack covers every built-in and any sane input.
  int stack[64];
  int sp = 0;
  for (const Word::Instr& ins : w.program()) {
    switch (ins.tag) {
      case Word::Tag::var:
        require_internal(sp < 64, "word evaluation stack overflow");
        stack[sp++] = args[ins.var];
        break;
      case Word::Tag::one:
        require_internal(sp < 64, "word evaluation stack overflow");
        stack[sp++] = 0;
        break;
      case Word::Tag::inv:
        stack[sp - 1] = a.inv(stack[sp - 1]);
        break;
      case Word::Tag::mul:
        stack[sp - 2] = a.mul(stack[sp - 2], stack[sp - 1]);
        --sp;
        break;
      case Word::Tag::ldiv:
        stack[sp - 2] = a.ldiv(stack[sp - 2], stack[sp - 1]);
        --sp;
        break;
      case Word::Tag::rdiv:
        stack[sp - 2] = a.rdiv(stack[sp - 2], stack[sp - 1]);
        --sp;
        break;
    }
  }
  require_internal(sp == 1, "malformed word program");
  return stack[0];
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  std::vector<std::string> names;  // first-appearance variable binding

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw_error(ErrorCode::ParseError,
                "word literal, offset " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  std::string token() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(' || c == ')') {
      ++pos;
      return std::string(1, c);
    }
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')') {
      ++pos;
    }
    return text.substr(start, pos - start);
  }

  Word parse_term() {
    std::string tok = token();
    if (tok == ")") fail("unexpected ')'");
    if (tok == "(") {
      std::string head = token();
      if (head == "inv") {
        Word a = parse_term();
        expect_close();
        return Word::inv(a);
      }
      if (head == "mul" || head == "ldiv" || head == "rdiv") {
        Word a = parse_term();
        Word b = parse_term();
        expect_close();
        if (head == "mul") return Word::mul(a, b);
        if (head == "ldiv") return Word::ldiv(a, b);
        return Word::rdiv(a, b);
      }
      fail("unknown operation '" + head + "'");
    }
    if (tok == "one" || tok == "1") return Word::one();
    if (tok.empty() || !std::islower(static_cast<unsigned char>(tok[0]))) {
      fail("expected a lowercase variable name, got '" + tok + "'");
    }
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) {
      names.push_back(tok);
      return Word::var(static_cast<int>(names.size()) - 1);
    }
    return Word::var(static_cast<int>(it - names.begin()));
  }

  void expect_close() {
    std::string tok = token();
    if (tok != ")") fail("expected ')', got '" + tok + "'");
  }
};

}  // namespace

Word Word::parse(const std::string& text) {
  Parser p(text);
  Word w = p.parse_term();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after word");
  return w;
}

std::string Word::str() const {
  // Rebuild prefix text from the postfix program.
  std::vector<std::string> stack;
  for (const Instr& ins : prog_) {
    switch (ins.tag) {
      case Tag::var:
        stack.push_back("x" + std::to_string(ins.var));
        break;
      case Tag::one:
        stack.push_back("one");
        break;
      case Tag::inv: {
        std::string a = stack.back();
        stack.back() = "(inv " + a + ")";
        break;
      }
      case Tag::mul:
      case Tag::ldiv:
      case Tag::rdiv: {
        const char* op = ins.tag == Tag::mul    ? "mul"
                         : ins.tag == Tag::ldiv ? "ldiv"
                                                : "rdiv";
        std::string b = stack.back();
        stack.pop_back();
        std::string a = stack.back();
        stack.back() = "(" + std::string(op) + " " + a + " " + b + ")";
        break;
      }
    }
  }
  require_internal(stack.size() == 1, "malformed word program");
  return stack[0];
}

Word commutator_word() {
  Word x = Word::var(0), y = Word::var(1);
  return Word::mul(Word::mul(Word::mul(x, y), Word::inv(x)), Word::inv(y));
}

Word associator_word() {
  Word x = Word::var(0), y = Word::var(1), z = Word::var(2);
  return Word::rdiv(Word::mul(Word::mul(x, y), z),
                    Word::mul(x, Word::mul(y, z)));
}

}  // namespace relcomm
