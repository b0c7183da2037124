#ifndef RELCOMM_WORD_HPP
#define RELCOMM_WORD_HPP

#include <span>
#include <string>
#include <vector>

#include "relcomm/algebra.hpp"

namespace relcomm {

// A term in the signature {mul, ldiv, rdiv, inv, one} over variables
// var(0), var(1), ...  Stored as a postfix program so evaluation is a flat
// loop.  inv restricts the word to group-kind algebras.
class Word {
 public:
  enum class Tag { var, one, mul, ldiv, rdiv, inv };

  struct Instr {
    Tag tag;
    int var = -1;  // for Tag::var
  };

  static Word var(int i);
  static Word one();
  static Word mul(const Word& a, const Word& b);
  static Word ldiv(const Word& a, const Word& b);
  static Word rdiv(const Word& a, const Word& b);
  static Word inv(const Word& a);

  // Substitute args[i] for var(i).  Arity of the result is the max arity of
  // the arguments; the caller keeps variable sets disjoint when that matters.
  Word substitute(const std::vector<Word>& args) const;

  // Prefix syntax: (mul (mul x y) (inv x)), variables are lowercase
  // identifiers bound to var(0), var(1), ... in order of first appearance.
  static Word parse(const std::string& text);

  int arity() const { return arity_; }
  bool uses_inv() const { return uses_inv_; }
  const std::vector<Instr>& program() const { return prog_; }
  std::string str() const;  // prefix form with variables x0, x1, ...

 private:
  std::vector<Instr> prog_;
  int arity_ = 0;
  bool uses_inv_ = false;
};

// Evaluates w on the given argument tuple.  ArityMismatch when the tuple is
// shorter than the word's arity; SignatureMismatch when the word uses inv on
// a loop.
int eval_word(const Word& w, const FiniteAlgebra& a, std::span<const int> args);

// Commutator word  x y x^-1 y^-1  (left-to-right association).
Word commutator_word();
// Associator word  ((x*y)*z) / (x*(y*z)).
Word associator_word();

}  // namespace relcomm

#endif
