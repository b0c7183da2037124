#ifndef RELCOMM_VARIETY_HPP
#define RELCOMM_VARIETY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "relcomm/algebra.hpp"
#include "relcomm/hom.hpp"
#include "relcomm/ideal.hpp"
#include "relcomm/word.hpp"

namespace relcomm {

// Evaluation cap for value-set and commutator enumerations; reads
// RELCOMM_BUDGET once per process, default 10^8.
std::uint64_t default_budget();

// One step of a value-set plan.  Argument i of the word draws from the whole
// carrier when inputs[i] == -1, or from the result set of an earlier stage.
// Feeding independent sets into disjoint argument positions computes exactly
// the value set of the composite word, which is what makes iterated
// commutator words cheap to sweep.
struct Stage {
  Word w;
  std::vector<int> inputs;
};

struct VarietyDescriptor {
  std::string name;
  Kind kind;
  std::vector<Word> wgen;
  std::vector<std::vector<Stage>> plans;  // one plan per generating word
};

// Ab, Nil2, Nil3, Sol2, Sol3 (group kind) and Gp (loop kind).
VarietyDescriptor builtin_variety(const std::string& name);
std::vector<std::string> builtin_variety_names();

// Descriptor from raw words; each word gets the trivial one-stage plan.
VarietyDescriptor user_variety(std::string name, Kind kind,
                               std::vector<Word> words);

// All values of the plan's composite word on a, as a sorted id set.  Uses
// the block structure of congruence pair views to avoid enumerating the
// relation algebra itself.
std::vector<int> word_value_set(const std::vector<Stage>& plan,
                                const AlgebraPtr& a, std::uint64_t budget);

// Union over the descriptor's generating words.
std::vector<int> variety_value_set(const VarietyDescriptor& v,
                                   const AlgebraPtr& a, std::uint64_t budget);

Ideal verbal_subobject(const AlgebraPtr& a, const VarietyDescriptor& v,
                       std::uint64_t budget = default_budget());

bool in_subvariety(const AlgebraPtr& a, const VarietyDescriptor& v,
                   std::uint64_t budget = default_budget());

struct Reflection {
  AlgebraPtr alg;
  Homomorphism eta;
  Ideal verbal;
};
Reflection reflection(const AlgebraPtr& a, const VarietyDescriptor& v,
                      std::uint64_t budget = default_budget());

// Restriction of f to the verbal subobjects, as a map between their sub
// views; throws InvalidArgument when f does not map verbal into verbal.
Homomorphism induced_verbal_hom(const Homomorphism& f,
                                const VarietyDescriptor& v,
                                std::uint64_t budget = default_budget());

}  // namespace relcomm

#endif
