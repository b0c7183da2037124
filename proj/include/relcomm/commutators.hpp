#ifndef RELCOMM_COMMUTATORS_HPP
#define RELCOMM_COMMUTATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "relcomm/algebra.hpp"
#include "relcomm/galois.hpp"
#include "relcomm/ideal.hpp"
#include "relcomm/variety.hpp"

namespace relcomm {

// Every ideal of a: 1-classes of the principal congruences, closed under
// pairwise join and meet.  Sorted by size then members, so enumeration
// order is reproducible.
std::vector<Ideal> ideal_lattice(const AlgebraPtr& a,
                                 std::uint64_t budget = default_budget());

// Members of j inside the base algebra when j lives on a sub view.
std::vector<int> ambient_members(const Ideal& j);

// Word-generator relative commutator for ideals of a group-kind algebra:
// the ideal of M.N generated by w(mn)w(n)^-1 w(m)^-1 w(p) over m in M^r,
// n in N^r, p in (M cap N)^r for each generating word w.  The returned
// ideal lives on the M.N sub view.  no_p_factor drops the trailing w(p)
// from the generators (diagnostic mode; the definition keeps it).
Ideal relcomm_words(const Ideal& m, const Ideal& n, const VarietyDescriptor& v,
                    std::uint64_t budget = default_budget(),
                    bool no_p_factor = false);

// Normal subloop of (M.N).L generated by the associators of all argument
// permutations of L x M x N.
Ideal associator_subloop(const Ideal& l, const Ideal& m, const Ideal& n);

// Loop-kind relative commutator for the variety of groups inside loops:
// [M, N, M.N].
Ideal relcomm_loops(const Ideal& m, const Ideal& n);

// The double extension M.N -> (M.N)/M, (M.N)/N over a point.
DoubleExtension theorem_square(const Ideal& m, const Ideal& n);

// Galois-side oracle: the smallest ideal J of M.N such that the theorem
// square of the images of M and N in (M.N)/J is double-central.  Computed
// as the intersection of every passing J over the full ideal lattice; the
// intersection is checked to pass as well (NoCentralizingIdeal otherwise).
Ideal relcomm_oracle(const Ideal& m, const Ideal& n,
                     const VarietyDescriptor& v,
                     std::uint64_t budget = default_budget(),
                     FourSquareStats* stats = nullptr);

struct SweepEntry {
  std::vector<int> m_members;
  std::vector<int> n_members;
  std::vector<int> commutator;  // ambient element ids
  bool vanishes = false;
  bool central = false;
  bool agree = false;
};
struct SweepReport {
  std::string algebra;
  std::string variety;
  std::vector<SweepEntry> entries;
  bool all_agree = true;
};

// For every ordered ideal pair (M,N) of a: build the theorem square (the
// construction itself validates it as a double extension), test vanishing
// of the relative commutator (words for groups, associators for loops)
// against double centrality, and report both verdicts.
SweepReport theorem31_sweep(const AlgebraPtr& a, const VarietyDescriptor& v,
                            std::uint64_t budget = default_budget(),
                            FourSquareStats* stats = nullptr);

struct PairDisagreement {
  std::string algebra;
  std::vector<int> m_members;
  std::vector<int> n_members;
  std::vector<int> loops_result;
  std::vector<int> oracle_result;
};
struct Theorem42Report {
  int max_order = 0;
  long loops = 0;
  long pairs = 0;
  bool all_agree = true;
  std::vector<PairDisagreement> disagreements;
};

// relcomm_loops vs relcomm_oracle over every normal-subloop pair of every
// loop of order <= max_order.  Only disagreements are recorded in full.
Theorem42Report theorem42_sweep(int max_order,
                                std::uint64_t budget = default_budget(),
                                unsigned threads = 1,
                                FourSquareStats* stats = nullptr);

struct MethodResult {
  std::string method;  // words | associator | oracle
  std::vector<int> members;  // ambient element ids
  double seconds = 0.0;
};
struct CommutatorReport {
  std::string algebra;
  std::string variety;
  std::vector<int> m_members;
  std::vector<int> n_members;
  std::vector<MethodResult> results;
  bool agree = true;
};

// Runs the requested methods on one ideal pair and cross-checks their
// member sets.  Method names: words, associator, oracle.
CommutatorReport commutator_report(const Ideal& m, const Ideal& n,
                                   const VarietyDescriptor& v,
                                   const std::vector<std::string>& methods,
                                   std::uint64_t budget = default_budget(),
                                   bool no_p_factor = false);

}  // namespace relcomm

#endif
