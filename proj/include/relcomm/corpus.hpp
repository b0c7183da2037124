#ifndef RELCOMM_CORPUS_HPP
#define RELCOMM_CORPUS_HPP

#include <string>
#include <vector>

#include "relcomm/algebra.hpp"

namespace relcomm {

AlgebraPtr corpus_zn(int n);  // cyclic group of order n
AlgebraPtr corpus_v4();       // Z2 x Z2
AlgebraPtr corpus_s3();       // permutations of {0,1,2} in lexicographic rank
AlgebraPtr corpus_d4();       // r^k s^e with index k + 4e
AlgebraPtr corpus_q8();       // i^a j^b with index a + 4b
AlgebraPtr corpus_a4();       // even permutations of {0,1,2,3}, lex rank
AlgebraPtr corpus_l5();       // first nonassociative loop of order 5

// The eight bundled groups: z2, z4, v4, z6, s3, d4, q8, a4.
std::vector<AlgebraPtr> corpus_groups();

// Bundled algebra by name (the eight groups plus "l5"); nullptr if unknown.
AlgebraPtr bundled_algebra(const std::string& name);
std::vector<std::string> bundled_names();

}  // namespace relcomm

#endif
