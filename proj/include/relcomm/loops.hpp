#ifndef RELCOMM_LOOPS_HPP
#define RELCOMM_LOOPS_HPP

#include <vector>

#include "relcomm/algebra.hpp"

namespace relcomm {

// All reduced Latin squares of order n (row 0 and column 0 the identity
// permutation) as flat mul tables, in the deterministic order produced by
// cell-by-cell backtracking.  Memoized per process; BudgetExceeded for
// n < 1 or n > 6.  Counts for n=1..6: 1, 1, 1, 4, 56, 9408.
const std::vector<std::vector<int>>& gen_loop_tables(int n);

}  // namespace relcomm

#endif
