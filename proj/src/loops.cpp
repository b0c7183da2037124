#include "relcomm/loops.hpp"

#include <array>
#include <map>
#include <mutex>

#include "relcomm/error.hpp"

namespace relcomm {

namespace {

void complete(std::vector<int>& cell, int n, int pos,
              std::vector<int>& row_used, std::vector<int>& col_used,
              std::vector<std::vector<int>>& out) {
  const int total = n * n;
  if (pos == total) {
    out.push_back(cell);
    return;
  }
  const int r = pos / n;
  const int c = pos % n;
  if (cell[pos] >= 0) {  // preset border cell
    complete(cell, n, pos + 1, row_used, col_used, out);
    return;
  }
  for (int v = 0; v < n; ++v) {
    const int rbit = 1 << v;
    if ((row_used[r] & rbit) || (col_used[c] & rbit)) continue;
    cell[pos] = v;
    row_used[r] |= rbit;
    col_used[c] |= rbit;
    complete(cell, n, pos + 1, row_used, col_used, out);
    row_used[r] &= ~rbit;
    col_used[c] &= ~rbit;
    cell[pos] = -1;
  }
}

std::vector<std::vector<int>> enumerate(int n) {
  std::vector<int> cell(n * n, -1);
  std::vector<int> row_used(n, 0), col_used(n, 0);
  for (int j = 0; j < n; ++j) {  // first row: identity
    cell[j] = j;
    row_used[0] |= 1 << j;
    col_used[j] |= 1 << j;
  }
  for (int i = 1; i < n; ++i) {  // first column: identity
    cell[i * n] = i;
    row_used[i] |= 1 << i;
    col_used[0] |= 1 << i;
  }
  std::vector<std::vector<int>> out;
  complete(cell, n, 0, row_used, col_used, out);
  return out;
}

}  // namespace

const std::vector<std::vector<int>>& gen_loop_tables(int n) {
  if (n < 1 || n > 6)
    throw_error(ErrorCode::BudgetExceeded,
                "gen_loops: order " + std::to_string(n) +
                    " outside the supported range 1..6");
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate(n)).first;
  return it->second;
}

}  // namespace relcomm
