#include "recip/set_partitions.hpp"

#include <algorithm>
#include <map>

#include "recip/errors.hpp"

namespace recip {

bool next_rgs(Rgs& a) {
  const std::size_t n = a.size();
  if (n <= 1) return false;
  // prefix_max[i] = max(a[0..i−1]).
  std::vector<int> prefix_max(n, 0);
  for (std::size_t i = 1; i < n; ++i) prefix_max[i] = std::max(prefix_max[i - 1], a[i - 1]);
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (a[i] <= prefix_max[i]) {
      ++a[i];
      std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
      return true;
    }
  }
  return false;
}

std::vector<Rgs> set_partitions(int n) {
  if (n < 0) throw DimensionError("negative set size");
  std::vector<Rgs> out;
  Rgs a(static_cast<std::size_t>(n), 0);
  do {
    out.push_back(a);
  } while (next_rgs(a));
  return out;
}

Rgs canonical_rgs(const std::vector<int>& labels) {
  std::map<int, int> relabel;
  Rgs out;
  out.reserve(labels.size());
  for (int x : labels) out.push_back(relabel.try_emplace(x, static_cast<int>(relabel.size())).first->second);
  return out;
}

Integer bell_number(int n) {
  if (n < 0) throw DimensionError("negative set size");
  std::vector<Integer> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<Integer> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace recip
