#include "lent/layer_channel.hpp"

namespace lent {

JointPmf layer_channel(const SortedPmf& p) {
  constexpr double kMergeTolerance = 1e-12;
  const std::size_t n = p.size();

  // Distinct positive values a_j and the count of atoms with p(x) >= a_j.
  // Counts are cumulative because the entries are descending.
  std::vector<double> levels;
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] <= 0.0) break;
    if (levels.empty() || levels.back() - p[i] > kMergeTolerance) {
      levels.push_back(p[i]);
      counts.push_back(i + 1);
    } else {
      counts.back() = i + 1;
    }
  }

  const std::size_t m = levels.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(std::max<std::size_t>(m, 1), 0.0));
  for (std::size_t jdx = 0; jdx < m; ++jdx) {
    const double next = (jdx + 1 < m) ? levels[jdx + 1] : 0.0;
    const double width = levels[jdx] - next;
    for (std::size_t x = 0; x < counts[jdx]; ++x) rows[x][jdx] = width;
  }
  return JointPmf(std::move(rows));
}

}  // namespace lent
