#include "lent/compression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lent {

namespace {

constexpr std::size_t kBruteForceMaxX = 5;
constexpr std::size_t kBruteForceMaxY = 4;
constexpr std::size_t kMaxTieCombinations = std::size_t{1} << 22;

// Descending order of column y by joint mass, ties by ascending x.
std::vector<std::size_t> column_order(const JointPmf& j, std::size_t y) {
  std::vector<std::size_t> order(j.x_size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return j.at(a, y) > j.at(b, y);
  });
  return order;
}

std::vector<std::size_t> ranks_from_order(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> ranks(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) ranks[order[pos]] = pos + 1;
  return ranks;
}

Pmf u_pmf_from_ranks(const JointPmf& j,
                     const std::vector<std::vector<std::size_t>>& rank_map) {
  std::vector<double> u(j.x_size(), 0.0);
  for (std::size_t x = 0; x < j.x_size(); ++x)
    for (std::size_t y = 0; y < j.y_size(); ++y) u[rank_map[x][y] - 1] += j.at(x, y);
  return Pmf(std::move(u));
}

double entropy_of(const std::vector<double>& w) {
  double h = 0.0;
  for (double v : w)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

// H(X|U) for the (X, U) joint induced by a rank assignment.
double h_x_given_u(const JointPmf& j,
                   const std::vector<std::vector<std::size_t>>& rank_map) {
  const std::size_t n = j.x_size();
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < j.y_size(); ++y) q[x][rank_map[x][y] - 1] += j.at(x, y);
  double h_joint = 0.0;
  std::vector<double> qu(n, 0.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t u = 0; u < n; ++u) {
      if (q[x][u] > 0.0) h_joint -= q[x][u] * std::log2(q[x][u]);
      qu[u] += q[x][u];
    }
  return h_joint - entropy_of(qu);
}

// All rank assignments for column y that differ only by permuting atoms with
// exactly equal mass.
std::vector<std::vector<std::size_t>> tie_break_candidates(const JointPmf& j,
                                                           std::size_t y) {
  std::vector<std::size_t> order = column_order(j, y);
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  std::size_t begin = 0;
  for (std::size_t pos = 1; pos <= order.size(); ++pos) {
    if (pos == order.size() || j.at(order[pos], y) != j.at(order[begin], y)) {
      groups.emplace_back(begin, pos);
      begin = pos;
    }
  }
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> current = order;
  auto emit = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      candidates.push_back(ranks_from_order(current));
      return;
    }
    auto [lo, hi] = groups[g];
    std::vector<std::size_t> block(current.begin() + lo, current.begin() + hi);
    std::sort(block.begin(), block.end());
    do {
      std::copy(block.begin(), block.end(), current.begin() + lo);
      self(self, g + 1);
    } while (std::next_permutation(block.begin(), block.end()));
  };
  emit(emit, 0);
  return candidates;
}

std::vector<std::vector<std::size_t>> exhaustive_rank_map(const JointPmf& j) {
  const std::size_t nx = j.x_size();
  const std::size_t ny = j.y_size();
  if (nx > kBruteForceMaxX || ny > kBruteForceMaxY)
    throw std::invalid_argument("conditional_compression: exhaustive tie search limited to 5x4");
  std::vector<std::vector<std::vector<std::size_t>>> per_y;
  std::size_t combos = 1;
  for (std::size_t y = 0; y < ny; ++y) {
    per_y.push_back(tie_break_candidates(j, y));
    combos *= per_y.back().size();
    if (combos > kMaxTieCombinations)
      throw std::invalid_argument("conditional_compression: too many tie permutations");
  }
  std::vector<std::size_t> pick(ny, 0);
  std::vector<std::vector<std::size_t>> best;
  double best_h = kInfinity;
  auto walk = [&](auto&& self, std::size_t y) -> void {
    if (y == ny) {
      std::vector<std::vector<std::size_t>> rank_map(nx, std::vector<std::size_t>(ny));
      for (std::size_t yy = 0; yy < ny; ++yy)
        for (std::size_t x = 0; x < nx; ++x) rank_map[x][yy] = per_y[yy][pick[yy]][x];
      const double h = h_x_given_u(j, rank_map);
      if (h < best_h) {
        best_h = h;
        best = std::move(rank_map);
      }
      return;
    }
    for (pick[y] = 0; pick[y] < per_y[y].size(); ++pick[y]) self(self, y + 1);
  };
  walk(walk, 0);
  return best;
}

}  // namespace

CompressionResult conditional_compression(const JointPmf& j, TiePolicy policy) {
  std::vector<std::vector<std::size_t>> rank_map;
  if (policy == TiePolicy::ascending_index) {
    rank_map.assign(j.x_size(), std::vector<std::size_t>(j.y_size(), 0));
    for (std::size_t y = 0; y < j.y_size(); ++y) {
      const auto ranks = ranks_from_order(column_order(j, y));
      for (std::size_t x = 0; x < j.x_size(); ++x) rank_map[x][y] = ranks[x];
    }
  } else {
    rank_map = exhaustive_rank_map(j);
  }
  Pmf u = u_pmf_from_ranks(j, rank_map);
  return CompressionResult{std::move(rank_map), std::move(u), policy};
}

SortedPmf compression_pmf(const JointPmf& j) {
  const std::size_t nx = j.x_size();
  std::vector<double> u(nx, 0.0);
  std::vector<double> column(nx);
  for (std::size_t y = 0; y < j.y_size(); ++y) {
    for (std::size_t x = 0; x < nx; ++x) column[x] = j.at(x, y);
    // p_Y(y) * p^down(i|y) is just the column itself sorted descending
    std::sort(column.begin(), column.end(), std::greater<>());
    for (std::size_t i = 0; i < nx; ++i) u[i] += column[i];
  }
  std::vector<std::size_t> perm(nx);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return SortedPmf(std::move(u), std::move(perm));
}

double brute_force_min_H_U(const JointPmf& j) {
  const std::size_t nx = j.x_size();
  const std::size_t ny = j.y_size();
  if (nx > kBruteForceMaxX || ny > kBruteForceMaxY)
    throw std::invalid_argument("brute_force_min_H_U: alphabet too large for exhaustive search");

  std::vector<std::vector<std::size_t>> support(ny);
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t x = 0; x < nx; ++x)
      if (j.at(x, y) > 0.0) support[y].push_back(x);

  // All injections of `count` support atoms into U-slots {0..nx-1}.
  auto injections = [&](std::size_t count) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> chosen;
    std::vector<bool> used(nx, false);
    auto rec = [&](auto&& self) -> void {
      if (chosen.size() == count) {
        out.push_back(chosen);
        return;
      }
      for (std::size_t s = 0; s < nx; ++s) {
        if (used[s]) continue;
        used[s] = true;
        chosen.push_back(s);
        self(self);
        chosen.pop_back();
        used[s] = false;
      }
    };
    rec(rec);
    return out;
  };

  // H(U) is invariant under relabeling U, so the column with the largest
  // support can be pinned to the identity assignment.
  std::size_t pinned = 0;
  for (std::size_t y = 1; y < ny; ++y)
    if (support[y].size() > support[pinned].size()) pinned = y;

  std::vector<double> u(nx, 0.0);
  for (std::size_t t = 0; t < support[pinned].size(); ++t)
    u[t] += j.at(support[pinned][t], pinned);

  std::vector<std::size_t> free_columns;
  for (std::size_t y = 0; y < ny; ++y)
    if (y != pinned && !support[y].empty()) free_columns.push_back(y);

  std::vector<std::vector<std::vector<std::size_t>>> options;
  options.reserve(free_columns.size());
  for (std::size_t y : free_columns) options.push_back(injections(support[y].size()));

  double best = kInfinity;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == free_columns.size()) {
      best = std::min(best, entropy_of(u));
      return;
    }
    const std::size_t y = free_columns[idx];
    const std::vector<double> snapshot = u;  // exact rollback, no -= drift
    for (const auto& assignment : options[idx]) {
      for (std::size_t t = 0; t < assignment.size(); ++t)
        u[assignment[t]] += j.at(support[y][t], y);
      self(self, idx + 1);
      u = snapshot;
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace lent
