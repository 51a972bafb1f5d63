#include "lent/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lent/compression.hpp"
#include "lent/entropy.hpp"
#include "lent/joint.hpp"
#include "lent/layer_channel.hpp"
#include "lent/region.hpp"

namespace lent {

std::vector<double> Coupling::x_marginal() const {
  std::vector<double> m(joint.size(), 0.0);
  for (std::size_t x = 0; x < joint.size(); ++x)
    for (double v : joint[x]) m[x] += v;
  return m;
}

std::vector<double> Coupling::k_marginal() const {
  std::vector<double> m(joint.empty() ? 0 : joint.front().size(), 0.0);
  for (const auto& row : joint)
    for (std::size_t k = 0; k < m.size(); ++k) m[k] += row[k];
  return m;
}

double Coupling::objective() const {
  double obj = 0.0;
  const std::vector<double> pk = k_marginal();
  for (std::size_t k = 0; k < pk.size(); ++k)
    if (pk[k] > 0.0) obj += pk[k] * std::log2(static_cast<double>(k + 1));
  return obj;
}

double Coupling::feasibility_residual() const {
  const std::vector<double> pk = k_marginal();
  double worst = -kInfinity;
  for (const auto& row : joint)
    for (std::size_t k = 0; k < pk.size(); ++k)
      worst = std::max(worst, row[k] - pk[k] / static_cast<double>(k + 1));
  return worst;
}

Coupling lp_coupling_construct(const SortedPmf& p) {
  const JointPmf ch = layer_channel(p);
  const std::size_t n = p.size();
  Coupling c{std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0))};
  for (std::size_t j = 0; j < ch.y_size(); ++j) {
    std::size_t count = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (ch.at(x, j) > 0.0) ++count;
    if (count == 0) continue;
    for (std::size_t x = 0; x < n; ++x) c.joint[x][count - 1] += ch.at(x, j);
  }
  return c;
}

Coupling perturb_coupling(const Coupling& c, SplitMix64& rng, std::size_t moves) {
  constexpr double kFeasibilitySlack = 1e-12;
  Coupling out = c;
  const std::size_t n = out.joint.size();
  for (std::size_t m = 0; m < moves; ++m) {
    const std::size_t from = rng.index(n);
    const std::size_t to = rng.index(n);
    const double frac = 0.5 * rng.uniform01();
    if (from == to) continue;
    Coupling trial = out;
    for (std::size_t x = 0; x < n; ++x) {
      const double delta = frac * trial.joint[x][from];
      trial.joint[x][from] -= delta;
      trial.joint[x][to] += delta;
    }
    if (trial.feasibility_residual() <= kFeasibilitySlack) out = std::move(trial);
  }
  return out;
}

bool lp_objective_upper_check(const SortedPmf& p, std::size_t trials,
                              std::uint64_t seed, double tol) {
  if (trials < 1) throw std::invalid_argument("lp_objective_upper_check: trials must be >= 1");
  const double lambda = layered_entropy(p);
  const Pmf px = p.to_pmf();
  for (std::size_t i = 0; i < trials; ++i) {
    SplitMix64 rng(sub_seed(seed, i));
    const std::size_t ny = 1 + rng.index(2 * p.size());
    const JointPmf j = random_channel_joint(rng, px, ny);
    if (cond_min_entropy(j) > lambda + tol) return false;
  }
  return true;
}

bool uniform_conditional_envelope_check(const SortedPmf& p, std::size_t trials,
                                        std::uint64_t seed, double tol) {
  if (trials < 1)
    throw std::invalid_argument("uniform_conditional_envelope_check: trials must be >= 1");
  const double lambda = layered_entropy(p);
  const LayerDecomposition layers = layer_decomposition(p);
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < trials; ++i) {
    SplitMix64 rng(sub_seed(seed, i));
    // Split each layer's uniform block into random sub-blocks; the posterior
    // stays uniform on each sub-block and the mixture stays equal to p.
    std::vector<std::vector<double>> columns;
    for (std::size_t k = 1; k <= n; ++k) {
      const double w = layers.weights[k - 1];
      if (w <= 0.0) continue;
      std::vector<std::size_t> atoms(k);
      for (std::size_t x = 0; x < k; ++x) atoms[x] = x;
      for (std::size_t x = k; x-- > 1;) std::swap(atoms[x], atoms[rng.index(x + 1)]);
      std::vector<double> col(n, 0.0);
      bool open = false;
      for (std::size_t t = 0; t < k; ++t) {
        if (open && rng.uniform01() < 0.5) {
          columns.push_back(col);
          std::fill(col.begin(), col.end(), 0.0);
          open = false;
        }
        col[atoms[t]] = w / static_cast<double>(k);
        open = true;
      }
      columns.push_back(col);
    }
    std::vector<std::vector<double>> rows(n, std::vector<double>(columns.size()));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < columns.size(); ++y) rows[x][y] = columns[y][x];
    const JointPmf j(std::move(rows));
    if (cond_shannon(j) > lambda + tol) return false;
  }
  return true;
}

bool layer_fixed_point_check(const SortedPmf& p, double tol) {
  const SortedPmf back = compression_pmf(layer_channel(p));
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::fabs(back[i] - p[i]) > tol) return false;
  return true;
}

}  // namespace lent
