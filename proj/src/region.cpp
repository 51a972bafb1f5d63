#include "lent/region.hpp"

#include <stdexcept>

#include "lent/compression.hpp"
#include "lent/layer_channel.hpp"

namespace lent {

JointPmf random_channel_joint(SplitMix64& rng, const Pmf& px, std::size_t ny) {
  std::vector<std::vector<double>> rows(px.size());
  for (std::size_t x = 0; x < px.size(); ++x) {
    rows[x] = rng.dirichlet(ny);
    for (double& v : rows[x]) v *= px[x];
  }
  return JointPmf(std::move(rows));
}

JointPmf random_joint(SplitMix64& rng, std::size_t nx, std::size_t ny) {
  const std::vector<double> flat = rng.dirichlet(nx * ny);
  std::vector<std::vector<double>> rows(nx, std::vector<double>(ny));
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) rows[x][y] = flat[x * ny + y];
  return JointPmf(std::move(rows));
}

Pmf random_pmf(SplitMix64& rng, std::size_t n) { return Pmf(rng.dirichlet(n)); }

RegionSample region_sample(const Pmf& p, std::size_t n_channels, std::uint64_t seed) {
  if (n_channels < 1) throw std::invalid_argument("region_sample: n_channels must be >= 1");
  RegionSample sample;
  sample.points.reserve(n_channels + 2);

  auto eval = [](const JointPmf& j, std::uint64_t tag) {
    return RegionSample::Point{cond_shannon(j),
                               shannon_entropy(compression_pmf(j).to_pmf()), tag};
  };

  // constant Y: single-column joint
  {
    std::vector<std::vector<double>> rows(p.size(), std::vector<double>(1));
    for (std::size_t x = 0; x < p.size(); ++x) rows[x][0] = p[x];
    sample.points.push_back(eval(JointPmf(std::move(rows)), 0));
  }
  sample.points.push_back(eval(layer_channel(sort_pmf(p)), 1));

  for (std::size_t i = 0; i < n_channels; ++i) {
    const std::uint64_t s = sub_seed(seed, i);
    SplitMix64 rng(s);
    const std::size_t ny = 1 + rng.index(2 * p.size());
    sample.points.push_back(eval(random_channel_joint(rng, p, ny), s));
  }
  return sample;
}

}  // namespace lent
