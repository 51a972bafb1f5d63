#pragma once

#include <cstdint>
#include <vector>

#include "lent/joint.hpp"
#include "lent/pmf.hpp"
#include "lent/rng.hpp"

namespace lent {

// Sampled points of R(X) = union over channels p_{Y|X} of
// (H(X|Y), H(X\Y)). Every point satisfies H(X|Y) <= H(X\Y).
struct RegionSample {
  struct Point {
    double h_cond;       // H(X|Y)
    double h_diff;       // H(X\Y)
    std::uint64_t seed;  // sub-seed of the channel (0 and 1 for the extremes)
  };
  std::vector<Point> points;
};

// Points [0] and [1] are the named extremes: constant Y giving
// (H(X), H(X)) and the layer channel giving (Lambda(X), H(X)). The remaining
// n_channels points come from channels with Dirichlet(1,..,1) rows and
// |Y| cycling over {1..2|X|}, each drawn from its own sub-seed stream.
RegionSample region_sample(const Pmf& p, std::size_t n_channels, std::uint64_t seed);

// Channel with iid flat-Dirichlet rows applied to input pmf px.
JointPmf random_channel_joint(SplitMix64& rng, const Pmf& px, std::size_t ny);

// Random joint over nx * ny cells, flat Dirichlet on the whole simplex.
JointPmf random_joint(SplitMix64& rng, std::size_t nx, std::size_t ny);

Pmf random_pmf(SplitMix64& rng, std::size_t n);

}  // namespace lent
