#pragma once

#include <cstdint>
#include <vector>

#include "lent/pmf.hpp"
#include "lent/rng.hpp"

namespace lent {

// A joint pmf over (X, K) in {1..n} x {1..n} entering the linear-programming
// characterization of Lambda: maximize E[log2 K] subject to the X-marginal
// matching p and p_{X,K}(x,k) <= p_K(k)/k for all x, k.
struct Coupling {
  std::vector<std::vector<double>> joint;  // joint[x][k-1]

  std::vector<double> x_marginal() const;
  std::vector<double> k_marginal() const;
  double objective() const;  // E[log2 K]
  // Largest violation of p(x,k) <= p_K(k)/k over all cells (negative means
  // strictly feasible everywhere).
  double feasibility_residual() const;
};

// The closed-form optimizer: K = layer count under the layer channel, so
// p_{X,K}(x, k_j) = width_j * 1{x in layer j}. Feasible with every support
// constraint tight, and objective equal to Lambda(p).
Coupling lp_coupling_construct(const SortedPmf& p);

// Random feasibility-preserving perturbation: proportional column-to-column
// mass moves, accepted only if the result stays feasible (moves toward larger
// K off the optimum are always rejected). X-marginal is preserved. Used to
// sample feasible non-optimal couplings for the weak-duality check.
Coupling perturb_coupling(const Coupling& c, SplitMix64& rng, std::size_t moves);

// Samples `trials` random channels and checks H_inf(X|Y) <= Lambda(p) + tol
// for each (the concave-envelope-of-min-entropy characterization).
bool lp_objective_upper_check(const SortedPmf& p, std::size_t trials,
                              std::uint64_t seed, double tol = 1e-9);

// Samples `trials` random channels with uniform posteriors (random
// partitions of the layer supports) and checks H(X|Y) <= Lambda(p) + tol.
bool uniform_conditional_envelope_check(const SortedPmf& p, std::size_t trials,
                                        std::uint64_t seed, double tol = 1e-9);

// compression_pmf(layer_channel(p)) == p entrywise within tol.
bool layer_fixed_point_check(const SortedPmf& p, double tol = 1e-12);

}  // namespace lent
