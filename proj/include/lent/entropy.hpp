#pragma once

#include <limits>
#include <vector>

#include "lent/pmf.hpp"

namespace lent {

inline constexpr double kLog2E = 1.4426950408889634;  // log2(e)
inline constexpr double kE = 2.718281828459045;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// i*log2(i) - (i-1)*log2(i-1), the i-th increment of the layered entropy sum.
// Strictly increasing in i and >= log2(i). i must be >= 1 (0 log 0 = 0).
double ell_increment(std::size_t i);

// Lambda(p) = sum_i p(i) * ell_increment(i) over the descending entries.
double layered_entropy(const SortedPmf& p);

// Same quantity evaluated as the exact layer sum
// sum_j (p(j) - p(j+1)) * j * log2(j); the independent cross-check for
// layered_entropy.
double layered_entropy_by_layers(const SortedPmf& p);

double shannon_entropy(const Pmf& p);
double min_entropy(const Pmf& p);

// Renyi entropy of order alpha >= 0; alpha within 1e-9 of {0, 1} and
// alpha = infinity dispatch to the closed-form limits (support size,
// Shannon, min-entropy).
double renyi_entropy(const Pmf& p, double alpha);

// Renyi layered entropy: (1/(1/alpha - 1)) * log2 sum_i p(i) *
// (i^{1/alpha} - (i-1)^{1/alpha}), with the same limit dispatch
// (Lambda_0 = H_0, Lambda_1 = Lambda, Lambda_inf = H_inf).
double renyi_layered_entropy(const SortedPmf& p, double alpha);

// Optimal expected length of a one-to-one (non-prefix-free) binary code:
// L = sum_i p(i) * floor(log2 i). Satisfies Lambda - 2 < L <= Lambda.
double one_to_one_optimal_length(const SortedPmf& p);

// Upper bound on H given Lambda: Lambda + log2(1 + Lambda/(e*eta)) + eta,
// valid for every eta > 0.
double bound_H_from_Lambda(double lambda, double eta);

enum class EtaPreset { loge, sqrt_small, optimal };

// The three preset choices of eta: log2(e) (good for large Lambda),
// sqrt(Lambda*log2(e)/e) (good for small Lambda), and the minimizer
// (sqrt(Lambda^2 + 4*e*Lambda*log2(e)) - Lambda) / (2e).
double eta_preset_value(EtaPreset preset, double lambda);

// bound_H_from_Lambda at a preset eta; returns Lambda itself in the
// eta -> 0 limit that the sqrt/optimal presets reach at Lambda = 0.
double bound_H_with_preset(double lambda, EtaPreset preset);

struct RenyiEntry {
  double alpha;
  double h;       // H_alpha
  double lambda;  // Lambda_alpha
};

struct EntropyReport {
  double shannon = 0.0;
  double layered = 0.0;
  double min_entropy = 0.0;
  double one_to_one_length = 0.0;
  std::vector<RenyiEntry> renyi;
};

EntropyReport make_entropy_report(const Pmf& p, const std::vector<double>& alpha_grid);

}  // namespace lent
