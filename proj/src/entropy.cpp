#include "lent/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace lent {

namespace {

constexpr double kAlphaLimitTolerance = 1e-9;

bool is_alpha_zero(double alpha) { return std::fabs(alpha) <= kAlphaLimitTolerance; }
bool is_alpha_one(double alpha) { return std::fabs(alpha - 1.0) <= kAlphaLimitTolerance; }

}  // namespace

double ell_increment(std::size_t i) {
  if (i == 0) throw std::invalid_argument("ell_increment: i must be >= 1");
  if (i == 1) return 0.0;
  // i log i - (i-1) log(i-1) rewritten as log2(i) + (i-1)*log2(i/(i-1)),
  // which is free of the large-i cancellation of the direct difference.
  const double m = static_cast<double>(i - 1);
  return std::log2(static_cast<double>(i)) + m * (std::log1p(1.0 / m) * kLog2E);
}

double layered_entropy(const SortedPmf& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) sum += p[i] * ell_increment(i + 1);
  }
  return sum;
}

double layered_entropy_by_layers(const SortedPmf& p) {
  const std::size_t n = p.size();
  double sum = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const double next = (j < n) ? p[j] : 0.0;
    const double width = p[j - 1] - next;
    if (width > 0.0 && j > 1)
      sum += width * static_cast<double>(j) * std::log2(static_cast<double>(j));
  }
  return sum;
}

double shannon_entropy(const Pmf& p) {
  double h = 0.0;
  for (double x : p.probs()) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double min_entropy(const Pmf& p) {
  double max = 0.0;
  for (double x : p.probs()) max = std::max(max, x);
  return -std::log2(max);
}

double renyi_entropy(const Pmf& p, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("renyi_entropy: alpha must be >= 0");
  if (is_alpha_zero(alpha)) return std::log2(static_cast<double>(p.support_size()));
  if (is_alpha_one(alpha)) return shannon_entropy(p);
  if (std::isinf(alpha)) return min_entropy(p);
  // factor out max^alpha so the sum stays in [1, n] for any alpha
  double max = 0.0;
  for (double x : p.probs()) max = std::max(max, x);
  double sum = 0.0;
  for (double x : p.probs()) {
    if (x > 0.0) sum += std::pow(x / max, alpha);
  }
  return (alpha * std::log2(max) + std::log2(sum)) / (1.0 - alpha);
}

double renyi_layered_entropy(const SortedPmf& p, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("renyi_layered_entropy: alpha must be >= 0");
  if (is_alpha_zero(alpha))
    return std::log2(static_cast<double>(p.support_size()));
  if (is_alpha_one(alpha)) return layered_entropy(p);
  if (std::isinf(alpha)) return -std::log2(p[0]);
  const double beta = 1.0 / alpha;
  // factor out n^beta so the increments stay in [0, 1] for any beta
  const std::size_t support = p.support_size();
  const double n = static_cast<double>(support);
  double sum = 0.0;
  for (std::size_t i = 0; i < support; ++i) {
    const double inc = std::pow(static_cast<double>(i + 1) / n, beta) -
                       std::pow(static_cast<double>(i) / n, beta);
    sum += p[i] * inc;
  }
  return (beta * std::log2(n) + std::log2(sum)) / (beta - 1.0);
}

double one_to_one_optimal_length(const SortedPmf& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    // floor(log2(i+1)) computed in integer arithmetic
    std::size_t rank = i + 1;
    unsigned bits = 0;
    while (rank >>= 1) ++bits;
    sum += p[i] * static_cast<double>(bits);
  }
  return sum;
}

double bound_H_from_Lambda(double lambda, double eta) {
  if (lambda < 0.0) throw std::invalid_argument("bound_H_from_Lambda: Lambda must be >= 0");
  if (!(eta > 0.0)) throw std::invalid_argument("bound_H_from_Lambda: eta must be > 0");
  return lambda + std::log2(1.0 + lambda / (kE * eta)) + eta;
}

double eta_preset_value(EtaPreset preset, double lambda) {
  switch (preset) {
    case EtaPreset::loge:
      return kLog2E;
    case EtaPreset::sqrt_small:
      return std::sqrt(lambda * kLog2E / kE);
    case EtaPreset::optimal:
      return (std::sqrt(lambda * lambda + 4.0 * kE * lambda * kLog2E) - lambda) /
             (2.0 * kE);
  }
  throw std::invalid_argument("eta_preset_value: unknown preset");
}

double bound_H_with_preset(double lambda, EtaPreset preset) {
  const double eta = eta_preset_value(preset, lambda);
  if (eta == 0.0) return lambda;  // sqrt/optimal presets degenerate at Lambda = 0
  return bound_H_from_Lambda(lambda, eta);
}

EntropyReport make_entropy_report(const Pmf& p, const std::vector<double>& alpha_grid) {
  EntropyReport r;
  const SortedPmf sorted = sort_pmf(p);
  r.shannon = shannon_entropy(p);
  r.layered = layered_entropy(sorted);
  r.min_entropy = min_entropy(p);
  r.one_to_one_length = one_to_one_optimal_length(sorted);
  r.renyi.reserve(alpha_grid.size());
  for (double alpha : alpha_grid)
    r.renyi.push_back({alpha, renyi_entropy(p, alpha), renyi_layered_entropy(sorted, alpha)});
  return r;
}

}  // namespace lent
