#include "lent/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lent {

namespace {

void validate_and_normalize(std::vector<double>& probs, Normalize mode) {
  if (probs.empty()) throw std::invalid_argument("pmf: empty probability vector");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::invalid_argument("pmf: negative or non-finite entry");
    sum += p;
  }
  if (!std::isfinite(sum)) throw std::invalid_argument("pmf: non-finite sum");
  if (mode == Normalize::renormalize) {
    if (sum <= 0.0) throw std::invalid_argument("pmf: cannot normalize zero mass");
    for (double& p : probs) p /= sum;
  } else if (std::fabs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("pmf: entries sum to " + std::to_string(sum) +
                                ", pass Normalize::renormalize to rescale");
  }
}

}  // namespace

Pmf::Pmf(std::vector<double> probs, Normalize mode) : probs_(std::move(probs)) {
  validate_and_normalize(probs_, mode);
}

Pmf::Pmf(std::vector<double> probs, std::vector<std::string> labels, Normalize mode)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
  validate_and_normalize(probs_, mode);
  if (!labels_.empty() && labels_.size() != probs_.size())
    throw std::invalid_argument("pmf: label count does not match entry count");
}

std::size_t Pmf::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; }));
}

SortedPmf::SortedPmf(std::vector<double> probs, std::vector<std::size_t> perm)
    : probs_(std::move(probs)), perm_(std::move(perm)) {
  if (probs_.empty()) throw std::invalid_argument("sorted pmf: empty");
  if (perm_.size() != probs_.size())
    throw std::invalid_argument("sorted pmf: permutation size mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= 0.0)) throw std::invalid_argument("sorted pmf: negative entry");
    if (i + 1 < probs_.size() && probs_[i] < probs_[i + 1])
      throw std::invalid_argument("sorted pmf: entries not descending");
    sum += probs_[i];
  }
  if (std::fabs(sum - 1.0) > kSumTolerance)
    throw std::invalid_argument("sorted pmf: entries do not sum to 1");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t idx : perm_) {
    if (idx >= perm_.size() || seen[idx])
      throw std::invalid_argument("sorted pmf: permutation is not a bijection");
    seen[idx] = true;
  }
}

std::size_t SortedPmf::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; }));
}

Pmf SortedPmf::to_pmf() const { return Pmf(probs_); }

SortedPmf sort_pmf(const Pmf& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&p](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  std::vector<double> probs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) probs[i] = p[perm[i]];
  return SortedPmf(std::move(probs), std::move(perm));
}

LayerDecomposition layer_decomposition(const SortedPmf& p) {
  const std::size_t n = p.size();
  LayerDecomposition d;
  d.weights.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double next = (k < n) ? p[k] : 0.0;
    d.weights[k - 1] = static_cast<double>(k) * (p[k - 1] - next);
  }
  return d;
}

Pmf uniform_pmf(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform pmf: n must be positive");
  return Pmf(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

}  // namespace lent
