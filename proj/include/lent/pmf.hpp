#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lent {

// Validation policy for distributions whose entries do not sum to 1 exactly.
// `reject` throws when the sum is off by more than 1e-9; `renormalize`
// divides by the sum instead (for data that is known-good up to scaling).
enum class Normalize { reject, renormalize };

inline constexpr double kSumTolerance = 1e-9;

// Finite probability mass function. Entries are >= 0 and sum to 1 within
// kSumTolerance (exactly 1e-12 after explicit renormalization). Zero entries
// are kept: they carry no mass but still count as atoms of the alphabet.
class Pmf {
 public:
  explicit Pmf(std::vector<double> probs, Normalize mode = Normalize::reject);
  Pmf(std::vector<double> probs, std::vector<std::string> labels,
      Normalize mode = Normalize::reject);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Number of strictly positive atoms (threshold is exact zero).
  std::size_t support_size() const;

 private:
  std::vector<double> probs_;
  std::vector<std::string> labels_;
};

// A pmf sorted in descending order together with the permutation that maps
// sorted position -> original index. Ties keep ascending original index, so
// the permutation is deterministic.
class SortedPmf {
 public:
  SortedPmf(std::vector<double> probs, std::vector<std::size_t> perm);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<std::size_t>& perm() const { return perm_; }

  std::size_t support_size() const;

  // The sorted entries as a plain Pmf (labels dropped).
  Pmf to_pmf() const;

 private:
  std::vector<double> probs_;
  std::vector<std::size_t> perm_;
};

SortedPmf sort_pmf(const Pmf& p);

// Weights of the decomposition of a descending pmf into uniform blocks:
// weights[k-1] = k * (p(k) - p(k+1)), so that p = sum_k w_k * Unif({1..k}).
struct LayerDecomposition {
  std::vector<double> weights;
};

LayerDecomposition layer_decomposition(const SortedPmf& p);

Pmf uniform_pmf(std::size_t n);

}  // namespace lent
