#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lent/pmf.hpp"

namespace lent {

// A binary codebook over symbols 0..n-1. Always injective on the assigned
// symbols; prefix_free records the audit result. expected_length is taken
// under the pmf the book was built from.
class Codebook {
 public:
  Codebook(std::vector<std::string> words, std::vector<bool> assigned,
           double expected_length);

  std::size_t size() const { return words_.size(); }
  bool is_assigned(std::size_t symbol) const { return assigned_[symbol]; }
  const std::string& word(std::size_t symbol) const;
  double expected_length() const { return expected_length_; }
  bool prefix_free() const { return prefix_free_; }
  const std::vector<std::string>& words() const { return words_; }
  const std::vector<bool>& assigned() const { return assigned_; }

  // Exact-word lookup (one-to-one decoding).
  std::optional<std::size_t> symbol_of(const std::string& word) const;

  // Greedy prefix parse starting at bits[pos]; advances pos past the matched
  // word. Only meaningful for prefix-free books. Returns nullopt when no
  // assigned word matches before the bits run out.
  std::optional<std::size_t> parse(const std::string& bits, std::size_t& pos) const;

 private:
  std::vector<std::string> words_;
  std::vector<bool> assigned_;
  double expected_length_;
  bool prefix_free_;
  std::unordered_map<std::string, std::size_t> index_;
};

// True iff no word equals or prefixes another word in the list. A single
// word (even the empty one) passes trivially.
bool prefix_free_audit(const std::vector<std::string>& words);

// The i-th binary string in length-then-lexicographic order, 1-based:
// 1 -> "", 2 -> "0", 3 -> "1", 4 -> "00", ... Length is floor(log2 i).
std::string kth_binary_string(std::size_t i);

// Optimal one-to-one (non-prefix-free) code: sorted rank i gets the i-th
// binary string, so the expected length equals one_to_one_optimal_length.
Codebook enumerative_code(const SortedPmf& p);

// Huffman code over the support of p, deterministic tie-breaking (smaller
// probability first, then smaller node id; leaves get their symbol index,
// internal nodes ids beyond that in creation order; first merge partner
// takes bit 0). A single-atom support gets the empty word so that the
// sandwich H <= E|word| < H + 1 holds at H = 0.
Codebook huffman(const Pmf& p);

}  // namespace lent
