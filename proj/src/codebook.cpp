#include "lent/codebook.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace lent {

Codebook::Codebook(std::vector<std::string> words, std::vector<bool> assigned,
                   double expected_length)
    : words_(std::move(words)),
      assigned_(std::move(assigned)),
      expected_length_(expected_length) {
  if (words_.size() != assigned_.size())
    throw std::invalid_argument("codebook: words/assigned size mismatch");
  std::vector<std::string> live;
  for (std::size_t s = 0; s < words_.size(); ++s) {
    if (!assigned_[s]) continue;
    live.push_back(words_[s]);
    if (!index_.emplace(words_[s], s).second)
      throw std::invalid_argument("codebook: duplicate word breaks injectivity");
  }
  prefix_free_ = prefix_free_audit(live);
}

const std::string& Codebook::word(std::size_t symbol) const {
  if (symbol >= words_.size() || !assigned_[symbol])
    throw std::out_of_range("codebook: symbol has no word");
  return words_[symbol];
}

std::optional<std::size_t> Codebook::symbol_of(const std::string& word) const {
  const auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Codebook::parse(const std::string& bits, std::size_t& pos) const {
  std::string prefix;
  // accept the empty word first (single-atom books)
  if (auto hit = index_.find(prefix); hit != index_.end()) return hit->second;
  for (std::size_t i = pos; i < bits.size(); ++i) {
    prefix.push_back(bits[i]);
    if (auto hit = index_.find(prefix); hit != index_.end()) {
      pos = i + 1;
      return hit->second;
    }
  }
  return std::nullopt;
}

bool prefix_free_audit(const std::vector<std::string>& words) {
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = 0; b < words.size(); ++b) {
      if (a == b) continue;
      if (words[b].size() >= words[a].size() &&
          words[b].compare(0, words[a].size(), words[a]) == 0)
        return false;
    }
  return true;
}

std::string kth_binary_string(std::size_t i) {
  if (i == 0) throw std::invalid_argument("kth_binary_string: index is 1-based");
  // binary representation of i with the leading 1 removed
  std::string s;
  for (; i > 1; i >>= 1) s.push_back(i & 1 ? '1' : '0');
  std::reverse(s.begin(), s.end());
  return s;
}

Codebook enumerative_code(const SortedPmf& p) {
  const std::size_t n = p.size();
  std::vector<std::string> words(n);
  double expected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    words[i] = kth_binary_string(i + 1);
    // identical floating-point sum as one_to_one_optimal_length
    std::size_t rank = i + 1;
    unsigned bits = 0;
    while (rank >>= 1) ++bits;
    expected += p[i] * static_cast<double>(bits);
  }
  return Codebook(std::move(words), std::vector<bool>(n, true), expected);
}

Codebook huffman(const Pmf& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> support;
  for (std::size_t s = 0; s < n; ++s)
    if (p[s] > 0.0) support.push_back(s);

  std::vector<std::string> words(n);
  std::vector<bool> assigned(n, false);
  if (support.size() == 1) {
    assigned[support.front()] = true;  // empty word
    return Codebook(std::move(words), std::move(assigned), 0.0);
  }

  struct Node {
    double prob;
    std::size_t id;  // symbol index for leaves, n + creation order for merges
    int left = -1, right = -1;
    std::size_t symbol = 0;
    bool leaf = false;
  };
  std::vector<Node> nodes;
  auto cmp = [&nodes](int a, int b) {
    if (nodes[a].prob != nodes[b].prob) return nodes[a].prob > nodes[b].prob;
    return nodes[a].id > nodes[b].id;
  };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> heap(cmp);
  for (std::size_t s : support) {
    nodes.push_back({p[s], s, -1, -1, s, true});
    heap.push(static_cast<int>(nodes.size() - 1));
  }
  std::size_t next_id = n;
  while (heap.size() > 1) {
    const int a = heap.top();
    heap.pop();
    const int b = heap.top();
    heap.pop();
    nodes.push_back({nodes[a].prob + nodes[b].prob, next_id++, a, b, 0, false});
    heap.push(static_cast<int>(nodes.size() - 1));
  }
  const int root = heap.top();

  double expected = 0.0;
  std::string path;
  auto walk = [&](auto&& self, int node) -> void {
    if (nodes[node].leaf) {
      words[nodes[node].symbol] = path;
      assigned[nodes[node].symbol] = true;
      expected += nodes[node].prob * static_cast<double>(path.size());
      return;
    }
    path.push_back('0');
    self(self, nodes[node].left);
    path.back() = '1';
    self(self, nodes[node].right);
    path.pop_back();
  };
  walk(walk, root);
  return Codebook(std::move(words), std::move(assigned), expected);
}

}  // namespace lent
