#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lent {

// Bit-level writer. serialize() prepends a 32-bit big-endian bit count and
// pads the payload to a byte boundary; bits are packed most significant
// bit first.
class BitWriter {
 public:
  void push_bit(bool b) { bits_.push_back(b ? '1' : '0'); }

  void push_word(const std::string& word) {
    for (char c : word) {
      if (c != '0' && c != '1') throw std::invalid_argument("bitstream: word must be binary");
      bits_.push_back(c);
    }
  }

  std::size_t bit_count() const { return bits_.size(); }
  const std::string& bits() const { return bits_; }

  std::vector<std::uint8_t> serialize() const {
    const auto n = static_cast<std::uint32_t>(bits_.size());
    std::vector<std::uint8_t> out;
    out.reserve(4 + (bits_.size() + 7) / 8);
    out.push_back(static_cast<std::uint8_t>(n >> 24));
    out.push_back(static_cast<std::uint8_t>(n >> 16));
    out.push_back(static_cast<std::uint8_t>(n >> 8));
    out.push_back(static_cast<std::uint8_t>(n));
    std::uint8_t acc = 0;
    int filled = 0;
    for (char c : bits_) {
      acc = static_cast<std::uint8_t>((acc << 1) | (c == '1'));
      if (++filled == 8) {
        out.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
    if (filled > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    return out;
  }

 private:
  std::string bits_;
};

class BitReader {
 public:
  explicit BitReader(const std::vector<std::uint8_t>& data) {
    if (data.size() < 4) throw std::invalid_argument("bitstream: missing length header");
    const std::size_t n = (std::size_t(data[0]) << 24) | (std::size_t(data[1]) << 16) |
                          (std::size_t(data[2]) << 8) | std::size_t(data[3]);
    if (data.size() < 4 + (n + 7) / 8) throw std::invalid_argument("bitstream: truncated payload");
    bits_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t byte = data[4 + i / 8];
      bits_.push_back((byte >> (7 - i % 8)) & 1 ? '1' : '0');
    }
  }

  std::size_t bit_count() const { return bits_.size(); }
  const std::string& bits() const { return bits_; }

 private:
  std::string bits_;
};

}  // namespace lent
