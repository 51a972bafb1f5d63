#pragma once

#include <cstdint>
#include <vector>

#include "lent/codebook.hpp"
#include "lent/joint.hpp"

namespace lent {

// Optimal expected lengths of the three one-shot conditional encodings of X
// given side information Y, next to the three conditional entropies:
//   non-prefix-free:          Lambda(X|Y) - 2 < ell_n <= Lambda(X|Y)
//   conditionally prefix-free:     H(X|Y) <= ell_c < H(X|Y) + 1
//   unconditionally prefix-free:   H(X\Y) <= ell_u < H(X\Y) + 1
struct EncodingReport {
  double ell_n;
  double ell_c;
  double ell_u;
  CondEntropies ref;
};

// Per-y enumerative and Huffman codes plus Huffman on the compression pmf;
// throws std::logic_error if any of the three sandwiches fails.
EncodingReport conditional_encoding_report(const JointPmf& j);

enum class StreamMode { cond_prefix, uncond_prefix };

enum class FrameOutcome {
  decoded,     // parsed and equal to the true frame
  lost,        // bits dropped in transit
  unresolved,  // rank parsed in sync but the conditioning context is unknown
  wrong,       // parsed to a different symbol (desynchronization damage)
  failed       // ran out of bits while parsing
};

struct StreamDemoReport {
  StreamMode mode;
  std::vector<FrameOutcome> outcomes;
  std::size_t stream_bits = 0;
  std::vector<std::uint8_t> stream;  // serialized surviving bitstream
  bool keyframe_after_loss_recovered = true;
};

// Toy stream of symbol-valued frames from a first-order Markov model
// (transition joint: x = current frame, y = previous frame; alphabets must
// match). Frames at multiples of keyframe_period are coded with a fixed
// Huffman book on the frame marginal; the others conditionally on the
// previous frame (cond_prefix: per-context Huffman books; uncond_prefix: a
// fixed Huffman book on the conditional-compression ranks). loss marks
// frames whose bits are dropped; the decoder knows which frames are missing
// but not where the surviving words end, so in cond_prefix mode it may lose
// word synchronization and corrupt everything up to and including the next
// keyframe, while in uncond_prefix mode keyframes always decode.
StreamDemoReport keyframe_stream_demo(const std::vector<std::size_t>& frames,
                                      const std::vector<bool>& loss, StreamMode mode,
                                      const JointPmf& transition,
                                      std::size_t keyframe_period);

}  // namespace lent
