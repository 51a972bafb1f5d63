#include "lent/encoding.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "lent/bitstream.hpp"
#include "lent/compression.hpp"
#include "lent/entropy.hpp"

namespace lent {

EncodingReport conditional_encoding_report(const JointPmf& j) {
  double ell_n = 0.0, ell_c = 0.0;
  for (std::size_t y = 0; y < j.y_size(); ++y) {
    const double py = j.y_mass(y);
    if (py <= 0.0) continue;
    const Pmf cond = j.conditional_x_given_y(y);
    ell_n += py * one_to_one_optimal_length(sort_pmf(cond));
    ell_c += py * huffman(cond).expected_length();
  }
  const double ell_u = huffman(compression_pmf(j).to_pmf()).expected_length();
  const CondEntropies ref = three_cond_entropies(j);

  constexpr double slack = 1e-9;
  const bool ok = ref.lambda_cond - 2.0 < ell_n && ell_n <= ref.lambda_cond + slack &&
                  ref.h_cond <= ell_c + slack && ell_c < ref.h_cond + 1.0 &&
                  ref.h_diff <= ell_u + slack && ell_u < ref.h_diff + 1.0;
  if (!ok) throw std::logic_error("conditional_encoding_report: length sandwich violated");
  return EncodingReport{ell_n, ell_c, ell_u, ref};
}

namespace {

std::size_t most_probable_symbol(const Pmf& p) {
  std::size_t best = 0;
  for (std::size_t s = 1; s < p.size(); ++s)
    if (p[s] > p[best]) best = s;
  return best;
}

}  // namespace

StreamDemoReport keyframe_stream_demo(const std::vector<std::size_t>& frames,
                                      const std::vector<bool>& loss, StreamMode mode,
                                      const JointPmf& transition,
                                      std::size_t keyframe_period) {
  const std::size_t n = transition.x_size();
  if (transition.y_size() != n)
    throw std::invalid_argument("stream demo: transition joint must be square");
  if (frames.empty()) throw std::invalid_argument("stream demo: no frames");
  if (loss.size() != frames.size())
    throw std::invalid_argument("stream demo: malformed loss pattern");
  if (keyframe_period == 0) throw std::invalid_argument("stream demo: period must be >= 1");
  for (std::size_t f : frames)
    if (f >= n) throw std::invalid_argument("stream demo: frame symbol out of range");

  const Pmf marginal = transition.marginal_x();
  const Codebook key_book = huffman(marginal);
  const CompressionResult ranks = conditional_compression(transition);
  const Codebook rank_book = huffman(compression_pmf(transition).to_pmf());
  std::vector<std::optional<Codebook>> cond_books(n);
  for (std::size_t prev = 0; prev < n; ++prev)
    if (transition.y_mass(prev) > 0.0)
      cond_books[prev] = huffman(transition.conditional_x_given_y(prev));

  auto is_key = [&](std::size_t t) { return t % keyframe_period == 0; };

  // encode; surviving frames only enter the transmitted stream
  std::vector<std::string> frame_words(frames.size());
  for (std::size_t t = 0; t < frames.size(); ++t) {
    if (is_key(t)) {
      if (marginal[frames[t]] <= 0.0)
        throw std::invalid_argument("stream demo: keyframe symbol impossible under model");
      frame_words[t] = key_book.word(frames[t]);
      continue;
    }
    const std::size_t prev = frames[t - 1];
    if (transition.at(frames[t], prev) <= 0.0)
      throw std::invalid_argument("stream demo: transition impossible under model");
    if (mode == StreamMode::cond_prefix)
      frame_words[t] = cond_books[prev]->word(frames[t]);
    else
      frame_words[t] = rank_book.word(ranks.rank_map[frames[t]][prev] - 1);
  }
  BitWriter writer;
  for (std::size_t t = 0; t < frames.size(); ++t)
    if (!loss[t]) writer.push_word(frame_words[t]);

  StreamDemoReport report;
  report.mode = mode;
  report.outcomes.assign(frames.size(), FrameOutcome::failed);
  report.stream_bits = writer.bit_count();
  report.stream = writer.serialize();

  // decode walk; the decoder knows which frame indices were lost (packet
  // numbering) but has no side channel for word boundaries
  const std::string& bits = writer.bits();
  const std::size_t guess = most_probable_symbol(marginal);
  std::size_t pos = 0;
  std::optional<std::size_t> context;
  bool dead = false;  // ran past the end of the stream
  for (std::size_t t = 0; t < frames.size(); ++t) {
    if (loss[t]) {
      report.outcomes[t] = FrameOutcome::lost;
      context.reset();
      continue;
    }
    if (dead) continue;  // already failed past end of stream
    if (is_key(t)) {
      const auto sym = key_book.parse(bits, pos);
      if (!sym) {
        dead = true;
        continue;
      }
      report.outcomes[t] =
          (*sym == frames[t]) ? FrameOutcome::decoded : FrameOutcome::wrong;
      context = *sym;
      continue;
    }
    if (mode == StreamMode::cond_prefix) {
      // without the true context the decoder can only pick a codebook by
      // guess, so the walk may consume the wrong number of bits
      std::size_t ctx = context.value_or(guess);
      if (!cond_books[ctx]) ctx = guess;
      if (!cond_books[ctx]) {
        dead = true;
        continue;
      }
      const auto sym = cond_books[ctx]->parse(bits, pos);
      if (!sym) {
        dead = true;
        continue;
      }
      report.outcomes[t] =
          (*sym == frames[t]) ? FrameOutcome::decoded : FrameOutcome::wrong;
      context = *sym;
    } else {
      // fixed rank book: parsing never desynchronizes
      const auto rank = rank_book.parse(bits, pos);
      if (!rank) {
        dead = true;
        continue;
      }
      if (!context) {
        report.outcomes[t] = FrameOutcome::unresolved;
        continue;
      }
      std::size_t symbol = n;
      for (std::size_t x = 0; x < n; ++x)
        if (ranks.rank_map[x][*context] == *rank + 1) {
          symbol = x;
          break;
        }
      if (symbol == n) {
        report.outcomes[t] = FrameOutcome::unresolved;
        context.reset();
        continue;
      }
      report.outcomes[t] =
          (symbol == frames[t]) ? FrameOutcome::decoded : FrameOutcome::wrong;
      context = symbol;
    }
  }

  // first keyframe strictly after the first loss
  for (std::size_t t = 0; t < frames.size(); ++t) {
    if (!loss[t]) continue;
    for (std::size_t k = t + 1; k < frames.size(); ++k) {
      if (is_key(k) && !loss[k]) {
        report.keyframe_after_loss_recovered =
            report.outcomes[k] == FrameOutcome::decoded;
        break;
      }
    }
    break;
  }
  return report;
}

}  // namespace lent
