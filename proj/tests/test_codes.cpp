#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lent/bitstream.hpp"
#include "lent/codebook.hpp"
#include "lent/encoding.hpp"
#include "lent/entropy.hpp"
#include "lent/joint.hpp"
#include "lent/pmf.hpp"
#include "lent/region.hpp"
#include "lent/rng.hpp"

using namespace lent;

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

JointPmf example_joint() { return JointPmf({{0.45, 0.3}, {0.05, 0.2}}); }

// x = current frame, y = previous frame; the per-context Huffman books are
// exactly the ones from the conditional-coding example: context 0 has 1-bit
// words, context 1 has words {0, 10, 11}.
JointPmf paper_markov_model() {
  return JointPmf({{0.25, 0.25, 0.0},
                   {0.25, 0.125, 0.0},
                   {0.0, 0.125, 0.0}},
                  Normalize::reject);
}

}  // namespace

TEST_CASE("bitstream round trip with big-endian bit-count header") {
  BitWriter w;
  w.push_word("1011001");
  w.push_bit(true);
  w.push_word("0001");
  const std::vector<std::uint8_t> data = w.serialize();
  CHECK(data.size() == 4 + 2);
  CHECK(data[0] == 0);
  CHECK(data[3] == 12);  // 12 bits, big-endian count
  const BitReader r(data);
  CHECK(r.bit_count() == 12);
  CHECK(r.bits() == "101100110001");
  CHECK_THROWS_AS(BitReader(std::vector<std::uint8_t>{0, 0, 0, 9, 0xFF}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BitWriter().push_word("012"), std::invalid_argument);
}

TEST_CASE("binary string enumeration") {
  CHECK(kth_binary_string(1) == "");
  CHECK(kth_binary_string(2) == "0");
  CHECK(kth_binary_string(3) == "1");
  CHECK(kth_binary_string(4) == "00");
  CHECK(kth_binary_string(5) == "01");
  CHECK(kth_binary_string(6) == "10");
  CHECK(kth_binary_string(7) == "11");
  CHECK(kth_binary_string(8) == "000");
  CHECK_THROWS_AS(kth_binary_string(0), std::invalid_argument);
  for (std::size_t i = 1; i <= 64; ++i) {
    std::size_t rank = i;
    unsigned bits = 0;
    while (rank >>= 1) ++bits;
    CHECK(kth_binary_string(i).size() == bits);
  }
}

TEST_CASE("enumerative code matches the one-to-one optimum") {
  const SortedPmf u4 = sort_pmf(uniform_pmf(4));
  const Codebook c = enumerative_code(u4);
  CHECK(c.word(0) == "");
  CHECK(c.word(1) == "0");
  CHECK(c.word(2) == "1");
  CHECK(c.word(3) == "00");
  CHECK(c.expected_length() == one_to_one_optimal_length(u4));  // same fp sum
  CHECK_FALSE(c.prefix_free());

  const SortedPmf p = sort_pmf(Pmf({0.5, 0.25, 0.25}));
  CHECK(close(enumerative_code(p).expected_length(), 0.5, 1e-12));

  SplitMix64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const SortedPmf q = sort_pmf(random_pmf(rng, 1 + i % 12));
    const Codebook book = enumerative_code(q);
    CHECK(book.expected_length() == one_to_one_optimal_length(q));
    // one-to-one decode inverts encode on every symbol
    for (std::size_t s = 0; s < q.size(); ++s) {
      const auto back = book.symbol_of(book.word(s));
      REQUIRE(back.has_value());
      CHECK(*back == s);
    }
  }
}

TEST_CASE("huffman codes are optimal prefix-free codes") {
  const Codebook u2 = huffman(uniform_pmf(2));
  CHECK(u2.word(0).size() == 1);
  CHECK(u2.word(1).size() == 1);
  CHECK(close(u2.expected_length(), 1.0, 1e-12));
  CHECK(u2.prefix_free());

  CHECK(close(huffman(uniform_pmf(4)).expected_length(), 2.0, 1e-12));
  CHECK(close(huffman(Pmf({0.5, 0.25, 0.25})).expected_length(), 1.5, 1e-12));

  // deterministic words for the dyadic example (ties resolved by node id)
  const Codebook dy = huffman(Pmf({0.5, 0.25, 0.25}));
  CHECK(dy.word(0) == "0");
  CHECK(dy.word(1) == "10");
  CHECK(dy.word(2) == "11");

  // single-atom support gets the empty word, keeping H <= E < H + 1 at H = 0
  const Codebook one = huffman(Pmf({1.0, 0.0}));
  CHECK(one.word(0) == "");
  CHECK_FALSE(one.is_assigned(1));
  CHECK(one.expected_length() == 0.0);
  CHECK(one.prefix_free());

  SplitMix64 rng(5);
  for (int i = 0; i < 150; ++i) {
    const Pmf p = random_pmf(rng, 2 + i % 11);
    const Codebook book = huffman(p);
    CHECK(book.prefix_free());
    const double h = shannon_entropy(p);
    CHECK(h <= book.expected_length() + 1e-9);
    CHECK(book.expected_length() < h + 1.0);
    // stream decode inverts a full encode pass
    BitWriter w;
    std::vector<std::size_t> symbols;
    for (std::size_t s = 0; s < p.size(); ++s)
      if (book.is_assigned(s)) {
        symbols.push_back(s);
        w.push_word(book.word(s));
      }
    std::size_t pos = 0;
    for (std::size_t s : symbols) {
      const auto sym = book.parse(w.bits(), pos);
      REQUIRE(sym.has_value());
      CHECK(*sym == s);
    }
    CHECK(pos == w.bit_count());
  }
}

TEST_CASE("prefix audit flags the conditional union codebook") {
  // f(1,1)=0, f(2,1)=1, f(1,2)=0, f(2,2)=10, f(3,2)=11
  CHECK_FALSE(prefix_free_audit({"0", "1", "0", "10", "11"}));
  CHECK(prefix_free_audit({"0", "10", "11"}));
  CHECK(prefix_free_audit({""}));
  CHECK_FALSE(prefix_free_audit({"", "0"}));

  // the per-context huffman books of the example model reproduce it
  const JointPmf m = paper_markov_model();
  const Codebook b0 = huffman(m.conditional_x_given_y(0));
  const Codebook b1 = huffman(m.conditional_x_given_y(1));
  CHECK(b0.word(0) == "0");
  CHECK(b0.word(1) == "1");
  CHECK(b1.word(0) == "0");
  CHECK(b1.word(1) == "10");
  CHECK(b1.word(2) == "11");
  std::vector<std::string> unioned{b0.word(0), b0.word(1), b1.word(0), b1.word(1),
                                   b1.word(2)};
  CHECK_FALSE(prefix_free_audit(unioned));
}

TEST_CASE("conditional encoding report") {
  const EncodingReport r = conditional_encoding_report(example_joint());
  CHECK(close(r.ell_n, 0.25, 1e-12));
  CHECK(close(r.ell_c, 1.0, 1e-12));
  CHECK(close(r.ell_u, 1.0, 1e-12));
  CHECK(close(r.ref.lambda_cond, 0.5, 1e-12));

  std::vector<std::vector<double>> ident(2, std::vector<double>(2, 0.0));
  ident[0][0] = ident[1][1] = 0.5;
  const EncodingReport id = conditional_encoding_report(JointPmf(ident));
  CHECK(id.ell_n == 0.0);
  CHECK(id.ell_c == 0.0);
  CHECK(id.ell_u == 0.0);

  const EncodingReport ind =
      conditional_encoding_report(JointPmf::product(uniform_pmf(4), uniform_pmf(2)));
  CHECK(close(ind.ell_n, 1.0, 1e-12));
  CHECK(close(ind.ell_c, 2.0, 1e-12));
  CHECK(close(ind.ell_u, 2.0, 1e-12));

  SplitMix64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const JointPmf j = random_joint(rng, 2 + i % 7, 2 + (i / 7) % 7);
    const EncodingReport rr = conditional_encoding_report(j);
    CHECK(rr.ref.lambda_cond - 2.0 < rr.ell_n);
    CHECK(rr.ell_n <= rr.ref.lambda_cond + 1e-9);
    CHECK(rr.ref.h_cond <= rr.ell_c + 1e-9);
    CHECK(rr.ell_c < rr.ref.h_cond + 1.0);
    CHECK(rr.ref.h_diff <= rr.ell_u + 1e-9);
    CHECK(rr.ell_u < rr.ref.h_diff + 1.0);
  }
}

TEST_CASE("keyframe stream demo: no loss decodes everywhere") {
  const JointPmf m = paper_markov_model();
  // extend to a square 3x3 chain: state 2 can be followed by anything drawn
  // from the same conditional as state 1
  const JointPmf chain({{0.2, 0.2, 0.05},
                        {0.2, 0.1, 0.05},
                        {0.0, 0.1, 0.1}});
  const std::vector<std::size_t> frames{0, 1, 2, 1, 0, 0, 1, 2};
  const std::vector<bool> no_loss(frames.size(), false);
  for (StreamMode mode : {StreamMode::cond_prefix, StreamMode::uncond_prefix}) {
    const StreamDemoReport rep = keyframe_stream_demo(frames, no_loss, mode, chain, 4);
    for (FrameOutcome o : rep.outcomes) CHECK(o == FrameOutcome::decoded);
    CHECK(rep.keyframe_after_loss_recovered);
    CHECK(rep.stream_bits > 0);
    const BitReader back(rep.stream);
    CHECK(back.bit_count() == rep.stream_bits);
  }
  CHECK_THROWS_AS(keyframe_stream_demo(frames, std::vector<bool>(3, false),
                                       StreamMode::cond_prefix, chain, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(keyframe_stream_demo(frames, no_loss, StreamMode::cond_prefix, m, 4),
                  std::invalid_argument);  // non-square model
}

TEST_CASE("keyframe stream demo: loss before a keyframe") {
  const JointPmf chain({{0.2, 0.2, 0.05},
                        {0.2, 0.1, 0.05},
                        {0.0, 0.1, 0.1}});
  const std::vector<std::size_t> frames{0, 1, 2, 1, 0, 0, 1, 2};
  std::vector<bool> loss(frames.size(), false);
  loss[1] = true;  // a conditional frame right after the first keyframe

  const StreamDemoReport unc =
      keyframe_stream_demo(frames, loss, StreamMode::uncond_prefix, chain, 4);
  CHECK(unc.outcomes[1] == FrameOutcome::lost);
  // ranks still parse but cannot be resolved without a context
  CHECK(unc.outcomes[2] == FrameOutcome::unresolved);
  CHECK(unc.outcomes[3] == FrameOutcome::unresolved);
  CHECK(unc.outcomes[4] == FrameOutcome::decoded);  // the keyframe must decode
  CHECK(unc.keyframe_after_loss_recovered);
  CHECK(unc.outcomes[5] == FrameOutcome::decoded);
  CHECK(unc.outcomes[6] == FrameOutcome::decoded);
  CHECK(unc.outcomes[7] == FrameOutcome::decoded);

  const StreamDemoReport con =
      keyframe_stream_demo(frames, loss, StreamMode::cond_prefix, chain, 4);
  CHECK(con.outcomes[1] == FrameOutcome::lost);
  // the walk may or may not resynchronize; the report records what happened
  bool damage = false;
  for (std::size_t t = 2; t < frames.size(); ++t)
    damage = damage || con.outcomes[t] != FrameOutcome::decoded;
  CHECK(damage);
}
