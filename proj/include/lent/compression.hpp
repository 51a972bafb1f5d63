#pragma once

#include <cstdint>
#include <vector>

#include "lent/joint.hpp"
#include "lent/pmf.hpp"

namespace lent {

enum class TiePolicy { ascending_index, exhaustive_search };

// A conditional compression of X given Y: per column y, the map
// x -> rank of p_{X|Y}(x|y) among the column's entries (1-based, descending).
// All conditional compressions share the same marginal u_pmf.
struct CompressionResult {
  // rank_map[x][y] in {1..|X|}; for columns with p_Y(y)=0 the ranks default
  // to ascending index.
  std::vector<std::vector<std::size_t>> rank_map;
  Pmf u_pmf;
  TiePolicy tie_policy;
};

// Ranks x within each conditional p_{X|Y}(.|y). ascending_index breaks ties
// deterministically; exhaustive_search additionally searches all tie-break
// permutations (alphabets up to 5x4 only) for the one minimizing H(X|U),
// matching the canonical compression's tie-break rule.
CompressionResult conditional_compression(const JointPmf& j,
                                          TiePolicy policy = TiePolicy::ascending_index);

// The marginal of any conditional compression, evaluated analytically:
// p_U(i) = E_Y[ p^down_{X|Y}(i|Y) ]. Descending by construction.
SortedPmf compression_pmf(const JointPmf& j);

// Exhaustive minimum of H(U) over every U with H(X|Y,U) = 0, enumerating all
// tuples of per-column injective labelings of support atoms. Requires
// |X| <= 5 and |Y| <= 4. Independent oracle for compression_pmf.
double brute_force_min_H_U(const JointPmf& j);

}  // namespace lent
