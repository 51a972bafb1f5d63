#pragma once

#include "lent/joint.hpp"
#include "lent/pmf.hpp"

namespace lent {

// The channel Y | X = x ~ Unif(0, p(x)) discretized at the distinct sorted
// probability values a_1 > a_2 > ... > a_m > 0: layer j covers (a_{j+1}, a_j]
// and p(x, y = j) = (a_j - a_{j+1}) * 1{p(x) >= a_j}. Every conditional
// p_{X|Y}(.|j) is uniform, H(X|Y) = H_inf(X|Y) = Lambda(X), and the
// compression pmf of the result is p itself. X is indexed in sorted order;
// values closer than 1e-12 are merged into one layer.
JointPmf layer_channel(const SortedPmf& p);

}  // namespace lent
