#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lent/joint.hpp"

namespace lent {

// Information density table iota(x;y) = log2( p(x,y) / (p(x) p(y)) ) on the
// support of the joint; E[iota] = I(X;Y).
struct InfoDensityTable {
  std::vector<std::vector<double>> iota;
  std::vector<std::vector<bool>> support;
};

InfoDensityTable info_density(const JointPmf& j);

// Success probabilities of the conditionally geometric index K in the
// functional-representation construction:
//   rho(x,y) = ( E_{Y'~p_Y}[ max{2^iota(x;y), 2^iota(x;Y')} ] )^-1,
// which always satisfies (2^iota(x;y) + 1)^-1 <= rho(x,y) <= 1. Cells
// outside the support carry rho = 1.
struct GeomCoupling {
  std::vector<std::vector<double>> rho;
};

GeomCoupling rho(const JointPmf& j);

struct GeomLambda {
  double value;       // truncated sum of rho (1-rho)^{k-1} ell(k)
  double tail_bound;  // rigorous upper bound on the discarded tail
  std::size_t terms;
};

// Layered entropy of a Geometric(rho) pmf (which is nonincreasing, so its
// sorted form is itself). The series is truncated once the closed-form tail
// majorant q^N (log2(eN) + log2(e)/(N rho)) drops below tail_tol.
GeomLambda geom_layered_entropy(double rho, double tail_tol);

// The computable end of the functional-representation chain:
//   Lambda(K) = E_{X,Y}[ Lambda(Geom(rho(X,Y))) ]   (monotone linearity)
//            <= E[log2(2^iota + 1/2)] + 1  <=  I(X;Y) + log2(3).
struct BoundChain {
  double lambda_k;     // truncated value (exact weighted sum of truncations)
  double tail_bound;   // rigorous bound on the truncation deficit
  double e_term;       // E[log2(2^iota + 1/2)] + 1
  double mutual_info;  // I(X;Y)
  double i_log3;       // I(X;Y) + log2(3)
  bool pass;           // lambda_k + tail <= e_term <= i_log3 (with fp slack)
};

BoundChain bound_chain(const JointPmf& j, double tail_tol = 1e-9);

// Closed-form bounds on H(Y|S) for the strong functional representation
// lemma, as functions of I = I(X;Y):
//   eta:     I + log2(I + log2 3 + e eta) + log2(3/(e eta)) + eta
//   loge:    I + log2(I + 5.51) + 1.06          (eta = log2 e, rounded)
//   li2021:  I + log2(I + 1) + 3.732
//   li2024:  I + log2(I + 2) + 2
//   eta_opt: the eta bound minimized over eta
enum class SfrlVariant { eta, loge, li2021, li2024, eta_opt };

double sfrl_bound(double I, SfrlVariant variant, double eta = 0.0);

// Bisection for a sign change of a(I) - b(I) on [lo, hi] to 1e-6; throws
// std::invalid_argument when the difference does not change sign.
double crossing_point(const std::function<double(double)>& a,
                      const std::function<double(double)>& b, double lo, double hi);

struct CurveRow {
  double I, li2021, li2024, loge, eta_opt;
};

// The four comparison curves evaluated on a grid of I values.
std::vector<CurveRow> curve_emit(const std::vector<double>& i_grid);

}  // namespace lent
