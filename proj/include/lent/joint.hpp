#pragma once

#include <vector>

#include "lent/entropy.hpp"
#include "lent/pmf.hpp"

namespace lent {

// Joint distribution of a pair (X, Y) over finite alphabets; rows index x,
// columns index y. Entries are >= 0 and sum to 1 within kSumTolerance.
class JointPmf {
 public:
  explicit JointPmf(std::vector<std::vector<double>> rows,
                    Normalize mode = Normalize::reject);

  std::size_t x_size() const { return rows_.size(); }
  std::size_t y_size() const { return rows_.front().size(); }
  double at(std::size_t x, std::size_t y) const { return rows_[x][y]; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

  Pmf marginal_x() const;
  Pmf marginal_y() const;
  double y_mass(std::size_t y) const;

  // p_{X|Y}(.|y); throws std::domain_error when p_Y(y) = 0.
  Pmf conditional_x_given_y(std::size_t y) const;

  static JointPmf product(const Pmf& px, const Pmf& py);
  // p(x, y) = p_y(y) * x_given_y[y](x); every conditional must share x_size.
  static JointPmf from_conditionals(const Pmf& py, const std::vector<Pmf>& x_given_y);

 private:
  std::vector<std::vector<double>> rows_;
};

// H(X|Y) = sum_y p(y) H(p_{X|Y}(.|y)); columns with p_Y(y) = 0 are skipped.
double cond_shannon(const JointPmf& j);

// I(X;Y) = H(X) - H(X|Y).
double mutual_information(const JointPmf& j);

// Lambda(X|Y) = E_Y[Lambda(p_{X|Y}(.|Y))].
double cond_layered(const JointPmf& j);

// H_inf(X|Y) = E_Y[-log2 max_x p_{X|Y}(x|Y)].
double cond_min_entropy(const JointPmf& j);

struct CondEntropies {
  double lambda_cond;  // Lambda(X|Y)
  double h_cond;       // H(X|Y)
  double h_diff;       // H(X\Y), the entropy of the conditional compression
};

// The ordered triple (Lambda(X|Y), H(X|Y), H(X\Y)). Throws std::logic_error
// if the sandwich Lambda(X|Y) <= H(X|Y) <= H(X\Y) <= Lambda(X|Y) +
// log2(1 + Lambda(X|Y)/(e eta)) + eta + 1 fails for any eta preset.
CondEntropies three_cond_entropies(const JointPmf& j);

}  // namespace lent
