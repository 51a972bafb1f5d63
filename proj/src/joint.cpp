#include "lent/joint.hpp"

#include <cmath>
#include <stdexcept>

#include "lent/compression.hpp"

namespace lent {

JointPmf::JointPmf(std::vector<std::vector<double>> rows, Normalize mode)
    : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty())
    throw std::invalid_argument("joint pmf: empty matrix");
  const std::size_t ny = rows_.front().size();
  double total = 0.0;
  for (const auto& row : rows_) {
    if (row.size() != ny) throw std::invalid_argument("joint pmf: ragged matrix");
    for (double v : row) {
      if (!(v >= 0.0)) throw std::invalid_argument("joint pmf: negative or non-finite entry");
      total += v;
    }
  }
  if (!std::isfinite(total)) throw std::invalid_argument("joint pmf: non-finite sum");
  if (mode == Normalize::renormalize) {
    if (total <= 0.0) throw std::invalid_argument("joint pmf: cannot normalize zero mass");
    for (auto& row : rows_)
      for (double& v : row) v /= total;
  } else if (std::fabs(total - 1.0) > kSumTolerance) {
    throw std::invalid_argument("joint pmf: entries sum to " + std::to_string(total));
  }
}

Pmf JointPmf::marginal_x() const {
  std::vector<double> m(x_size(), 0.0);
  for (std::size_t x = 0; x < x_size(); ++x)
    for (double v : rows_[x]) m[x] += v;
  return Pmf(std::move(m));
}

Pmf JointPmf::marginal_y() const {
  std::vector<double> m(y_size(), 0.0);
  for (const auto& row : rows_)
    for (std::size_t y = 0; y < m.size(); ++y) m[y] += row[y];
  return Pmf(std::move(m));
}

double JointPmf::y_mass(std::size_t y) const {
  double s = 0.0;
  for (const auto& row : rows_) s += row[y];
  return s;
}

Pmf JointPmf::conditional_x_given_y(std::size_t y) const {
  const double py = y_mass(y);
  if (py <= 0.0) throw std::domain_error("joint pmf: conditioning on zero-probability y");
  std::vector<double> cond(x_size());
  for (std::size_t x = 0; x < x_size(); ++x) cond[x] = rows_[x][y] / py;
  return Pmf(std::move(cond));
}

JointPmf JointPmf::product(const Pmf& px, const Pmf& py) {
  std::vector<std::vector<double>> rows(px.size(), std::vector<double>(py.size()));
  for (std::size_t x = 0; x < px.size(); ++x)
    for (std::size_t y = 0; y < py.size(); ++y) rows[x][y] = px[x] * py[y];
  return JointPmf(std::move(rows));
}

JointPmf JointPmf::from_conditionals(const Pmf& py, const std::vector<Pmf>& x_given_y) {
  if (x_given_y.size() != py.size())
    throw std::invalid_argument("joint pmf: one conditional per y required");
  const std::size_t nx = x_given_y.front().size();
  std::vector<std::vector<double>> rows(nx, std::vector<double>(py.size(), 0.0));
  for (std::size_t y = 0; y < py.size(); ++y) {
    if (x_given_y[y].size() != nx)
      throw std::invalid_argument("joint pmf: conditionals of unequal length");
    for (std::size_t x = 0; x < nx; ++x) rows[x][y] = py[y] * x_given_y[y][x];
  }
  return JointPmf(std::move(rows));
}

double cond_shannon(const JointPmf& j) {
  double h = 0.0;
  for (std::size_t y = 0; y < j.y_size(); ++y) {
    const double py = j.y_mass(y);
    if (py <= 0.0) continue;
    for (std::size_t x = 0; x < j.x_size(); ++x) {
      const double v = j.at(x, y);
      if (v > 0.0) h -= v * std::log2(v / py);
    }
  }
  return h;
}

double mutual_information(const JointPmf& j) {
  return shannon_entropy(j.marginal_x()) - cond_shannon(j);
}

double cond_layered(const JointPmf& j) {
  double sum = 0.0;
  for (std::size_t y = 0; y < j.y_size(); ++y) {
    const double py = j.y_mass(y);
    if (py <= 0.0) continue;
    sum += py * layered_entropy(sort_pmf(j.conditional_x_given_y(y)));
  }
  return sum;
}

double cond_min_entropy(const JointPmf& j) {
  double sum = 0.0;
  for (std::size_t y = 0; y < j.y_size(); ++y) {
    const double py = j.y_mass(y);
    if (py <= 0.0) continue;
    double max = 0.0;
    for (std::size_t x = 0; x < j.x_size(); ++x) max = std::max(max, j.at(x, y));
    sum += py * (-std::log2(max / py));
  }
  return sum;
}

CondEntropies three_cond_entropies(const JointPmf& j) {
  CondEntropies t{};
  t.lambda_cond = cond_layered(j);
  t.h_cond = cond_shannon(j);
  t.h_diff = shannon_entropy(compression_pmf(j).to_pmf());
  constexpr double slack = 1e-9;
  if (!(t.lambda_cond <= t.h_cond + slack && t.h_cond <= t.h_diff + slack))
    throw std::logic_error("three_cond_entropies: ordering violated");
  for (EtaPreset preset : {EtaPreset::loge, EtaPreset::sqrt_small, EtaPreset::optimal}) {
    const double upper = bound_H_with_preset(t.lambda_cond, preset) + 1.0;
    if (!(t.h_diff <= upper + slack))
      throw std::logic_error("three_cond_entropies: logarithmic-gap bound violated");
  }
  return t;
}

}  // namespace lent
