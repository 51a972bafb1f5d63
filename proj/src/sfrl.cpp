#include "lent/sfrl.hpp"

#include <cmath>
#include <stdexcept>

#include "lent/entropy.hpp"

namespace lent {

namespace {

constexpr double kLog2Three = 1.584962500721156;  // log2(3)
constexpr std::size_t kMaxGeomTerms = std::size_t{1} << 26;

// 2^iota without going through logs; 0 off the support.
std::vector<std::vector<double>> density_ratio(const JointPmf& j, const Pmf& px,
                                               const Pmf& py) {
  std::vector<std::vector<double>> r(j.x_size(), std::vector<double>(j.y_size(), 0.0));
  for (std::size_t x = 0; x < j.x_size(); ++x)
    for (std::size_t y = 0; y < j.y_size(); ++y)
      if (j.at(x, y) > 0.0) r[x][y] = j.at(x, y) / (px[x] * py[y]);
  return r;
}

// ell_increment with values cached across all geometric sums of one call.
double ell_cached(std::vector<double>& table, std::size_t k) {
  while (table.size() < k) table.push_back(ell_increment(table.size() + 1));
  return table[k - 1];
}

GeomLambda geom_lambda_impl(double rho_value, double tail_tol,
                            std::vector<double>& ell_table) {
  if (!(rho_value > 0.0) || rho_value > 1.0)
    throw std::invalid_argument("geom_layered_entropy: rho must be in (0, 1]");
  if (!(tail_tol > 0.0))
    throw std::invalid_argument("geom_layered_entropy: tail_tol must be positive");
  const double q = 1.0 - rho_value;
  double value = 0.0;
  double weight = rho_value;  // rho q^{k-1}
  double q_pow = 1.0;         // q^k
  for (std::size_t k = 1; k <= kMaxGeomTerms; ++k) {
    value += weight * ell_cached(ell_table, k);
    weight *= q;
    q_pow *= q;
    // tail_k = sum_{m>k} rho q^{m-1} ell(m) <= q^k (log2(e k) + log2(e)/(k rho)),
    // from ell(m) <= log2(e m) and the tangent of log2(e t) at t = k.
    const double nd = static_cast<double>(k);
    const double majorant =
        q_pow * (std::log2(kE * nd) + kLog2E / (nd * rho_value));
    if (majorant < tail_tol || weight == 0.0)
      return GeomLambda{value, majorant, k};
  }
  throw std::runtime_error("geom_layered_entropy: tail tolerance unreachable");
}

double eta_bound(double I, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("sfrl_bound: eta must be > 0");
  return I + std::log2(I + kLog2Three + kE * eta) + std::log2(3.0 / (kE * eta)) + eta;
}

}  // namespace

InfoDensityTable info_density(const JointPmf& j) {
  const Pmf px = j.marginal_x();
  const Pmf py = j.marginal_y();
  InfoDensityTable t;
  t.iota.assign(j.x_size(), std::vector<double>(j.y_size(), 0.0));
  t.support.assign(j.x_size(), std::vector<bool>(j.y_size(), false));
  for (std::size_t x = 0; x < j.x_size(); ++x)
    for (std::size_t y = 0; y < j.y_size(); ++y)
      if (j.at(x, y) > 0.0) {
        t.iota[x][y] = std::log2(j.at(x, y)) - std::log2(px[x]) - std::log2(py[y]);
        t.support[x][y] = true;
      }
  return t;
}

GeomCoupling rho(const JointPmf& j) {
  const Pmf px = j.marginal_x();
  const Pmf py = j.marginal_y();
  const auto ratio = density_ratio(j, px, py);
  GeomCoupling g;
  g.rho.assign(j.x_size(), std::vector<double>(j.y_size(), 1.0));
  for (std::size_t x = 0; x < j.x_size(); ++x) {
    if (px[x] <= 0.0) continue;
    for (std::size_t y = 0; y < j.y_size(); ++y) {
      if (j.at(x, y) <= 0.0) continue;
      double expectation = 0.0;
      for (std::size_t yp = 0; yp < j.y_size(); ++yp)
        expectation += py[yp] * std::max(ratio[x][y], ratio[x][yp]);
      // E >= E[2^iota(x,Y')] = 1, so rho <= 1 up to rounding
      g.rho[x][y] = std::min(1.0, 1.0 / expectation);
    }
  }
  return g;
}

GeomLambda geom_layered_entropy(double rho_value, double tail_tol) {
  std::vector<double> ell_table;
  return geom_lambda_impl(rho_value, tail_tol, ell_table);
}

BoundChain bound_chain(const JointPmf& j, double tail_tol) {
  const Pmf px = j.marginal_x();
  const Pmf py = j.marginal_y();
  const auto ratio = density_ratio(j, px, py);
  const GeomCoupling g = rho(j);

  std::vector<double> ell_table;
  BoundChain chain{};
  for (std::size_t x = 0; x < j.x_size(); ++x)
    for (std::size_t y = 0; y < j.y_size(); ++y) {
      const double mass = j.at(x, y);
      if (mass <= 0.0) continue;
      const GeomLambda gl = geom_lambda_impl(g.rho[x][y], tail_tol, ell_table);
      chain.lambda_k += mass * gl.value;
      chain.tail_bound += mass * gl.tail_bound;
      chain.e_term += mass * std::log2(ratio[x][y] + 0.5);
    }
  chain.e_term += 1.0;
  chain.mutual_info = mutual_information(j);
  chain.i_log3 = chain.mutual_info + kLog2Three;
  chain.pass = chain.lambda_k + chain.tail_bound <= chain.e_term + 1e-12 &&
               chain.e_term <= chain.i_log3 + 1e-9;
  return chain;
}

double sfrl_bound(double I, SfrlVariant variant, double eta) {
  if (I < 0.0) throw std::invalid_argument("sfrl_bound: I must be >= 0");
  switch (variant) {
    case SfrlVariant::eta:
      return eta_bound(I, eta);
    case SfrlVariant::loge:
      return I + std::log2(I + 5.51) + 1.06;
    case SfrlVariant::li2021:
      return I + std::log2(I + 1.0) + 3.732;
    case SfrlVariant::li2024:
      return I + std::log2(I + 2.0) + 2.0;
    case SfrlVariant::eta_opt: {
      const double lambda = I + kLog2Three;
      const double eta_star =
          (std::sqrt(lambda * lambda + 4.0 * kE * lambda * kLog2E) - lambda) /
          (2.0 * kE);
      return eta_bound(I, eta_star);
    }
  }
  throw std::invalid_argument("sfrl_bound: unknown variant");
}

double crossing_point(const std::function<double(double)>& a,
                      const std::function<double(double)>& b, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("crossing_point: empty bracket");
  double flo = a(lo) - b(lo);
  const double fhi = a(hi) - b(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw std::invalid_argument("crossing_point: no sign change on bracket");
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = a(mid) - b(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<CurveRow> curve_emit(const std::vector<double>& i_grid) {
  std::vector<CurveRow> rows;
  rows.reserve(i_grid.size());
  for (double I : i_grid) {
    if (I < 0.0) throw std::invalid_argument("curve_emit: grid values must be >= 0");
    rows.push_back({I, sfrl_bound(I, SfrlVariant::li2021), sfrl_bound(I, SfrlVariant::li2024),
                    sfrl_bound(I, SfrlVariant::loge), sfrl_bound(I, SfrlVariant::eta_opt)});
  }
  return rows;
}

}  // namespace lent
