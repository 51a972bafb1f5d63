#include "lent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "lent/compression.hpp"
#include "lent/coupling.hpp"
#include "lent/encoding.hpp"
#include "lent/entropy.hpp"
#include "lent/joint.hpp"
#include "lent/layer_channel.hpp"
#include "lent/region.hpp"
#include "lent/rng.hpp"
#include "lent/sfrl.hpp"

namespace lent {

namespace {

struct Checker {
  SuiteReport& report;
  void expect(bool ok, const std::string& label) {
    ++report.cases;
    if (!ok) report.failures.push_back(label);
  }
};

double eq_tol_of(const VerifyConfig& cfg) { return std::min(cfg.tol, 1e-12); }

std::string idx(const char* what, std::size_t i) {
  return std::string(what) + " #" + std::to_string(i);
}

// deterministic size sweeps used everywhere below
std::size_t pmf_size(std::size_t i) { return 2 + i % 11; }          // 2..12
std::size_t joint_nx(std::size_t i) { return 2 + i % 7; }           // 2..8
std::size_t joint_ny(std::size_t i) { return 2 + (i / 7) % 7; }     // 2..8

void suite_core(const VerifyConfig& cfg, SuiteReport& rpt) {
  Checker c{rpt};
  const double tol = cfg.tol;
  const double eq = eq_tol_of(cfg);

  for (std::size_t k = 1; k <= 64; ++k) {
    const double lam = layered_entropy(sort_pmf(uniform_pmf(k)));
    c.expect(std::fabs(lam - std::log2(double(k))) <= eq, idx("core/uniform-lambda k", k));
  }

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed, i));
    const Pmf p = random_pmf(rng, pmf_size(i));
    const SortedPmf s = sort_pmf(p);
    const double lam = layered_entropy(s);
    const double h = shannon_entropy(p);
    const double hinf = min_entropy(p);

    c.expect(hinf <= lam + tol && lam <= h + tol, idx("core/sandwich", i));
    c.expect(std::fabs(lam - layered_entropy_by_layers(s)) <= eq,
             idx("core/layer-oracle", i));
    const LayerDecomposition ld = layer_decomposition(s);
    double wsum = 0.0, wlam = 0.0;
    for (std::size_t k = 1; k <= s.size(); ++k) {
      wsum += ld.weights[k - 1];
      wlam += ld.weights[k - 1] * std::log2(double(k));
    }
    c.expect(std::fabs(wsum - 1.0) <= eq && std::fabs(wlam - lam) <= eq,
             idx("core/decomposition", i));

    for (EtaPreset preset : {EtaPreset::loge, EtaPreset::sqrt_small, EtaPreset::optimal})
      c.expect(h <= bound_H_with_preset(lam, preset) + tol, idx("core/prop3", i));

    // Schur concavity under a Robin-Hood transfer
    std::vector<double> q = p.probs();
    std::size_t a = rng.index(q.size()), b = rng.index(q.size());
    if (q[a] < q[b]) std::swap(a, b);
    const double delta = 0.5 * rng.uniform01() * (q[a] - q[b]);
    q[a] -= delta;
    q[b] += delta;
    c.expect(lam <= layered_entropy(sort_pmf(Pmf(q))) + tol, idx("core/schur", i));

    // Renyi grid: nonincreasing in alpha and below H_alpha
    double prev = kInfinity;
    for (double alpha : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, kInfinity}) {
      const double la = renyi_layered_entropy(s, alpha);
      c.expect(la <= renyi_entropy(p, alpha) + tol && la <= prev + tol,
               idx("core/renyi", i));
      prev = la;
    }

    // Lambda_1/2 mean bound in the descending indexing
    double mean = 0.0;
    for (std::size_t x = 0; x < s.size(); ++x) mean += s[x] * double(x + 1);
    c.expect(renyi_layered_entropy(s, 0.5) <= std::log2(2.0 * mean - 1.0) + tol,
             idx("core/lambda-half", i));
  }

  for (std::size_t i = 0; i < cfg.trials / 2; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed ^ 0x51u, i));
    const bool make_uniform = (i % 2 == 0);
    const Pmf px = make_uniform ? uniform_pmf(2 + i % 4) : random_pmf(rng, 2 + i % 4);
    const Pmf py = random_pmf(rng, 2 + (i / 4) % 4);
    const JointPmf j = JointPmf::product(px, py);
    std::vector<double> flat;
    for (const auto& row : j.rows()) flat.insert(flat.end(), row.begin(), row.end());
    const double joint_lam = layered_entropy(sort_pmf(Pmf(flat)));
    const double split = layered_entropy(sort_pmf(px)) + layered_entropy(sort_pmf(py));
    c.expect(joint_lam >= split - tol, idx("core/superadditive", i));
    if (make_uniform) c.expect(std::fabs(joint_lam - split) <= tol, idx("core/super-eq", i));

    const double bounded = layered_entropy(sort_pmf(j.marginal_x())) +
                           std::log2(double(j.y_size()));
    c.expect(joint_lam <= bounded + tol, idx("core/bounded-increase", i));
  }
}

void suite_channels(const VerifyConfig& cfg, SuiteReport& rpt) {
  Checker c{rpt};
  const double tol = cfg.tol;
  const double eq = eq_tol_of(cfg);

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed, i));
    const JointPmf j = random_joint(rng, joint_nx(i), joint_ny(i));
    const double lam_cond = cond_layered(j);
    const SortedPmf u = compression_pmf(j);
    c.expect(std::fabs(lam_cond - layered_entropy(u)) <= tol, idx("channels/conditioning", i));

    const double hc = cond_shannon(j);
    const double hd = shannon_entropy(u.to_pmf());
    c.expect(hc <= hd + tol, idx("channels/hc-le-hd", i));
    for (EtaPreset preset : {EtaPreset::loge, EtaPreset::sqrt_small})
      c.expect(hd <= bound_H_with_preset(hc, preset) + tol, idx("channels/theorem2", i));

    const CondEntropies t = three_cond_entropies(j);
    c.expect(t.lambda_cond <= t.h_cond + tol, idx("channels/triple", i));
  }

  const std::size_t oracle_n = std::min<std::size_t>(cfg.trials, 50);
  for (std::size_t i = 0; i < oracle_n; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed ^ 0x52u, i));
    const JointPmf j = random_joint(rng, 2 + i % 4, 2 + (i / 4) % 3);
    c.expect(std::fabs(brute_force_min_H_U(j) -
                       shannon_entropy(compression_pmf(j).to_pmf())) <= tol,
             idx("channels/prop5-oracle", i));
  }

  for (std::size_t i = 0; i < cfg.trials / 2; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed ^ 0x53u, i));
    // descending conditional rows: monotone linearity forces equality
    const std::size_t nx = 2 + i % 6, ny = 2 + (i / 6) % 4;
    const Pmf py = random_pmf(rng, ny);
    std::vector<Pmf> conds;
    for (std::size_t y = 0; y < ny; ++y) {
      std::vector<double> row = rng.dirichlet(nx);
      std::sort(row.begin(), row.end(), std::greater<>());
      conds.emplace_back(std::move(row));
    }
    const JointPmf j = JointPmf::from_conditionals(py, conds);
    c.expect(std::fabs(cond_layered(j) - layered_entropy(sort_pmf(j.marginal_x()))) <= tol,
             idx("channels/monotone-linearity", i));

    // layer channel attains H(X|Y) = Lambda(X) with fixed-point compression
    const SortedPmf p = sort_pmf(random_pmf(rng, pmf_size(i)));
    const JointPmf lc = layer_channel(p);
    c.expect(std::fabs(cond_shannon(lc) - layered_entropy(p)) <= eq,
             idx("channels/theorem1-attain", i));
    const SortedPmf back = compression_pmf(lc);
    bool fixed = true;
    for (std::size_t k = 0; k < p.size(); ++k)
      fixed = fixed && std::fabs(back[k] - p[k]) <= eq;
    c.expect(fixed, idx("channels/theorem1-fixed-point", i));

    // converse: every sampled channel keeping H(X\Y) = H(X) has
    // H(X|Y) >= Lambda(X)
    const RegionSample reg = region_sample(p.to_pmf(), 10, sub_seed(cfg.seed ^ 0x54u, i));
    const double h = shannon_entropy(p.to_pmf());
    const double lam = layered_entropy(p);
    for (const auto& pt : reg.points) {
      c.expect(pt.h_cond <= pt.h_diff + tol, idx("channels/region-order", i));
      if (std::fabs(pt.h_diff - h) < tol)
        c.expect(pt.h_cond >= lam - tol, idx("channels/theorem1-converse", i));
    }
  }
}

void suite_envelopes(const VerifyConfig& cfg, SuiteReport& rpt) {
  Checker c{rpt};
  const double tol = cfg.tol;
  const double eq = eq_tol_of(cfg);

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed, i));
    const SortedPmf p = sort_pmf(random_pmf(rng, pmf_size(i)));
    const double lam = layered_entropy(p);

    const Coupling k = lp_coupling_construct(p);
    c.expect(k.feasibility_residual() <= 1e-12, idx("envelopes/feasible", i));
    c.expect(std::fabs(k.objective() - lam) <= eq, idx("envelopes/optimal", i));
    const auto xm = k.x_marginal();
    bool marg = true;
    for (std::size_t x = 0; x < p.size(); ++x)
      marg = marg && std::fabs(xm[x] - p[x]) <= eq;
    c.expect(marg, idx("envelopes/x-marginal", i));

    const Coupling moved = perturb_coupling(k, rng, 6);
    c.expect(moved.feasibility_residual() <= 1e-12 && moved.objective() <= lam + tol,
             idx("envelopes/weak-duality", i));

    c.expect(layer_fixed_point_check(p, std::max(eq, 1e-15)), idx("envelopes/fixed-point", i));
  }

  const std::size_t sweep = std::max<std::size_t>(cfg.trials / 20, 1);
  for (std::size_t i = 0; i < sweep; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed ^ 0x55u, i));
    const SortedPmf p = sort_pmf(random_pmf(rng, 2 + i % 6));
    c.expect(lp_objective_upper_check(p, 20, sub_seed(cfg.seed ^ 0x56u, i), tol),
             idx("envelopes/minent-envelope", i));
    c.expect(uniform_conditional_envelope_check(p, 20, sub_seed(cfg.seed ^ 0x57u, i), tol),
             idx("envelopes/uniform-envelope", i));
    c.expect(std::fabs(cond_min_entropy(layer_channel(p)) - layered_entropy(p)) <= eq,
             idx("envelopes/minent-attained", i));
  }
}

void suite_codes(const VerifyConfig& cfg, SuiteReport& rpt) {
  Checker c{rpt};
  const double tol = cfg.tol;

  c.expect(!prefix_free_audit({"0", "1", "0", "10", "11"}), "codes/union-audit");

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed, i));
    const SortedPmf p = sort_pmf(random_pmf(rng, 1 + i % 12));
    const double lam = layered_entropy(p);
    const Codebook enumer = enumerative_code(p);
    c.expect(enumer.expected_length() == one_to_one_optimal_length(p),
             idx("codes/enumerative-exact", i));
    c.expect(lam - 2.0 < enumer.expected_length() &&
                 enumer.expected_length() <= lam + eq_tol_of(cfg),
             idx("codes/prop4", i));
    bool roundtrip = true;
    for (std::size_t s = 0; s < p.size(); ++s) {
      const auto back = enumer.symbol_of(enumer.word(s));
      roundtrip = roundtrip && back.has_value() && *back == s;
    }
    c.expect(roundtrip, idx("codes/enumerative-roundtrip", i));

    const Pmf q = random_pmf(rng, 2 + i % 11);
    const Codebook huff = huffman(q);
    const double h = shannon_entropy(q);
    c.expect(huff.prefix_free(), idx("codes/huffman-prefix", i));
    c.expect(h <= huff.expected_length() + tol && huff.expected_length() < h + 1.0,
             idx("codes/huffman-length", i));
    std::string bits;
    std::vector<std::size_t> symbols;
    for (std::size_t s = 0; s < q.size(); ++s)
      if (huff.is_assigned(s)) {
        symbols.push_back(s);
        bits += huff.word(s);
      }
    std::size_t pos = 0;
    bool stream_ok = true;
    for (std::size_t s : symbols) {
      const auto sym = huff.parse(bits, pos);
      stream_ok = stream_ok && sym.has_value() && *sym == s;
    }
    c.expect(stream_ok && pos == bits.size(), idx("codes/huffman-roundtrip", i));
  }

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed ^ 0x58u, i));
    const JointPmf j = random_joint(rng, joint_nx(i), joint_ny(i));
    bool ok = true;
    try {
      const EncodingReport r = conditional_encoding_report(j);
      ok = r.ref.lambda_cond - 2.0 < r.ell_n && r.ell_n <= r.ref.lambda_cond + tol &&
           r.ref.h_cond <= r.ell_c + tol && r.ell_c < r.ref.h_cond + 1.0 &&
           r.ref.h_diff <= r.ell_u + tol && r.ell_u < r.ref.h_diff + 1.0;
    } catch (const std::logic_error&) {
      ok = false;
    }
    c.expect(ok, idx("codes/three-sandwiches", i));
  }
}

void suite_sfrl(const VerifyConfig& cfg, SuiteReport& rpt) {
  Checker c{rpt};
  const double tol = cfg.tol;

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed, i));
    const JointPmf j = random_joint(rng, joint_nx(i), joint_ny(i));
    const BoundChain chain = bound_chain(j, cfg.tail_tol);
    c.expect(chain.lambda_k + chain.tail_bound <= chain.e_term + 1e-12,
             idx("sfrl/chain-lambda", i));
    c.expect(chain.e_term <= chain.i_log3 + tol, idx("sfrl/chain-eterm", i));
    c.expect(chain.pass, idx("sfrl/chain-pass", i));

    const GeomCoupling g = rho(j);
    const InfoDensityTable t = info_density(j);
    bool rho_ok = true;
    double mean_iota = 0.0;
    for (std::size_t x = 0; x < j.x_size(); ++x)
      for (std::size_t y = 0; y < j.y_size(); ++y) {
        if (!t.support[x][y]) continue;
        rho_ok = rho_ok && g.rho[x][y] > 0.0 && g.rho[x][y] <= 1.0 &&
                 g.rho[x][y] * (std::exp2(t.iota[x][y]) + 1.0) >= 1.0 - tol;
        mean_iota += j.at(x, y) * t.iota[x][y];
      }
    c.expect(rho_ok, idx("sfrl/rho-bound", i));
    c.expect(std::fabs(mean_iota - chain.mutual_info) <= tol, idx("sfrl/iota-mean", i));

    const double lam_upper = chain.lambda_k + chain.tail_bound;
    for (EtaPreset preset : {EtaPreset::loge, EtaPreset::sqrt_small, EtaPreset::optimal}) {
      const double eta = eta_preset_value(preset, lam_upper);
      if (eta <= 0.0) continue;
      c.expect(bound_H_from_Lambda(lam_upper, eta) <=
                   sfrl_bound(chain.mutual_info, SfrlVariant::eta, eta) + tol,
               idx("sfrl/h-bound-vs-closed-form", i));
    }
  }

  for (std::size_t i = 0; i < cfg.trials / 4; ++i) {
    SplitMix64 rng(sub_seed(cfg.seed ^ 0x59u, i));
    const JointPmf prod =
        JointPmf::product(random_pmf(rng, 2 + i % 5), random_pmf(rng, 2 + (i / 5) % 5));
    const BoundChain chain = bound_chain(prod, cfg.tail_tol);
    c.expect(chain.lambda_k == 0.0, idx("sfrl/product-lambda-zero", i));
  }

  // figure curves: the loge bound beats li2024 from I = 2 on and li2021
  // everywhere, with the stated crossings
  auto loge = [](double I) { return sfrl_bound(I, SfrlVariant::loge); };
  auto li24 = [](double I) { return sfrl_bound(I, SfrlVariant::li2024); };
  auto opt = [](double I) { return sfrl_bound(I, SfrlVariant::eta_opt); };
  c.expect(std::fabs(loge(2.0) - 5.968812907739547) <= 1e-5, "sfrl/loge-at-2");
  c.expect(loge(2.0) < 6.0, "sfrl/loge-below-li2024-at-2");
  const double c1 = crossing_point(loge, li24, 0.0, 4.0);
  c.expect(1.5 <= c1 && c1 <= 2.0, "sfrl/crossing-loge-li2024");
  const double c2 = crossing_point(opt, li24, 1e-9, 2.0);
  c.expect(0.0 < c2 && c2 <= 0.7, "sfrl/crossing-opt-li2024");
  bool dominated = true;
  for (int g2 = 0; g2 < 200; ++g2) {
    const double I = 20.0 * g2 / 199.0;
    dominated = dominated && loge(I) < sfrl_bound(I, SfrlVariant::li2021);
  }
  c.expect(dominated, "sfrl/loge-below-li2021");
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"core",  "channels", "envelopes",
                                              "codes", "sfrl",     "all"};
  return names;
}

SuiteReport run_verify_suite(const std::string& name, const VerifyConfig& cfg) {
  SuiteReport rpt;
  rpt.suite = name;
  if (name == "core") {
    suite_core(cfg, rpt);
  } else if (name == "channels") {
    suite_channels(cfg, rpt);
  } else if (name == "envelopes") {
    suite_envelopes(cfg, rpt);
  } else if (name == "codes") {
    suite_codes(cfg, rpt);
  } else if (name == "sfrl") {
    suite_sfrl(cfg, rpt);
  } else if (name == "all") {
    suite_core(cfg, rpt);
    suite_channels(cfg, rpt);
    suite_envelopes(cfg, rpt);
    suite_codes(cfg, rpt);
    suite_sfrl(cfg, rpt);
  } else {
    throw std::invalid_argument("unknown verify suite: " + name);
  }
  return rpt;
}

std::string suite_report_json(const SuiteReport& r) {
  nlohmann::ordered_json doc;
  doc["suite"] = r.suite;
  doc["cases"] = r.cases;
  doc["failures"] = r.failures;
  return doc.dump(2) + "\n";
}

}  // namespace lent
