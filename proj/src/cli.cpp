#include "lent/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "lent/entropy.hpp"
#include "lent/io.hpp"
#include "lent/region.hpp"
#include "lent/sfrl.hpp"
#include "lent/verify.hpp"

namespace lent {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

std::vector<double> parse_alpha_list(const std::string& csv) {
  std::vector<double> alphas;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur == "inf" || cur == "infinity") {
      alphas.push_back(kInfinity);
    } else {
      std::size_t used = 0;
      const double v = std::stod(cur, &used);
      if (used != cur.size()) throw std::invalid_argument("bad alpha value: " + cur);
      alphas.push_back(v);
    }
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',')
      flush();
    else if (c != ' ')
      cur.push_back(c);
  }
  flush();
  if (alphas.empty()) throw std::invalid_argument("empty alpha list");
  return alphas;
}

// --eta accepts loge | sqrt | opt | a positive number
double resolve_eta(const std::string& spec, double lambda) {
  if (spec == "loge") return eta_preset_value(EtaPreset::loge, lambda);
  if (spec == "sqrt") return eta_preset_value(EtaPreset::sqrt_small, lambda);
  if (spec == "opt") return eta_preset_value(EtaPreset::optimal, lambda);
  std::size_t used = 0;
  const double v = std::stod(spec, &used);
  if (used != spec.size() || !(v > 0.0))
    throw std::invalid_argument("bad --eta value: " + spec);
  return v;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"discrete layered entropy toolkit"};
  app.require_subcommand(1);

  std::string pmf_path, joint_path, out_path, format = "json", eta_spec, suite = "all";
  std::string alpha_csv = "0,0.25,0.5,1,2,4,inf";
  std::uint64_t seed = 42;
  std::size_t trials = 200, resolution = 64;
  double tol = 1e-9, tail_tol = 1e-9, i_min = 0.0, i_max = 10.0;
  bool normalize = false, curve_mode = false;

  CLI::App* entropy = app.add_subcommand("entropy", "entropy report for a pmf file");
  entropy->add_option("--pmf", pmf_path, "pmf file (JSON array or CSV column)")->required();
  entropy->add_option("--alpha", alpha_csv, "comma-separated Renyi orders (inf allowed)");
  entropy->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  entropy->add_option("--out", out_path, "output path (default stdout)");
  entropy->add_flag("--normalize", normalize, "rescale inputs that do not sum to 1");

  CLI::App* simplex = app.add_subcommand("simplex-grid",
                                         "H and Lambda over the ternary simplex (CSV)");
  simplex->add_option("--resolution", resolution, "barycentric subdivisions")
      ->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
  simplex->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* region = app.add_subcommand(
      "region", "sample (H(X|Y), H(X\\Y)) over random channels (CSV)");
  region->add_option("--pmf", pmf_path, "pmf file")->required();
  region->add_option("--trials", trials, "number of sampled channels");
  region->add_option("--seed", seed, "sampling seed");
  region->add_option("--out", out_path, "output path (default stdout)");
  region->add_flag("--normalize", normalize, "rescale inputs that do not sum to 1");

  CLI::App* sfrl = app.add_subcommand(
      "sfrl", "functional-representation bound chain (JSON) or curves (CSV)");
  sfrl->add_option("--joint", joint_path, "joint pmf file (CSV matrix or JSON)");
  sfrl->add_flag("--curve", curve_mode, "emit the comparison curves instead");
  sfrl->add_option("--i-min", i_min, "curve grid start");
  sfrl->add_option("--i-max", i_max, "curve grid end");
  sfrl->add_option("--resolution", resolution, "curve grid points");
  sfrl->add_option("--tail-tol", tail_tol, "geometric truncation budget");
  sfrl->add_option("--eta", eta_spec, "loge|sqrt|opt|<number>: adds an H bound");
  sfrl->add_option("--out", out_path, "output path (default stdout)");
  sfrl->add_flag("--normalize", normalize, "rescale inputs that do not sum to 1");

  CLI::App* verify = app.add_subcommand("verify", "run an invariant suite (JSON report)");
  verify->add_option("--suite", suite, "core|channels|envelopes|codes|sfrl|all")
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--trials", trials, "sample count per property");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--tol", tol, "comparison tolerance");
  verify->add_option("--tail-tol", tail_tol, "geometric truncation budget");
  verify->add_option("--out", out_path, "output path (default stdout)");

  std::reverse(args.begin(), args.end());  // CLI11 consumes reversed argv
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Normalize mode = normalize ? Normalize::renormalize : Normalize::reject;
  try {
    if (entropy->parsed()) {
      const Pmf p = read_pmf_file(pmf_path, mode);
      const EntropyReport r = make_entropy_report(p, parse_alpha_list(alpha_csv));
      emit(out_path, format == "csv" ? entropy_report_csv(r) : entropy_report_json(r));
      return kExitOk;
    }
    if (simplex->parsed()) {
      emit(out_path, simplex_grid_csv(resolution));
      return kExitOk;
    }
    if (region->parsed()) {
      if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
      const Pmf p = read_pmf_file(pmf_path, mode);
      emit(out_path, region_csv(region_sample(p, trials, seed)));
      return kExitOk;
    }
    if (sfrl->parsed()) {
      if (curve_mode && !joint_path.empty())
        throw std::invalid_argument("--curve and --joint are exclusive");
      if (!curve_mode && joint_path.empty())
        throw std::invalid_argument("sfrl needs either --joint FILE or --curve");
      if (curve_mode) {
        if (resolution < 2) throw std::invalid_argument("--resolution must be >= 2");
        if (!(i_max > i_min) || i_min < 0.0)
          throw std::invalid_argument("need 0 <= --i-min < --i-max");
        std::vector<double> grid(resolution);
        for (std::size_t g = 0; g < resolution; ++g)
          grid[g] = i_min + (i_max - i_min) * double(g) / double(resolution - 1);
        emit(out_path, curve_csv(curve_emit(grid)));
        return kExitOk;
      }
      const JointPmf j = read_joint_file(joint_path, mode);
      const BoundChain chain = bound_chain(j, tail_tol);
      std::optional<double> h_bound;
      if (!eta_spec.empty()) {
        const double lam_upper = chain.lambda_k + chain.tail_bound;
        const double eta = resolve_eta(eta_spec, lam_upper);
        h_bound = eta > 0.0 ? bound_H_from_Lambda(lam_upper, eta) : lam_upper;
      }
      emit(out_path, bound_chain_json(chain, h_bound ? &*h_bound : nullptr));
      return chain.pass ? kExitOk : kExitVerifyFailure;
    }
    if (verify->parsed()) {
      if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
      if (!(tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
      VerifyConfig cfg;
      cfg.seed = seed;
      cfg.trials = trials;
      cfg.tol = tol;
      cfg.tail_tol = tail_tol;
      const SuiteReport rpt = run_verify_suite(suite, cfg);
      emit(out_path, suite_report_json(rpt));
      return rpt.pass() ? kExitOk : kExitVerifyFailure;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lent
