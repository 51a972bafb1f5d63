#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "lent/cli.hpp"
#include "lent/entropy.hpp"
#include "lent/io.hpp"
#include "lent/region.hpp"
#include "lent/rng.hpp"
#include "lent/verify.hpp"

using namespace lent;

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string tmp_path(const std::string& name) { return "io_cli_tmp_" + name; }

void put_file(const std::string& path, const std::string& content) {
  std::ofstream(path, std::ios::binary | std::ios::trunc) << content;
}

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  ss << std::ifstream(path, std::ios::binary).rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("number formatting uses 12 significant digits") {
  CHECK(format_g12(2.0) == "2");
  CHECK(format_g12(1.188721875540867) == "1.18872187554");
  CHECK(format_g12(0.5310044064107188) == "0.531004406411");
}

TEST_CASE("pmf parsing from JSON and CSV") {
  const Pmf j = parse_pmf("[0.5, 0.25, 0.25]");
  CHECK(j.size() == 3);
  CHECK(j[0] == 0.5);

  const Pmf c = parse_pmf("0.5\n0.25,a\n0.25,b\n");
  CHECK(c.size() == 3);
  CHECK(c.has_labels());
  CHECK(c.labels()[1] == "a");

  const Pmf n = parse_pmf("2\n1\n1\n", Normalize::renormalize);
  CHECK(close(n[0], 0.5, 1e-15));

  CHECK_THROWS_AS(parse_pmf("0.5\nxyz\n"), ParseError);
  try {
    parse_pmf("0.5\nxyz\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_pmf("[0.5, 0.6,"), ParseError);
  CHECK_THROWS_AS(parse_pmf("[\"a\"]"), ParseError);
  CHECK_THROWS_AS(parse_pmf(""), ParseError);
  CHECK_THROWS_AS(parse_pmf("0.5\n0.6\n"), std::invalid_argument);  // bad sum
}

TEST_CASE("joint parsing from CSV matrix and JSON") {
  const JointPmf a = parse_joint("0.45,0.05\n0.05,0.45\n");
  CHECK(a.x_size() == 2);
  CHECK(a.at(0, 1) == 0.05);
  const JointPmf b = parse_joint("[[0.45,0.05],[0.05,0.45]]");
  CHECK(b.at(1, 1) == 0.45);
  CHECK_THROWS_AS(parse_joint("0.45,q\n"), ParseError);
  try {
    parse_joint("0.45,0.05\n0.05,q\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
}

TEST_CASE("entropy report emission") {
  const EntropyReport r =
      make_entropy_report(Pmf({0.5, 0.25, 0.25}), {0.0, 1.0, kInfinity});
  const std::string json = entropy_report_json(r);
  CHECK(json.find("\"layered\": 1.18872187554") != std::string::npos);
  CHECK(json.find("\"inf\": [1, 1]") != std::string::npos);
  const std::string csv = entropy_report_csv(r);
  CHECK(csv.rfind("quantity,value\n", 0) == 0);
  CHECK(csv.find("lambda_1,1.18872187554\n") != std::string::npos);
}

TEST_CASE("simplex grid: vertex, center, edge, and cell linearity") {
  const std::string csv = simplex_grid_csv(3);
  CHECK(csv.rfind("p1,p2,p3,shannon,layered\n", 0) == 0);
  CHECK(csv.find("1,0,0,0,0\n") != std::string::npos);          // vertex
  CHECK(csv.find("0,0,1,0,0\n") != std::string::npos);          // vertex
  const std::string center = "1.58496250072,1.58496250072";
  CHECK(csv.find(center) != std::string::npos);                 // uniform point

  const std::string edge = simplex_grid_csv(2);
  CHECK(edge.find("0.5,0.5,0,1,1\n") != std::string::npos);     // edge midpoint

  // every row satisfies Lambda <= H; Lambda is linear within a sorting cell
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto c4 = line.rfind(',');
    const auto c3 = line.rfind(',', c4 - 1);
    const double lam = std::stod(line.substr(c4 + 1));
    const double h = std::stod(line.substr(c3 + 1, c4 - c3 - 1));
    CHECK(lam <= h + 1e-9);
  }
  auto lam_of = [](std::initializer_list<double> v) {
    return layered_entropy(sort_pmf(Pmf(std::vector<double>(v))));
  };
  const double mid = lam_of({0.55, 0.35, 0.1});
  CHECK(close(mid, 0.5 * (lam_of({0.6, 0.3, 0.1}) + lam_of({0.5, 0.4, 0.1})), 1e-12));
}

TEST_CASE("distribution writers round-trip through the parsers") {
  SplitMix64 rng(21);
  for (int i = 0; i < 40; ++i) {
    const Pmf p = random_pmf(rng, 1 + i % 9);
    for (const std::string& text : {pmf_json(p), pmf_csv(p)}) {
      const Pmf back = parse_pmf(text, Normalize::renormalize);
      REQUIRE(back.size() == p.size());
      for (std::size_t k = 0; k < p.size(); ++k) CHECK(close(back[k], p[k], 1e-11));
    }
    const JointPmf j = random_joint(rng, 2 + i % 5, 2 + (i / 5) % 5);
    for (const std::string& text : {joint_json(j), joint_csv(j)}) {
      const JointPmf back = parse_joint(text, Normalize::renormalize);
      REQUIRE(back.x_size() == j.x_size());
      for (std::size_t x = 0; x < j.x_size(); ++x)
        for (std::size_t y = 0; y < j.y_size(); ++y)
          CHECK(close(back.at(x, y), j.at(x, y), 1e-11));
    }
  }
}

TEST_CASE("coupling and codebook exports") {
  const Coupling c = lp_coupling_construct(sort_pmf(Pmf({0.5, 0.25, 0.25})));
  const std::string mat = coupling_csv(c);
  CHECK(mat == "0.25,0,0.25\n0,0,0.25\n0,0,0.25\n");
  const std::string meta = coupling_meta_json(c);
  CHECK(meta.find("\"objective\": 1.18872187554") != std::string::npos);
  CHECK(meta.find("\"feasibility_residual\": ") != std::string::npos);

  const std::string book = codebook_json(huffman(Pmf({0.5, 0.25, 0.25})));
  CHECK(book.find("\"0\": \"0\"") != std::string::npos);
  CHECK(book.find("\"1\": \"10\"") != std::string::npos);
  CHECK(book.find("\"2\": \"11\"") != std::string::npos);
  CHECK(codebook_json(huffman(Pmf({1.0, 0.0}))).find("\"0\": \"\"") != std::string::npos);
}

TEST_CASE("verify suite runner") {
  VerifyConfig cfg;
  cfg.trials = 30;
  const SuiteReport core = run_verify_suite("core", cfg);
  CHECK(core.pass());
  CHECK(core.cases > 100);
  CHECK_THROWS_AS(run_verify_suite("bogus", cfg), std::invalid_argument);

  VerifyConfig strict = cfg;
  strict.tol = 1e-30;
  const SuiteReport red = run_verify_suite("core", strict);
  CHECK_FALSE(red.pass());

  const std::string json = suite_report_json(core);
  CHECK(json.find("\"suite\": \"core\"") != std::string::npos);
  CHECK(json.find("\"failures\": []") != std::string::npos);
}

TEST_CASE("cli end to end") {
  const std::string pmf_file = tmp_path("pmf.json");
  const std::string joint_file = tmp_path("joint.csv");
  put_file(pmf_file, "[0.5,0.25,0.25]");
  put_file(joint_file, "0.45,0.05\n0.05,0.45\n");

  const std::string out1 = tmp_path("report.json");
  CHECK(run_cli({"entropy", "--pmf", pmf_file, "--out", out1}) == 0);
  CHECK(slurp(out1).find("\"layered\": 1.18872187554") != std::string::npos);

  const std::string out_csv = tmp_path("report.csv");
  CHECK(run_cli({"entropy", "--pmf", pmf_file, "--format", "csv", "--out", out_csv}) == 0);
  CHECK(slurp(out_csv).rfind("quantity,value\n", 0) == 0);

  const std::string grid = tmp_path("grid.csv");
  CHECK(run_cli({"simplex-grid", "--resolution", "4", "--out", grid}) == 0);
  CHECK(slurp(grid).rfind("p1,p2,p3,shannon,layered\n", 0) == 0);

  // determinism: identical config gives byte-identical output
  const std::string ra = tmp_path("region_a.csv"), rb = tmp_path("region_b.csv");
  CHECK(run_cli({"region", "--pmf", pmf_file, "--trials", "16", "--seed", "9",
                 "--out", ra}) == 0);
  CHECK(run_cli({"region", "--pmf", pmf_file, "--trials", "16", "--seed", "9",
                 "--out", rb}) == 0);
  const std::string region_a = slurp(ra);
  CHECK(region_a == slurp(rb));
  CHECK(region_a.rfind("h_cond,h_diff,seed\n", 0) == 0);

  const std::string chain = tmp_path("chain.json");
  CHECK(run_cli({"sfrl", "--joint", joint_file, "--out", chain}) == 0);
  const std::string chain_text = slurp(chain);
  CHECK(chain_text.find("\"pass\": true") != std::string::npos);
  CHECK(chain_text.find("\"lambda_K\": 0.992995578663") != std::string::npos);

  const std::string chain_eta = tmp_path("chain_eta.json");
  CHECK(run_cli({"sfrl", "--joint", joint_file, "--eta", "loge", "--out",
                 chain_eta}) == 0);
  CHECK(slurp(chain_eta).find("\"h_bound\": ") != std::string::npos);

  const std::string curve = tmp_path("curve.csv");
  CHECK(run_cli({"sfrl", "--curve", "--i-max", "4", "--resolution", "9", "--out",
                 curve}) == 0);
  CHECK(slurp(curve).rfind("I,li2021,li2024,loge,eta_opt\n", 0) == 0);

  const std::string verify_out = tmp_path("verify.json");
  CHECK(run_cli({"verify", "--suite", "codes", "--trials", "20", "--seed", "42",
                 "--out", verify_out}) == 0);
  CHECK(slurp(verify_out).find("\"failures\": []") != std::string::npos);

  SUBCASE("error exits") {
    CHECK(run_cli({"entropy", "--pmf", tmp_path("missing.json")}) == 2);
    put_file(tmp_path("bad.csv"), "0.5\noops\n");
    CHECK(run_cli({"entropy", "--pmf", tmp_path("bad.csv")}) == 2);
    put_file(tmp_path("badsum.json"), "[0.5,0.6]");
    CHECK(run_cli({"entropy", "--pmf", tmp_path("badsum.json")}) == 2);
    CHECK(run_cli({"verify", "--suite", "nonsense"}) == 2);
    CHECK(run_cli({"region", "--pmf", pmf_file, "--trials", "0"}) == 2);
    CHECK(run_cli({"sfrl"}) == 2);
    CHECK(run_cli({"sfrl", "--curve", "--i-min", "5", "--i-max", "1"}) == 2);
    CHECK(run_cli({"entropy", "--pmf", pmf_file, "--alpha", "0.5,-2"}) == 2);
    CHECK(run_cli({"entropy", "--pmf", pmf_file, "--alpha", "zzz"}) == 2);
    CHECK(run_cli({"bogus-subcommand"}) == 2);
    CHECK(run_cli({"verify", "--suite", "core", "--trials", "10", "--tol", "1e-30"}) == 1);
  }
}
