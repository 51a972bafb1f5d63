#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lent/codebook.hpp"
#include "lent/coupling.hpp"
#include "lent/entropy.hpp"
#include "lent/joint.hpp"
#include "lent/pmf.hpp"
#include "lent/region.hpp"
#include "lent/sfrl.hpp"

namespace lent {

// Input error with a 1-based source position for diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// 12 significant digits, the reporting precision of every emitted number.
std::string format_g12(double v);

// Pmf inputs: a JSON array of numbers, or CSV with one probability per line
// and an optional trailing label column. Joint inputs: JSON nested arrays or
// a CSV matrix with rows = x. The first non-space character decides the
// format.
Pmf parse_pmf(const std::string& text, Normalize mode = Normalize::reject);
JointPmf parse_joint(const std::string& text, Normalize mode = Normalize::reject);
Pmf read_pmf_file(const std::string& path, Normalize mode = Normalize::reject);
JointPmf read_joint_file(const std::string& path, Normalize mode = Normalize::reject);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string entropy_report_json(const EntropyReport& r);
std::string entropy_report_csv(const EntropyReport& r);
std::string region_csv(const RegionSample& s);
std::string curve_csv(const std::vector<CurveRow>& rows);
// h_bound, when present, is appended as an extra field (the --eta option of
// the sfrl command).
std::string bound_chain_json(const BoundChain& c, const double* h_bound = nullptr);

// Barycentric sweep of the ternary simplex: rows p1,p2,p3,shannon,layered
// with (i+j+k) = resolution.
std::string simplex_grid_csv(std::size_t resolution);

std::string pmf_json(const Pmf& p);
std::string pmf_csv(const Pmf& p);
std::string joint_json(const JointPmf& j);
std::string joint_csv(const JointPmf& j);

// Coupling export: the matrix as CSV plus a JSON metadata record with the
// objective and the feasibility residual.
std::string coupling_csv(const Coupling& c);
std::string coupling_meta_json(const Coupling& c);

// {symbol: bitstring} for every assigned symbol.
std::string codebook_json(const Codebook& book);

}  // namespace lent
