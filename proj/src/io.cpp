#include "lent/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lent {

namespace {

std::pair<std::size_t, std::size_t> offset_to_line_col(const std::string& text,
                                                       std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '[' || c == '{';
  }
  return false;
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON", line, col);
  }
}

double parse_number(const std::string& field, std::size_t line, std::size_t col) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    while (used < field.size() &&
           (field[used] == ' ' || field[used] == '\t' || field[used] == '\r'))
      ++used;
    if (used != field.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + field + "'", line, col);
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

bool is_blank(const std::string& s) {
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\r') return false;
  return true;
}

}  // namespace

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Pmf parse_pmf(const std::string& text, Normalize mode) {
  if (looks_like_json(text)) {
    const nlohmann::json doc = parse_json(text);
    if (!doc.is_array()) throw ParseError("pmf JSON must be an array of numbers", 1, 1);
    std::vector<double> probs;
    probs.reserve(doc.size());
    for (const auto& v : doc) {
      if (!v.is_number()) throw ParseError("pmf JSON must contain only numbers", 1, 1);
      probs.push_back(v.get<double>());
    }
    if (probs.empty()) throw ParseError("pmf JSON array is empty", 1, 1);
    return Pmf(std::move(probs), mode);
  }
  std::vector<double> probs;
  std::vector<std::string> labels;
  bool any_label = false;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() > 2) throw ParseError("expected 'prob' or 'prob,label'", lineno, 1);
    probs.push_back(parse_number(fields[0], lineno, 1));
    if (fields.size() == 2) {
      labels.push_back(fields[1]);
      any_label = true;
    } else {
      labels.emplace_back();
    }
  }
  if (probs.empty()) throw ParseError("empty pmf input", lineno == 0 ? 1 : lineno, 1);
  if (any_label) return Pmf(std::move(probs), std::move(labels), mode);
  return Pmf(std::move(probs), mode);
}

JointPmf parse_joint(const std::string& text, Normalize mode) {
  if (looks_like_json(text)) {
    const nlohmann::json doc = parse_json(text);
    if (!doc.is_array()) throw ParseError("joint JSON must be nested arrays", 1, 1);
    std::vector<std::vector<double>> rows;
    for (const auto& row : doc) {
      if (!row.is_array()) throw ParseError("joint JSON must be nested arrays", 1, 1);
      std::vector<double> r;
      for (const auto& v : row) {
        if (!v.is_number()) throw ParseError("joint JSON must contain only numbers", 1, 1);
        r.push_back(v.get<double>());
      }
      rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ParseError("joint JSON is empty", 1, 1);
    return JointPmf(std::move(rows), mode);
  }
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const auto fields = split_csv_line(line);
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t f = 0; f < fields.size(); ++f)
      row.push_back(parse_number(fields[f], lineno, f + 1));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty joint input", 1, 1);
  return JointPmf(std::move(rows), mode);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

Pmf read_pmf_file(const std::string& path, Normalize mode) {
  return parse_pmf(read_text_file(path), mode);
}

JointPmf read_joint_file(const std::string& path, Normalize mode) {
  return parse_joint(read_text_file(path), mode);
}

namespace {

std::string alpha_key(double alpha) {
  if (std::isinf(alpha)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", alpha);
  return buf;
}

}  // namespace

std::string entropy_report_json(const EntropyReport& r) {
  std::string out = "{\n";
  out += "  \"shannon\": " + format_g12(r.shannon) + ",\n";
  out += "  \"layered\": " + format_g12(r.layered) + ",\n";
  out += "  \"min_entropy\": " + format_g12(r.min_entropy) + ",\n";
  out += "  \"one_to_one_length\": " + format_g12(r.one_to_one_length) + ",\n";
  out += "  \"renyi\": {";
  for (std::size_t i = 0; i < r.renyi.size(); ++i) {
    if (i) out += ",";
    out += "\n    \"" + alpha_key(r.renyi[i].alpha) + "\": [" +
           format_g12(r.renyi[i].h) + ", " + format_g12(r.renyi[i].lambda) + "]";
  }
  out += r.renyi.empty() ? "}\n" : "\n  }\n";
  out += "}\n";
  return out;
}

std::string entropy_report_csv(const EntropyReport& r) {
  std::string out = "quantity,value\n";
  out += "shannon," + format_g12(r.shannon) + "\n";
  out += "layered," + format_g12(r.layered) + "\n";
  out += "min_entropy," + format_g12(r.min_entropy) + "\n";
  out += "one_to_one_length," + format_g12(r.one_to_one_length) + "\n";
  for (const auto& e : r.renyi) {
    out += "h_" + alpha_key(e.alpha) + "," + format_g12(e.h) + "\n";
    out += "lambda_" + alpha_key(e.alpha) + "," + format_g12(e.lambda) + "\n";
  }
  return out;
}

std::string region_csv(const RegionSample& s) {
  std::string out = "h_cond,h_diff,seed\n";
  for (const auto& p : s.points)
    out += format_g12(p.h_cond) + "," + format_g12(p.h_diff) + "," +
           std::to_string(p.seed) + "\n";
  return out;
}

std::string curve_csv(const std::vector<CurveRow>& rows) {
  std::string out = "I,li2021,li2024,loge,eta_opt\n";
  for (const auto& r : rows)
    out += format_g12(r.I) + "," + format_g12(r.li2021) + "," + format_g12(r.li2024) +
           "," + format_g12(r.loge) + "," + format_g12(r.eta_opt) + "\n";
  return out;
}

std::string bound_chain_json(const BoundChain& c, const double* h_bound) {
  std::string out = "{\n";
  out += "  \"lambda_K\": " + format_g12(c.lambda_k) + ",\n";
  out += "  \"tail_bound\": " + format_g12(c.tail_bound) + ",\n";
  out += "  \"e_term\": " + format_g12(c.e_term) + ",\n";
  out += "  \"I\": " + format_g12(c.mutual_info) + ",\n";
  out += "  \"i_log3\": " + format_g12(c.i_log3) + ",\n";
  out += std::string("  \"pass\": ") + (c.pass ? "true" : "false");
  if (h_bound) out += ",\n  \"h_bound\": " + format_g12(*h_bound);
  out += "\n}\n";
  return out;
}

std::string pmf_json(const Pmf& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += format_g12(p[i]);
  }
  return out + "]\n";
}

std::string pmf_csv(const Pmf& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += format_g12(p[i]);
    if (p.has_labels()) out += "," + p.labels()[i];
    out += "\n";
  }
  return out;
}

std::string joint_json(const JointPmf& j) {
  std::string out = "[";
  for (std::size_t x = 0; x < j.x_size(); ++x) {
    out += x ? ",\n [" : "[";
    for (std::size_t y = 0; y < j.y_size(); ++y) {
      if (y) out += ", ";
      out += format_g12(j.at(x, y));
    }
    out += "]";
  }
  return out + "]\n";
}

std::string joint_csv(const JointPmf& j) {
  std::string out;
  for (std::size_t x = 0; x < j.x_size(); ++x) {
    for (std::size_t y = 0; y < j.y_size(); ++y) {
      if (y) out += ",";
      out += format_g12(j.at(x, y));
    }
    out += "\n";
  }
  return out;
}

std::string coupling_csv(const Coupling& c) {
  std::string out;
  for (const auto& row : c.joint) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ",";
      out += format_g12(row[k]);
    }
    out += "\n";
  }
  return out;
}

std::string coupling_meta_json(const Coupling& c) {
  std::string out = "{\n";
  out += "  \"objective\": " + format_g12(c.objective()) + ",\n";
  out += "  \"feasibility_residual\": " + format_g12(c.feasibility_residual()) + "\n";
  out += "}\n";
  return out;
}

std::string codebook_json(const Codebook& book) {
  std::string out = "{";
  bool first = true;
  for (std::size_t s = 0; s < book.size(); ++s) {
    if (!book.is_assigned(s)) continue;
    if (!first) out += ",";
    out += "\n  \"" + std::to_string(s) + "\": \"" + book.word(s) + "\"";
    first = false;
  }
  return out + (first ? "}\n" : "\n}\n");
}

std::string simplex_grid_csv(std::size_t resolution) {
  if (resolution < 2) throw std::invalid_argument("simplex grid: resolution must be >= 2");
  std::string out = "p1,p2,p3,shannon,layered\n";
  const double r = static_cast<double>(resolution);
  for (std::size_t i = 0; i <= resolution; ++i) {
    for (std::size_t j = 0; j + i <= resolution; ++j) {
      const std::size_t k = resolution - i - j;
      const Pmf p({i / r, j / r, k / r});
      out += format_g12(i / r) + "," + format_g12(j / r) + "," + format_g12(k / r) +
             "," + format_g12(shannon_entropy(p)) + "," +
             format_g12(layered_entropy(sort_pmf(p))) + "\n";
    }
  }
  return out;
}

}  // namespace lent
