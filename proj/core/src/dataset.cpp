#include "hpm/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hpm {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& cell, std::size_t line_no) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(cell, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("dataset csv: non-numeric cell '" + cell +
                             "' on line " + std::to_string(line_no));
  }
  while (pos < cell.size() &&
         (cell[pos] == ' ' || cell[pos] == '\t' || cell[pos] == '\r')) {
    ++pos;
  }
  if (pos != cell.size()) {
    throw std::runtime_error("dataset csv: non-numeric cell '" + cell +
                             "' on line " + std::to_string(line_no));
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

void ProcessDataset::validate() const {
  descriptor.validate();
  if (inputs.rows() < 1 || inputs.rows() != outputs.rows()) {
    throw std::invalid_argument(
        "ProcessDataset: inputs and outputs must have the same positive row "
        "count");
  }
  if (static_cast<std::size_t>(inputs.cols()) != input_names.size() ||
      static_cast<std::size_t>(outputs.cols()) != output_names.size()) {
    throw std::invalid_argument(
        "ProcessDataset: column counts do not match the name lists");
  }
  if (!inputs.allFinite() || !outputs.allFinite()) {
    throw std::invalid_argument("ProcessDataset: NaN or Inf entry");
  }
}

void write_dataset_csv(const ProcessDataset& dataset,
                       const std::filesystem::path& path) {
  dataset.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("dataset csv: cannot open for writing: " +
                             path.string());
  }

  out << "# descriptor: id=" << dataset.descriptor.id;
  for (std::size_t j = 0; j < dataset.descriptor.values.size(); ++j) {
    out << ';' << dataset.descriptor.names[j] << '='
        << format_double(dataset.descriptor.values[j]);
  }
  out << '\n';

  for (std::size_t j = 0; j < dataset.input_names.size(); ++j) {
    if (j) out << ',';
    out << "in:" << dataset.input_names[j];
  }
  for (const auto& name : dataset.output_names) out << ",out:" << name;
  out << '\n';

  for (Eigen::Index i = 0; i < dataset.inputs.rows(); ++i) {
    for (Eigen::Index j = 0; j < dataset.inputs.cols(); ++j) {
      if (j) out << ',';
      out << format_double(dataset.inputs(i, j));
    }
    for (Eigen::Index j = 0; j < dataset.outputs.cols(); ++j) {
      out << ',' << format_double(dataset.outputs(i, j));
    }
    out << '\n';
  }
  if (!out) {
    throw std::runtime_error("dataset csv: write failed: " + path.string());
  }
}

ProcessDataset read_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("dataset csv: cannot open: " + path.string());
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("dataset csv: empty file: " + path.string());
  }
  line = strip_cr(line);
  const std::string prefix = "# descriptor: ";
  if (line.rfind(prefix, 0) != 0) {
    throw std::runtime_error(
        "dataset csv: line 1 must start with '# descriptor: '");
  }

  ProcessDataset ds;
  for (const auto& pair : split(line.substr(prefix.size()), ';')) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::runtime_error(
          "dataset csv: malformed descriptor entry '" + pair + "' on line 1");
    }
    const std::string key = pair.substr(0, eq);
    const std::string value = pair.substr(eq + 1);
    if (key == "id") {
      ds.descriptor.id = static_cast<int>(parse_double(value, 1));
    } else {
      ds.descriptor.names.push_back(key);
      ds.descriptor.values.push_back(parse_double(value, 1));
    }
  }

  if (!std::getline(in, line)) {
    throw std::runtime_error("dataset csv: missing header on line 2");
  }
  line = strip_cr(line);
  std::vector<bool> is_input;
  for (const auto& col : split(line, ',')) {
    if (col.rfind("in:", 0) == 0) {
      ds.input_names.push_back(col.substr(3));
      is_input.push_back(true);
    } else if (col.rfind("out:", 0) == 0) {
      ds.output_names.push_back(col.substr(4));
      is_input.push_back(false);
    } else {
      throw std::runtime_error(
          "dataset csv: header column '" + col +
          "' on line 2 lacks an in:/out: prefix");
    }
  }
  if (ds.input_names.empty() || ds.output_names.empty()) {
    throw std::runtime_error(
        "dataset csv: header must declare at least one in: and one out: "
        "column");
  }

  std::vector<std::vector<double>> rows;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != is_input.size()) {
      throw std::runtime_error(
          "dataset csv: expected " + std::to_string(is_input.size()) +
          " cells but found " + std::to_string(cells.size()) + " on line " +
          std::to_string(line_no));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) row.push_back(parse_double(cell, line_no));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::runtime_error("dataset csv: no samples in " + path.string());
  }

  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  ds.inputs.resize(n, static_cast<Eigen::Index>(ds.input_names.size()));
  ds.outputs.resize(n, static_cast<Eigen::Index>(ds.output_names.size()));
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index ic = 0;
    Eigen::Index oc = 0;
    for (std::size_t j = 0; j < is_input.size(); ++j) {
      if (is_input[j]) {
        ds.inputs(i, ic++) = rows[i][j];
      } else {
        ds.outputs(i, oc++) = rows[i][j];
      }
    }
  }
  ds.validate();
  return ds;
}

}  // namespace hpm
