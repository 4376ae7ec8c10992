#include "radonsvm/dataset_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace radonsvm {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    std::size_t a = field.find_first_not_of(" \t\r");
    std::size_t b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_number(const std::string& s, std::size_t line_no, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    if (!std::isfinite(v)) throw std::invalid_argument("not finite");
    return v;
  } catch (const std::exception&) {
    throw CsvError("line " + std::to_string(line_no) + ": cannot parse " + what + " '" + s + "'");
  }
}

}  // namespace

LabeledPointSet read_labeled_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  // header
  if (!std::getline(in, line)) throw CsvError("line 1: missing header");
  ++line_no;
  std::vector<std::string> header = split_fields(line);
  if (header.empty() || header.front() != "y")
    throw CsvError("line 1: header must start with 'y'");
  const std::size_t dim = header.size() - 1;
  if (dim == 0) throw CsvError("line 1: header has no coordinate columns");
  for (std::size_t j = 0; j < dim; ++j)
    if (header[j + 1] != "x" + std::to_string(j + 1))
      throw CsvError("line 1: expected column 'x" + std::to_string(j + 1) + "', got '" +
                     header[j + 1] + "'");

  LabeledPointSet d;
  d.dim = dim;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != dim + 1)
      throw CsvError("line " + std::to_string(line_no) + ": expected " +
                     std::to_string(dim + 1) + " fields, got " + std::to_string(fields.size()));
    const std::string& ys = fields.front();
    int label = 0;
    if (ys == "-1")
      label = -1;
    else if (ys == "+1" || ys == "1")
      label = 1;
    else
      throw CsvError("line " + std::to_string(line_no) + ": label must be -1, +1 or 1, got '" +
                     ys + "'");
    Vec p(dim);
    for (std::size_t j = 0; j < dim; ++j)
      p[j] = parse_number(fields[j + 1], line_no, "x" + std::to_string(j + 1));
    d.points.push_back(std::move(p));
    d.labels.push_back(label);
  }
  return d;
}

LabeledPointSet read_labeled_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'");
  return read_labeled_csv(in);
}

void write_labeled_csv(std::ostream& out, const LabeledPointSet& d) {
  out << "y";
  for (std::size_t j = 0; j < d.dim; ++j) out << ",x" << j + 1;
  out << "\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < d.size(); ++i) {
    out << (d.labels[i] > 0 ? "+1" : "-1");
    for (double v : d.points[i]) out << "," << v;
    out << "\n";
  }
}

}  // namespace radonsvm
