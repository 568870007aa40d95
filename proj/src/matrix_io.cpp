#include "fuzzsphere/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fuzzsphere/errors.hpp"

namespace fuzzsphere {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int two_j_from_rows(long rows) {
  if (rows < 1) throw DimensionMismatch("matrix file: no rows");
  return static_cast<int>(rows) - 1;
}

}  // namespace

MatrixFormat parse_matrix_format(const std::string& tag) {
  if (tag == "json") return MatrixFormat::json;
  if (tag == "csv") return MatrixFormat::csv;
  throw DomainError("unknown matrix format '" + tag + "' (expected json or csv)");
}

std::string to_json(const OperatorMatrix& m, int two_sigma) {
  std::ostringstream os;
  os << "{\"two_j\": " << m.two_j() << ", \"two_sigma\": " << two_sigma << ", \"rows\": " << m.dim()
     << ", \"entries\": [";
  for (Eigen::Index r = 0; r < m.dim(); ++r)
    for (Eigen::Index c = 0; c < m.dim(); ++c) {
      if (r || c) os << ", ";
      const auto z = m.entries()(r, c);
      os << '[' << g17(z.real()) << ", " << g17(z.imag()) << ']';
    }
  os << "]}\n";
  return os.str();
}

std::string to_csv(const OperatorMatrix& m) {
  std::ostringstream os;
  os << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < m.dim(); ++r)
    for (Eigen::Index c = 0; c < m.dim(); ++c) {
      const auto z = m.entries()(r, c);
      os << r << ',' << c << ',' << g17(z.real()) << ',' << g17(z.imag()) << '\n';
    }
  return os.str();
}

void export_matrix(const OperatorMatrix& m, int two_sigma, MatrixFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << (format == MatrixFormat::json ? to_json(m, two_sigma) : to_csv(m));
  if (!out) throw std::runtime_error("write failed for " + path);
}

ImportedMatrix from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  const long rows = doc.at("rows").get<long>();
  const int two_j = doc.at("two_j").get<int>();
  if (two_j_from_rows(rows) != two_j) throw DimensionMismatch("matrix file: rows and two_j disagree");
  const auto& entries = doc.at("entries");
  if (static_cast<long>(entries.size()) != rows * rows) throw DimensionMismatch("matrix file: wrong entry count");
  OperatorMatrix::Matrix e(rows, rows);
  for (long k = 0; k < rows * rows; ++k)
    e(k / rows, k % rows) = {entries[static_cast<std::size_t>(k)].at(0).get<double>(),
                             entries[static_cast<std::size_t>(k)].at(1).get<double>()};
  return {OperatorMatrix(two_j, std::move(e)), doc.at("two_sigma").get<int>()};
}

ImportedMatrix from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "row,col,re,im") throw std::runtime_error("csv: missing header");
  struct Cell {
    long r, c;
    double re, im;
  };
  std::vector<Cell> cells;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Cell cell{};
    char* end = nullptr;
    const char* p = line.c_str();
    cell.r = std::strtol(p, &end, 10);
    cell.c = std::strtol(end + 1, &end, 10);
    cell.re = std::strtod(end + 1, &end);
    cell.im = std::strtod(end + 1, &end);
    cells.push_back(cell);
  }
  const long rows = std::lround(std::sqrt(static_cast<double>(cells.size())));
  if (rows * rows != static_cast<long>(cells.size())) throw DimensionMismatch("csv: cell count is not a square");
  OperatorMatrix::Matrix e = OperatorMatrix::Matrix::Zero(rows, rows);
  for (const auto& cell : cells) {
    if (cell.r < 0 || cell.r >= rows || cell.c < 0 || cell.c >= rows) throw DimensionMismatch("csv: index out of range");
    e(cell.r, cell.c) = {cell.re, cell.im};
  }
  return {OperatorMatrix(two_j_from_rows(rows), std::move(e)), 0};
}

ImportedMatrix import_matrix(const std::string& path, MatrixFormat format) {
  const std::string text = read_file(path);
  return format == MatrixFormat::json ? from_json(text) : from_csv(text);
}

}  // namespace fuzzsphere
