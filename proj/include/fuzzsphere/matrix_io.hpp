#pragma once

#include <string>

#include "fuzzsphere/operator_matrix.hpp"

namespace fuzzsphere {

enum class MatrixFormat { json, csv };

MatrixFormat parse_matrix_format(const std::string& tag);

/// {"two_j": .., "two_sigma": .., "rows": .., "entries": [[re, im], ...]}, row-major, %.17g.
std::string to_json(const OperatorMatrix& m, int two_sigma);
/// Header "row,col,re,im", 0-based indices, row-major, %.17g.
std::string to_csv(const OperatorMatrix& m);

/// Writes the chosen encoding; throws std::runtime_error when the path is not writable.
void export_matrix(const OperatorMatrix& m, int two_sigma, MatrixFormat format, const std::string& path);

struct ImportedMatrix {
  OperatorMatrix matrix;
  int two_sigma = 0;  // 0 for CSV, which does not carry it
};

ImportedMatrix from_json(const std::string& text);
ImportedMatrix from_csv(const std::string& text);
ImportedMatrix import_matrix(const std::string& path, MatrixFormat format);

}  // namespace fuzzsphere
