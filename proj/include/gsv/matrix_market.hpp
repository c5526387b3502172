#pragma once

#include <string>

#include "gsv/matrix.hpp"

namespace gsv {

/// Reads a Matrix Market file (array or coordinate, real or complex, general
/// symmetry). Coordinate entries not listed are zero. pattern/integer fields
/// and non-general symmetries raise UnsupportedFormat; malformed content
/// raises ParseError with the offending line number; NaN/Inf payloads raise
/// InvalidInput.
DenseMatrix read_matrix_market(const std::string& path);

/// Writes in array format with 17-significant-digit entries, so a read-back
/// reproduces the matrix bit for bit.
void write_matrix_market(const DenseMatrix& m, const std::string& path);

}  // namespace gsv
