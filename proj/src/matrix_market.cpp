#include "gsv/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gsv/errors.hpp"

namespace gsv {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool next_content_line(std::istream& in, std::string& line, long& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '%') continue;
    return true;
  }
  return false;
}

void require_finite_value(double v, long lineno) {
  if (!std::isfinite(v)) throw InvalidInput("non-finite entry at line " + std::to_string(lineno));
}

// strtod-based so that "nan"/"inf" parse and are then rejected as InvalidInput
// rather than as a syntax error
bool read_double(std::istringstream& es, double& out) {
  std::string tok;
  if (!(es >> tok)) return false;
  char* end = nullptr;
  out = std::strtod(tok.c_str(), &end);
  return end == tok.c_str() + tok.size();
}

}  // namespace

DenseMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  std::string header;
  long lineno = 0;
  if (!std::getline(in, header)) throw ParseError("empty file", 1);
  ++lineno;
  std::istringstream hs(header);
  std::string banner, object, format, field, symmetry;
  hs >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lowercase(object) != "matrix")
    throw ParseError("not a MatrixMarket matrix header", 1);
  format = lowercase(format);
  field = lowercase(field);
  symmetry = lowercase(symmetry);
  if (format != "array" && format != "coordinate")
    throw ParseError("unknown format: " + format, 1);
  if (field == "pattern" || field == "integer")
    throw UnsupportedFormat("unsupported field: " + field);
  if (field != "real" && field != "complex")
    throw ParseError("unknown field: " + field, 1);
  if (symmetry != "general")
    throw UnsupportedFormat("unsupported symmetry: " + symmetry);

  const bool complex = field == "complex";
  const ScalarKind kind = complex ? ScalarKind::Complex : ScalarKind::Real;

  std::string line;
  if (!next_content_line(in, line, lineno)) throw ParseError("missing size line", lineno);
  std::istringstream ss(line);
  long rows = 0, cols = 0, nnz = 0;
  if (!(ss >> rows >> cols)) throw ParseError("bad size line", lineno);
  if (format == "coordinate" && !(ss >> nnz)) throw ParseError("bad size line", lineno);
  if (rows <= 0 || cols <= 0) throw ParseError("dimensions must be positive", lineno);

  DenseMatrix m(static_cast<int>(rows), static_cast<int>(cols), kind);

  if (format == "array") {
    // array data is column-major
    for (long j = 0; j < cols; ++j) {
      for (long i = 0; i < rows; ++i) {
        if (!next_content_line(in, line, lineno))
          throw ParseError("unexpected end of array data", lineno);
        std::istringstream es(line);
        double re = 0.0, im = 0.0;
        if (!read_double(es, re)) throw ParseError("bad array entry", lineno);
        if (complex && !read_double(es, im)) throw ParseError("bad complex array entry", lineno);
        require_finite_value(re, lineno);
        require_finite_value(im, lineno);
        m(static_cast<int>(i), static_cast<int>(j)) = Complex(re, im);
      }
    }
  } else {
    for (long e = 0; e < nnz; ++e) {
      if (!next_content_line(in, line, lineno))
        throw ParseError("unexpected end of coordinate data", lineno);
      std::istringstream es(line);
      long i = 0, j = 0;
      double re = 0.0, im = 0.0;
      if (!(es >> i >> j) || !read_double(es, re)) throw ParseError("bad coordinate entry", lineno);
      if (complex && !read_double(es, im)) throw ParseError("bad complex coordinate entry", lineno);
      if (i < 1 || i > rows || j < 1 || j > cols)
        throw ParseError("coordinate out of range", lineno);
      require_finite_value(re, lineno);
      require_finite_value(im, lineno);
      m(static_cast<int>(i - 1), static_cast<int>(j - 1)) = Complex(re, im);
    }
  }
  return m;
}

void write_matrix_market(const DenseMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  const bool complex = !m.is_real();
  out << "%%MatrixMarket matrix array " << (complex ? "complex" : "real") << " general\n";
  out << m.rows() << " " << m.cols() << "\n";
  char buf[128];
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (complex)
        std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", z.real(), z.imag());
      else
        std::snprintf(buf, sizeof(buf), "%.17g\n", z.real());
      out << buf;
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace gsv
