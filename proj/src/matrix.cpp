#include "schatten/matrix.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace schatten {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("matrix dimensions must be positive");
  if (e_.size() != rows * cols)
    throw std::invalid_argument("entry count does not match rows*cols");
  for (cplx z : e_)
    if (!finite(z)) throw std::invalid_argument("non-finite matrix entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
  return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: inner dimensions differ");
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  ComplexMatrix g = matmul(adjoint(a), a);
  // (G + G*)/2: the product carries roundoff asymmetry
  for (std::size_t i = 0; i < g.rows(); ++i) {
    g(i, i) = cplx(g(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < g.cols(); ++j) {
      cplx v = 0.5 * (g(i, j) + std::conj(g(j, i)));
      g(i, j) = v;
      g(j, i) = std::conj(v);
    }
  }
  return g;
}

cplx trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("trace_inner: shape mismatch");
  cplx s{};
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    s += std::conj(b.entries()[k]) * a.entries()[k];
  return s;
}

cplx trace(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("trace: matrix not square");
  cplx s{};
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (cplx z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("operator+: shape mismatch");
  ComplexMatrix r = a;
  for (std::size_t k = 0; k < r.entries().size(); ++k)
    r.entries()[k] += b.entries()[k];
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("operator-: shape mismatch");
  ComplexMatrix r = a;
  for (std::size_t k = 0; k < r.entries().size(); ++k)
    r.entries()[k] -= b.entries()[k];
  return r;
}

ComplexMatrix operator*(cplx c, const ComplexMatrix& m) {
  ComplexMatrix r = m;
  for (cplx& z : r.entries()) z *= c;
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& m) { return cplx(-1.0) * m; }

namespace {

double parse_real(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "not a number: '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "trailing junk: '" + tok + "'");
  if (!std::isfinite(v)) throw ParseError(line, "non-finite value: '" + tok + "'");
  return v;
}

}  // namespace

ComplexMatrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    ++lineno;
    return false;
  };
  if (!next_line()) throw ParseError(lineno, "missing header 'rows cols'");
  std::istringstream hdr(line);
  long rows = 0, cols = 0;
  std::string extra;
  if (!(hdr >> rows >> cols) || (hdr >> extra))
    throw ParseError(lineno, "header must be 'rows cols'");
  if (rows <= 0 || cols <= 0) throw ParseError(lineno, "dimensions must be positive");
  std::vector<cplx> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (long k = 0; k < rows * cols; ++k) {
    if (!next_line()) throw ParseError(lineno, "unexpected end of input");
    std::istringstream ls(line);
    std::string re, im;
    if (!(ls >> re >> im) || (ls >> extra))
      throw ParseError(lineno, "entry line must be 're im'");
    entries.emplace_back(parse_real(re, lineno), parse_real(im, lineno));
  }
  return ComplexMatrix(static_cast<std::size_t>(rows),
                       static_cast<std::size_t>(cols), std::move(entries));
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  return parse_matrix(f);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  char buf[64];
  for (cplx z : m.entries()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
    out << buf;
  }
}

}  // namespace schatten
