#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace schatten {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Entries are required to stay finite;
/// the text-format parser and the constructors enforce this.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("matrix dimensions must be positive");
  }
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t d);
  static ComplexMatrix diagonal(const std::vector<cplx>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  const std::vector<cplx>& entries() const { return e_; }
  std::vector<cplx>& entries() { return e_; }

  bool same_shape(const ComplexMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> e_;
};

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// A*A, Hermitized to kill roundoff asymmetry.
ComplexMatrix gram(const ComplexMatrix& a);

/// tr(B*A). Shapes must match.
cplx trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

cplx trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx c, const ComplexMatrix& m);
ComplexMatrix operator-(const ComplexMatrix& m);

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

/// Text format: first line "rows cols", then rows*cols lines "re im".
/// NaN/Inf tokens are rejected.
ComplexMatrix parse_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);

}  // namespace schatten
