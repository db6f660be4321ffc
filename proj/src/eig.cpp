#include "schatten/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace schatten {

namespace {

// (H + H*)/2 after checking the asymmetry budget.
ComplexMatrix hermitize_checked(const ComplexMatrix& h) {
  if (!h.square()) throw std::invalid_argument("hermitian op: matrix not square");
  double asym = 0.0, total = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) {
      total += std::norm(h(i, j));
      asym += std::norm(h(i, j) - std::conj(h(j, i)));
    }
  if (std::sqrt(asym) > kSymmetrizeTol * std::sqrt(total))
    throw std::domain_error("matrix is not Hermitian within tolerance");
  ComplexMatrix s = h;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    s(i, i) = cplx(s(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < s.cols(); ++j) {
      cplx v = 0.5 * (s(i, j) + std::conj(s(j, i)));
      s(i, j) = v;
      s(j, i) = std::conj(v);
    }
  }
  return s;
}

double off_diagonal_mass(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

double diagonal_mass(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i) s += std::norm(h(i, i));
  return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& h_in) {
  ComplexMatrix h = hermitize_checked(h_in);
  const std::size_t d = h.rows();
  ComplexMatrix v = ComplexMatrix::identity(d);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = off_diagonal_mass(h);
    double diag = diagonal_mass(h);
    if (off <= 1e-14 * diag || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        cplx apq = h(p, q);
        double mag = std::abs(apq);
        if (mag == 0.0) continue;
        double app = h(p, p).real();
        double aqq = h(q, q).real();
        cplx phase = apq / mag;
        double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
        double c = std::cos(theta);
        cplx s = std::sin(theta) * phase;
        cplx sc = std::conj(s);
        // H <- G* H G, columns then rows
        for (std::size_t k = 0; k < d; ++k) {
          cplx hkp = h(k, p), hkq = h(k, q);
          h(k, p) = c * hkp - sc * hkq;
          h(k, q) = s * hkp + c * hkq;
        }
        for (std::size_t k = 0; k < d; ++k) {
          cplx hpk = h(p, k), hqk = h(q, k);
          h(p, k) = c * hpk - s * hqk;
          h(q, k) = sc * hpk + c * hqk;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = cplx(h(p, p).real(), 0.0);
        h(q, q) = cplx(h(q, q).real(), 0.0);
        for (std::size_t k = 0; k < d; ++k) {
          cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sc * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return h(a, a).real() > h(b, b).real();
  });

  HermitianEigen out;
  out.values.resize(d);
  out.vectors = ComplexMatrix(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    out.values[j] = h(idx[j], idx[j]).real();
    for (std::size_t i = 0; i < d; ++i) out.vectors(i, j) = v(i, idx[j]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eig(h).values;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  // Squaring in the gram matrix would overflow around 1e154, so work on
  // a copy scaled by the largest entry magnitude and scale back at the end.
  double amax = 0.0;
  for (cplx z : a.entries())
    amax = std::max({amax, std::abs(z.real()), std::abs(z.imag())});
  const std::size_t k = std::min(a.rows(), a.cols());
  if (amax == 0.0) return std::vector<double>(k, 0.0);
  ComplexMatrix scaled = cplx(1.0 / amax) * a;
  std::vector<double> ev = hermitian_eigenvalues(gram(scaled));
  std::vector<double> sv(k);
  for (std::size_t i = 0; i < k; ++i)
    sv[i] = amax * std::sqrt(std::max(ev[i], 0.0));
  return sv;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  HermitianEigen eg = hermitian_eig(h);
  const std::size_t d = eg.values.size();
  double lmax = 0.0;
  for (double l : eg.values) lmax = std::max(lmax, l);
  for (double l : eg.values)
    if (l < -kClampRel * std::max(lmax, 1e-300))
      throw std::domain_error("psd_sqrt: matrix is not positive semidefinite");
  ComplexMatrix r(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    double s = std::sqrt(std::max(eg.values[k], 0.0));
    if (s == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      cplx vik = eg.vectors(i, k);
      if (vik == cplx{}) continue;
      cplx svik = s * vik;
      r(i, i) += svik * std::conj(vik);
      for (std::size_t j = i + 1; j < d; ++j)
        r(i, j) += svik * std::conj(eg.vectors(j, k));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    r(i, i) = cplx(r(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < d; ++j) r(j, i) = std::conj(r(i, j));
  }
  return r;
}

ColumnBasis orthonormal_columns(const ComplexMatrix& m, double drop_tol) {
  const std::size_t rows = m.rows();
  std::vector<std::vector<cplx>> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<cplx> v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = m(i, j);
    for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once
      for (const auto& q : basis) {
        cplx proj{};
        for (std::size_t i = 0; i < rows; ++i) proj += std::conj(q[i]) * v[i];
        for (std::size_t i = 0; i < rows; ++i) v[i] -= proj * q[i];
      }
    }
    double nrm = 0.0;
    for (cplx z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm <= drop_tol) continue;
    // phase-normalize on the largest entry for determinism
    std::size_t imax = 0;
    for (std::size_t i = 1; i < rows; ++i)
      if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    cplx ph = std::abs(v[imax]) > 0 ? std::abs(v[imax]) / v[imax] : cplx(1.0);
    for (cplx& z : v) z = z * ph / nrm;
    basis.push_back(std::move(v));
  }
  ColumnBasis out;
  out.rank = basis.size();
  if (out.rank > 0) {
    out.q = ComplexMatrix(rows, out.rank);
    for (std::size_t j = 0; j < out.rank; ++j)
      for (std::size_t i = 0; i < rows; ++i) out.q(i, j) = basis[j][i];
  }
  return out;
}

}  // namespace schatten
