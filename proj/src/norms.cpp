#include "schatten/norms.hpp"

#include <algorithm>
#include <cmath>

#include "schatten/eig.hpp"

namespace schatten {

PExponent::PExponent(double p) : p_(p) {
  if (!std::isfinite(p) || p <= 0.0)
    throw std::domain_error("p must be finite and > 0");
}

double lp_norm(const std::vector<double>& s, double p) {
  double smax = 0.0;
  for (double v : s) smax = std::max(smax, v);
  if (smax == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : s) {
    if (v == 0.0) continue;  // clamped zeros contribute exactly 0
    acc += std::pow(v / smax, p);
  }
  return smax * std::pow(acc, 1.0 / p);
}

double schatten_norm(const ComplexMatrix& a, const PExponent& p) {
  return lp_norm(singular_values(a), p.value());
}

double schatten_norm_psd(const ComplexMatrix& h, const PExponent& p) {
  std::vector<double> ev = hermitian_eigenvalues(h);
  double lmax = 0.0;
  for (double l : ev) lmax = std::max(lmax, l);
  for (double& l : ev) {
    if (l < -kClampRel * std::max(lmax, 1e-300))
      throw std::domain_error("schatten_norm_psd: matrix is not PSD");
    l = std::max(l, 0.0);
  }
  return lp_norm(ev, p.value());
}

double hilbert_schmidt_norm(const ComplexMatrix& a) {
  return frobenius_norm(a);
}

}  // namespace schatten
