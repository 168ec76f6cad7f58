#include <algorithm>
#include <cmath>
#include <vector>

#include "chronocyclic/error.hpp"
#include "chronocyclic/twophoton.hpp"

namespace chronocyclic {

CurvatureFit curvature_metric(const JsaGrid& jsa) {
  const Array2D<cplx>& f = jsa.amplitude;
  const UniformAxis& sa = jsa.grid.signal;
  const UniformAxis& ia = jsa.grid.idler;
  const std::size_t ns = f.rows(), ni = f.cols();

  std::vector<double> marginal(ns, 0.0), ridge(ns, 0.0);
  std::vector<double> row(ni);
  for (std::size_t r = 0; r < ns; ++r) {
    for (std::size_t c = 0; c < ni; ++c) row[c] = std::norm(f(r, c));
    const auto it = std::max_element(row.begin(), row.end());
    const std::size_t j = static_cast<std::size_t>(it - row.begin());
    double offset = 0.0;
    if (j > 0 && j + 1 < ni) {
      const double ym = row[j - 1], y0 = row[j], yp = row[j + 1];
      const double den = ym - 2 * y0 + yp;
      if (den < 0.0) offset = 0.5 * (ym - yp) / den;
    }
    ridge[r] = ia[j] + offset * ia.step;
    for (double v : row) marginal[r] += v;
  }

  const double peak = *std::max_element(marginal.begin(), marginal.end());
  std::vector<std::size_t> keep;
  double wsum = 0, mean = 0;
  for (std::size_t r = 0; r < ns; ++r) {
    if (marginal[r] >= 1e-2 * peak) {
      keep.push_back(r);
      wsum += marginal[r];
      mean += marginal[r] * sa[r];
    }
  }
  if (keep.size() < 3) throw NumericalError("curvature_metric: fewer than three ridge points above threshold");
  mean /= wsum;
  double var = 0;
  for (std::size_t r : keep) var += marginal[r] * (sa[r] - mean) * (sa[r] - mean);
  const double sd = std::sqrt(var / wsum);

  // weighted normal equations for [1, x, x^2]
  double m[3][4] = {};
  for (std::size_t r : keep) {
    const double w = marginal[r], x = (sa[r] - mean) / sd;
    const double basis[3] = {1.0, x, x * x};
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) m[p][q] += w * basis[p] * basis[q];
      m[p][3] += w * basis[p] * ridge[r];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    std::swap(m[col], m[piv]);
    if (m[col][col] == 0.0) throw NumericalError("curvature_metric: singular ridge fit");
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double k = m[r][col] / m[col][col];
      for (int q = col; q < 4; ++q) m[r][q] -= k * m[col][q];
    }
  }
  CurvatureFit fit;
  fit.a = m[0][3] / m[0][0];
  fit.b = m[1][3] / m[1][1];
  fit.c = m[2][3] / m[2][2];
  fit.mean = mean;
  fit.scale = sd;
  fit.raw_c = fit.c / (sd * sd);
  fit.points = keep.size();
  return fit;
}

}  // namespace chronocyclic
