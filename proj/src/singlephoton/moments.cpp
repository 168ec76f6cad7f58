#include <cmath>

#include "chronocyclic/error.hpp"
#include "chronocyclic/singlephoton.hpp"

namespace chronocyclic {

CwfMoments cwf_moments(const WignerGrid& w) {
  const UniformAxis& om = w.omega_axis;
  const UniformAxis& ta = w.time_axis;
  double s0 = 0, sw = 0, st = 0;
  for (std::size_t r = 0; r < w.w.rows(); ++r) {
    for (std::size_t c = 0; c < w.w.cols(); ++c) {
      const double v = w.w(r, c);
      s0 += v;
      sw += v * om[r];
      st += v * ta[c];
    }
  }
  if (!(s0 > 0)) throw NumericalError("cwf_moments: Wigner function has non-positive integral");
  CwfMoments m;
  m.mean_omega = sw / s0;
  m.mean_t = st / s0;
  double vw = 0, vt = 0, cv = 0;
  for (std::size_t r = 0; r < w.w.rows(); ++r) {
    const double x = om[r] - m.mean_omega;
    for (std::size_t c = 0; c < w.w.cols(); ++c) {
      const double v = w.w(r, c), y = ta[c] - m.mean_t;
      vw += v * x * x;
      vt += v * y * y;
      cv += v * x * y;
    }
  }
  m.var_omega = vw / s0;
  m.var_t = vt / s0;
  m.covariance = cv / s0;
  m.correlation = m.covariance / std::sqrt(m.var_omega * m.var_t);
  const double k = 2 * (1 - m.correlation * m.correlation);
  m.delta_omega = std::sqrt(k * m.var_omega);
  m.delta_t = std::sqrt(k * m.var_t);
  return m;
}

}  // namespace chronocyclic
