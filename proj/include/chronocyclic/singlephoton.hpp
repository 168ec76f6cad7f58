#pragma once

// Heralded signal photon: reduced density matrix, purity, chronocyclic
// Wigner function and first-order coherence.
//
// Discretization. For a density matrix on N points with step d the diagonal
// view uses omega_m = w_0 + m d/2 (m = -1 .. 2N-1) and omega'_k = k d
// (k = -N .. N-1). Nodes with m + k even are the matrix elements
// rho((m+k)/2, (m-k)/2); the remaining nodes are the mean of their two
// neighbours along omega, so trace and marginals are kept exactly. The time
// axis is the DFT conjugate of omega': t_n = (n - N) pi / (N d), n = 0 .. 2N-1.

#include <cstddef>
#include <vector>

#include "chronocyclic/grid.hpp"
#include "chronocyclic/twophoton.hpp"

namespace chronocyclic {

struct DensityMatrix {
  UniformAxis axis;  // signal frequencies, rad/s
  Array2D<cplx> rho;
  bool trace_normalized = false;

  double trace() const;  // sum diag * d
};

struct DiagonalView {
  UniformAxis omega_axis;        // 2N + 1 points, step d/2
  UniformAxis omega_prime_axis;  // 2N points, step d, starts at -N d
  Array2D<cplx> rho_d;           // rows omega, cols omega'
  UniformAxis source_axis;       // axis of the density matrix it came from

  std::size_t n() const { return source_axis.size; }
};

struct WignerGrid {
  UniformAxis omega_axis;  // as DiagonalView
  UniformAxis time_axis;   // 2N points, s
  Array2D<double> w;       // rows omega, cols t
  UniformAxis source_axis;
  double imag_residue = 0;  // max |Im W| / max |Re W| before the imaginary part is dropped

  std::vector<double> spectral_marginal() const;  // integral over t, per omega
  std::vector<double> temporal_marginal() const;  // integral over omega, per t
  double integral() const;
};

struct CoherenceGrid {
  UniformAxis t1_axis;
  UniformAxis t2_axis;
  Array2D<cplx> gamma;  // rows t1, cols t2
};

struct TemporalProfile {
  UniformAxis time_axis;
  std::vector<double> intensity;
};

struct SchmidtResult {
  double purity = 0;
  double schmidt_number = 0;
  std::vector<double> weights;  // descending, sum to 1
};

// rho(w1, w2) = sum_k f(w1, k) f*(w2, k) dw_i
DensityMatrix reduce_density(const JsaGrid& jsa);
// Density matrix of the idler photon, by exchanging the axes.
DensityMatrix reduce_idler_density(const JsaGrid& jsa);

DiagonalView to_diagonal_view(const DensityMatrix& dm);
DensityMatrix from_diagonal_view(const DiagonalView& dv);

// sum |rho|^2 d^2
double purity_trace(const DensityMatrix& dm);
// Singular values of f sqrt(dws dwi); weights are their squares.
SchmidtResult purity_schmidt(const JsaGrid& jsa);
// Eigenvalues of the density operator (matrix eigenvalues times d), descending.
std::vector<double> density_eigenvalues(const DensityMatrix& dm);

// W(w, t) = (1/2pi) sum_k rho_d(w, w'_k) exp(-i w'_k t) d
WignerGrid wigner_from_density(const DiagonalView& dv);
// rho_d(w, w') = sum_n W(w, t_n) exp(i w' t_n) dt
DiagonalView density_from_wigner(const WignerGrid& w);

std::vector<double> spectral_intensity(const DensityMatrix& dm);
TemporalProfile temporal_intensity(const DiagonalView& dv);
// S(w1, w2) = conj(rho(w1, w2))
Array2D<cplx> spectral_coherence(const DensityMatrix& dm);

// Gamma(t1, t2) = sum_m sum_k rho_d exp(-i w'_k (t1 + t2)/2) exp(i w_m (t1 - t2)) d (d/2),
// evaluated by direct sums for any time axis.
CoherenceGrid temporal_coherence(const DiagonalView& dv, const UniformAxis& time_axis);

// Square axis of `points` times whose pairwise midpoints fall on the Wigner
// time lattice: step 2 stride dt, centered on t = 0.
UniformAxis coherence_axis(const WignerGrid& w, std::size_t points, std::size_t stride);
// Gamma(t + t'/2, t - t'/2) = 2 pi sum_m W(w_m, t) exp(i w_m t') d/2 on such an axis.
CoherenceGrid coherence_from_wigner(const WignerGrid& w, const UniformAxis& time_axis);

// W rows rebuilt from the time-domain density matrix Gamma* at the given
// Wigner time indices:
//   W(w, t) = (1/4pi^2) sum_l Gamma(t + t'_l/2, t - t'_l/2) exp(-i w t'_l) dt',
// with 2N + 1 samples of t' at step 4 pi / ((2N + 1) d). Result rows follow
// time_indices, columns follow the omega axis.
Array2D<double> wigner_from_temporal_coherence(const DiagonalView& dv, const std::vector<std::size_t>& time_indices);

// sigma' = sqrt(2 <w'^2>) of |sum_w rho_d(w, w') d/2|, the 1/e half-width for a
// Gaussian profile exp(-w'^2 / sigma'^2).
double antidiagonal_width(const DiagonalView& dv);

// Second moments of W and the Gaussian fit they imply:
// correlation r, dw = sqrt(2 (1 - r^2) var_w), dt = sqrt(2 (1 - r^2) var_t).
struct CwfMoments {
  double mean_omega = 0, mean_t = 0;
  double var_omega = 0, var_t = 0, covariance = 0;
  double correlation = 0;
  double delta_omega = 0, delta_t = 0;
};
CwfMoments cwf_moments(const WignerGrid& w);

// Largest deviation of the normalized coherence Gamma(t1,t2)/sqrt(Gamma(t1,t1) Gamma(t2,t2))
// from the stationary form sum I(w) exp(i w (t1 - t2)) / sum I(w), over pairs
// whose times both lie where the temporal intensity exceeds half its peak.
struct StationarityReport {
  double residual = 0;
  double core_start = 0, core_end = 0;  // s
  double coherence_time = 0;            // s, 1 / rms spectral width
};
StationarityReport stationarity_residual(const DiagonalView& dv, std::size_t time_samples = 48,
                                         std::size_t lag_samples = 65);

// Full width at half maximum of a sampled profile, with linear interpolation
// at the outermost crossings.
double fwhm(const UniformAxis& axis, const std::vector<double>& values);

}  // namespace chronocyclic
