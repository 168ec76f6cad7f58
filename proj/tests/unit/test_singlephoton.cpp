#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "chronocyclic/error.hpp"
#include "support/fixtures.hpp"

using namespace chronocyclic;
using namespace fixtures;
using Catch::Approx;
namespace u = chronocyclic::units;

namespace {

constexpr double kW0 = 2.4e15;  // rad/s, toy carrier

// Pure state with amplitude (2/pi)^(1/4) s^(-1/2) exp(-v^2/s^2) exp(i a v^2).
DensityMatrix gaussian_pure(double s, double a, std::size_t n, double half_span) {
  const UniformAxis ax = UniformAxis::centered(kW0, half_span, n);
  std::vector<cplx> g(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double v = ax[k] - kW0;
    g[k] = std::pow(2 / u::kPi, 0.25) / std::sqrt(s) * std::exp(-v * v / (s * s)) * std::polar(1.0, a * v * v);
  }
  DensityMatrix dm{ax, Array2D<cplx>(n, n), true};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dm.rho(i, j) = g[i] * std::conj(g[j]);
  }
  return dm;
}

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double hermitian_error(const Array2D<cplx>& a) {
  double e = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) e = std::max(e, std::abs(a(i, j) - std::conj(a(j, i))));
  }
  return e;
}

}  // namespace

TEST_CASE("separable toy state reduces to an outer product and is pure") {
  const double s1 = 3e13, s2 = 5e13;
  const JsaGrid f = toy_jsa(kW0, 2e14, 128, [&](double ws, double wi) {
    return cplx(std::exp(-std::pow((ws - kW0) / s1, 2)) * std::exp(-std::pow((wi - kW0 - 1e13) / s2, 2)), 0.0);
  });
  const DensityMatrix dm = reduce_density(f);
  const double d = dm.axis.step;
  std::vector<double> gs(128);
  double ng = 0;
  for (std::size_t k = 0; k < 128; ++k) ng += std::exp(-2 * std::pow((dm.axis[k] - kW0) / s1, 2)) * d;
  for (std::size_t k = 0; k < 128; ++k) gs[k] = std::exp(-std::pow((dm.axis[k] - kW0) / s1, 2)) / std::sqrt(ng);
  for (std::size_t i = 0; i < 128; ++i) {
    for (std::size_t j = 0; j < 128; ++j) CHECK(std::abs(dm.rho(i, j) - gs[i] * gs[j]) < 1e-12 / d);
  }
  CHECK(purity_trace(dm) == Approx(1.0).margin(1e-8));
  const SchmidtResult sr = purity_schmidt(f);
  CHECK(sr.purity == Approx(1.0).margin(1e-8));
  CHECK(sr.schmidt_number == Approx(1.0).margin(1e-8));
  const std::vector<double> is = spectral_intensity(dm);
  for (std::size_t k = 0; k < 128; ++k) CHECK(is[k] == Approx(gs[k] * gs[k]).margin(1e-12 / d));
}

TEST_CASE("two-term Schmidt toy has two equal weights") {
  const double s = 3e13;
  auto h0 = [&](double v) { return std::exp(-v * v / (s * s)); };
  auto h1 = [&](double v) { return v / s * std::exp(-v * v / (s * s)); };
  // |h1|^2 = |h0|^2 / 4 on each axis, so the factor 4 equalizes the two terms
  const JsaGrid f = toy_jsa(kW0, 2.5e14, 128, [&](double ws, double wi) {
    const double vs = ws - kW0, vi = wi - kW0;
    return cplx(h0(vs) * h0(vi) + 4 * h1(vs) * h1(vi), 0.0);
  });
  const DensityMatrix dm = reduce_density(f);
  const std::vector<double> ev = density_eigenvalues(dm);
  CHECK(ev[0] == Approx(0.5).margin(1e-8));
  CHECK(ev[1] == Approx(0.5).margin(1e-8));
  CHECK(std::abs(ev[2]) < 1e-8);
  CHECK(purity_trace(dm) == Approx(0.5).margin(1e-8));
  CHECK(purity_schmidt(f).purity == Approx(0.5).margin(1e-8));
}

TEST_CASE("density matrices of the catalog are Hermitian, positive and unit-trace") {
  for (const SourcePreset& p : preset_catalog()) {
    for (double beta : {0.0, kReferenceChirp}) {
      INFO(p.name << " beta " << beta);
      const JsaGrid f = preset_jsa(p.name, beta, 128);
      const DensityMatrix dm = reduce_density(f);
      CHECK(dm.trace_normalized);
      CHECK(hermitian_error(dm.rho) <= 1e-12 * fixtures::max_abs(dm.rho));
      CHECK(dm.trace() == Approx(1.0).margin(1e-10));
      const std::vector<double> ev = density_eigenvalues(dm);
      CHECK(ev.back() >= -1e-10 * ev.front());
      const SchmidtResult sr = purity_schmidt(f);
      double total = 0;
      for (double w : sr.weights) total += w;
      CHECK(total == Approx(1.0).margin(1e-8));
      for (std::size_t k = 0; k < 8; ++k) CHECK(ev[k] == Approx(sr.weights[k]).margin(1e-8));
      // Cauchy-Schwarz on the spectral coherence
      const Array2D<cplx> sc = spectral_coherence(dm);
      const std::vector<double> is = spectral_intensity(dm);
      for (std::size_t i = 0; i < 128; i += 7) {
        CHECK(sc(i, i).imag() == 0.0);
        CHECK(sc(i, i).real() == Approx(is[i]).epsilon(1e-15));
        for (std::size_t j = 0; j < 128; j += 5) {
          CHECK(sc(i, j) == std::conj(dm.rho(i, j)));
          CHECK(std::norm(sc(i, j)) <= sc(i, i).real() * sc(j, j).real() * (1 + 1e-9) + 1e-30);
        }
      }
    }
  }
}

TEST_CASE("both purity routes agree and purity is the inverse Schmidt number") {
  for (const SourcePreset& p : preset_catalog()) {
    for (double beta : {0.0, kReferenceChirp}) {
      INFO(p.name << " beta " << beta);
      const JsaGrid f = preset_jsa(p.name, beta, 256);
      const double pt = purity_trace(reduce_density(f));
      const SchmidtResult sr = purity_schmidt(f);
      CHECK(std::abs(pt - sr.purity) < 1e-6);
      CHECK(pt == Approx(1.0 / sr.schmidt_number).margin(1e-6));
    }
  }
}

TEST_CASE("chirp lowers the purity of every catalog source") {
  for (const SourcePreset& p : preset_catalog()) {
    INFO(p.name);
    CHECK(purity_trace(reduce_density(preset_jsa(p.name, kReferenceChirp, 256))) <
          purity_trace(reduce_density(preset_jsa(p.name, 0.0, 256))));
  }
}

TEST_CASE("spectral intensity is normalized and unaffected by chirp") {
  for (const SourcePreset& p : preset_catalog()) {
    INFO(p.name);
    const DensityMatrix d0 = reduce_density(preset_jsa(p.name, 0.0, 128));
    const DensityMatrix d1 = reduce_density(preset_jsa(p.name, kReferenceChirp, 128));
    const std::vector<double> i0 = spectral_intensity(d0), i1 = spectral_intensity(d1);
    double total = 0;
    for (std::size_t k = 0; k < i0.size(); ++k) {
      total += i0[k] * d0.axis.step;
      CHECK(std::abs(i0[k] - i1[k]) <= 1e-10 * max_abs(i0));
    }
    CHECK(total == Approx(1.0).margin(1e-10));
  }
}

TEST_CASE("negative source emits a broad spectrum") {
  const DensityMatrix dm = reduce_density(preset_jsa("negative", 0.0, 512));
  const double dw = fwhm(dm.axis, spectral_intensity(dm));
  const double lambda = 2 * find_preset("negative").pump_wavelength;
  const double dl = lambda * lambda * dw / (2 * u::kPi * u::kSpeedOfLight);
  CHECK(dl / u::um == Approx(0.23).epsilon(0.3));
}

TEST_CASE("diagonal view keeps matrix elements on shared nodes") {
  const DensityMatrix dm = reduce_density(preset_jsa("positive", kReferenceChirp, 64));
  const DiagonalView dv = to_diagonal_view(dm);
  const std::size_t n = 64;
  REQUIRE(dv.rho_d.rows() == 2 * n + 1);
  REQUIRE(dv.rho_d.cols() == 2 * n);
  CHECK(dv.omega_prime_axis.step == dm.axis.step);
  CHECK(dv.omega_axis.step == dm.axis.step / 2);
  for (std::size_t i = 0; i < n; ++i) {
    // omega' = 0 column on even rows: the diagonal
    CHECK(dv.rho_d(2 * i + 1, n) == dm.rho(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      const long m = static_cast<long>(i + j), k = static_cast<long>(i) - static_cast<long>(j);
      CHECK(dv.rho_d(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(k + static_cast<long>(n))) ==
            dm.rho(i, j));
    }
  }
  // Hermiticity becomes conjugate-evenness in omega'
  for (std::size_t r = 0; r < dv.rho_d.rows(); ++r) {
    for (std::size_t k = 1; k < n; ++k) CHECK(dv.rho_d(r, n - k) == std::conj(dv.rho_d(r, n + k)));
  }
  const DensityMatrix back = from_diagonal_view(dv);
  for (std::size_t k = 0; k < dm.rho.size(); ++k) CHECK(back.rho.data()[k] == dm.rho.data()[k]);
}

TEST_CASE("interpolated diagonal-view nodes follow a smooth Gaussian") {
  const double s = 4e13;
  const DensityMatrix dm = gaussian_pure(s, 0.0, 256, 1.6e14);
  const DiagonalView dv = to_diagonal_view(dm);
  // rho_d(v, v') = sqrt(2/pi)/s exp(-2 v^2/s^2 - v'^2/(2 s^2)); linear interpolation between
  // omega neighbours a step d apart errs by at most d^2/8 max|d^2 rho/d omega^2| = d^2/8 * 4/s^2 * peak
  const double peak = std::sqrt(2 / u::kPi) / s;
  const double d = dm.axis.step;
  const double bound = d * d / 8 * 4 / (s * s) * peak;
  double err = 0;
  for (std::size_t r = 0; r < dv.rho_d.rows(); ++r) {
    for (std::size_t c = 0; c < dv.rho_d.cols(); ++c) {
      const double v = dv.omega_axis[r] - kW0, vp = dv.omega_prime_axis[c];
      const double exact = peak * std::exp(-2 * v * v / (s * s) - vp * vp / (2 * s * s));
      err = std::max(err, std::abs(dv.rho_d(r, c) - exact));
    }
  }
  CHECK(err <= bound);
  CHECK(err <= 1e-3 * peak);
}

TEST_CASE("Wigner function of a chirped Gaussian pure state") {
  const double s = 4e13, a = 1e-27;
  const DensityMatrix dm = gaussian_pure(s, a, 256, 1.6e14);
  const WignerGrid w = wigner_from_density(to_diagonal_view(dm));
  CHECK(w.imag_residue < 1e-10);
  // W = (1/pi) exp(-2 v^2/s^2 - s^2 (t - 2 a v)^2 / 2)
  double err = 0;
  for (std::size_t r = 0; r < w.w.rows(); ++r) {
    const double v = w.omega_axis[r] - kW0;
    for (std::size_t c = 0; c < w.w.cols(); ++c) {
      const double t = w.time_axis[c];
      const double exact = std::exp(-2 * v * v / (s * s) - s * s * std::pow(t - 2 * a * v, 2) / 2) / u::kPi;
      err = std::max(err, std::abs(w.w(r, c) - exact));
    }
  }
  CHECK(err < 1e-3 / u::kPi);
  CHECK(w.integral() == Approx(1.0).margin(1e-10));
  CHECK(cwf_moments(w).correlation > 0.5);
  CHECK(cwf_moments(wigner_from_density(to_diagonal_view(gaussian_pure(s, -a, 256, 1.6e14)))).correlation < -0.5);
  const CwfMoments flat = cwf_moments(wigner_from_density(to_diagonal_view(gaussian_pure(s, 0.0, 256, 1.6e14))));
  CHECK(std::abs(flat.correlation) < 0.02);
  // separable pure state: sigma' = sqrt(2) s, twice the spectral 1/e half-width s/sqrt(2)
  CHECK(antidiagonal_width(to_diagonal_view(gaussian_pure(s, 0.0, 256, 1.6e14))) == Approx(std::sqrt(2.0) * s).epsilon(0.01));
}

TEST_CASE("Wigner marginals reproduce spectral and temporal intensities") {
  for (const SourcePreset& p : preset_catalog()) {
    for (double beta : {0.0, kReferenceChirp}) {
      INFO(p.name << " beta " << beta);
      const DensityMatrix dm = reduce_density(preset_jsa(p.name, beta, 256));
      const DiagonalView dv = to_diagonal_view(dm);
      const WignerGrid w = wigner_from_density(dv);
      CHECK(w.imag_residue < 1e-10);
      const std::vector<double> sm = w.spectral_marginal();
      const std::vector<double> is = spectral_intensity(dm);
      const std::size_t n = dv.n();
      double err = 0;
      for (std::size_t r = 0; r < sm.size(); ++r) err = std::max(err, std::abs(sm[r] - dv.rho_d(r, n).real()));
      for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(sm[2 * i + 1] - is[i]));
      CHECK(err <= 1e-6 * max_abs(is));
      const std::vector<double> tm = w.temporal_marginal();
      const TemporalProfile it = temporal_intensity(dv);
      double terr = 0, total = 0;
      for (std::size_t c = 0; c < tm.size(); ++c) {
        terr = std::max(terr, std::abs(tm[c] - it.intensity[c]));
        total += it.intensity[c] * it.time_axis.step;
      }
      CHECK(terr <= 1e-6 * max_abs(it.intensity));
      CHECK(total == Approx(1.0).margin(1e-6));
    }
  }
}

TEST_CASE("Wigner transform inverts exactly") {
  for (const SourcePreset& p : preset_catalog()) {
    INFO(p.name);
    const DensityMatrix dm = reduce_density(preset_jsa(p.name, kReferenceChirp, 128));
    const DiagonalView dv = to_diagonal_view(dm);
    const DiagonalView back = density_from_wigner(wigner_from_density(dv));
    double err = 0;
    for (std::size_t k = 0; k < dv.rho_d.size(); ++k) err = std::max(err, std::abs(back.rho_d.data()[k] - dv.rho_d.data()[k]));
    CHECK(err <= 1e-9 * fixtures::max_abs(dv.rho_d));
    CHECK(purity_trace(from_diagonal_view(back)) == Approx(purity_trace(dm)).margin(1e-8));
    // omega' = 0 column equals the time integral of W
    const WignerGrid w = wigner_from_density(dv);
    const std::vector<double> sm = w.spectral_marginal();
    for (std::size_t r = 0; r < sm.size(); r += 9) CHECK(back.rho_d(r, dv.n()).real() == Approx(sm[r]).margin(1e-9 * max_abs(sm)));
  }
}

TEST_CASE("temporal coherence by direct sums and through the Wigner function") {
  for (const char* name : {"positive", "circular", "horizontal"}) {
    INFO(name);
    const DensityMatrix dm = reduce_density(preset_jsa(name, kReferenceChirp, 256));
    const DiagonalView dv = to_diagonal_view(dm);
    const WignerGrid w = wigner_from_density(dv);
    const UniformAxis axis = coherence_axis(w, 128, 1);
    const CoherenceGrid direct = temporal_coherence(dv, axis);
    const CoherenceGrid via = coherence_from_wigner(w, axis);
    const double scale = fixtures::max_abs(direct.gamma);
    double err = 0;
    for (std::size_t k = 0; k < direct.gamma.size(); ++k) err = std::max(err, std::abs(direct.gamma.data()[k] - via.gamma.data()[k]));
    CHECK(err <= 1e-6 * scale);
    CHECK(hermitian_error(direct.gamma) == 0.0);
    // equal times: 2 pi I_t
    const TemporalProfile it = temporal_intensity(dv);
    for (std::size_t i = 0; i < 128; ++i) {
      const auto c = static_cast<std::size_t>(std::lround((axis[i] - w.time_axis.start) / w.time_axis.step));
      CHECK(direct.gamma(i, i).real() == Approx(2 * u::kPi * it.intensity[c]).margin(1e-6 * scale));
    }
  }
  CHECK_THROWS_AS(coherence_from_wigner(wigner_from_density(to_diagonal_view(gaussian_pure(4e13, 0, 64, 1.6e14))),
                                        UniformAxis{0.3e-15, 1e-15, 4}),
                  ContractError);
}

TEST_CASE("Wigner function rebuilt from the time-domain density matrix") {
  const DensityMatrix dm = reduce_density(preset_jsa("positive", kReferenceChirp, 64));
  const DiagonalView dv = to_diagonal_view(dm);
  const WignerGrid w = wigner_from_density(dv);
  const std::vector<std::size_t> idx = {0, 17, 40, 64, 90, 127};
  const Array2D<double> rebuilt = wigner_from_temporal_coherence(dv, idx);
  double peak = 0;
  for (double v : w.w.flat()) peak = std::max(peak, std::abs(v));
  double err = 0;
  for (std::size_t q = 0; q < idx.size(); ++q) {
    for (std::size_t r = 0; r < w.w.rows(); ++r) err = std::max(err, std::abs(rebuilt(q, r) - w.w(r, idx[q])));
  }
  CHECK(err <= 1e-6 * peak);
}

TEST_CASE("chirp narrows the anti-diagonal width and lengthens the photon") {
  double prev = std::numeric_limits<double>::infinity();
  for (double k : {0.0, 2.0, 4.0, 8.0}) {
    // 1024 points keep the longest of these photons inside the time window
    const DiagonalView dv = to_diagonal_view(reduce_density(preset_jsa("positive", k * 1e-26, 1024)));
    const double sp = antidiagonal_width(dv);
    CHECK(sp < prev);
    prev = sp;
  }
  // suppression sets in where the idler integration range spans pi / (beta w')
  const JsaGrid f = preset_jsa("positive", kReferenceChirp, 1024);
  const double sp = antidiagonal_width(to_diagonal_view(reduce_density(f)));
  const DensityMatrix idler = reduce_idler_density(f);
  const double range = fwhm(idler.axis, spectral_intensity(idler));
  const double onset = u::kPi / (kReferenceChirp * range);
  CHECK(sp / onset > 0.1);
  CHECK(sp / onset < 10.0);

  for (const SourcePreset& p : preset_catalog()) {
    INFO(p.name);
    auto duration = [&](double beta) {
      const TemporalProfile it = temporal_intensity(to_diagonal_view(reduce_density(preset_jsa(p.name, beta, 1024))));
      return fwhm(it.time_axis, it.intensity);
    };
    CHECK(duration(kReferenceChirp) > duration(0.0));
  }
}

TEST_CASE("an impure state of the diagonal form is stationary") {
  // rho(w1, w2) = sqrt(I(w1) I(w2)) exp(-(w1 - w2)^2 / s'^2) with s' far below the spectral width
  const std::size_t n = 512;
  const double s = 4e13, sp = 1.5e12;
  const UniformAxis ax = UniformAxis::centered(kW0, 2e14, n);
  DensityMatrix dm{ax, Array2D<cplx>(n, n), true};
  double tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += std::exp(-2 * std::pow((ax[i] - kW0) / s, 2)) * ax.step;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double vi = ax[i] - kW0, vj = ax[j] - kW0;
      dm.rho(i, j) = std::exp(-(vi * vi + vj * vj) / (s * s)) * std::exp(-std::pow((vi - vj) / sp, 2)) / tr;
    }
  }
  const StationarityReport rep = stationarity_residual(to_diagonal_view(dm));
  CHECK(rep.core_end - rep.core_start > 10 * rep.coherence_time);
  // derived regression for this state
  CHECK(rep.residual < 0.01);
}

TEST_CASE("positive source at large chirp is stationary") {
  // Near-impure example with a 5% threshold. The computed residual is ~1: the
  // photon keeps a strong time-frequency tilt (chirp), so it is not stationary.
  const DiagonalView dv = to_diagonal_view(reduce_density(preset_jsa("positive", kReferenceChirp, 1024)));
  const StationarityReport rep = stationarity_residual(dv);
  CHECK(rep.residual < 0.05);
}
