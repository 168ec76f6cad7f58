#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "chronocyclic/error.hpp"
#include "chronocyclic/singlephoton.hpp"

namespace chronocyclic {
namespace {
using RowMajorC = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
}

SchmidtResult purity_schmidt(const JsaGrid& jsa) {
  if (!jsa.normalized) throw ContractError("purity_schmidt: joint amplitude is not normalized");
  const auto rows = static_cast<Eigen::Index>(jsa.amplitude.rows());
  const auto cols = static_cast<Eigen::Index>(jsa.amplitude.cols());
  const Eigen::Map<const RowMajorC> f(jsa.amplitude.data(), rows, cols);
  const double scale = std::sqrt(jsa.grid.signal.step * jsa.grid.idler.step);

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(f * scale);
  if (svd.info() != Eigen::Success) {
    std::ostringstream os;
    os << "purity_schmidt: SVD failed on a " << rows << "x" << cols << " grid";
    throw NumericalError(os.str());
  }
  const Eigen::VectorXd s = svd.singularValues();
  SchmidtResult out;
  out.weights.resize(static_cast<std::size_t>(s.size()));
  double p = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    const double w = s[k] * s[k];
    out.weights[static_cast<std::size_t>(k)] = w;
    p += w * w;
  }
  out.purity = p;
  out.schmidt_number = 1.0 / p;
  return out;
}

std::vector<double> density_eigenvalues(const DensityMatrix& dm) {
  const auto n = static_cast<Eigen::Index>(dm.rho.rows());
  const Eigen::Map<const RowMajorC> rho(dm.rho.data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho * dm.axis.step, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("density_eigenvalues: eigen solver failed");
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

}  // namespace chronocyclic
