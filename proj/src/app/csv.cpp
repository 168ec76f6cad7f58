#include "chronocyclic/csv.hpp"

#include <cstdio>
#include <string>

namespace chronocyclic {

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {
void append_row(std::string& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += fmt15(v);
    first = false;
  }
  out += '\n';
}
}  // namespace

std::string jsa_csv(const JsaGrid& jsa) {
  const auto& g = jsa.grid;
  std::string out = "# axis: signal rad/s (" + std::to_string(g.signal.size) + " points, rows), idler rad/s (" +
                    std::to_string(g.idler.size) + " points, columns)\n";
  out += "omega_s,omega_i,re,im,abs2\n";
  for (std::size_t r = 0; r < g.signal.size; ++r) {
    for (std::size_t c = 0; c < g.idler.size; ++c) {
      const cplx v = jsa.amplitude(r, c);
      append_row(out, {g.signal[r], g.idler[c], v.real(), v.imag(), std::norm(v)});
    }
  }
  return out;
}

std::string density_csv(const DensityMatrix& dm) {
  std::string out = "omega1,omega2,re,im,abs\n";
  for (std::size_t i = 0; i < dm.axis.size; ++i) {
    for (std::size_t j = 0; j < dm.axis.size; ++j) {
      const cplx v = dm.rho(i, j);
      append_row(out, {dm.axis[i], dm.axis[j], v.real(), v.imag(), std::abs(v)});
    }
  }
  return out;
}

std::string wigner_csv(const WignerGrid& w) {
  std::string out = "omega,t,w\n";
  for (std::size_t r = 0; r < w.w.rows(); ++r) {
    for (std::size_t c = 0; c < w.w.cols(); ++c) append_row(out, {w.omega_axis[r], w.time_axis[c], w.w(r, c)});
  }
  return out;
}

std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string out = "key,value\n";
  for (const auto& [k, v] : rows) out += k + "," + v + "\n";
  return out;
}

}  // namespace chronocyclic
