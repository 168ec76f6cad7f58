#include "chronocyclic/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chronocyclic/error.hpp"
#include "chronocyclic/presets.hpp"
#include "chronocyclic/units.hpp"

namespace chronocyclic {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

struct Quantity {
  double value;
  std::string unit;  // lower case, may be empty
};

Quantity split_quantity(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw UsageError(key + ": empty value");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || errno == ERANGE || !std::isfinite(v)) {
    throw UsageError(key + ": cannot parse number from '" + text + "'");
  }
  return {v, lower(trim(std::string(end)))};
}

[[noreturn]] void bad_unit(const std::string& key, const std::string& unit, const char* allowed) {
  throw UsageError(key + ": unsupported unit '" + unit + "' (use " + allowed + ")");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::size_t parse_grid(const std::string& text) {
  const Quantity q = split_quantity("grid", text);
  if (!q.unit.empty() || q.value != std::floor(q.value)) throw UsageError("grid: expected an integer, got '" + text + "'");
  const auto n = static_cast<long long>(q.value);
  if (n < 128 || n > 4096 || (n & (n - 1)) != 0) {
    throw UsageError("grid: " + text + " is not a power of two in [128, 4096]");
  }
  return static_cast<std::size_t>(n);
}

FilterTarget parse_target(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "signal") return FilterTarget::Signal;
  if (t == "idler") return FilterTarget::Idler;
  if (t == "both") return FilterTarget::Both;
  throw UsageError("filter: target must be signal, idler or both, got '" + text + "'");
}

const char* target_name(FilterTarget t) {
  switch (t) {
    case FilterTarget::Signal: return "signal";
    case FilterTarget::Idler: return "idler";
    case FilterTarget::Both: return "both";
  }
  return "both";
}

}  // namespace

double parse_length(const std::string& key, const std::string& text) {
  const Quantity q = split_quantity(key, text);
  double scale = 1.0;
  if (q.unit == "nm") scale = units::nm;
  else if (q.unit == "um") scale = units::um;
  else if (q.unit == "mm") scale = units::mm;
  else if (q.unit == "cm") scale = 1e-2;
  else if (q.unit == "m" || q.unit.empty()) scale = 1.0;
  else bad_unit(key, q.unit, "nm, um, mm, cm, m");
  const double v = q.value * scale;
  if (!(v > 0)) throw UsageError(key + ": must be positive");
  return v;
}

double parse_angle(const std::string& key, const std::string& text) {
  const Quantity q = split_quantity(key, text);
  if (q.unit == "deg") return q.value * units::deg;
  if (q.unit == "rad" || q.unit.empty()) return q.value;
  bad_unit(key, q.unit, "deg, rad");
}

double parse_beta(const std::string& key, const std::string& text) {
  const Quantity q = split_quantity(key, text);
  if (q.unit == "fs2") return q.value * units::fs2;
  if (q.unit == "s2" || q.unit.empty()) return q.value;
  bad_unit(key, q.unit, "fs2, s2");
}

double parse_bandwidth(const std::string& key, const std::string& text, double center_wavelength) {
  const Quantity q = split_quantity(key, text);
  double v = 0;
  if (q.unit == "thz") {
    v = q.value * units::Trad_per_s;
  } else if (q.unit == "rad/s" || q.unit.empty()) {
    v = q.value;
  } else if (q.unit == "nm" || q.unit == "um") {
    if (!(center_wavelength > 0)) throw UsageError(key + ": a wavelength bandwidth needs a center wavelength");
    const double dl = q.value * (q.unit == "nm" ? units::nm : units::um);
    v = units::kTwoPi * units::kSpeedOfLight * dl / (center_wavelength * center_wavelength);
  } else {
    bad_unit(key, q.unit, "nm, um, THz (1e12 rad/s), rad/s");
  }
  if (!(v > 0)) throw UsageError(key + ": bandwidth must be positive");
  return v;
}

KeyValues parse_config_text(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key=value, got '" + line + "'");
    }
    kv[lower(trim(line.substr(0, eq)))] = trim(line.substr(eq + 1));
  }
  return kv;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

PumpSpec RunConfig::pump() const { return PumpSpec::from_bandwidth(pump_wavelength, pump_bandwidth, beta); }

Crystal RunConfig::make_crystal() const { return Crystal(crystal); }

RunConfig resolve_config(const KeyValues& kv) {
  static const std::set<std::string> known{"preset", "material", "interaction", "signal_polarization", "length",
                                           "angle", "pump_wavelength", "pump_bandwidth", "beta", "grid", "filter",
                                           "filter_center", "output_dir", "emit"};
  for (const auto& [k, v] : kv) {
    if (!known.count(k)) throw UsageError("config: unknown key '" + k + "'");
  }
  auto get = [&](const char* k) -> const std::string* {
    const auto it = kv.find(k);
    return it == kv.end() ? nullptr : &it->second;
  };

  RunConfig cfg;
  bool have_crystal = false, have_pump = false;
  std::string pump_bw_text;
  if (const auto* p = get("preset")) {
    const SourcePreset& sp = find_preset(*p);
    cfg.preset = sp.name;
    cfg.crystal = sp.crystal;
    cfg.pump_wavelength = sp.pump_wavelength;
    cfg.pump_bandwidth = sp.pump().bandwidth;
    have_crystal = have_pump = true;
  }

  std::vector<std::string> missing;
  auto require = [&](const char* k) {
    const std::string* v = get(k);
    if (v == nullptr) missing.emplace_back(k);
    return v;
  };
  if (!have_crystal) {
    for (const char* k : {"material", "interaction", "length", "angle"}) require(k);
  }
  if (!have_pump) {
    for (const char* k : {"pump_wavelength", "pump_bandwidth"}) require(k);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw UsageError("config: no preset given and required keys are missing: " + list);
  }

  if (const auto* v = get("material")) {
    const std::string m = lower(*v);
    if (m == "bbo") cfg.crystal.material = Material::BBO;
    else if (m == "kdp") cfg.crystal.material = Material::KDP;
    else throw UsageError("material: expected BBO or KDP, got '" + *v + "'");
  }
  if (const auto* v = get("interaction")) {
    const std::string m = lower(*v);
    if (m == "i" || m == "1" || m == "typei") cfg.crystal.interaction = Interaction::TypeI;
    else if (m == "ii" || m == "2" || m == "typeii") cfg.crystal.interaction = Interaction::TypeII;
    else throw UsageError("interaction: expected I or II, got '" + *v + "'");
    if (cfg.crystal.interaction == Interaction::TypeI) cfg.crystal.signal_polarization = Polarization::Ordinary;
  }
  if (const auto* v = get("signal_polarization")) {
    const std::string m = lower(*v);
    if (m == "o" || m == "ordinary") cfg.crystal.signal_polarization = Polarization::Ordinary;
    else if (m == "e" || m == "extraordinary") cfg.crystal.signal_polarization = Polarization::Extraordinary;
    else throw UsageError("signal_polarization: expected o or e, got '" + *v + "'");
  }
  if (const auto* v = get("length")) cfg.crystal.length = parse_length("length", *v);
  if (const auto* v = get("angle")) cfg.crystal.cut_angle = parse_angle("angle", *v);
  if (const auto* v = get("pump_wavelength")) cfg.pump_wavelength = parse_length("pump_wavelength", *v);
  if (const auto* v = get("pump_bandwidth")) cfg.pump_bandwidth = parse_bandwidth("pump_bandwidth", *v, cfg.pump_wavelength);
  if (const auto* v = get("beta")) cfg.beta = parse_beta("beta", *v);
  if (const auto* v = get("grid")) cfg.grid_size = parse_grid(*v);
  if (const auto* v = get("output_dir")) cfg.output_dir = *v;
  if (const auto* v = get("emit")) {
    static const std::set<std::string> kinds{"jsa", "density", "wigner", "scalars", "gauss"};
    cfg.emit.clear();
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = lower(trim(item));
      if (item.empty()) continue;
      if (!kinds.count(item)) throw UsageError("emit: unknown output '" + item + "' (jsa, density, wigner, scalars, gauss)");
      cfg.emit.insert(item);
    }
  }
  if (const auto* v = get("filter")) {
    std::stringstream ss(*v);
    std::string width, target;
    ss >> width >> target;
    FilterConfig f;
    f.text = trim(*v);
    // wavelength widths refer to the degenerate daughter wavelength
    f.fwhm = parse_bandwidth("filter", width, 2 * cfg.pump_wavelength);
    f.which = target.empty() ? FilterTarget::Both : parse_target(target);
    cfg.filter = f;
  }
  if (const auto* v = get("filter_center")) {
    if (!cfg.filter) throw UsageError("filter_center: given without filter");
    const Quantity q = split_quantity("filter_center", *v);
    if (q.unit == "nm" || q.unit == "um") {
      cfg.filter->center = units::omega_from_wavelength(parse_length("filter_center", *v));
    } else if (q.unit == "thz") {
      cfg.filter->center = q.value * units::Trad_per_s;
    } else if (q.unit.empty() || q.unit == "rad/s") {
      cfg.filter->center = q.value;
    } else {
      bad_unit("filter_center", q.unit, "nm, um, THz, rad/s");
    }
  }

  // physical validation through the domain types
  try {
    (void)cfg.make_crystal();
  } catch (const DomainError& e) {
    throw UsageError(std::string("crystal: ") + e.what());
  }
  if (!(cfg.pump_bandwidth > 0)) throw UsageError("pump_bandwidth: must be positive");
  return cfg;
}

std::string config_echo(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# resolved configuration (SI units)\n";
  if (cfg.preset) os << "# from preset " << *cfg.preset << "\n";
  os << "material=" << to_string(cfg.crystal.material) << "\n";
  os << "interaction=" << (cfg.crystal.interaction == Interaction::TypeI ? "I" : "II") << "\n";
  os << "signal_polarization=" << (cfg.crystal.signal_polarization == Polarization::Ordinary ? "o" : "e") << "\n";
  os << "length=" << fmt17(cfg.crystal.length) << "\n";
  os << "angle=" << fmt17(cfg.crystal.cut_angle) << "\n";
  os << "pump_wavelength=" << fmt17(cfg.pump_wavelength) << "\n";
  os << "pump_bandwidth=" << fmt17(cfg.pump_bandwidth) << "\n";
  os << "beta=" << fmt17(cfg.beta) << "\n";
  os << "grid=" << cfg.grid_size << "\n";
  if (cfg.filter) {
    os << "filter=" << fmt17(cfg.filter->fwhm) << " " << target_name(cfg.filter->which) << "\n";
    if (cfg.filter->center) os << "filter_center=" << fmt17(*cfg.filter->center) << "\n";
  }
  os << "output_dir=" << cfg.output_dir << "\n";
  std::string emit;
  for (const auto& e : cfg.emit) emit += (emit.empty() ? "" : ",") + e;
  os << "emit=" << emit << "\n";
  return os.str();
}

}  // namespace chronocyclic
