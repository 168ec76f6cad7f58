#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chronocyclic/singlephoton.hpp"

namespace chronocyclic {

// %.15g
std::string fmt15(double v);

std::string jsa_csv(const JsaGrid& jsa);
std::string density_csv(const DensityMatrix& dm);
std::string wigner_csv(const WignerGrid& w);
std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows);

// FNV-1a 64-bit, as 16 lower-case hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace chronocyclic
