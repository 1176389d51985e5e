#pragma once

#include <iosfwd>
#include <string>

#include "qmono/tensor.hpp"

// State file format:
//   dims: d0 d1 ... dk
//   re im          (one line per amplitude, row-major)
// The parser renormalizes when |sum - 1| <= 1e-6 and rejects anything worse.

namespace qmono {

constexpr double kFileNormTol = 1e-6;

PureState read_state(std::istream& in, const std::string& origin = "<stream>");
PureState read_state_file(const std::string& path);
void write_state(std::ostream& out, const PureState& psi);
void write_state_file(const std::string& path, const PureState& psi);

}  // namespace qmono
