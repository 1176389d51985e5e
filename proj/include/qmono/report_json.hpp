#pragma once

#include <string>

#include "qmono/monogamy.hpp"

namespace qmono {

// One object per alpha: {state, measure, alpha, bounds: [...], residuals: [...]},
// serialized as an array over the grid. Bound rows carry exactly
// {id, lhs, rhs, gap, satisfied, premise_ok, status}.
std::string report_to_json(const MonogamyReport& report);

std::string report_to_csv(const MonogamyReport& report);  // 12 significant digits

}  // namespace qmono
