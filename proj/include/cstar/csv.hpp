#pragma once

#include <string>

namespace cstar::csv {

// 17 significant digits, enough to round-trip any double exactly.
std::string float17(double x);

std::string boolean(bool b);

}  // namespace cstar::csv
