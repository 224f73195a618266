#include "cstar/csv.hpp"

#include <cstdio>

namespace cstar::csv {

std::string float17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

std::string boolean(bool b) { return b ? "true" : "false"; }

}  // namespace cstar::csv
