#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace speclab {

using OrderedJson = nlohmann::ordered_json;

// Fixed float policy for machine-readable output: values are rounded
// through 12 significant digits before serialization, which keeps reports
// byte-identical across runs and worker counts.
inline double round_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline std::string format_fixed9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", x);
    return buf;
}

}  // namespace speclab
