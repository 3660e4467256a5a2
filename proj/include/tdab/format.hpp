#pragma once

#include <cstdio>
#include <string>

namespace tdab {

/// Formats a double with 17 significant digits ("%.17g"), enough to
/// round-trip any IEEE-754 binary64 value. Used for all emitted CSV /
/// plot-data numbers so outputs are byte-identical across runs.
inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace tdab
