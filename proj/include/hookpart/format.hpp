#pragma once

#include <cstdio>
#include <string>

namespace hookpart {

/// Shortest round-trippable-ish decimal with a forced decimal point, so
/// integral values print as "-1.0" rather than "-1".
inline std::string format_double(double v, int precision = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    std::string s(buf);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

} // namespace hookpart
