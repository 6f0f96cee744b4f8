#ifndef BICM_CSV_HPP
#define BICM_CSV_HPP

#include <cmath>
#include <cstdio>
#include <string>

namespace bicm::csv {

/// Fixed 12-significant-digit formatting so repeated runs emit byte-identical
/// files; infinities serialize as the literal "inf".
inline std::string number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

}  // namespace bicm::csv

#endif
