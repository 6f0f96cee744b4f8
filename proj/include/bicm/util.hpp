#ifndef BICM_UTIL_HPP
#define BICM_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bicm {

inline constexpr double kLog2E = std::numbers::log2e;
inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

/// log2 of a power of two; throws otherwise.
inline int exact_log2(std::int64_t v) {
    if (!is_power_of_two(v)) throw std::domain_error("value " + std::to_string(v) + " is not a power of two");
    int m = 0;
    while (v > 1) {
        v >>= 1;
        ++m;
    }
    return m;
}

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double db_to_linear(double x) { return std::pow(10.0, x / 10.0); }

}  // namespace bicm

#endif
