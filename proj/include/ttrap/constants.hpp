#ifndef TTRAP_CONSTANTS_HPP
#define TTRAP_CONSTANTS_HPP

namespace ttrap::constants {

// CODATA 2018 exact/recommended values. Shared by every module so that
// figure-of-merit outputs are bit-reproducible.
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double c0 = 299792458.0;             // m/s
inline constexpr double eps0 = 8.8541878128e-12;      // F/m
inline constexpr double z0 = 376.730313668;           // Ohm
inline constexpr double pi = 3.141592653589793238462643383279502884;

inline constexpr const char* table_version = "codata-2018";

} // namespace ttrap::constants

#endif
