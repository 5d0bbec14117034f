#pragma once

// CODATA 2018 values, SI base units throughout the library.
namespace fringelab::constants {

inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double planck_h = 6.62607015e-34;        // J s
inline constexpr double neutron_mass = 1.67492749804e-27; // kg

} // namespace fringelab::constants
