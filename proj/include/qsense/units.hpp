// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace qsense {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Ordinary frequency in kHz <-> angular frequency in rad/s.  All physics
// code works in rad/s; kHz only appears at CLI and file boundaries.
inline constexpr double khz_to_rad(double f_khz) { return kTwoPi * 1.0e3 * f_khz; }
inline constexpr double rad_to_khz(double w) { return w / (kTwoPi * 1.0e3); }

inline constexpr double ms_to_s(double t_ms) { return 1.0e-3 * t_ms; }
inline constexpr double s_to_ms(double t_s) { return 1.0e3 * t_s; }

// Gyromagnetic ratios are quoted per gauss; fields are carried in tesla.
inline constexpr double kGaussPerTesla = 1.0e4;

// Reference evolution time: one period of the ideal harmonic response at
// Omega_tg = 2*pi*1 kHz (up to the 1.41 rounding used throughout).
inline constexpr double kT0 = 1.41e-3;

}  // namespace qsense
