// units.hpp: energy/time conventions shared by every module.
//
// All energies, rates and frequencies are carried in wavenumbers (cm^-1) and
// all user-facing times in femtoseconds. Internally a time t (fs) is mapped to
// a "reduced time" s = 2*pi*c*t (cm), so that a phase is simply omega[cm^-1]*s
// and an exponential decay is exp(-rate[cm^-1]*s).

#pragma once

#include <numbers>

namespace dqcsim::units {

inline constexpr double pi = std::numbers::pi;

// Speed of light in cm/fs.
inline constexpr double speed_of_light_cm_per_fs = 2.99792458e-5;

// Angular frequency (rad/fs) carried by 1 cm^-1.
inline constexpr double rad_per_fs_per_cm1 = 2.0 * pi * speed_of_light_cm_per_fs;

// Boltzmann constant in cm^-1 / K (CODATA 2018).
inline constexpr double boltzmann_cm1_per_K = 0.695034800;

inline constexpr double fs_to_reduced(double t_fs) noexcept { return t_fs * rad_per_fs_per_cm1; }
inline constexpr double reduced_to_fs(double s_cm) noexcept { return s_cm / rad_per_fs_per_cm1; }

// A frequency expressed in cm^-1 converted to rad/fs, and back.
inline constexpr double cm1_to_rad_per_fs(double w) noexcept { return w * rad_per_fs_per_cm1; }
inline constexpr double rad_per_fs_to_cm1(double w) noexcept { return w / rad_per_fs_per_cm1; }

// Inverse thermal energy beta = 1/(k_B T) in cm.
inline constexpr double beta_cm(double temperature_K) noexcept {
    return 1.0 / (boltzmann_cm1_per_K * temperature_K);
}

}  // namespace dqcsim::units
