// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qsense/units.hpp"

namespace qsense {

// Physical constants of the dressed-state Yb+ sensor.  Frequencies are
// angular (rad/s); gyromagnetic ratios are rad/s per tesla; B_z in tesla.
struct SensorConfig {
  double drive_amplitude = khz_to_rad(37.27);              // Omega
  double static_field = 1.0e-3;                            // B_z, tesla
  double gyro_e = kTwoPi * 2.8024e6 * kGaussPerTesla;      // rad/s/T
  double gyro_n = kTwoPi * 4.7248e3 * kGaussPerTesla;      // rad/s/T
  double hyperfine_a = kTwoPi * 12.643e9;                  // A

  void validate() const;  // throws std::invalid_argument
};

// Unknowns of the target field: Rabi amplitude and detuning, rad/s.
struct TargetParams {
  double rabi = 0.0;      // Omega_tg >= 0
  double detuning = 0.0;  // xi, either sign

  void validate() const;
};

// Four complex amplitudes in the dressed basis (|u>, |d>, |D>, |0'>).
struct QuantumState {
  Eigen::Vector4cd amplitudes = Eigen::Vector4cd::Zero();
  double time = 0.0;

  double norm_sq() const { return amplitudes.squaredNorm(); }
  double p_d() const { return std::norm(amplitudes[2]); }
};

// Sensor response: P_D sampled on a strictly increasing time grid.
struct ResponseTrace {
  std::vector<double> times;  // seconds
  std::vector<double> p_d;    // probabilities in [0, 1]
};

// Basis indices.
enum : int { kU = 0, kD_down = 1, kD = 2, kZeroP = 3 };

// Dressed-frame Hamiltonian at time t, in the basis (|u>,|d>,|D>,|0'>).
// Hermitian by construction; rad/s units.
Eigen::Matrix4cd build_hamiltonian(double t, const SensorConfig& cfg,
                                   const TargetParams& tgt);

// Maximum admissible RK4 step: 1/20 of the fastest phase period, and the
// default used throughout: 1/40.
double max_step(const SensorConfig& cfg);
double default_step(const SensorConfig& cfg);

// Integrates i d|psi>/dt = H(t)|psi> from |D> at t=0 with fixed-step RK4
// and returns P_D at each requested time.  Throws on unsorted times or a
// step coarser than max_step.
ResponseTrace integrate_response(const SensorConfig& cfg,
                                 const TargetParams& tgt,
                                 const std::vector<double>& times,
                                 double step);

// Same integration but returning the full state at each requested time.
std::vector<QuantumState> integrate_states(const SensorConfig& cfg,
                                           const TargetParams& tgt,
                                           const std::vector<double>& times,
                                           double step);

// Ideal harmonic response cos^2(pi t / t_R), t_R = 2 pi sqrt(2) / Omega_tg.
// Throws if Omega_tg == 0.
double ideal_response(const TargetParams& tgt, double t);

// Analytic state of the harmonic regime:
// cos(Omega_tg t / (2 sqrt 2)) |D> + i sin(...) |0'>.
QuantumState harmonic_state(const TargetParams& tgt, double t);

// N points equally spaced over [a, b], both endpoints included.
std::vector<double> linspace(double a, double b, int n);

}  // namespace qsense
