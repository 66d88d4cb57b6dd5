// SPDX-License-Identifier: Apache-2.0
#include "qsense/sensor.hpp"

#include <cmath>
#include <stdexcept>

namespace qsense {

using cd = std::complex<double>;
namespace {
constexpr cd kI{0.0, 1.0};
constexpr double kSqrt2 = 1.4142135623730951;
}  // namespace

void SensorConfig::validate() const {
  if (!(drive_amplitude > 0) || !(static_field > 0) || !(gyro_e > 0) ||
      !(gyro_n > 0) || !(hyperfine_a > 0))
    throw std::invalid_argument("SensorConfig: all fields must be positive");
}

void TargetParams::validate() const {
  if (!(rabi >= 0) || !std::isfinite(rabi) || !std::isfinite(detuning))
    throw std::invalid_argument("TargetParams: require Omega_tg >= 0, finite xi");
}

namespace {

// Derived per-configuration constants: coupling amplitudes and the signed
// frequencies of the five oscillating phases.
struct HamiltonianTerms {
  // amplitudes
  double s;    // Omega / sqrt(2), static splitting of |u>,|d>
  double a2;   // Omega / (2 sqrt 2), fast diagonal wobble
  double b2;   // Omega / 4, fast u,d <-> D coupling
  double c4;   // Omega_tg / 4, u,d <-> 0' target coupling
  double cD;   // Omega_tg / (2 sqrt 2), D <-> 0' target coupling
  // signed phase frequencies: entry phases are e^{i f_k t}
  double f_co;    // -xi                                   (co-rotating line)
  double f_fast;  // gamma_e B_z                            (MW counter-terms)
  double f_c;     // gamma_e B_z - gamma_e^2 B_z^2/(2A) + xi
  double f_d;     // -(gamma_e B_z + xi)
  double f_e;     // -(gamma_e^2 B_z^2/(2A) - xi)

  HamiltonianTerms(const SensorConfig& cfg, const TargetParams& tgt) {
    const double omega = cfg.drive_amplitude;
    s = omega / kSqrt2;
    a2 = omega / (2.0 * kSqrt2);
    b2 = omega / 4.0;
    c4 = tgt.rabi / 4.0;
    cD = tgt.rabi / (2.0 * kSqrt2);
    const double wb = cfg.gyro_e * cfg.static_field;
    const double wq = wb * wb / (2.0 * cfg.hyperfine_a);
    const double xi = tgt.detuning;
    f_co = -xi;
    f_fast = wb;
    f_c = wb - wq + xi;
    f_d = -(wb + xi);
    f_e = -(wq - xi);
  }

  // Upper-triangle entries given the five phasors p_k = e^{i f_k t}.
  // H01 vanishes identically; H22 = H33 = 0.
  void entries(cd p_co, cd p_fast, cd p_c, cd p_d, cd p_e, double& h00,
               cd& h02, cd& h12, cd& h03, cd& h23) const {
    h00 = s - 2.0 * a2 * p_fast.real();
    h02 = cd(0.0, -2.0 * b2 * p_fast.imag());
    h12 = cd(0.0, 2.0 * b2 * p_fast.imag());
    h03 = c4 * (p_co + p_c + p_d + p_e);
    h23 = cD * (-p_co - p_c + p_d + p_e);
  }
};

inline Eigen::Vector4cd rhs(const HamiltonianTerms& ht, cd p_co, cd p_fast,
                            cd p_c, cd p_d, cd p_e,
                            const Eigen::Vector4cd& y) {
  double h00;
  cd h02, h12, h03, h23;
  ht.entries(p_co, p_fast, p_c, p_d, p_e, h00, h02, h12, h03, h23);
  Eigen::Vector4cd d;
  d[0] = -kI * (h00 * y[0] + h02 * y[2] + h03 * y[3]);
  d[1] = -kI * (-h00 * y[1] + h12 * y[2] + h03 * y[3]);
  d[2] = -kI * (std::conj(h02) * y[0] + std::conj(h12) * y[1] + h23 * y[3]);
  d[3] = -kI * (std::conj(h03) * (y[0] + y[1]) + std::conj(h23) * y[2]);
  return d;
}

void check_times(const std::vector<double>& times) {
  double prev = -1.0;
  for (double t : times) {
    if (!(t >= 0.0) || t <= prev)
      throw std::invalid_argument("times must be nonnegative and strictly increasing");
    prev = t;
  }
  if (!times.empty() && times.back() > 20.0 * kT0)
    throw std::invalid_argument("requested time beyond the 20*t0 integration horizon");
}

// Fixed-step RK4 from |D> at t=0, invoking sink(i, state) at each requested
// time.  Sample times are landed on exactly by subdividing each interval
// into equal steps no larger than `step`; the five phasors advance by
// precomputed half-step rotors and are re-anchored with exact exponentials
// at every sample time.
template <class Sink>
void integrate_core(const SensorConfig& cfg, const TargetParams& tgt,
                    const std::vector<double>& times, double step,
                    Sink&& sink) {
  cfg.validate();
  tgt.validate();
  check_times(times);
  if (!(step > 0) || step > max_step(cfg))
    throw std::invalid_argument("step must be positive and at most (2pi/gamma_e B_z)/20");

  const HamiltonianTerms ht(cfg, tgt);
  const double freqs[5] = {ht.f_co, ht.f_fast, ht.f_c, ht.f_d, ht.f_e};

  Eigen::Vector4cd y = Eigen::Vector4cd::Zero();
  y[kD] = 1.0;
  double t = 0.0;

  for (std::size_t i = 0; i < times.size(); ++i) {
    const double span = times[i] - t;
    if (span > 0) {
      const long nsub = long(std::ceil(span / step - 1e-12));
      const double h = span / double(nsub);
      cd rot[5], p[5];
      for (int k = 0; k < 5; ++k) {
        rot[k] = std::exp(kI * (freqs[k] * h * 0.5));
        p[k] = std::exp(kI * (freqs[k] * t));
      }
      for (long n = 0; n < nsub; ++n) {
        cd ph[5], pf[5];
        for (int k = 0; k < 5; ++k) {
          ph[k] = p[k] * rot[k];
          pf[k] = ph[k] * rot[k];
        }
        const Eigen::Vector4cd k1 =
            rhs(ht, p[0], p[1], p[2], p[3], p[4], y);
        const Eigen::Vector4cd k2 =
            rhs(ht, ph[0], ph[1], ph[2], ph[3], ph[4], y + (0.5 * h) * k1);
        const Eigen::Vector4cd k3 =
            rhs(ht, ph[0], ph[1], ph[2], ph[3], ph[4], y + (0.5 * h) * k2);
        const Eigen::Vector4cd k4 =
            rhs(ht, pf[0], pf[1], pf[2], pf[3], pf[4], y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        // Projection back onto the unit sphere; raw RK4 drifts ~2e-8 in
        // norm over a t0-long integration at the default step.
        y /= std::sqrt(y.squaredNorm());
        for (int k = 0; k < 5; ++k) p[k] = pf[k];
      }
      t = times[i];
    }
    const double nrm = y.squaredNorm();
    if (std::abs(nrm - 1.0) > 1e-9)
      throw std::runtime_error("integrator lost unit norm beyond 1e-9");
    sink(i, t, y);
  }
}

}  // namespace

Eigen::Matrix4cd build_hamiltonian(double t, const SensorConfig& cfg,
                                   const TargetParams& tgt) {
  cfg.validate();
  tgt.validate();
  const HamiltonianTerms ht(cfg, tgt);
  cd p[5];
  const double freqs[5] = {ht.f_co, ht.f_fast, ht.f_c, ht.f_d, ht.f_e};
  for (int k = 0; k < 5; ++k) p[k] = std::exp(kI * (freqs[k] * t));

  double h00;
  cd h02, h12, h03, h23;
  ht.entries(p[0], p[1], p[2], p[3], p[4], h00, h02, h12, h03, h23);

  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(kU, kU) = h00;
  h(kD_down, kD_down) = -h00;
  h(kU, kD) = h02;
  h(kD_down, kD) = h12;
  h(kU, kZeroP) = h03;
  h(kD_down, kZeroP) = h03;
  h(kD, kZeroP) = h23;
  h(kD, kU) = std::conj(h02);
  h(kD, kD_down) = std::conj(h12);
  h(kZeroP, kU) = std::conj(h03);
  h(kZeroP, kD_down) = std::conj(h03);
  h(kZeroP, kD) = std::conj(h23);
  return h;
}

double max_step(const SensorConfig& cfg) {
  return (kTwoPi / (cfg.gyro_e * cfg.static_field)) / 20.0;
}

double default_step(const SensorConfig& cfg) {
  return (kTwoPi / (cfg.gyro_e * cfg.static_field)) / 40.0;
}

ResponseTrace integrate_response(const SensorConfig& cfg,
                                 const TargetParams& tgt,
                                 const std::vector<double>& times,
                                 double step) {
  ResponseTrace trace;
  trace.times = times;
  trace.p_d.resize(times.size());
  integrate_core(cfg, tgt, times, step,
                 [&](std::size_t i, double, const Eigen::Vector4cd& y) {
                   double p = std::norm(y[kD]);
                   trace.p_d[i] = p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
                 });
  return trace;
}

std::vector<QuantumState> integrate_states(const SensorConfig& cfg,
                                           const TargetParams& tgt,
                                           const std::vector<double>& times,
                                           double step) {
  std::vector<QuantumState> states(times.size());
  integrate_core(cfg, tgt, times, step,
                 [&](std::size_t i, double t, const Eigen::Vector4cd& y) {
                   states[i].amplitudes = y;
                   states[i].time = t;
                 });
  return states;
}

double ideal_response(const TargetParams& tgt, double t) {
  tgt.validate();
  if (tgt.rabi <= 0.0)
    throw std::invalid_argument("ideal_response: t_R undefined for Omega_tg = 0");
  const double t_r = kTwoPi * kSqrt2 / tgt.rabi;
  const double c = std::cos(M_PI * t / t_r);
  return c * c;
}

QuantumState harmonic_state(const TargetParams& tgt, double t) {
  tgt.validate();
  const double phase = tgt.rabi * t / (2.0 * kSqrt2);
  QuantumState st;
  st.time = t;
  st.amplitudes[kD] = std::cos(phase);
  st.amplitudes[kZeroP] = kI * std::sin(phase);
  return st;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2 || !(b > a))
    throw std::invalid_argument("linspace: need n >= 2 and b > a");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = a + (b - a) * double(i) / double(n - 1);
  v.back() = b;
  return v;
}

}  // namespace qsense
