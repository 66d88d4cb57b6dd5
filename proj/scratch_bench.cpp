#include <chrono>
#include <cmath>
#include <cstdio>

#include "qsense/sensor.hpp"

using namespace qsense;

int main() {
  SensorConfig cfg;
  TargetParams tgt{khz_to_rad(1.0), 0.0};
  auto times = linspace(0.0, kT0, 101);

  auto t0 = std::chrono::steady_clock::now();
  auto trace = integrate_response(cfg, tgt, times, default_step(cfg));
  auto t1 = std::chrono::steady_clock::now();
  double sup = 0;
  for (int i = 0; i < 101; ++i)
    sup = std::max(sup, std::abs(trace.p_d[i] - ideal_response(tgt, times[i])));
  std::printf("harmonic supnorm = %.3e  time(default step) = %.2f s\n", sup,
              std::chrono::duration<double>(t1 - t0).count());

  t0 = std::chrono::steady_clock::now();
  auto tr2 = integrate_response(cfg, tgt, times, max_step(cfg));
  t1 = std::chrono::steady_clock::now();
  double d = 0;
  for (int i = 0; i < 101; ++i) d = std::max(d, std::abs(tr2.p_d[i] - trace.p_d[i]));
  std::printf("coarse-vs-default supnorm = %.3e  time(max step) = %.2f s\n", d,
              std::chrono::duration<double>(t1 - t0).count());

  // non-harmonic case of Fig 3
  TargetParams tgt2{khz_to_rad(14.0), khz_to_rad(0.3)};
  t0 = std::chrono::steady_clock::now();
  auto tr3 = integrate_response(cfg, tgt2, times, default_step(cfg));
  t1 = std::chrono::steady_clock::now();
  std::printf("nonharmonic P_D(t0) = %.6f  time = %.2f s\n", tr3.p_d.back(),
              std::chrono::duration<double>(t1 - t0).count());
  return 0;
}
