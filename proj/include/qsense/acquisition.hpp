// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qsense/rng.hpp"
#include "qsense/sensor.hpp"

namespace qsense {

enum class Split { train, validation, test };
const char* to_string(Split s);
Split split_from_string(const std::string& s);

// Measurement schedule: window in seconds, number of interrogation times,
// shots per time instant, repetitions per target, RNG root seed.
struct AcquisitionPlan {
  double window_start = 0.5 * kT0;
  double window_end = kT0;
  int n_points = 101;
  int n_shots = 100;
  int repetitions = 1;
  std::uint64_t seed = 1;

  void validate() const;
  std::vector<double> window_times() const;
};

// Global affine ranges mapping targets onto [0,1]; rad/s internally.
struct RescaleRanges {
  double omega_min = khz_to_rad(1.0);
  double omega_max = khz_to_rad(25.0);
  double xi_min = khz_to_rad(-0.3);
  double xi_max = khz_to_rad(0.3);
};

// (Omega_tg, xi) -> ([0,1], [0,1]); values outside the range map outside
// [0,1] and are left unclipped.
std::array<double, 2> rescale_targets(const TargetParams& tgt,
                                      const RescaleRanges& r);
TargetParams unscale_outputs(const std::array<double, 2>& y,
                             const RescaleRanges& r);

// Inclusive equally spaced target grid, Omega outer / xi inner.
struct GridSpec {
  double omega_min = khz_to_rad(1.0);
  double omega_max = khz_to_rad(25.0);
  int n_omega = 241;
  double xi_min = khz_to_rad(-0.3);
  double xi_max = khz_to_rad(0.3);
  int n_xi = 51;
};
std::vector<TargetParams> build_grid(const GridSpec& g);

// One input row: N_p sampled probabilities with its target pair.
struct Example {
  TargetParams target;
  std::array<double, 2> rescaled;
  int repetition = 0;
  Split split = Split::train;
  std::vector<double> inputs;
};

struct Dataset {
  std::vector<Example> examples;
  GridSpec grid;
  RescaleRanges ranges;
  AcquisitionPlan plan;
  bool noiseless = false;
  bool split_by_target = false;
};

// Mean of n_shots Bernoulli(P_D(t_i)) draws per time instant.
std::vector<double> sample_shots(const ResponseTrace& trace, int n_shots,
                                 RngStream& rng);

// Simulated acquisition over the full grid: one integration per grid
// point (parallel across points), `repetitions` shot records each unless
// noiseless, then a seeded shuffle into exact 70/15/15 splits.
Dataset generate_dataset(const SensorConfig& cfg, const GridSpec& grid,
                         const AcquisitionPlan& plan,
                         const RescaleRanges& ranges, bool noiseless,
                         bool split_by_target, int threads = 0);

// CSV + companion ".meta" key-value file.  The CSV carries seed and
// config-hash header comments.
void write_dataset(const Dataset& ds, const std::string& csv_path,
                   const SensorConfig& cfg);
Dataset load_dataset(const std::string& csv_path);

// Exact-partition split sizes: (round(.7N), round(.15N), remainder).
std::array<std::size_t, 3> split_counts(std::size_t n);

// FNV-1a, used to stamp a config hash into output files.
std::uint64_t fnv1a(const std::string& s);

}  // namespace qsense
