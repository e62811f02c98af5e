#pragma once

#include <cstdint>
#include <vector>

#include "hpm/dataset.hpp"
#include "hpm/descriptor.hpp"

namespace hpm {

struct SurrogateConfig {
  double noise_sigma = 0.0;     // std-dev of additive output noise
  std::uint64_t rng_seed = 0;
  double stress_scale = 100.0;
  double distance_base = 5.0;
};

struct SurrogateOutput {
  double max_stress = 0.0;
  double distance = 0.0;
};

/// Deterministic analytic stand-in for a deep-drawing simulation. Maps the
/// process parameters (blank-holder force, friction) and the task conditions
/// (thickness T, initial yield stress IS, flow-stress saturation S, read
/// positionally from the descriptor) to (max stress, drawing distance):
///
///   eps        = bhf * (0.5 + friction) / T
///   max_stress = (S - (S - IS) * exp(-4 * eps)) / stress_scale
///   distance   = distance_base * (1 - 0.4 * friction)
///                * (1 + 0.2 * (T - 1.5)) - 0.5 * bhf
///
/// The saturating-exponential hardening gives max_stress strictly increasing
/// in bhf and friction (for bhf > 0, S > IS); distance is strictly
/// decreasing in friction. Noise is not applied here.
/// Throws std::invalid_argument for T <= 0, IS <= 0 or IS > S.
SurrogateOutput surrogate_evaluate(double bhf, double friction,
                                   const TaskDescriptor& descriptor,
                                   const SurrogateConfig& config = {});

/// Full cross product of the parameter lists, bhf outer / friction inner,
/// |bhf| * |friction| rows. Outputs are surrogate_evaluate plus
/// N(0, noise_sigma^2) noise drawn from a per-row generator seeded by
/// (rng_seed, descriptor id, row index), so datasets are reproducible and
/// independent of sampling order.
ProcessDataset surrogate_sample_dataset(const TaskDescriptor& descriptor,
                                        const std::vector<double>& bhf_values,
                                        const std::vector<double>& friction_values,
                                        const SurrogateConfig& config);

}  // namespace hpm
