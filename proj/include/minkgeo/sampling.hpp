#pragma once

#include <cstdint>

#include "minkgeo/rng.hpp"

namespace minkgeo {

/// Draws a random direction (not normalized) whose coordinates all sit at
/// angular distance >= min_angle from zero, i.e. away from the axis
/// singularities of fractional p-norms. Uses bounded rejection on slots
/// starting at slot_base; returns false if the budget is exhausted.
bool sample_offaxis_direction(const CounterRng& rng, uint64_t idx, uint32_t slot_base, int dim,
                              double min_angle, double* out);

}  // namespace minkgeo
