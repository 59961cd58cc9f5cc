// SPDX-License-Identifier: Apache-2.0
//
// mimostca: planar-array radar simulator with adaptive monopulse processing
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIMOSTCA_ARRAY_MODEL_HPP
#define MIMOSTCA_ARRAY_MODEL_HPP

#include <string>

#include "mimostca/types.hpp"

namespace mimostca {

enum class SteeringAxis { horizontal, vertical, full, range_compensated };

struct SteeringVector {
    CVector entries;
    SteeringAxis axis = SteeringAxis::full;
};

/// Labeled complex weight vector (quiescent sum/difference, MVDR, ...).
struct BeamWeights {
    CVector w;
    std::string label;
};

enum class MonopulseAxis { elevation, azimuth, range };
enum class BeamKind { sum, difference };

/// Horizontal (column) steering: entry n = exp(j*2*pi*(d/lambda)*n*u).
SteeringVector horizontal_steering(const RadarConfig &cfg, const Direction &dir);

/// Vertical (row) steering: entry m = exp(j*m*(ways*2*pi*(d/lambda)*sin(el)
/// + 4*pi*mu*R*dt/c)). The range term is what the per-row time shift buys;
/// with dt = 0 the vector is range-independent.
SteeringVector vertical_steering(const RadarConfig &cfg, double elevation, double range,
                                 ElevationPhase phase = ElevationPhase::two_way);

/// Full-array steering a_z kron a_y, length M*N, row-major (row index outer).
SteeringVector full_steering(const RadarConfig &cfg, const Direction &dir, double range,
                             ElevationPhase phase = ElevationPhase::two_way);

/// Per-row compensation vector that cancels the elevation-dependent part of
/// vertical_steering. Hadamard-multiplying a_z(el, R) by it leaves the
/// range-only manifold exp(j*4*pi*m*mu*R*dt/c).
SteeringVector elevation_compensation(const RadarConfig &cfg, double elevation);

/// Quiescent monopulse weights along one axis of the planar array.
/// Sum weights equal the axis steering vector; difference weights negate the
/// second half. The axis length must be even.
BeamWeights quiescent_monopulse_weights(const RadarConfig &cfg, const SteerPoint &steer,
                                        MonopulseAxis axis, BeamKind kind,
                                        ElevationPhase phase = ElevationPhase::two_way);

/// Uniform-line weights for an arbitrary aperture (used at subarray level):
/// entry k = exp(j*k*step_phase), second half negated for difference beams.
BeamWeights ula_weights(int count, double step_phase, BeamKind kind);

/// Gain of an n-element uniform line with per-step relative phase `step`:
/// sum beam = sum_k e^{jk*step}; difference beam negates the second half.
cdouble ula_sum_gain(int n, double step);
cdouble ula_diff_gain(int n, double step);

/// Per-step relative phases of the three monopulse axes (probe minus steer).
double azimuth_step_phase(const RadarConfig &cfg, double u, double u0);
double elevation_step_phase(const RadarConfig &cfg, double v, double v0,
                            ElevationPhase phase = ElevationPhase::two_way);
double range_step_phase(const RadarConfig &cfg, double range, double range0);

}  // namespace mimostca

#endif  // MIMOSTCA_ARRAY_MODEL_HPP
