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

#include "mimostca/array_model.hpp"

#include <cmath>

namespace mimostca {

namespace {

CVector unit_phase_ramp(int count, double step_phase) {
    CVector v(count);
    for (int k = 0; k < count; ++k)
        v[k] = std::polar(1.0, step_phase * static_cast<double>(k));
    return v;
}

double elevation_ways(ElevationPhase phase) {
    return phase == ElevationPhase::two_way ? 2.0 : 1.0;
}

}  // namespace

SteeringVector horizontal_steering(const RadarConfig &cfg, const Direction &dir) {
    cfg.validate();
    const double step = 2.0 * kPi * cfg.spacing_wavelengths() * dir.u();
    return {unit_phase_ramp(cfg.cols, step), SteeringAxis::horizontal};
}

SteeringVector vertical_steering(const RadarConfig &cfg, double elevation, double range,
                                 ElevationPhase phase) {
    cfg.validate();
    if (range <= 0.0)
        throw std::invalid_argument("vertical_steering: range must be positive");
    const double angle_term =
        elevation_ways(phase) * 2.0 * kPi * cfg.spacing_wavelengths() * std::sin(elevation);
    const double range_term =
        4.0 * kPi * cfg.chirp_rate() * range * cfg.time_shift_s / kSpeedOfLight;
    return {unit_phase_ramp(cfg.rows, angle_term + range_term), SteeringAxis::vertical};
}

SteeringVector full_steering(const RadarConfig &cfg, const Direction &dir, double range,
                             ElevationPhase phase) {
    const CVector az = vertical_steering(cfg, dir.elevation, range, phase).entries;
    const CVector ay = horizontal_steering(cfg, dir).entries;
    CVector v(cfg.elements());
    for (int m = 0; m < cfg.rows; ++m)
        v.segment(static_cast<Eigen::Index>(m) * cfg.cols, cfg.cols) = az[m] * ay;
    return {std::move(v), SteeringAxis::full};
}

SteeringVector elevation_compensation(const RadarConfig &cfg, double elevation) {
    cfg.validate();
    // Cancels the full two-way elevation term of vertical_steering so the
    // compensated manifold depends on range alone.
    const double step = -4.0 * kPi * cfg.spacing_wavelengths() * std::sin(elevation);
    return {unit_phase_ramp(cfg.rows, step), SteeringAxis::range_compensated};
}

BeamWeights ula_weights(int count, double step_phase, BeamKind kind) {
    if (count < 2 || count % 2 != 0)
        throw std::invalid_argument("ula_weights: axis length must be even and >= 2");
    CVector w = unit_phase_ramp(count, step_phase);
    if (kind == BeamKind::difference)
        w.tail(count / 2) *= -1.0;
    return {std::move(w), kind == BeamKind::sum ? "sum" : "difference"};
}

BeamWeights quiescent_monopulse_weights(const RadarConfig &cfg, const SteerPoint &steer,
                                        MonopulseAxis axis, BeamKind kind,
                                        ElevationPhase phase) {
    cfg.validate();
    double step = 0.0;
    int count = 0;
    std::string label;
    switch (axis) {
        case MonopulseAxis::elevation:
            count = cfg.rows;
            step = elevation_ways(phase) * 2.0 * kPi * cfg.spacing_wavelengths() *
                   std::sin(steer.dir.elevation);
            label = "elevation";
            break;
        case MonopulseAxis::azimuth:
            count = cfg.cols;
            step = 2.0 * kPi * cfg.spacing_wavelengths() * steer.dir.u();
            label = "azimuth";
            break;
        case MonopulseAxis::range:
            count = cfg.rows;
            step = 4.0 * kPi * cfg.chirp_rate() * steer.range * cfg.time_shift_s /
                   kSpeedOfLight;
            label = "range";
            break;
    }
    BeamWeights bw = ula_weights(count, step, kind);
    bw.label = label + "_" + bw.label;
    return bw;
}

cdouble ula_sum_gain(int n, double step) {
    cdouble acc(0.0, 0.0);
    for (int k = 0; k < n; ++k)
        acc += std::polar(1.0, step * static_cast<double>(k));
    return acc;
}

cdouble ula_diff_gain(int n, double step) {
    cdouble acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        const double sign = (k < n / 2) ? 1.0 : -1.0;
        acc += sign * std::polar(1.0, step * static_cast<double>(k));
    }
    return acc;
}

double azimuth_step_phase(const RadarConfig &cfg, double u, double u0) {
    return 2.0 * kPi * cfg.spacing_wavelengths() * (u - u0);
}

double elevation_step_phase(const RadarConfig &cfg, double v, double v0, ElevationPhase phase) {
    return elevation_ways(phase) * 2.0 * kPi * cfg.spacing_wavelengths() * (v - v0);
}

double range_step_phase(const RadarConfig &cfg, double range, double range0) {
    return 4.0 * kPi * cfg.chirp_rate() * cfg.time_shift_s * (range - range0) / kSpeedOfLight;
}

}  // namespace mimostca
