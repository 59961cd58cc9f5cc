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

#ifndef MIMOSTCA_TYPES_HPP
#define MIMOSTCA_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mimostca {

using cdouble = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Exact speed of light used everywhere (m/s).
inline constexpr double kSpeedOfLight = 2.99792458e8;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Raised when a linear solve or estimator degenerates (singular covariance,
/// vanishing sum beam, ...). Maps to a dedicated process exit code.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Planar-array and waveform constants. Rows step the vertical (z) axis and
/// carry the per-row transmit time shift; columns step the horizontal (y)
/// axis. All internal element indices are 0-based.
struct RadarConfig {
    int rows = 16;                   // M
    int cols = 16;                   // N
    double element_spacing = 0.015;  // d [m]
    double carrier_hz = 10.0e9;      // f0
    double bandwidth_hz = 20.0e6;    // B
    double pulse_width_s = 10.0e-6;  // Tp
    double time_shift_s = 5.0e-8;    // per-row transmit shift [s]
    double prf_hz = 20.0e3;

    double wavelength() const { return kSpeedOfLight / carrier_hz; }
    double chirp_rate() const { return bandwidth_hz / pulse_width_s; }
    /// d/lambda, the spacing in wavelengths.
    double spacing_wavelengths() const { return element_spacing / wavelength(); }
    int elements() const { return rows * cols; }

    void validate() const {
        if (rows < 2 || cols < 2)
            throw std::invalid_argument("RadarConfig: rows and cols must be >= 2");
        if (element_spacing <= 0.0 || carrier_hz <= 0.0 || bandwidth_hz <= 0.0 ||
            pulse_width_s <= 0.0)
            throw std::invalid_argument("RadarConfig: physical constants must be positive");
        if (time_shift_s < 0.0)
            throw std::invalid_argument("RadarConfig: time shift must be >= 0");
    }

    /// Same radar with the row time shift removed (angle-only mode).
    RadarConfig without_time_shift() const {
        RadarConfig c = *this;
        c.time_shift_s = 0.0;
        return c;
    }
};

/// Look/arrival direction. u and v are the direction cosines of the planar
/// array: u = cos(el)*sin(az), v = sin(el).
struct Direction {
    double azimuth = 0.0;    // [rad]
    double elevation = 0.0;  // [rad]

    double u() const { return std::cos(elevation) * std::sin(azimuth); }
    double v() const { return std::sin(elevation); }

    static Direction from_degrees(double az_deg, double el_deg) {
        return Direction{deg2rad(az_deg), deg2rad(el_deg)};
    }
};

/// Beam steer point: direction plus range (range matters only when the row
/// time shift is non-zero).
struct SteerPoint {
    Direction dir;
    double range = 0.0;  // [m]
};

enum class EmitterKind { target, jammer };

/// Point source. power_db is per-element power relative to unit noise power
/// (SNR for targets, JNR for jammers).
struct Emitter {
    EmitterKind kind = EmitterKind::target;
    Direction dir;
    double range = 0.0;  // [m]
    double power_db = 0.0;

    double power() const { return std::pow(10.0, power_db / 10.0); }

    void validate() const {
        if (range <= 0.0)
            throw std::invalid_argument("Emitter: range must be positive");
        if (!std::isfinite(power_db))
            throw std::invalid_argument("Emitter: power must be finite");
    }
};

/// One-way vs two-way vertical phase accumulation. Collocated transmit
/// steering doubles the elevation phase per row; a conventional phased array
/// with a single coherent transmit beam keeps only the receive term.
enum class ElevationPhase { two_way, one_way };

}  // namespace mimostca

#endif  // MIMOSTCA_TYPES_HPP
