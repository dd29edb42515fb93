// SPDX-License-Identifier: Apache-2.0
//
// airlink - antenna array SNR and dimensioning for ground-to-air links
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

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace airlink {

/// Exact SI speed of light, m/s. Wavelengths are never rounded.
inline constexpr double speed_of_light_mps = 299'792'458.0;

inline constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Normalization constant applied to every beamforming weight.
/// PerPort scales by 1/sqrt(N) so that each port radiates unit power;
/// FullArray scales by 1/sqrt(N*M) over the whole aperture.
enum class WeightNorm { PerPort, FullArray };

/// Geometry and radiation-pattern parameters of an M x N planar array:
/// M antenna ports (columns), each a stack of N vertically spaced elements
/// driven through a common beamforming weight vector.
struct ArrayConfig {
    int num_ports = 8;                     ///< M, columns of the array
    int num_elements = 8;                  ///< N, active elements per port
    double dv_over_lambda = 0.5;           ///< vertical element spacing, wavelengths
    double dh_over_lambda = 0.5;           ///< horizontal port spacing, wavelengths
    double max_element_gain_dbi = 8.0;     ///< peak element gain G_m
    double theta_3db_deg = 65.0;           ///< elevation half-power beamwidth
    double phi_3db_deg = 65.0;             ///< azimuth half-power beamwidth
    double max_attenuation_db = 30.0;      ///< front-to-back cap A_m
    double sidelobe_attenuation_db = 30.0; ///< vertical side-lobe cap
    double downtilt_deg = 90.0;            ///< beam steering angle, (0, 180)
    double scan_deg = 0.0;                 ///< horizontal steering angle
    WeightNorm weight_norm = WeightNorm::PerPort;
};

/// Line-of-sight placement of the airborne user relative to the array
/// center: slant range d, height h above the array, and azimuth offset.
struct LinkGeometry {
    double range_m = 1000.0;
    double height_m = 0.0;
    double azimuth_deg = 0.0;
};

/// Transmit power, carrier, and noise. The noise power is either given
/// directly in dBm or derived as -174 + 10*log10(bandwidth) + noise figure;
/// exactly one of the two routes must be configured.
struct RadioConfig {
    double tx_power_dbm = 30.0;
    double carrier_hz = 2.0e9;
    std::optional<double> noise_power_dbm = -95.0;
    std::optional<double> bandwidth_hz;
    std::optional<double> noise_figure_db;
};

/// Throw std::invalid_argument if a config violates its invariants.
void validate(const ArrayConfig& cfg);
void validate(const LinkGeometry& geom);
void validate(const RadioConfig& radio);

/// Resolved total noise power in dBm (explicit value or thermal-floor derivation).
double noise_power_dbm(const RadioConfig& radio);

} // namespace airlink
