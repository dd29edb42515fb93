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

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "airlink/types.hpp"

namespace airlink {

// Angle convention: theta is the zenith-referenced vertical angle in degrees
// (90 = horizon plane, boresight of an untilted element), phi the azimuth
// offset from array boresight. All public interfaces take degrees.

/// Vertical cut of the element power pattern, dB <= 0.
/// -min(12*((theta-90)/theta_3dB)^2, SLA_v). theta in [0, 180].
double vertical_attenuation_db(double theta_deg, const ArrayConfig& cfg);

/// Horizontal cut of the element power pattern, dB <= 0.
/// -min(12*(phi/phi_3dB)^2, A_m). phi in [-180, 180].
double horizontal_attenuation_db(double phi_deg, const ArrayConfig& cfg);

/// 3GPP-style composite element pattern:
/// G_m - min(-(A_v(theta) + A_h(phi)), A_m), bounded to [G_m - A_m, G_m].
double element_pattern_db(double theta_deg, double phi_deg, const ArrayConfig& cfg);

/// Unit-magnitude array response of element row r (1..N), port column c (1..M):
/// exp(i*2*pi*((c-1)*dh*sin(phi)*sin(theta) + (r-1)*dv*cos(theta))).
std::complex<double> steering_entry(int r, int c, double theta_deg, double phi_deg,
                                    const ArrayConfig& cfg);

/// Beamforming weight for element row r, port column c: the conjugate steering
/// phase at (downtilt, scan) scaled by the normalization constant.
std::complex<double> weight_entry(int r, int c, const ArrayConfig& cfg);

/// Normalization constant of the weights: 1/sqrt(N) or 1/sqrt(N*M).
double weight_norm_constant(const ArrayConfig& cfg);

/// N x M steering matrix V with entries steering_entry(r, c).
Eigen::MatrixXcd steering_matrix(double theta_deg, double phi_deg, const ArrayConfig& cfg);

/// N x M weight matrix W with entries weight_entry(r, c).
Eigen::MatrixXcd weight_matrix(const ArrayConfig& cfg);

/// Hadamard product W ∘ V; port c's response is the sum of column c.
Eigen::MatrixXcd array_factor_matrix(double theta_deg, double phi_deg, const ArrayConfig& cfg);

/// Column sum of the array factor matrix for port c:
/// sum_r weight_entry(r,c) * steering_entry(r,c).
std::complex<double> port_array_factor(int c, double theta_deg, double phi_deg,
                                       const ArrayConfig& cfg);

/// Composite port radiation pattern in dB:
/// element_pattern_db + 20*log10(|port_array_factor(1)|).
/// Exact array nulls have no finite dB value and are reported as nullopt.
std::optional<double> port_pattern_db(double theta_deg, double phi_deg, const ArrayConfig& cfg);

} // namespace airlink
