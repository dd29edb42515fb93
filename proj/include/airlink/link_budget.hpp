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

#include <Eigen/Dense>

#include "airlink/types.hpp"

namespace airlink {

/// Carrier wavelength in meters, c0 / f.
double wavelength_m(const RadioConfig& radio);

/// Zenith-referenced vertical angle to the user, degrees in [0, 90]:
/// acos(h / d). 0 means directly overhead, 90 on the horizon plane.
/// Throws if h > d.
double vertical_angle_deg(const LinkGeometry& geom);

/// Combined vertical/horizontal element attenuation in linear scale:
/// 10^(-1.2*((phi/phi_3dB)^2 + ((theta-90)/theta_3dB)^2)).
/// Deliberately uncapped, unlike the dB element pattern; in (0, 1].
double linear_gain(double theta_deg, double phi_deg, const ArrayConfig& cfg);

/// Free-space path gain (lambda / (4*pi*d))^2, linear.
double free_space_gain(double range_m, double lambda_m);

/// Channel coefficient of port c (1..M): sqrt(G(theta, phi)) times the
/// port array factor.
std::complex<double> channel_coefficient(int c, double theta_deg, double phi_deg,
                                         const ArrayConfig& cfg);

/// Full 1 x M channel vector [h_1 ... h_M] as an Eigen column vector.
Eigen::VectorXcd channel_vector(double theta_deg, double phi_deg, const ArrayConfig& cfg);

} // namespace airlink
