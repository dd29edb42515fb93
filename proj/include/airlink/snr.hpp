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

#include "airlink/types.hpp"

namespace airlink {

/// One downlink SNR evaluation point. With tracking enabled the downtilt is
/// slaved to the user's vertical angle, so the beam peak follows the user;
/// otherwise the configured downtilt is used as-is.
struct SnrQuery {
    ArrayConfig array;
    LinkGeometry geometry;
    RadioConfig radio;
    bool tracking = false;
};

/// An evaluated SNR point: the query echo plus the result. snr_db is empty
/// at array nulls and below the dB floor.
struct SnrSample {
    int m_ports = 0;
    int n_elements = 0;
    double range_m = 0.0;
    double height_m = 0.0;
    double carrier_hz = 0.0;
    double theta_deg = 0.0;
    double tilt_deg = 0.0;
    bool tracking = false;
    std::optional<double> snr_db;
    double kernel_magnitude = 0.0; ///< |A| in [0, N]
};

/// SNR values below this floor are reported as the null marker.
inline constexpr double snr_floor_db = -400.0;

/// Kernel magnitudes at or below N times this factor count as an array null.
inline constexpr double kernel_null_rel_eps = 1e-12;

/// Phasor sum over the N elements of one port,
///   A = sum_{k=1..N} exp(i*(k-1)*a),  a = 2*pi*dv*(cos(theta) - cos(tilt)),
/// evaluated in closed form as sin(N*a/2)/sin(a/2) * exp(i*a*(N-1)/2).
/// A == N at beam alignment; arguments near multiples of 2*pi are routed
/// through the analytic limit of the sine ratio to avoid cancellation.
std::complex<double> beam_kernel(double theta_deg, double tilt_deg, int n,
                                 double dv_over_lambda);

/// Downlink SNR via the closed-form chain:
///   gamma = P_t * F * 10^(G_m/10) * M * G * |A|^2 / (N * sigma_n^2).
/// Returns nullopt at kernel nulls and below the dB floor.
std::optional<double> closed_form_snr_db(const SnrQuery& q);

/// Downlink SNR via the matrix route: builds the M-port channel vector and
/// evaluates gamma = P_t * F * 10^(G_m/10) * ||h||^2 / sigma_n^2. Under
/// per-port normalization and zero azimuth this equals the closed form.
std::optional<double> matrix_snr_db(const SnrQuery& q);

/// Closed-form evaluation bundled with its query echo.
SnrSample evaluate(const SnrQuery& q);

} // namespace airlink
