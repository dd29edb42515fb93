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

#include "airlink/snr.hpp"

#include <stdexcept>

#include "airlink/array_pattern.hpp"
#include "airlink/link_budget.hpp"

namespace airlink {

std::complex<double> beam_kernel(double theta_deg, double tilt_deg, int n,
                                 double dv_over_lambda)
{
    if (n < 1)
        throw std::invalid_argument("element count must be >= 1");
    double a = 2.0 * std::numbers::pi * dv_over_lambda *
               (std::cos(deg2rad(theta_deg)) - std::cos(deg2rad(tilt_deg)));
    if (a == 0.0)
        return {static_cast<double>(n), 0.0};

    double half = 0.5 * a;
    double sin_half = std::sin(half);
    double phase = half * (n - 1);
    if (std::abs(sin_half) < 1e-12 && std::abs(std::sin(n * half)) < 1e-9)
    {
        // a within rounding of 2*pi*k: all phasors realigned. The sine ratio
        // is 0/0 here; its limit is n*cos(n*a/2)/cos(a/2).
        double limit = n * std::cos(n * half) / std::cos(half);
        return std::polar(limit, phase);
    }
    double ratio = std::sin(n * half) / sin_half;
    return std::polar(ratio, phase);
}

namespace {

struct SnrParts {
    double theta_deg;
    double tilt_deg;
    double budget_lin; ///< P_t * F * 10^(G_m/10) / sigma_n^2, linear
    double gain_lin;   ///< G(theta, phi)
};

SnrParts common_parts(const SnrQuery& q)
{
    validate(q.array);
    validate(q.geometry);
    double theta = vertical_angle_deg(q.geometry);
    double tilt = q.tracking ? theta : q.array.downtilt_deg;
    double lambda = wavelength_m(q.radio);
    double budget = db_to_linear(q.radio.tx_power_dbm) *
                    free_space_gain(q.geometry.range_m, lambda) *
                    db_to_linear(q.array.max_element_gain_dbi) /
                    db_to_linear(noise_power_dbm(q.radio));
    double gain = linear_gain(theta, q.geometry.azimuth_deg, q.array);
    return {theta, tilt, budget, gain};
}

std::optional<double> to_db_with_floor(double snr_lin)
{
    if (snr_lin <= 0.0)
        return std::nullopt;
    double db = linear_to_db(snr_lin);
    if (db < snr_floor_db)
        return std::nullopt;
    return db;
}

} // namespace

std::optional<double> closed_form_snr_db(const SnrQuery& q)
{
    SnrParts p = common_parts(q);
    int n = q.array.num_elements;
    double kernel_mag =
        q.tracking ? static_cast<double>(n)
                   : std::abs(beam_kernel(p.theta_deg, p.tilt_deg, n, q.array.dv_over_lambda));
    if (kernel_mag <= kernel_null_rel_eps * n)
        return std::nullopt;
    double snr_lin = p.budget_lin * q.array.num_ports * p.gain_lin * kernel_mag * kernel_mag /
                     static_cast<double>(n);
    return to_db_with_floor(snr_lin);
}

std::optional<double> matrix_snr_db(const SnrQuery& q)
{
    SnrParts p = common_parts(q);
    ArrayConfig steered = q.array;
    steered.downtilt_deg = p.tilt_deg;
    Eigen::VectorXcd h = channel_vector(p.theta_deg, q.geometry.azimuth_deg, steered);
    double channel_power = h.squaredNorm();
    // ||h||^2 = G * M * kappa^2 * |A|^2, so this bound matches the closed
    // form's |A| <= N * eps null classification.
    double kappa = weight_norm_constant(steered);
    double null_mag = steered.num_elements * kernel_null_rel_eps;
    double null_bound = p.gain_lin * steered.num_ports * kappa * kappa * null_mag * null_mag;
    if (channel_power <= null_bound)
        return std::nullopt;
    return to_db_with_floor(p.budget_lin * channel_power);
}

SnrSample evaluate(const SnrQuery& q)
{
    SnrParts p = common_parts(q);
    int n = q.array.num_elements;
    double kernel_mag =
        q.tracking ? static_cast<double>(n)
                   : std::abs(beam_kernel(p.theta_deg, p.tilt_deg, n, q.array.dv_over_lambda));

    SnrSample sample;
    sample.m_ports = q.array.num_ports;
    sample.n_elements = n;
    sample.range_m = q.geometry.range_m;
    sample.height_m = q.geometry.height_m;
    sample.carrier_hz = q.radio.carrier_hz;
    sample.theta_deg = p.theta_deg;
    sample.tilt_deg = p.tilt_deg;
    sample.tracking = q.tracking;
    sample.kernel_magnitude = std::clamp(kernel_mag, 0.0, static_cast<double>(n));
    sample.snr_db = closed_form_snr_db(q);
    return sample;
}

} // namespace airlink
