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

#include "airlink/array_pattern.hpp"

#include <sstream>
#include <stdexcept>

namespace airlink {

namespace {

void check_theta(double theta_deg)
{
    if (!(theta_deg >= 0.0 && theta_deg <= 180.0))
    {
        std::ostringstream msg;
        msg << "vertical angle must be in [0, 180] degrees, got " << theta_deg;
        throw std::invalid_argument(msg.str());
    }
}

void check_phi(double phi_deg)
{
    if (!(phi_deg >= -180.0 && phi_deg <= 180.0))
    {
        std::ostringstream msg;
        msg << "azimuth angle must be in [-180, 180] degrees, got " << phi_deg;
        throw std::invalid_argument(msg.str());
    }
}

void check_indices(int r, int c, const ArrayConfig& cfg)
{
    if (r < 1 || r > cfg.num_elements)
        throw std::invalid_argument("element row index out of range [1, N]");
    if (c < 1 || c > cfg.num_ports)
        throw std::invalid_argument("port column index out of range [1, M]");
}

} // namespace

double vertical_attenuation_db(double theta_deg, const ArrayConfig& cfg)
{
    check_theta(theta_deg);
    double off = (theta_deg - 90.0) / cfg.theta_3db_deg;
    return -std::min(12.0 * off * off, cfg.sidelobe_attenuation_db);
}

double horizontal_attenuation_db(double phi_deg, const ArrayConfig& cfg)
{
    check_phi(phi_deg);
    double off = phi_deg / cfg.phi_3db_deg;
    return -std::min(12.0 * off * off, cfg.max_attenuation_db);
}

double element_pattern_db(double theta_deg, double phi_deg, const ArrayConfig& cfg)
{
    double av = vertical_attenuation_db(theta_deg, cfg);
    double ah = horizontal_attenuation_db(phi_deg, cfg);
    return cfg.max_element_gain_dbi - std::min(-(av + ah), cfg.max_attenuation_db);
}

std::complex<double> steering_entry(int r, int c, double theta_deg, double phi_deg,
                                    const ArrayConfig& cfg)
{
    check_indices(r, c, cfg);
    check_theta(theta_deg);
    check_phi(phi_deg);
    double theta = deg2rad(theta_deg);
    double phi = deg2rad(phi_deg);
    double phase = 2.0 * std::numbers::pi *
                   ((c - 1) * cfg.dh_over_lambda * std::sin(phi) * std::sin(theta) +
                    (r - 1) * cfg.dv_over_lambda * std::cos(theta));
    return std::polar(1.0, phase);
}

double weight_norm_constant(const ArrayConfig& cfg)
{
    double n = static_cast<double>(cfg.num_elements);
    if (cfg.weight_norm == WeightNorm::FullArray)
        n *= static_cast<double>(cfg.num_ports);
    return 1.0 / std::sqrt(n);
}

std::complex<double> weight_entry(int r, int c, const ArrayConfig& cfg)
{
    check_indices(r, c, cfg);
    double tilt = deg2rad(cfg.downtilt_deg);
    double scan = deg2rad(cfg.scan_deg);
    double phase = -2.0 * std::numbers::pi *
                   ((c - 1) * cfg.dh_over_lambda * std::sin(scan) * std::sin(tilt) +
                    (r - 1) * cfg.dv_over_lambda * std::cos(tilt));
    return std::polar(weight_norm_constant(cfg), phase);
}

Eigen::MatrixXcd steering_matrix(double theta_deg, double phi_deg, const ArrayConfig& cfg)
{
    Eigen::MatrixXcd v(cfg.num_elements, cfg.num_ports);
    for (int c = 1; c <= cfg.num_ports; ++c)
        for (int r = 1; r <= cfg.num_elements; ++r)
            v(r - 1, c - 1) = steering_entry(r, c, theta_deg, phi_deg, cfg);
    return v;
}

Eigen::MatrixXcd weight_matrix(const ArrayConfig& cfg)
{
    Eigen::MatrixXcd w(cfg.num_elements, cfg.num_ports);
    for (int c = 1; c <= cfg.num_ports; ++c)
        for (int r = 1; r <= cfg.num_elements; ++r)
            w(r - 1, c - 1) = weight_entry(r, c, cfg);
    return w;
}

Eigen::MatrixXcd array_factor_matrix(double theta_deg, double phi_deg, const ArrayConfig& cfg)
{
    return weight_matrix(cfg).cwiseProduct(steering_matrix(theta_deg, phi_deg, cfg));
}

std::complex<double> port_array_factor(int c, double theta_deg, double phi_deg,
                                       const ArrayConfig& cfg)
{
    check_indices(1, c, cfg);
    std::complex<double> sum(0.0, 0.0);
    for (int r = 1; r <= cfg.num_elements; ++r)
        sum += weight_entry(r, c, cfg) * steering_entry(r, c, theta_deg, phi_deg, cfg);
    return sum;
}

std::optional<double> port_pattern_db(double theta_deg, double phi_deg, const ArrayConfig& cfg)
{
    double element = element_pattern_db(theta_deg, phi_deg, cfg);
    double mag = std::abs(port_array_factor(1, theta_deg, phi_deg, cfg));
    if (mag == 0.0)
        return std::nullopt;
    return element + 20.0 * std::log10(mag);
}

} // namespace airlink
