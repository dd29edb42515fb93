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

#include "airlink/link_budget.hpp"

#include <stdexcept>

#include "airlink/array_pattern.hpp"

namespace airlink {

double wavelength_m(const RadioConfig& radio)
{
    if (!(radio.carrier_hz > 0.0))
        throw std::invalid_argument("carrier_hz must be > 0");
    return speed_of_light_mps / radio.carrier_hz;
}

double vertical_angle_deg(const LinkGeometry& geom)
{
    validate(geom);
    return rad2deg(std::acos(geom.height_m / geom.range_m));
}

double linear_gain(double theta_deg, double phi_deg, const ArrayConfig& cfg)
{
    if (!(theta_deg >= 0.0 && theta_deg <= 180.0))
        throw std::invalid_argument("vertical angle must be in [0, 180] degrees");
    if (!(phi_deg >= -180.0 && phi_deg <= 180.0))
        throw std::invalid_argument("azimuth angle must be in [-180, 180] degrees");
    double ph = phi_deg / cfg.phi_3db_deg;
    double th = (theta_deg - 90.0) / cfg.theta_3db_deg;
    return std::pow(10.0, -1.2 * (ph * ph + th * th));
}

double free_space_gain(double range_m, double lambda_m)
{
    if (!(range_m > 0.0))
        throw std::invalid_argument("range_m must be > 0");
    if (!(lambda_m > 0.0))
        throw std::invalid_argument("lambda_m must be > 0");
    double amp = lambda_m / (4.0 * std::numbers::pi * range_m);
    return amp * amp;
}

std::complex<double> channel_coefficient(int c, double theta_deg, double phi_deg,
                                         const ArrayConfig& cfg)
{
    return std::sqrt(linear_gain(theta_deg, phi_deg, cfg)) *
           port_array_factor(c, theta_deg, phi_deg, cfg);
}

Eigen::VectorXcd channel_vector(double theta_deg, double phi_deg, const ArrayConfig& cfg)
{
    Eigen::VectorXcd h(cfg.num_ports);
    double amp = std::sqrt(linear_gain(theta_deg, phi_deg, cfg));
    for (int c = 1; c <= cfg.num_ports; ++c)
        h(c - 1) = amp * port_array_factor(c, theta_deg, phi_deg, cfg);
    return h;
}

} // namespace airlink
