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

#include "airlink/types.hpp"

#include <stdexcept>

namespace airlink {

void validate(const ArrayConfig& cfg)
{
    if (cfg.num_ports < 1)
        throw std::invalid_argument("num_ports must be >= 1");
    if (cfg.num_elements < 1)
        throw std::invalid_argument("num_elements must be >= 1");
    if (!(cfg.dv_over_lambda > 0.0))
        throw std::invalid_argument("dv_over_lambda must be > 0");
    if (!(cfg.dh_over_lambda > 0.0))
        throw std::invalid_argument("dh_over_lambda must be > 0");
    if (!(cfg.theta_3db_deg > 0.0))
        throw std::invalid_argument("theta_3db_deg must be > 0");
    if (!(cfg.phi_3db_deg > 0.0))
        throw std::invalid_argument("phi_3db_deg must be > 0");
    if (!(cfg.max_attenuation_db > 0.0))
        throw std::invalid_argument("max_attenuation_db must be > 0");
    if (!(cfg.sidelobe_attenuation_db > 0.0))
        throw std::invalid_argument("sidelobe_attenuation_db must be > 0");
    if (!(cfg.downtilt_deg > 0.0 && cfg.downtilt_deg < 180.0))
        throw std::invalid_argument("downtilt_deg must be in (0, 180)");
    if (!(cfg.scan_deg >= -180.0 && cfg.scan_deg <= 180.0))
        throw std::invalid_argument("scan_deg must be in [-180, 180]");
}

void validate(const LinkGeometry& geom)
{
    if (!(geom.range_m > 0.0))
        throw std::invalid_argument("range_m must be > 0");
    if (!(geom.height_m >= 0.0))
        throw std::invalid_argument("height_m must be >= 0");
    if (geom.height_m > geom.range_m)
        throw std::invalid_argument("height_m exceeds range_m: user is geometrically unreachable");
    if (!(geom.azimuth_deg >= -180.0 && geom.azimuth_deg <= 180.0))
        throw std::invalid_argument("azimuth_deg must be in [-180, 180]");
}

void validate(const RadioConfig& radio)
{
    if (!(radio.carrier_hz > 0.0))
        throw std::invalid_argument("carrier_hz must be > 0");
    bool derived = radio.bandwidth_hz.has_value() && radio.noise_figure_db.has_value();
    if (radio.bandwidth_hz.has_value() != radio.noise_figure_db.has_value())
        throw std::invalid_argument("bandwidth_hz and noise_figure_db must be given together");
    if (radio.noise_power_dbm.has_value() == derived)
        throw std::invalid_argument(
            "noise power must come from exactly one of: noise_power_dbm, or "
            "bandwidth_hz plus noise_figure_db");
    if (derived && !(*radio.bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth_hz must be > 0");
}

double noise_power_dbm(const RadioConfig& radio)
{
    validate(radio);
    if (radio.noise_power_dbm)
        return *radio.noise_power_dbm;
    // thermal floor -174 dBm/Hz plus receiver noise figure
    return -174.0 + 10.0 * std::log10(*radio.bandwidth_hz) + *radio.noise_figure_db;
}

} // namespace airlink
