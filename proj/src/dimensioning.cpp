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

#include "airlink/dimensioning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "airlink/link_budget.hpp"

namespace airlink {

namespace {

constexpr const char* kNullNote = "array null at this geometry";

std::optional<double> snr_with_ports(const DimensioningQuery& q, std::int64_t m)
{
    SnrQuery sq{q.array, q.geometry, q.radio, q.tracking};
    sq.array.num_ports = static_cast<int>(std::min<std::int64_t>(m, INT32_MAX));
    return closed_form_snr_db(sq);
}

} // namespace

DimensioningResult antennas_required(const DimensioningQuery& q)
{
    validate(q.array);
    validate(q.geometry);
    validate(q.radio);

    double theta = vertical_angle_deg(q.geometry);
    double tilt = q.tracking ? theta : q.array.downtilt_deg;
    int n = q.array.num_elements;
    double kernel_mag =
        q.tracking ? static_cast<double>(n)
                   : std::abs(beam_kernel(theta, tilt, n, q.array.dv_over_lambda));

    DimensioningResult result;
    if (kernel_mag <= kernel_null_rel_eps * n)
    {
        result.note = kNullNote;
        return result;
    }

    double lambda = wavelength_m(q.radio);
    double gain = linear_gain(theta, q.geometry.azimuth_deg, q.array);
    double four_pi_d = 4.0 * std::numbers::pi * q.geometry.range_m;
    double exact = db_to_linear(q.target_snr_db) * db_to_linear(noise_power_dbm(q.radio)) *
                   four_pi_d * four_pi_d * n /
                   (db_to_linear(q.radio.tx_power_dbm) * lambda * lambda *
                    db_to_linear(q.array.max_element_gain_dbi) * gain * kernel_mag * kernel_mag);

    result.feasible = true;
    result.exact_ports = exact;
    std::int64_t ports = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::ceil(std::min(exact, 9.0e15))));
    if (exact > 9.0e15)
        result.note = "required port count exceeds representable range";

    // The formula and the dB-domain comparison can disagree by one step at the
    // boundary; reconcile against the forward model so the result is the true
    // minimum with respect to closed_form_snr_db. Skipped for port counts
    // beyond int range, where the forward model cannot be evaluated exactly.
    if (ports <= (std::int64_t{1} << 30))
    {
        for (int i = 0; i < 8; ++i)
        {
            auto snr = snr_with_ports(q, ports);
            if (snr && *snr >= q.target_snr_db)
                break;
            ++ports;
        }
        for (int i = 0; i < 8 && ports > 1; ++i)
        {
            auto below = snr_with_ports(q, ports - 1);
            if (!below || *below < q.target_snr_db)
                break;
            --ports;
        }
        result.achieved_snr_db = snr_with_ports(q, ports);
    }
    result.min_ports = ports;
    return result;
}

DimensioningResult min_antennas_oracle(const DimensioningQuery& q, std::int64_t m_cap)
{
    if (m_cap < 1)
        throw std::invalid_argument("m_cap must be >= 1");
    validate(q.array);
    validate(q.geometry);
    validate(q.radio);

    DimensioningResult result;

    // The kernel does not depend on M; a null at M = 1 is a null for every M.
    double theta = vertical_angle_deg(q.geometry);
    double tilt = q.tracking ? theta : q.array.downtilt_deg;
    int n = q.array.num_elements;
    double kernel_mag =
        q.tracking ? static_cast<double>(n)
                   : std::abs(beam_kernel(theta, tilt, n, q.array.dv_over_lambda));
    if (kernel_mag <= kernel_null_rel_eps * n)
    {
        result.note = kNullNote;
        return result;
    }

    for (std::int64_t m = 1; m <= m_cap; ++m)
    {
        auto snr = snr_with_ports(q, m);
        if (snr && *snr >= q.target_snr_db)
        {
            result.feasible = true;
            result.min_ports = m;
            result.exact_ports = static_cast<double>(m);
            result.achieved_snr_db = snr;
            return result;
        }
    }
    result.note = "target not reachable within port cap";
    return result;
}

RangeResult max_range(std::int64_t m_ports, double target_snr_db, const LinkGeometry& geom,
                      const RadioConfig& radio, const ArrayConfig& array, bool tracking,
                      double d_lo, double d_hi, double step_m)
{
    if (!(d_lo < d_hi))
        throw std::invalid_argument("d_lo must be < d_hi");
    if (!(d_lo >= geom.height_m))
        throw std::invalid_argument("d_lo must be >= height_m");
    if (!(step_m > 0.0))
        throw std::invalid_argument("step_m must be > 0");

    DimensioningQuery q{target_snr_db, geom, radio, array, tracking};
    auto meets = [&](double d) {
        q.geometry.range_m = d;
        auto snr = snr_with_ports(q, m_ports);
        return snr && *snr >= target_snr_db;
    };

    RangeResult result;
    if (geom.height_m > 0.0 && d_lo < 3.0 * geom.height_m)
        result.note = "bracket extends below 3h; SNR may be non-monotonic over it";

    // Grid scan for the last satisfying point, then bisect the crossing.
    double last_ok = -1.0;
    double next_fail = d_hi;
    bool ok_at_hi = false;
    for (double d = d_lo;; d += step_m)
    {
        if (d >= d_hi)
        {
            if (meets(d_hi))
            {
                last_ok = d_hi;
                ok_at_hi = true;
            }
            break;
        }
        if (meets(d))
        {
            last_ok = d;
            next_fail = std::min(d + step_m, d_hi);
        }
    }
    if (last_ok < 0.0)
        return result;

    result.feasible = true;
    if (ok_at_hi)
    {
        result.range_m = d_hi;
        if (!result.note.empty())
            result.note += "; ";
        result.note += "target still met at bracket end";
        return result;
    }

    double lo = last_ok;
    double hi = next_fail;
    while (hi - lo > 0.1)
    {
        double mid = 0.5 * (lo + hi);
        if (meets(mid))
            lo = mid;
        else
            hi = mid;
    }
    result.range_m = lo;
    return result;
}

} // namespace airlink
