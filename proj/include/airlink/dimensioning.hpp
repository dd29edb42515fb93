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

#include <cstdint>
#include <optional>
#include <string>

#include "airlink/snr.hpp"
#include "airlink/types.hpp"

namespace airlink {

/// Inverse problem input: how many ports are needed to reach target_snr_db
/// at this geometry. The array's num_ports field is ignored (it is the
/// unknown being solved for).
struct DimensioningQuery {
    double target_snr_db = 0.0;
    LinkGeometry geometry;
    RadioConfig radio;
    ArrayConfig array;
    bool tracking = false;
};

struct DimensioningResult {
    bool feasible = false;
    std::int64_t min_ports = 0;
    double exact_ports = 0.0; ///< pre-ceiling port count from the inverse formula
    std::optional<double> achieved_snr_db;
    std::string note;
};

/// Minimum integer port count M with SNR(M) >= target, from the analytic
/// inversion of the closed-form SNR:
///   tracking:     ceil( g * s * (4*pi*d)^2 / (N * P_t * lambda^2 * 10^(G_m/10) * G) )
///   no tracking:  the same divided by |A|^2 / N^2
/// with g, s, P_t in linear units. Never below 1. A kernel null makes every
/// port count equivalent, so it is reported as infeasible rather than a
/// huge M.
DimensioningResult antennas_required(const DimensioningQuery& q);

/// Brute-force reference: linear scan M = 1..m_cap over closed_form_snr_db,
/// returning the first M that meets the target.
DimensioningResult min_antennas_oracle(const DimensioningQuery& q,
                                       std::int64_t m_cap = 1 << 16);

struct RangeResult {
    bool feasible = false;
    double range_m = 0.0;
    std::string note;
};

/// Largest range d in [d_lo, d_hi] with SNR >= target for a fixed port
/// count: grid scan at step_m resolution, then bisection of the last
/// crossing down to 0.1 m. The returned range always satisfies the target.
/// Outside the monotone regime (d_lo < 3h) the result carries a note that
/// the SNR may be non-monotonic over the bracket.
RangeResult max_range(std::int64_t m_ports, double target_snr_db, const LinkGeometry& geom,
                      const RadioConfig& radio, const ArrayConfig& array, bool tracking,
                      double d_lo, double d_hi, double step_m = 10.0);

} // namespace airlink
