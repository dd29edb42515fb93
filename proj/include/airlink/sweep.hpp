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
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "airlink/types.hpp"

namespace airlink {

/// What each grid point evaluates: a port radiation pattern cut, a downlink
/// SNR, or a minimum-port-count inversion.
enum class Metric { Pattern, Snr, Dimension };

enum class OutputFormat { Csv, Json };

/// One swept parameter. Valid names: m_ports, n_elements, range_m, height_m,
/// carrier_hz, target_snr_db, theta_deg, tilt_deg. Values must be strictly
/// increasing.
struct Axis {
    std::string name;
    std::vector<double> values;
};

/// A grid evaluation: the Cartesian product of the axes over a base
/// configuration, emitted as CSV or JSON in deterministic row order.
struct SweepSpec {
    std::string preset = "custom";
    Metric metric = Metric::Snr;
    std::vector<Axis> axes;
    ArrayConfig array;
    LinkGeometry geometry{3000.0, 1000.0, 0.0};
    RadioConfig radio;
    bool tracking = false;
    double target_snr_db = 5.0; ///< used by Dimension unless overridden per point
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
    std::vector<std::string> notes; ///< provenance notes carried into metadata
};

/// A missing value (array null, infeasible point, or invalid geometry).
using Cell = std::variant<std::monostate, std::int64_t, double, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Raised on unwritable output paths.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Built-in sweep definitions fig2..fig8. Throws std::invalid_argument for
/// unknown names.
SweepSpec preset_spec(const std::string& name);
std::vector<std::string> preset_names();

/// Validate axes (known unique names, strictly increasing values, metric
/// compatibility). Throws std::invalid_argument.
void validate(const SweepSpec& spec);

/// Evaluate the full grid. Invalid or infeasible points become null-marker
/// rows; the sweep itself never aborts on them.
Table run_sweep(const SweepSpec& spec);

/// Render a table as CSV: header row, comma separator, LF line endings,
/// reals with six significant digits, null cells empty. Byte-identical for
/// identical inputs.
std::string format_csv(const Table& table);

/// Render a table plus its metadata as a JSON document.
std::string format_json(const SweepSpec& spec, const Table& table);

/// Effective-parameter metadata (everything needed to reproduce the sweep);
/// serialized alongside every file output as <basename>.meta.json.
std::string format_metadata(const SweepSpec& spec);

/// Write the table in the spec's format to spec.output_path plus the
/// metadata sidecar. Throws IoError on unwritable paths.
void write_outputs(const SweepSpec& spec, const Table& table);

/// Parse a JSON sweep configuration (mirrors the CLI flags). Unknown keys
/// are a validation error. Throws std::invalid_argument on bad content,
/// IoError if the file cannot be read.
SweepSpec load_sweep_config(const std::string& json_path);

const char* metric_name(Metric metric);

} // namespace airlink
