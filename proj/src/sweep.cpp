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

#include "airlink/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "airlink/array_pattern.hpp"
#include "airlink/dimensioning.hpp"
#include "airlink/link_budget.hpp"
#include "airlink/snr.hpp"

namespace airlink {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::set<std::string> kAxisNames = {"m_ports",    "n_elements",    "range_m",
                                          "height_m",   "carrier_hz",    "target_snr_db",
                                          "theta_deg",  "tilt_deg"};

bool axis_allowed(Metric metric, const std::string& name)
{
    switch (metric)
    {
    case Metric::Pattern:
        return name == "theta_deg" || name == "n_elements" || name == "m_ports" ||
               name == "tilt_deg";
    case Metric::Snr:
        return name != "theta_deg" && name != "target_snr_db";
    case Metric::Dimension:
        return name != "theta_deg" && name != "m_ports";
    }
    return false;
}

std::vector<double> step_grid(double lo, double hi, double step)
{
    std::vector<double> v;
    for (int i = 0;; ++i)
    {
        double x = lo + i * step;
        if (x > hi + 0.5 * step)
            break;
        v.push_back(std::min(x, hi));
    }
    return v;
}

std::vector<double> log_grid(double lo, double hi, int count)
{
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    return v;
}

std::vector<double> dyadic_grid(double lo, double hi)
{
    std::vector<double> v;
    for (double x = lo; x <= hi; x *= 2.0)
        v.push_back(x);
    return v;
}

/// Per-point mutable state: the base configuration with axis values applied.
struct PointState {
    ArrayConfig array;
    LinkGeometry geometry;
    RadioConfig radio;
    double target_snr_db;
    double theta_deg = 0.0; ///< pattern metric only
};

void apply_axis_value(PointState& st, const std::string& name, double value)
{
    if (name == "m_ports")
        st.array.num_ports = static_cast<int>(std::llround(value));
    else if (name == "n_elements")
        st.array.num_elements = static_cast<int>(std::llround(value));
    else if (name == "range_m")
        st.geometry.range_m = value;
    else if (name == "height_m")
        st.geometry.height_m = value;
    else if (name == "carrier_hz")
        st.radio.carrier_hz = value;
    else if (name == "target_snr_db")
        st.target_snr_db = value;
    else if (name == "theta_deg")
        st.theta_deg = value;
    else if (name == "tilt_deg")
        st.array.downtilt_deg = value;
}

Cell axis_echo_cell(const std::string& name, double value)
{
    if (name == "m_ports" || name == "n_elements")
        return Cell{static_cast<std::int64_t>(std::llround(value))};
    return Cell{value};
}

void append_metric_cells(const SweepSpec& spec, const PointState& st,
                         std::vector<Cell>& row)
{
    bool null_point = true;
    switch (spec.metric)
    {
    case Metric::Pattern:
    {
        std::optional<double> db;
        try
        {
            db = port_pattern_db(st.theta_deg, st.geometry.azimuth_deg, st.array);
        }
        catch (const std::invalid_argument&)
        {
        }
        row.emplace_back(db ? Cell{*db} : Cell{});
        null_point = !db.has_value();
        break;
    }
    case Metric::Snr:
    {
        std::optional<double> db;
        try
        {
            db = closed_form_snr_db(SnrQuery{st.array, st.geometry, st.radio, spec.tracking});
        }
        catch (const std::invalid_argument&)
        {
        }
        row.emplace_back(db ? Cell{*db} : Cell{});
        null_point = !db.has_value();
        break;
    }
    case Metric::Dimension:
    {
        Cell ports{};
        Cell theta{};
        try
        {
            theta = Cell{vertical_angle_deg(st.geometry)};
            DimensioningQuery dq{st.target_snr_db, st.geometry, st.radio, st.array,
                                 spec.tracking};
            DimensioningResult res = antennas_required(dq);
            if (res.feasible)
            {
                ports = Cell{res.min_ports};
                null_point = false;
            }
        }
        catch (const std::invalid_argument&)
        {
        }
        row.push_back(ports);
        row.push_back(theta);
        break;
    }
    }
    row.emplace_back(Cell{null_point});
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string format_cell(const Cell& cell)
{
    if (std::holds_alternative<std::monostate>(cell))
        return "";
    if (const auto* i = std::get_if<std::int64_t>(&cell))
        return std::to_string(*i);
    if (const auto* b = std::get_if<bool>(&cell))
        return *b ? "1" : "0";
    return format_double(std::get<double>(cell));
}

ordered_json cell_to_json(const Cell& cell)
{
    if (std::holds_alternative<std::monostate>(cell))
        return nullptr;
    if (const auto* i = std::get_if<std::int64_t>(&cell))
        return *i;
    if (const auto* b = std::get_if<bool>(&cell))
        return *b;
    return std::get<double>(cell);
}

const char* weight_norm_name(WeightNorm norm)
{
    return norm == WeightNorm::PerPort ? "per-port" : "full-array";
}

const char* format_name(OutputFormat f)
{
    return f == OutputFormat::Csv ? "csv" : "json";
}

ordered_json metadata(const SweepSpec& spec)
{
    ordered_json meta;
    meta["preset"] = spec.preset;
    meta["metric"] = metric_name(spec.metric);
    meta["format"] = format_name(spec.format);
    meta["tracking"] = spec.tracking;
    meta["target_snr_db"] = spec.target_snr_db;
    ordered_json axes = ordered_json::array();
    for (const auto& axis : spec.axes)
        axes.push_back(ordered_json{{"name", axis.name}, {"values", axis.values}});
    meta["axes"] = axes;
    meta["base"]["array"] = {{"num_ports", spec.array.num_ports},
                             {"num_elements", spec.array.num_elements},
                             {"dv_over_lambda", spec.array.dv_over_lambda},
                             {"dh_over_lambda", spec.array.dh_over_lambda},
                             {"max_element_gain_dbi", spec.array.max_element_gain_dbi},
                             {"theta_3db_deg", spec.array.theta_3db_deg},
                             {"phi_3db_deg", spec.array.phi_3db_deg},
                             {"max_attenuation_db", spec.array.max_attenuation_db},
                             {"sidelobe_attenuation_db", spec.array.sidelobe_attenuation_db},
                             {"downtilt_deg", spec.array.downtilt_deg},
                             {"scan_deg", spec.array.scan_deg},
                             {"weight_norm", weight_norm_name(spec.array.weight_norm)}};
    meta["base"]["geometry"] = {{"range_m", spec.geometry.range_m},
                                {"height_m", spec.geometry.height_m},
                                {"azimuth_deg", spec.geometry.azimuth_deg}};
    ordered_json radio;
    radio["tx_power_dbm"] = spec.radio.tx_power_dbm;
    radio["carrier_hz"] = spec.radio.carrier_hz;
    radio["noise_power_dbm"] = noise_power_dbm(spec.radio);
    if (spec.radio.bandwidth_hz)
        radio["bandwidth_hz"] = *spec.radio.bandwidth_hz;
    if (spec.radio.noise_figure_db)
        radio["noise_figure_db"] = *spec.radio.noise_figure_db;
    meta["base"]["radio"] = radio;
    meta["notes"] = spec.notes;
    return meta;
}

} // namespace

const char* metric_name(Metric metric)
{
    switch (metric)
    {
    case Metric::Pattern:
        return "pattern";
    case Metric::Snr:
        return "snr";
    case Metric::Dimension:
        return "dimension";
    }
    return "?";
}

std::vector<std::string> preset_names()
{
    return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

SweepSpec preset_spec(const std::string& name)
{
    SweepSpec s;
    s.preset = name;
    s.array.downtilt_deg = 70.0;
    s.geometry = LinkGeometry{3000.0, 1000.0, 0.0};

    const std::string grid_note =
        "axis grids are tool defaults, not externally specified values";
    const std::string noise_note =
        "noise power -95 dBm is a tool default (10 MHz bandwidth, 9 dB noise figure)";

    if (name == "fig2")
    {
        s.metric = Metric::Pattern;
        s.axes = {{"n_elements", {4.0, 8.0, 16.0}}, {"theta_deg", step_grid(0.0, 180.0, 0.1)}};
        s.notes = {grid_note, "boresight azimuth cut at downtilt 70 deg"};
        return s;
    }
    if (name == "fig3")
    {
        s.metric = Metric::Snr;
        s.tracking = true;
        s.axes = {{"m_ports", dyadic_grid(1.0, 256.0)},
                  {"range_m", step_grid(1000.0, 20000.0, 50.0)}};
        s.notes = {grid_note, noise_note};
        return s;
    }
    if (name == "fig4")
    {
        s.metric = Metric::Dimension;
        s.tracking = true;
        s.axes = {{"target_snr_db", {0.0, 5.0, 10.0, 15.0}},
                  {"range_m", log_grid(1000.0, 100000.0, 41)}};
        s.notes = {grid_note, noise_note};
        return s;
    }
    if (name == "fig5")
    {
        s.metric = Metric::Dimension;
        s.tracking = true;
        s.target_snr_db = 5.0;
        s.axes = {{"carrier_hz", {0.7e9, 2.0e9, 3.5e9}},
                  {"range_m", log_grid(1000.0, 100000.0, 41)}};
        s.notes = {grid_note, noise_note, "carrier set {0.7, 2.0, 3.5} GHz is a tool default"};
        return s;
    }
    if (name == "fig6")
    {
        s.metric = Metric::Dimension;
        s.tracking = true;
        s.target_snr_db = 5.0;
        s.axes = {{"height_m", {500.0, 1000.0, 2000.0}},
                  {"range_m", log_grid(1000.0, 100000.0, 41)}};
        s.notes = {grid_note, noise_note, "height set {500, 1000, 2000} m is a tool default",
                   "rows with range below the height are geometrically invalid and null"};
        return s;
    }
    if (name == "fig7" || name == "fig8")
    {
        s.metric = Metric::Snr;
        s.tracking = false;
        s.array.downtilt_deg = name == "fig7" ? 70.0 : 85.0;
        s.array.num_elements = 64;
        s.axes = {{"m_ports", dyadic_grid(1.0, 256.0)},
                  {"range_m", step_grid(1000.0, 20000.0, 50.0)}};
        s.notes = {grid_note, noise_note,
                   "64 elements per port is a tool default chosen so the elevation beam is "
                   "narrow enough to place the no-tracking SNR peak at the tilt-alignment "
                   "range"};
        return s;
    }
    throw std::invalid_argument("unknown preset: " + name);
}

void validate(const SweepSpec& spec)
{
    validate(spec.array);
    validate(spec.radio);

    std::set<std::string> seen;
    for (const auto& axis : spec.axes)
    {
        if (!kAxisNames.count(axis.name))
            throw std::invalid_argument("unknown axis name: " + axis.name);
        if (!seen.insert(axis.name).second)
            throw std::invalid_argument("duplicate axis name: " + axis.name);
        if (!axis_allowed(spec.metric, axis.name))
            throw std::invalid_argument("axis " + axis.name + " is not valid for metric " +
                                        metric_name(spec.metric));
        if (axis.values.empty())
            throw std::invalid_argument("axis " + axis.name + " has no values");
        for (std::size_t i = 1; i < axis.values.size(); ++i)
            if (!(axis.values[i - 1] < axis.values[i]))
                throw std::invalid_argument("axis " + axis.name +
                                            " values must be strictly increasing");
        if (axis.name == "m_ports" || axis.name == "n_elements")
            for (double v : axis.values)
                if (!(v >= 1.0) || std::floor(v) != v || v > 1e9)
                    throw std::invalid_argument("axis " + axis.name +
                                                " requires positive integer values");
    }
    if (spec.metric == Metric::Pattern && !seen.count("theta_deg"))
        throw std::invalid_argument("pattern sweeps require a theta_deg axis");
}

Table run_sweep(const SweepSpec& spec)
{
    validate(spec);

    Table table;
    for (const auto& axis : spec.axes)
        table.columns.push_back(axis.name);
    switch (spec.metric)
    {
    case Metric::Pattern:
        table.columns.push_back("pattern_db");
        break;
    case Metric::Snr:
        table.columns.push_back("snr_db");
        break;
    case Metric::Dimension:
        table.columns.push_back("min_ports");
        table.columns.push_back("theta_deg");
        break;
    }
    table.columns.push_back("is_null");

    if (spec.axes.empty())
        return table;

    std::size_t total = 1;
    for (const auto& axis : spec.axes)
        total *= axis.values.size();
    table.rows.reserve(total);

    // Odometer over axis indices: the first axis is outermost, so rows come
    // out in lexicographic order of the axis value tuples.
    std::vector<std::size_t> idx(spec.axes.size(), 0);
    for (;;)
    {
        PointState st{spec.array, spec.geometry, spec.radio, spec.target_snr_db};
        std::vector<Cell> row;
        row.reserve(table.columns.size());
        for (std::size_t i = 0; i < spec.axes.size(); ++i)
        {
            double value = spec.axes[i].values[idx[i]];
            apply_axis_value(st, spec.axes[i].name, value);
            row.push_back(axis_echo_cell(spec.axes[i].name, value));
        }
        append_metric_cells(spec, st, row);
        table.rows.push_back(std::move(row));

        std::size_t pos = spec.axes.size();
        while (pos > 0)
        {
            --pos;
            if (++idx[pos] < spec.axes[pos].values.size())
                break;
            idx[pos] = 0;
            if (pos == 0)
                return table;
        }
    }
}

std::string format_csv(const Table& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
    {
        if (i)
            out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ',';
            out += format_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string format_json(const SweepSpec& spec, const Table& table)
{
    ordered_json doc;
    doc["meta"] = metadata(spec);
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows)
    {
        ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i)
            obj[table.columns[i]] = cell_to_json(row[i]);
        rows.push_back(std::move(obj));
    }
    doc["columns"] = table.columns;
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

std::string format_metadata(const SweepSpec& spec)
{
    return metadata(spec).dump(2) + "\n";
}

void write_outputs(const SweepSpec& spec, const Table& table)
{
    if (spec.output_path.empty())
        throw IoError("output path is empty");

    auto write_file = [](const std::filesystem::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("cannot open for writing: " + path.string());
        out << content;
        out.flush();
        if (!out)
            throw IoError("write failed: " + path.string());
    };

    std::filesystem::path path(spec.output_path);
    write_file(path, spec.format == OutputFormat::Csv ? format_csv(table)
                                                      : format_json(spec, table));
    std::filesystem::path meta_path(path);
    meta_path.replace_extension(".meta.json");
    write_file(meta_path, format_metadata(spec));
}

namespace {

void require_known_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                        const std::string& where)
{
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw std::invalid_argument("unknown key \"" + item.key() + "\" in " + where);
}

double number_at(const nlohmann::json& obj, const std::string& key)
{
    if (!obj.at(key).is_number())
        throw std::invalid_argument("key \"" + key + "\" must be a number");
    return obj.at(key).get<double>();
}

void apply_base(SweepSpec& spec, const nlohmann::json& base)
{
    static const std::set<std::string> allowed = {
        "ports",   "elements", "range",     "height", "azimuth", "freq",  "tilt",
        "tx_dbm",  "noise_dbm", "bw_hz",    "nf_db",  "gm_dbi",  "theta3db",
        "phi3db",  "am",       "sla",       "dv",     "dh",      "norm",  "target"};
    require_known_keys(base, allowed, "base");

    if (base.contains("ports"))
        spec.array.num_ports = static_cast<int>(number_at(base, "ports"));
    if (base.contains("elements"))
        spec.array.num_elements = static_cast<int>(number_at(base, "elements"));
    if (base.contains("range"))
        spec.geometry.range_m = number_at(base, "range");
    if (base.contains("height"))
        spec.geometry.height_m = number_at(base, "height");
    if (base.contains("azimuth"))
        spec.geometry.azimuth_deg = number_at(base, "azimuth");
    if (base.contains("freq"))
        spec.radio.carrier_hz = number_at(base, "freq");
    if (base.contains("tilt"))
        spec.array.downtilt_deg = number_at(base, "tilt");
    if (base.contains("tx_dbm"))
        spec.radio.tx_power_dbm = number_at(base, "tx_dbm");
    if (base.contains("bw_hz") || base.contains("nf_db"))
    {
        if (base.contains("bw_hz"))
            spec.radio.bandwidth_hz = number_at(base, "bw_hz");
        if (base.contains("nf_db"))
            spec.radio.noise_figure_db = number_at(base, "nf_db");
        if (!base.contains("noise_dbm"))
            spec.radio.noise_power_dbm.reset();
    }
    if (base.contains("noise_dbm"))
        spec.radio.noise_power_dbm = number_at(base, "noise_dbm");
    if (base.contains("gm_dbi"))
        spec.array.max_element_gain_dbi = number_at(base, "gm_dbi");
    if (base.contains("theta3db"))
        spec.array.theta_3db_deg = number_at(base, "theta3db");
    if (base.contains("phi3db"))
        spec.array.phi_3db_deg = number_at(base, "phi3db");
    if (base.contains("am"))
        spec.array.max_attenuation_db = number_at(base, "am");
    if (base.contains("sla"))
        spec.array.sidelobe_attenuation_db = number_at(base, "sla");
    if (base.contains("dv"))
        spec.array.dv_over_lambda = number_at(base, "dv");
    if (base.contains("dh"))
        spec.array.dh_over_lambda = number_at(base, "dh");
    if (base.contains("target"))
        spec.target_snr_db = number_at(base, "target");
    if (base.contains("norm"))
    {
        std::string norm = base.at("norm").get<std::string>();
        if (norm == "per-port")
            spec.array.weight_norm = WeightNorm::PerPort;
        else if (norm == "full-array")
            spec.array.weight_norm = WeightNorm::FullArray;
        else
            throw std::invalid_argument("norm must be \"per-port\" or \"full-array\"");
    }
}

Metric parse_metric(const std::string& name)
{
    if (name == "pattern")
        return Metric::Pattern;
    if (name == "snr")
        return Metric::Snr;
    if (name == "dimension")
        return Metric::Dimension;
    throw std::invalid_argument("unknown metric: " + name);
}

} // namespace

SweepSpec load_sweep_config(const std::string& json_path)
{
    std::ifstream in(json_path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config: " + json_path);
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("config root must be a JSON object");
    require_known_keys(doc, {"preset", "metric", "tracking", "axes", "base", "output"},
                       "config");

    SweepSpec spec;
    bool from_preset = doc.contains("preset");
    if (from_preset)
        spec = preset_spec(doc.at("preset").get<std::string>());

    bool metric_given = doc.contains("metric");
    if (metric_given)
        spec.metric = parse_metric(doc.at("metric").get<std::string>());
    if (doc.contains("tracking"))
        spec.tracking = doc.at("tracking").get<bool>();

    if (doc.contains("axes"))
    {
        spec.axes.clear();
        if (!doc.at("axes").is_array())
            throw std::invalid_argument("axes must be an array");
        for (const auto& entry : doc.at("axes"))
        {
            if (!entry.is_object())
                throw std::invalid_argument("each axis must be an object");
            require_known_keys(entry, {"name", "values"}, "axis");
            Axis axis;
            axis.name = entry.at("name").get<std::string>();
            for (const auto& v : entry.at("values"))
            {
                if (!v.is_number())
                    throw std::invalid_argument("axis values must be numbers");
                axis.values.push_back(v.get<double>());
            }
            spec.axes.push_back(std::move(axis));
        }
    }
    if (doc.contains("base"))
        apply_base(spec, doc.at("base"));
    if (doc.contains("output"))
    {
        const auto& output = doc.at("output");
        require_known_keys(output, {"path", "format"}, "output");
        if (output.contains("path"))
            spec.output_path = output.at("path").get<std::string>();
        if (output.contains("format"))
        {
            std::string format = output.at("format").get<std::string>();
            if (format == "csv")
                spec.format = OutputFormat::Csv;
            else if (format == "json")
                spec.format = OutputFormat::Json;
            else
                throw std::invalid_argument("format must be \"csv\" or \"json\"");
        }
    }

    // Without an explicit metric or preset, infer the metric from the axes.
    if (!metric_given && !from_preset)
    {
        for (const auto& axis : spec.axes)
        {
            if (axis.name == "theta_deg")
                spec.metric = Metric::Pattern;
            else if (axis.name == "target_snr_db")
                spec.metric = Metric::Dimension;
        }
    }

    validate(spec);
    return spec;
}

} // namespace airlink
