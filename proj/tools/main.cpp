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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "airlink/dimensioning.hpp"
#include "airlink/link_budget.hpp"
#include "airlink/snr.hpp"
#include "airlink/sweep.hpp"
#include "airlink/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Overrides {
    std::optional<double> tx_dbm, noise_dbm, gm_dbi, theta3db, phi3db, am, sla, dv, dh;
    std::optional<double> azimuth, bw_hz, nf_db;
    std::string norm;
};

void add_override_flags(CLI::App* cmd, Overrides& ov)
{
    cmd->add_option("--tx-dbm", ov.tx_dbm, "Transmit power in dBm (default 30)");
    cmd->add_option("--noise-dbm", ov.noise_dbm, "Total noise power in dBm (default -95)");
    cmd->add_option("--bw-hz", ov.bw_hz, "Bandwidth in Hz, derives noise with --nf-db");
    cmd->add_option("--nf-db", ov.nf_db, "Noise figure in dB, derives noise with --bw-hz");
    cmd->add_option("--gm-dbi", ov.gm_dbi, "Peak element gain in dBi (default 8)");
    cmd->add_option("--theta3db", ov.theta3db, "Elevation half-power beamwidth, deg (default 65)");
    cmd->add_option("--phi3db", ov.phi3db, "Azimuth half-power beamwidth, deg (default 65)");
    cmd->add_option("--am", ov.am, "Front-to-back attenuation cap, dB (default 30)");
    cmd->add_option("--sla", ov.sla, "Vertical side-lobe cap, dB (default 30)");
    cmd->add_option("--dv", ov.dv, "Vertical element spacing in wavelengths (default 0.5)");
    cmd->add_option("--dh", ov.dh, "Horizontal port spacing in wavelengths (default 0.5)");
    cmd->add_option("--azimuth", ov.azimuth, "User azimuth offset, deg (default 0)");
    cmd->add_option("--norm", ov.norm, "Weight normalization: per-port|full-array")
        ->check(CLI::IsMember({"per-port", "full-array"}));
}

void apply_overrides(const Overrides& ov, airlink::ArrayConfig& array,
                     airlink::LinkGeometry& geometry, airlink::RadioConfig& radio)
{
    if (ov.tx_dbm)
        radio.tx_power_dbm = *ov.tx_dbm;
    if (ov.bw_hz || ov.nf_db)
    {
        radio.bandwidth_hz = ov.bw_hz;
        radio.noise_figure_db = ov.nf_db;
        if (!ov.noise_dbm)
            radio.noise_power_dbm.reset();
    }
    if (ov.noise_dbm)
        radio.noise_power_dbm = *ov.noise_dbm;
    if (ov.gm_dbi)
        array.max_element_gain_dbi = *ov.gm_dbi;
    if (ov.theta3db)
        array.theta_3db_deg = *ov.theta3db;
    if (ov.phi3db)
        array.phi_3db_deg = *ov.phi3db;
    if (ov.am)
        array.max_attenuation_db = *ov.am;
    if (ov.sla)
        array.sidelobe_attenuation_db = *ov.sla;
    if (ov.dv)
        array.dv_over_lambda = *ov.dv;
    if (ov.dh)
        array.dh_over_lambda = *ov.dh;
    if (ov.azimuth)
        geometry.azimuth_deg = *ov.azimuth;
    if (ov.norm == "full-array")
        array.weight_norm = airlink::WeightNorm::FullArray;
    else if (ov.norm == "per-port")
        array.weight_norm = airlink::WeightNorm::PerPort;
}

airlink::OutputFormat parse_format(const std::string& name)
{
    return name == "json" ? airlink::OutputFormat::Json : airlink::OutputFormat::Csv;
}

void emit_table(const airlink::SweepSpec& spec, const airlink::Table& table)
{
    if (spec.output_path.empty())
    {
        std::cout << (spec.format == airlink::OutputFormat::Csv
                          ? airlink::format_csv(table)
                          : airlink::format_json(spec, table));
        return;
    }
    airlink::write_outputs(spec, table);
}

std::string bool_cell(bool b) { return b ? "1" : "0"; }

int run_snr(const airlink::SnrQuery& query, const std::string& format)
{
    airlink::SnrSample s = airlink::evaluate(query);
    if (format == "json")
    {
        nlohmann::ordered_json obj{{"m_ports", s.m_ports},
                                   {"n_elements", s.n_elements},
                                   {"range_m", s.range_m},
                                   {"height_m", s.height_m},
                                   {"carrier_hz", s.carrier_hz},
                                   {"theta_deg", s.theta_deg},
                                   {"tilt_deg", s.tilt_deg},
                                   {"tracking", s.tracking},
                                   {"kernel_magnitude", s.kernel_magnitude},
                                   {"snr_db", nullptr},
                                   {"is_null", !s.snr_db.has_value()}};
        if (s.snr_db)
            obj["snr_db"] = *s.snr_db;
        std::cout << obj.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "m_ports,n_elements,range_m,height_m,carrier_hz,theta_deg,tilt_deg,"
                 "tracking,kernel_magnitude,snr_db,is_null\n";
    std::cout << s.m_ports << ',' << s.n_elements << ',' << fmt(s.range_m) << ','
              << fmt(s.height_m) << ',' << fmt(s.carrier_hz) << ',' << fmt(s.theta_deg) << ','
              << fmt(s.tilt_deg) << ',' << bool_cell(s.tracking) << ','
              << fmt(s.kernel_magnitude) << ',' << (s.snr_db ? fmt(*s.snr_db) : "") << ','
              << bool_cell(!s.snr_db.has_value()) << "\n";
    return kExitOk;
}

int run_dimension(const airlink::DimensioningQuery& query, const std::string& format)
{
    airlink::DimensioningResult res = airlink::antennas_required(query);
    if (format == "json")
    {
        nlohmann::ordered_json obj{{"min_ports", res.min_ports},
                                   {"achieved_snr_db", nullptr},
                                   {"feasible", res.feasible},
                                   {"note", res.note}};
        if (res.achieved_snr_db)
            obj["achieved_snr_db"] = *res.achieved_snr_db;
        std::cout << obj.dump(2) << "\n";
    }
    else
    {
        std::cout << "min_ports,achieved_snr_db,feasible,note\n";
        std::cout << (res.feasible ? std::to_string(res.min_ports) : "") << ','
                  << (res.achieved_snr_db ? fmt(*res.achieved_snr_db) : "") << ','
                  << bool_cell(res.feasible) << ',' << res.note << "\n";
    }
    return res.feasible ? kExitOk : kExitInfeasible;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ground-to-air antenna array SNR and dimensioning tool"};
    app.require_subcommand(1);

    // pattern
    auto* pattern_cmd =
        app.add_subcommand("pattern", "Port radiation pattern over a 0..180 deg grid");
    double pat_tilt = 70.0;
    int pat_elements = 8;
    int pat_ports = 8;
    std::string pat_out;
    std::string pat_format = "csv";
    Overrides pat_ov;
    pattern_cmd->add_option("--tilt", pat_tilt, "Downtilt angle, deg")->required();
    pattern_cmd->add_option("--elements", pat_elements, "Elements per port N")->required();
    pattern_cmd->add_option("--ports", pat_ports, "Ports M (default 8)");
    pattern_cmd->add_option("--out", pat_out, "Output path (default stdout)");
    pattern_cmd->add_option("--format", pat_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_override_flags(pattern_cmd, pat_ov);

    // snr
    auto* snr_cmd = app.add_subcommand("snr", "Single-point downlink SNR");
    int snr_ports = 0, snr_elements = 0;
    double snr_range = 0, snr_height = 0, snr_freq = 0;
    std::optional<double> snr_tilt;
    bool snr_track = false;
    std::string snr_format = "csv";
    Overrides snr_ov;
    snr_cmd->add_option("--ports", snr_ports, "Ports M")->required();
    snr_cmd->add_option("--elements", snr_elements, "Elements per port N")->required();
    snr_cmd->add_option("--range", snr_range, "Slant range, m")->required();
    snr_cmd->add_option("--height", snr_height, "User height, m")->required();
    snr_cmd->add_option("--freq", snr_freq, "Carrier frequency, Hz")->required();
    auto* snr_tilt_opt = snr_cmd->add_option("--tilt", snr_tilt, "Fixed downtilt, deg");
    auto* snr_track_flag =
        snr_cmd->add_flag("--track", snr_track, "Slave the downtilt to the user angle");
    snr_tilt_opt->excludes(snr_track_flag);
    snr_track_flag->excludes(snr_tilt_opt);
    snr_cmd->add_option("--format", snr_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_override_flags(snr_cmd, snr_ov);

    // dimension
    auto* dim_cmd =
        app.add_subcommand("dimension", "Minimum ports for a target SNR at a range");
    double dim_target = 0, dim_range = 0, dim_height = 0, dim_freq = 2.0e9;
    int dim_elements = 8;
    std::optional<double> dim_tilt;
    bool dim_track = false;
    std::string dim_format = "csv";
    Overrides dim_ov;
    dim_cmd->add_option("--target", dim_target, "Target SNR, dB")->required();
    dim_cmd->add_option("--range", dim_range, "Slant range, m")->required();
    dim_cmd->add_option("--height", dim_height, "User height, m")->required();
    dim_cmd->add_option("--freq", dim_freq, "Carrier frequency, Hz (default 2e9)");
    dim_cmd->add_option("--elements", dim_elements, "Elements per port N (default 8)");
    auto* dim_tilt_opt = dim_cmd->add_option("--tilt", dim_tilt, "Fixed downtilt, deg");
    auto* dim_track_flag =
        dim_cmd->add_flag("--track", dim_track, "Slave the downtilt to the user angle");
    dim_tilt_opt->excludes(dim_track_flag);
    dim_track_flag->excludes(dim_tilt_opt);
    dim_cmd->add_option("--format", dim_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_override_flags(dim_cmd, dim_ov);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Grid evaluation from a preset or config");
    std::string sweep_preset, sweep_config, sweep_out, sweep_format;
    auto* preset_opt = sweep_cmd->add_option("--preset", sweep_preset,
                                             "One of: fig2 fig3 fig4 fig5 fig6 fig7 fig8");
    auto* config_opt =
        sweep_cmd->add_option("--config", sweep_config, "JSON sweep configuration path");
    preset_opt->excludes(config_opt);
    config_opt->excludes(preset_opt);
    sweep_cmd->add_option("--out", sweep_out, "Output path");
    sweep_cmd->add_option("--format", sweep_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitUsage;
    }

    try
    {
        if (*pattern_cmd)
        {
            airlink::SweepSpec spec;
            spec.preset = "pattern";
            spec.metric = airlink::Metric::Pattern;
            spec.array.downtilt_deg = pat_tilt;
            spec.array.num_elements = pat_elements;
            spec.array.num_ports = pat_ports;
            apply_overrides(pat_ov, spec.array, spec.geometry, spec.radio);
            airlink::Axis theta_axis{"theta_deg", {}};
            for (int i = 0; i <= 1800; ++i)
                theta_axis.values.push_back(i * 0.1);
            spec.axes = {std::move(theta_axis)};
            spec.output_path = pat_out;
            spec.format = parse_format(pat_format);
            emit_table(spec, airlink::run_sweep(spec));
            return kExitOk;
        }
        if (*snr_cmd)
        {
            airlink::SnrQuery q;
            q.array.num_ports = snr_ports;
            q.array.num_elements = snr_elements;
            q.geometry.range_m = snr_range;
            q.geometry.height_m = snr_height;
            q.radio.carrier_hz = snr_freq;
            q.tracking = snr_track;
            if (snr_tilt)
                q.array.downtilt_deg = *snr_tilt;
            apply_overrides(snr_ov, q.array, q.geometry, q.radio);
            return run_snr(q, snr_format);
        }
        if (*dim_cmd)
        {
            airlink::DimensioningQuery q;
            q.target_snr_db = dim_target;
            q.geometry.range_m = dim_range;
            q.geometry.height_m = dim_height;
            q.radio.carrier_hz = dim_freq;
            q.array.num_elements = dim_elements;
            q.tracking = dim_track;
            if (dim_tilt)
                q.array.downtilt_deg = *dim_tilt;
            apply_overrides(dim_ov, q.array, q.geometry, q.radio);
            return run_dimension(q, dim_format);
        }
        if (*sweep_cmd)
        {
            if (sweep_preset.empty() && sweep_config.empty())
                throw std::invalid_argument("sweep requires --preset or --config");
            airlink::SweepSpec spec = sweep_preset.empty()
                                          ? airlink::load_sweep_config(sweep_config)
                                          : airlink::preset_spec(sweep_preset);
            if (!sweep_out.empty())
                spec.output_path = sweep_out;
            if (!sweep_format.empty())
                spec.format = parse_format(sweep_format);
            if (spec.output_path.empty())
                throw std::invalid_argument("sweep requires an output path (--out)");
            airlink::write_outputs(spec, airlink::run_sweep(spec));
            return kExitOk;
        }
    }
    catch (const airlink::IoError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
