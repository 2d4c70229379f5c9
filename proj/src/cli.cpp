#include "cmm/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmm/config.hpp"
#include "cmm/dataset.hpp"
#include "cmm/errors.hpp"
#include "cmm/sweep.hpp"

namespace cmm {

namespace {

namespace fs = std::filesystem;

std::string read_text(const fs::path& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot read config", path.string());
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

ParsedConfig load_config(const std::string& path) { return parse_config(read_text(path)); }

OutputFormat parse_format(const std::string& name)
{
    if (name == "csv") return OutputFormat::csv;
    if (name == "jsonl") return OutputFormat::jsonl;
    throw ConfigError("format must be 'csv' or 'jsonl'", "format");
}

nlohmann::ordered_json axis_json(const SweepAxis& axis)
{
    return {{"parameter", axis.parameter},
            {"min", axis.min},
            {"max", axis.max},
            {"points", axis.points},
            {"scale", axis.scale == AxisScale::log ? "log" : "linear"}};
}

nlohmann::ordered_json sweep_json(const SweepSpec& spec)
{
    nlohmann::ordered_json doc;
    doc["name"] = spec.name;
    doc["axis1"] = axis_json(spec.axis1);
    doc["axis2"] = spec.axis2 ? axis_json(*spec.axis2) : nlohmann::ordered_json(nullptr);
    doc["pair_barnett"] = spec.pair_barnett;
    return doc;
}

fs::path meta_path_for(const fs::path& out) { return fs::path(out.string() + ".meta.json"); }

void write_sweep(const fs::path& path, const SweepSpec& spec, const SweepResult& result, OutputFormat format)
{
    if (spec.pair_barnett) emit_dataset(path, std::span<const PairRecord>(result.pairs), format);
    else emit_dataset(path, std::span<const PointRecord>(result.points), format);
}

void report_failed_points(const SweepResult& result, std::ostream& err)
{
    auto note = [&](const PointRecord& r) {
        if (r.status.rfind("error", 0) == 0) {
            err << "warning: grid (" << r.grid_i << ", " << r.grid_j << "): " << r.status << '\n';
        }
    };
    for (const auto& r : result.points) note(r);
    for (const auto& p : result.pairs) {
        note(p.plus);
        note(p.minus);
    }
}

void print_point(std::ostream& out, const PointRecord& rec, const std::string& prefix = "")
{
    out << prefix << "stable: " << (rec.stable ? "true" : "false") << '\n';
    out << prefix << "spectral_abscissa: " << format_number(rec.spectral_abscissa) << '\n';
    out << prefix << "m_s: " << format_number(rec.steady.m_s.real()) << " + " << format_number(rec.steady.m_s.imag())
        << "i\n";
    if (rec.coherence) {
        const auto& c = *rec.coherence;
        out << prefix << "C_a: " << format_number(c.C_a) << '\n'
            << prefix << "C_m: " << format_number(c.C_m) << '\n'
            << prefix << "C_b: " << format_number(c.C_b) << '\n'
            << prefix << "C_tot: " << format_number(c.C_tot) << '\n';
    }
}

struct Options {
    std::string config;
    std::string out;
    std::string format;
    std::string deltaB_mag;
    std::string figure;
    unsigned threads = 0;
};

int run_point(const Options& opt, std::ostream& out, std::ostream& err)
{
    ParsedConfig cfg = load_config(opt.config);
    std::vector<std::string> notes;
    if (cfg.delta_m_bare) {
        const auto solution = solve_steady_bare(cfg.params, *cfg.delta_m_bare);
        cfg.params.delta_m_eff = solution.delta_m_eff;
        notes.push_back("delta_m_eff resolved self-consistently from bare delta_m in " +
                        std::to_string(solution.iterations) + " iterations");
    }
    PointRecord rec = evaluate_point(cfg.params);
    print_point(out, rec);
    if (!opt.out.empty()) {
        const OutputFormat format = opt.format.empty() ? OutputFormat::csv : parse_format(opt.format);
        emit_dataset(opt.out, std::span<const PointRecord>(&rec, 1), format);
        write_json_file(meta_path_for(opt.out), dataset_metadata(cfg.params, cfg.defaulted, notes));
    }
    if (!rec.stable) {
        err << "error: the requested point is unstable (spectral abscissa " << format_number(rec.spectral_abscissa)
            << " rad/s)\n";
        return kExitUnstable;
    }
    return kExitOk;
}

int run_pair(const Options& opt, std::ostream& out, std::ostream&)
{
    const ParsedConfig cfg = load_config(opt.config);
    if (cfg.delta_m_bare) throw ConfigError("bare delta_m is only supported by 'point'", "delta_m");
    double magnitude = 0.0;
    try {
        magnitude = parse_quantity(opt.deltaB_mag, Quantity::angular_frequency, cfg.params.omega_b);
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("--deltaB-mag: ") + e.what(), "deltaB-mag");
    }
    if (magnitude < 0.0) throw ConfigError("--deltaB-mag must be non-negative", "deltaB-mag");
    PairRecord pair = evaluate_pair(cfg.params, magnitude);
    print_point(out, pair.plus, "plus.");
    print_point(out, pair.minus, "minus.");
    auto show = [&](const char* name, const std::optional<double>& v) {
        out << name << ": " << (v ? format_number(*v) : std::string("undefined")) << '\n';
    };
    show("I_a", pair.I_a);
    show("I_m", pair.I_m);
    show("I_b", pair.I_b);
    show("I_tot", pair.I_tot);
    if (!opt.out.empty()) {
        const OutputFormat format = opt.format.empty() ? OutputFormat::csv : parse_format(opt.format);
        emit_dataset(opt.out, std::span<const PairRecord>(&pair, 1), format);
        write_json_file(meta_path_for(opt.out), dataset_metadata(pair.plus.params, cfg.defaulted));
    }
    return kExitOk;
}

int run_sweep_command(const Options& opt, std::ostream& out, std::ostream& err)
{
    const ParsedConfig cfg = load_config(opt.config);
    if (cfg.delta_m_bare) throw ConfigError("bare delta_m is only supported by 'point'", "delta_m");
    if (!cfg.sweep) throw ConfigError("config defines no sweep (axis1 missing)", "axis1");
    const SweepSpec& spec = *cfg.sweep;
    const OutputFormat format = opt.format.empty() ? spec.format : parse_format(opt.format);
    const SweepResult result = run_sweep(spec, opt.threads);
    report_failed_points(result, err);
    write_sweep(opt.out, spec, result, format);
    auto meta = dataset_metadata(spec.base, cfg.defaulted);
    meta["sweep"] = sweep_json(spec);
    write_json_file(meta_path_for(opt.out), meta);
    out << "wrote " << (spec.pair_barnett ? result.pairs.size() : result.points.size()) << " records to " << opt.out
        << '\n';
    return kExitOk;
}

int run_reproduce(const Options& opt, std::ostream& out, std::ostream& err)
{
    const FigurePreset preset = figure_preset(opt.figure);
    const OutputFormat format = opt.format.empty() ? OutputFormat::csv : parse_format(opt.format);
    const fs::path dir(opt.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory", dir.string());

    const char* extension = format == OutputFormat::csv ? ".csv" : ".jsonl";
    nlohmann::ordered_json panels = nlohmann::ordered_json::array();
    for (const auto& spec : preset.panels) {
        const SweepResult result = run_sweep(spec, opt.threads);
        report_failed_points(result, err);
        const fs::path file = dir / (spec.name + extension);
        write_sweep(file, spec, result, format);
        auto panel = sweep_json(spec);
        panel["file"] = file.filename().string();
        nlohmann::ordered_json params;
        for (const auto& field : param_fields()) params[std::string(field.name)] = spec.base.*field.member;
        panel["base_parameters"] = params;
        panels.push_back(panel);
        out << "wrote " << file.string() << '\n';
    }
    auto meta = dataset_metadata(preset.panels.front().base, {"delta_a"}, preset.notes);
    meta["preset"] = preset.id;
    meta["panels"] = panels;
    write_json_file(dir / (preset.id + ".meta.json"), meta);
    return kExitOk;
}

int run_stability_map(const Options& opt, std::ostream& out, std::ostream&)
{
    const ParsedConfig cfg = load_config(opt.config);
    if (cfg.delta_m_bare) throw ConfigError("bare delta_m is only supported by 'point'", "delta_m");
    if (!cfg.sweep) throw ConfigError("config defines no sweep (axis1 missing)", "axis1");
    const auto records = stability_map(*cfg.sweep);
    emit_stability_map(opt.out, records);
    auto meta = dataset_metadata(cfg.sweep->base, cfg.defaulted);
    meta["sweep"] = sweep_json(*cfg.sweep);
    write_json_file(meta_path_for(opt.out), meta);
    out << "wrote " << records.size() << " stability records to " << opt.out << '\n';
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Steady-state coherence and Barnett nonreciprocity in cavity magnomechanics"};
    app.require_subcommand(1);
    Options opt;

    auto* point = app.add_subcommand("point", "Evaluate a single parameter point");
    point->add_option("--config", opt.config, "Config file")->required();
    point->add_option("--out", opt.out, "Write the record to this file");
    point->add_option("--format", opt.format, "csv or jsonl");

    auto* pair = app.add_subcommand("pair", "Evaluate a +/- delta_B pair and its contrast ratios");
    pair->add_option("--config", opt.config, "Config file")->required();
    pair->add_option("--deltaB-mag", opt.deltaB_mag, "Barnett shift magnitude (Hz, or '<x> wb')")->required();
    pair->add_option("--out", opt.out, "Write the record to this file");
    pair->add_option("--format", opt.format, "csv or jsonl");

    auto* sweep = app.add_subcommand("sweep", "Run the sweep defined in a config file");
    sweep->add_option("--config", opt.config, "Config file")->required();
    sweep->add_option("--out", opt.out, "Dataset file")->required();
    sweep->add_option("--format", opt.format, "csv or jsonl");
    sweep->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)");

    auto* reproduce = app.add_subcommand("reproduce", "Regenerate a figure dataset");
    reproduce->add_option("figure", opt.figure, "fig2 | fig3 | fig4 | fig5 | fig6")->required();
    reproduce->add_option("--out", opt.out, "Output directory")->required();
    reproduce->add_option("--format", opt.format, "csv or jsonl");
    reproduce->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)");

    auto* stability_cmd = app.add_subcommand("stability-map", "Stability verdicts over a sweep grid");
    stability_cmd->add_option("--config", opt.config, "Config file")->required();
    stability_cmd->add_option("--out", opt.out, "Output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (point->parsed()) return run_point(opt, out, err);
        if (pair->parsed()) return run_pair(opt, out, err);
        if (sweep->parsed()) return run_sweep_command(opt, out, err);
        if (reproduce->parsed()) return run_reproduce(opt, out, err);
        if (stability_cmd->parsed()) return run_stability_map(opt, out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConvergenceError& e) {
        err << "solver error: " << e.what() << " (last iterate " << format_number(e.history().back()) << ")\n";
        return kExitSolver;
    } catch (const Error& e) {
        err << "solver error: " << e.what() << '\n';
        return kExitSolver;
    }
    return kExitConfig;
}

}  // namespace cmm
