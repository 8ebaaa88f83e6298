// Experiment driver. Exit codes: 0 all assertions pass, 1 any assertion or
// run failure, 2 configuration/usage error.

#include <cstdio>
#include <filesystem>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "gchn/experiments.hpp"

namespace fs = std::filesystem;
using namespace gchn;

namespace {

std::vector<double> column(const ExperimentReport& rep, const std::string& name) {
    std::size_t idx = rep.columns.size();
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
        if (rep.columns[i] == name) idx = i;
    std::vector<double> out;
    for (const auto& row : rep.rows) out.push_back(std::strtod(row[idx].c_str(), nullptr));
    return out;
}

// Rows filtered by an exact cell match in one column.
std::vector<double> column_where(const ExperimentReport& rep, const std::string& name,
                                 const std::string& key, const std::string& value) {
    std::size_t ci = 0, ki = 0;
    for (std::size_t i = 0; i < rep.columns.size(); ++i) {
        if (rep.columns[i] == name) ci = i;
        if (rep.columns[i] == key) ki = i;
    }
    std::vector<double> out;
    for (const auto& row : rep.rows)
        if (row[ki] == value) out.push_back(std::strtod(row[ci].c_str(), nullptr));
    return out;
}

void emit_svg(const ExperimentReport& rep, const std::string& dir) {
    const std::string path = dir + "/" + rep.id + ".svg";
    if (rep.id == "lp") {
        // worst block error per packet index
        const auto ns = column(rep, "n");
        const auto errs = column(rep, "block_error");
        std::map<double, double> worst;
        for (std::size_t i = 0; i < ns.size(); ++i)
            worst[ns[i]] = std::max(worst[ns[i]], errs[i]);
        SvgSeries s{"max block error", {}, {}};
        for (const auto& [n, e] : worst) {
            s.x.push_back(n);
            s.y.push_back(std::max(e, 1e-18));
        }
        write_svg(path, "Dyadic block localization", "n", "error", {s}, false, true);
    } else if (rep.id == "witness") {
        write_svg(path, "Witness lower-bound ingredients", "n", "value",
                  {{"lower bound", column(rep, "n"),
                    column(rep, "lower_bound_quantity")},
                   {"commutator", column(rep, "n"),
                    column(rep, "commutator_weighted_norm")}},
                  false, true);
    } else if (rep.id == "expansion") {
        write_svg(path, "Short-time expansion", "t", "besov defect",
                  {{"d1", column(rep, "t"), column(rep, "d1")},
                   {"d2", column(rep, "t"), column(rep, "d2")},
                   {"d2 control", column(rep, "t"), column(rep, "d2_control")}},
                  true, true);
    } else if (rep.id == "illposed") {
        write_svg(path, "Norm defect along t_n = eps*2^-n", "n", "besov defect",
                  {{"D_s", column(rep, "n"), column(rep, "D_s")},
                   {"D_{s-1}", column(rep, "n"), column(rep, "D_s_minus_1")}},
                  false, true);
    } else if (rep.id == "conserve") {
        std::vector<SvgSeries> series;
        for (int k = 1; k <= 3; ++k) {
            std::vector<double> dts, drifts;
            std::size_t ki = 0, vi = 0, di = 0, dri = 0;
            for (std::size_t i = 0; i < rep.columns.size(); ++i) {
                if (rep.columns[i] == "k") ki = i;
                if (rep.columns[i] == "variant") vi = i;
                if (rep.columns[i] == "dt") di = i;
                if (rep.columns[i] == "h1_drift") dri = i;
            }
            for (const auto& row : rep.rows)
                if (row[vi] == "gchn" && row[ki] == std::to_string(k)) {
                    dts.push_back(std::strtod(row[di].c_str(), nullptr));
                    drifts.push_back(
                        std::max(std::strtod(row[dri].c_str(), nullptr), 1e-18));
                }
            series.push_back({"k=" + std::to_string(k), dts, drifts});
        }
        write_svg(path, "H1 drift vs step size", "dt", "relative drift", series, true,
                  true);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Besov-space witness experiments"};
    app.fallthrough(true);
    std::string config_path, out_override;
    bool svg = false;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_override, "output directory (overrides config)");
    app.add_flag("--svg", svg, "also emit per-experiment SVG plots");

    const std::vector<std::string> names = {"lp",       "witness",  "expansion",
                                            "illposed", "conserve", "all"};
    for (const auto& n : names) app.add_subcommand(n, "run the " + n + " experiment(s)");
    app.require_subcommand(1, 0); // at least one, several allowed

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_config(config_path);
        if (!out_override.empty()) cfg.output_dir = out_override;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }

    std::set<std::string> selected;
    for (const auto* sub : app.get_subcommands()) selected.insert(sub->get_name());
    if (selected.count("all")) selected = {"lp", "witness", "expansion", "illposed",
                                           "conserve"};

    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) {
        std::fprintf(stderr, "cannot create output directory %s: %s\n",
                     cfg.output_dir.c_str(), ec.message().c_str());
        return 2;
    }

    bool all_pass = true;
    try {
        for (const auto& name : names) {
            if (name == "all" || !selected.count(name)) continue;
            ExperimentReport rep;
            if (name == "lp") rep = exp_lp(cfg);
            else if (name == "witness") rep = exp_witness(cfg);
            else if (name == "expansion") rep = exp_expansion(cfg);
            else if (name == "illposed") rep = exp_illposed(cfg);
            else rep = exp_conserve(cfg);

            write_csv(rep, cfg.output_dir + "/" + rep.id + ".csv");
            if (svg) emit_svg(rep, cfg.output_dir);
            std::printf("[%s] %s\n", rep.pass ? "PASS" : "FAIL", rep.id.c_str());
            for (const auto& note : rep.notes) std::printf("  %s\n", note.c_str());
            all_pass = all_pass && rep.pass;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "experiment aborted: %s\n", e.what());
        return 1;
    }
    return all_pass ? 0 : 1;
}
