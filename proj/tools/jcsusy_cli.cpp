// Command-line front end: one subcommand per run mode, presets for the
// published figure parameter sets, flags override preset/config values.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "jcsusy/app/config.hpp"
#include "jcsusy/app/run.hpp"

namespace {

using jcsusy::app::ConfigError;
using jcsusy::app::RunConfig;
using jcsusy::app::RunResult;

// A string-valued flag forwarded to the config grammar under `key`.
struct Forward {
    std::string flag;
    std::string key;
    std::string help;
    std::string value;
    CLI::Option* option = nullptr;
};

struct CommonOptions {
    std::vector<Forward> forwards;
    std::string preset;
    std::string config;
    bool plot = false;
    CLI::Option* preset_opt = nullptr;
    CLI::Option* config_opt = nullptr;
    CLI::Option* plot_opt = nullptr;

    CommonOptions() {
        forwards = {
            {"--delta", "delta", "detuning delta (accepts sqrt(x), pi/x)", {}, nullptr},
            {"--lambda", "lambda", "coupling lambda > 0", {}, nullptr},
            {"--k", "k", "hierarchy index: integer, list 0,1,2 or range -9:10", {}, nullptr},
            {"--alpha-re", "alpha_re", "Re(alpha)", {}, nullptr},
            {"--alpha-im", "alpha_im", "Im(alpha)", {}, nullptr},
            {"--alpha-abs", "alpha_abs", "|alpha| (polar form)", {}, nullptr},
            {"--alpha-arg", "alpha_arg", "arg(alpha) in radians (polar form)", {}, nullptr},
            {"--n", "n", "Fock photon number", {}, nullptr},
            {"--n-bar", "n_bar", "mean photon number for timescales", {}, nullptr},
            {"--n-max", "n_max", "highest level index for spectrum", {}, nullptr},
            {"--op", "op", "field operator: a- or a+", {}, nullptr},
            {"--t-start", "t_start", "first sample time", {}, nullptr},
            {"--t-end", "t_end", "last sample time (inclusive)", {}, nullptr},
            {"--t-step", "t_step", "sample spacing", {}, nullptr},
            {"--tail-tol", "tail_tol", "dropped coherent probability bound", {}, nullptr},
            {"--out", "out", "output path prefix", {}, nullptr},
            {"--title", "title", "plot title", {}, nullptr},
            {"--series", "series", "compare: series mode of both runs", {}, nullptr},
            {"--b-delta", "b.delta", "compare: delta of series b", {}, nullptr},
            {"--b-lambda", "b.lambda", "compare: lambda of series b", {}, nullptr},
            {"--b-k", "b.k", "compare: k of series b", {}, nullptr},
            {"--b-alpha-re", "b.alpha_re", "compare: Re(alpha) of series b", {}, nullptr},
            {"--b-alpha-im", "b.alpha_im", "compare: Im(alpha) of series b", {}, nullptr},
        };
    }

    void attach(CLI::App& app) {
        for (auto& f : forwards) {
            f.option = app.add_option(f.flag, f.value, f.help);
        }
        preset_opt = app.add_option("--preset", preset, "figure preset name (fig01..fig11) or config path");
        config_opt = app.add_option("--config", config, "flat key = value config file");
        plot_opt = app.add_flag("--plot", plot, "also write an SVG plot");
    }

    // defaults <- preset <- config file <- flags
    RunConfig build(std::optional<jcsusy::app::Mode> forced_mode, const std::string& base_file = {}) const {
        RunConfig cfg;
        if (preset_opt->count() > 0) {
            jcsusy::app::apply(cfg, jcsusy::app::read_config_file(jcsusy::app::resolve_preset(preset)));
        }
        if (!base_file.empty()) {
            jcsusy::app::apply(cfg, jcsusy::app::read_config_file(base_file));
        }
        if (config_opt->count() > 0) {
            jcsusy::app::apply(cfg, jcsusy::app::read_config_file(config));
        }
        for (const auto& f : forwards) {
            if (f.option->count() > 0) {
                jcsusy::app::apply_one(cfg, f.key, f.value);
            }
        }
        if (plot_opt->count() > 0) {
            cfg.emit_plot = plot;
        }
        if (forced_mode) {
            cfg.mode = *forced_mode;
        }
        return cfg;
    }
};

int report(const RunResult& res) {
    for (const auto& line : res.report) {
        std::cout << line << '\n';
    }
    for (const auto& f : res.files) {
        std::cout << "wrote " << f << '\n';
    }
    if (!res.error_line.empty()) {
        std::cerr << res.error_line << '\n';
    }
    return res.exit_code;
}

int config_failure(const std::string& what) {
    std::cerr << "error kind=config message=\"" << what << "\"\n";
    return jcsusy::app::kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SUSY partner hierarchies of Jaynes-Cummings Hamiltonians: dynamics, expected values, time scales"};
    app.require_subcommand(0, 1);

    CommonOptions top;
    top.attach(app);
    bool list = false;
    app.add_flag("--list-presets", list, "print the shipped preset names");

    const std::vector<std::pair<std::string, std::string>> modes = {
        {"inversion-fock", "atomic inversion of an excited atom with n photons"},
        {"inversion-coherent", "atomic inversion of an excited atom in a coherent field"},
        {"field", "<a-> or <a+> along the coherent evolution, with the free-field reference"},
        {"quadrature", "quadratures x1, x2 along the coherent evolution"},
        {"timescales", "classical/revival times and field periods over k"},
        {"spectrum", "closed-form levels, with partner comparison for two or more k"},
        {"verify", "intertwining, isospectrality and oracle-equivalence checks"},
        {"compare", "overlay two series (second series set by --b-* flags or a second config)"},
    };
    std::vector<std::pair<CLI::App*, CommonOptions>> subs;
    subs.reserve(modes.size());
    std::vector<std::string> compare_files;
    for (const auto& [name, help] : modes) {
        CLI::App* sub = app.add_subcommand(name, help);
        subs.emplace_back(sub, CommonOptions{});
        subs.back().second.attach(*sub);
        if (name == "compare") {
            sub->add_option("configs", compare_files, "optional config files for series a and b")->expected(0, 2);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : jcsusy::app::kExitConfig;
    }

    if (list) {
        for (const auto& name : jcsusy::app::list_presets()) {
            std::cout << name << '\n';
        }
        return 0;
    }

    try {
        for (auto& [sub, opts] : subs) {
            if (!sub->parsed()) {
                continue;
            }
            const auto mode = jcsusy::app::parse_mode(sub->get_name());
            if (mode == jcsusy::app::Mode::Compare && compare_files.size() == 2) {
                RunConfig a = opts.build(std::nullopt, compare_files[0]);
                RunConfig b = opts.build(std::nullopt, compare_files[1]);
                return report(jcsusy::app::compare(a, b));
            }
            if (mode == jcsusy::app::Mode::Compare && compare_files.size() == 1) {
                return report(jcsusy::app::run(opts.build(mode, compare_files[0])));
            }
            return report(jcsusy::app::run(opts.build(mode)));
        }
        if (top.preset_opt->count() == 0 && top.config_opt->count() == 0) {
            std::cout << app.help();
            return jcsusy::app::kExitConfig;
        }
        return report(jcsusy::app::run(top.build(std::nullopt)));
    } catch (const ConfigError& e) {
        return config_failure(e.what());
    }
}
