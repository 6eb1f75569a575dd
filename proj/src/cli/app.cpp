// app.cpp: CLI11 front end

#include "cli/app.hpp"

#include <filesystem>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "cli/run_config.hpp"
#include "cli/validate.hpp"
#include "tidisc/errors.hpp"

namespace tidisc::cli {

namespace {

struct GlobalFlags {
    std::optional<std::string> out;
    int workers = 1;
    std::uint64_t seed = ValidateOptions{}.seed;
    std::string format = "csv";
};

/// Every physical flag is optional; unset flags keep the model or preset default.
struct ModelFlags {
    std::optional<std::string> model;
    std::map<std::string, std::optional<double>> scalars;
    std::optional<std::string> temperature;
    std::optional<std::string> kappa_form;
    std::vector<double> schedule;
    std::optional<double> tmin;
    std::optional<double> tmax;
    std::optional<int> npoints;
    std::optional<std::string> from_metadata;
};

struct FlagSpec {
    const char* flag;
    const char* param;
    const char* help;
};

constexpr FlagSpec kScalarFlags[] = {
    {"--m", "m", "Bell-diagonal family parameter (1, m, -m)"},
    {"--s", "s", "ohmicity"},
    {"--alpha", "alpha", "dephasing coupling (both couplings for the correlated model)"},
    {"--alpha1", "alpha1", "coupling of environment 1 (correlated)"},
    {"--alpha2", "alpha2", "coupling of environment 2 (correlated)"},
    {"--temp-scale", "temp_scale", "2 k_B T / hbar omega_c for the high-temperature bath"},
    {"--omega-t", "omega_t", "k_B T / hbar in units of omega_c (finite temperature)"},
    {"--omega-c", "omega_c", "cutoff frequency"},
    {"--omega", "omega", "qubit frequency in display units"},
    {"--R", "R", "coupling ratio gamma0 / lambda"},
    {"--delta", "delta", "detuning in units of lambda"},
    {"--N", "N", "mean thermal photon number"},
    {"--lambda", "lambda", "reservoir spectral width"},
    {"--beta", "beta", "omega_c / lambda (combined model)"},
    {"--r", "r", "two-mode squeezing"},
    {"--c", "c", "initial state parameter (correlated)"},
    {"--n1", "n1", "occupation of environment 1"},
    {"--n2", "n2", "occupation of environment 2"},
    {"--eps", "eps", "qubit gaps in units of omega_c (both)"},
    {"--eps1", "eps1", "gap of qubit 1 in units of omega_c"},
    {"--eps2", "eps2", "gap of qubit 2 in units of omega_c"},
    {"--horizon", "horizon", "transition search horizon in display units"},
};

void add_model_flags(CLI::App* app, ModelFlags& f, bool with_model, bool with_grid) {
    if (with_model) {
        app->add_option("--model", f.model, "dephasing | thermal | combined | correlated")
            ->check(CLI::IsMember({"dephasing", "thermal", "combined", "correlated"}));
    }
    for (const auto& spec : kScalarFlags) {
        app->add_option(spec.flag, f.scalars[spec.param], spec.help);
    }
    app->add_option("--temperature", f.temperature, "high | finite | zero")
        ->check(CLI::IsMember({"high", "finite", "zero"}));
    app->add_option("--kappa-form", f.kappa_form, "repaired | literal")
        ->check(CLI::IsMember({"repaired", "literal"}));
    app->add_option("--schedule", f.schedule, "t1_start,t1_end,t2_start,t2_end in display units")
        ->delimiter(',');
    if (with_grid) {
        app->add_option("--tmin", f.tmin, "first time in display units");
        app->add_option("--tmax", f.tmax, "last time in display units");
        app->add_option("--npoints", f.npoints, "number of time points");
    }
    app->add_option("--from-metadata", f.from_metadata, "replay a dataset's metadata file");
}

void apply(const ModelFlags& f, RunConfig& cfg) {
    for (const auto& [name, value] : f.scalars) {
        if (value) {
            cfg.set(name, *value);
        }
    }
    if (f.temperature) {
        cfg.temperature = *f.temperature;
    }
    if (f.kappa_form) {
        cfg.kappa_form = *f.kappa_form == "literal" ? KappaForm::Literal : KappaForm::Repaired;
    }
    if (!f.schedule.empty()) {
        if (f.schedule.size() != 4) {
            throw InvalidParameter("schedule needs four comma-separated times");
        }
        cfg.schedule = {f.schedule[0], f.schedule[1], f.schedule[2], f.schedule[3]};
    }
    if (f.tmin) {
        cfg.grid.tmin = *f.tmin;
    }
    if (f.tmax) {
        cfg.grid.tmax = *f.tmax;
    }
    if (f.npoints) {
        cfg.grid.npoints = *f.npoints;
    }
}

RunConfig run_config_from(const ModelFlags& f) {
    if (f.from_metadata) {
        const auto job = job_from_metadata(read_metadata_file(*f.from_metadata));
        if (const auto* cfg = std::get_if<RunConfig>(&job)) {
            return *cfg;
        }
        throw InvalidParameter("metadata describes a scan, not a trace");
    }
    const Model model = model_from_string(f.model.value_or("dephasing"));
    RunConfig cfg = RunConfig::defaults(model);
    apply(f, cfg);
    return cfg;
}

struct AxisFlags {
    std::optional<std::string> name;
    std::vector<double> range;
    std::optional<int> n;
    bool open = false;
};

void add_axis_flags(CLI::App* app, const std::string& axis, AxisFlags& f) {
    app->add_option("--" + axis, f.name, "parameter on the " + axis + " axis");
    app->add_option("--" + axis + "-range", f.range, "lo,hi")->delimiter(',');
    app->add_option("--n" + axis, f.n, "grid points on the " + axis + " axis (>= 8)");
    app->add_flag("--" + axis + "-open", f.open, "exclude the lower end of the range");
}

void apply(const AxisFlags& f, AxisSpec& axis) {
    if (f.name) {
        axis.name = *f.name;
    }
    if (!f.range.empty()) {
        if (f.range.size() != 2) {
            throw InvalidParameter("axis range needs lo,hi");
        }
        axis.lo = f.range[0];
        axis.hi = f.range[1];
        axis.open_lower = f.open;
    } else if (f.open) {
        axis.open_lower = true;
    }
    if (f.n) {
        axis.n = *f.n;
    }
}

BoundaryRule rule_from_flag(const std::string& rule) {
    return rule == "strict" ? BoundaryRule::Strict : BoundaryRule::LongTime;
}

void report_paths(const std::vector<std::string>& paths, std::ostream& out) {
    for (const auto& p : paths) {
        out << "wrote " << p << '\n';
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"tidisc: correlation dynamics of two qubits in dephasing, dissipative and "
                 "correlated environments"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalFlags g;
    app.add_option("--out", g.out, "output path stem (directory for `figure`)");
    app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized validation suites");
    app.add_option("--format", g.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    ModelFlags trace_flags;
    auto* trace = app.add_subcommand("trace", "I, C, D along a time grid");
    add_model_flags(trace, trace_flags, true, true);

    ModelFlags transition_flags;
    std::string transition_rule = "long-time";
    auto* transition = app.add_subcommand("transition", "sudden-transition time or time invariance");
    add_model_flags(transition, transition_flags, true, false);
    transition->add_option("--rule", transition_rule, "long-time | strict (dephasing model)")
        ->check(CLI::IsMember({"long-time", "strict"}));

    ModelFlags scan_flags;
    std::optional<std::string> preset;
    std::optional<std::string> kind;
    std::optional<std::string> scan_rule;
    AxisFlags x_flags, y_flags;
    auto* scan = app.add_subcommand("scan", "two-parameter region map (x,y,label)");
    add_model_flags(scan, scan_flags, false, false);
    scan->add_option("--preset", preset, "fig2a | fig2b | fig7a | fig7b | fig7c | fig7d")
        ->check(CLI::IsMember(scan_preset_names()));
    scan->add_option("--kind", kind, "dephasing | correlated | landscape")
        ->check(CLI::IsMember({"dephasing", "correlated", "landscape"}));
    scan->add_option("--rule", scan_rule, "long-time | strict (dephasing scans)")
        ->check(CLI::IsMember({"long-time", "strict"}));
    add_axis_flags(scan, "x", x_flags);
    add_axis_flags(scan, "y", y_flags);

    int figure_number = 0;
    auto* figure = app.add_subcommand("figure", "write every dataset of one figure");
    figure->add_option("n", figure_number, "figure number 1..7")->required()->check(CLI::Range(1, 7));

    ValidateOptions vopt;
    auto* validate = app.add_subcommand("validate", "run the oracle suites");
    validate->add_option("--suite", vopt.suites, "suite name (repeatable)")
        ->check(CLI::IsMember(suite_names()));
    validate->add_option("--n", vopt.n, "draws per suite (default: suite specific)")
        ->check(CLI::NonNegativeNumber);
    validate->add_flag("--inject-unrepaired-kappa", vopt.inject_unrepaired_kappa,
                       "negative control: feed the unrepaired kappa sign to the map suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        const Format format = format_from_string(g.format);
        if (*trace) {
            const RunConfig cfg = run_config_from(trace_flags);
            report_paths(emit(run_trace(cfg, g.workers), g.out, format, out), out);
        } else if (*transition) {
            const RunConfig cfg = run_config_from(transition_flags);
            const json doc = run_transition(cfg, rule_from_flag(transition_rule));
            if (g.out) {
                write_json_file(*g.out + ".json", doc);
                report_paths({*g.out + ".json"}, out);
            } else {
                out << doc.dump(2) << '\n';
            }
        } else if (*scan) {
            ScanConfig sc;
            if (scan_flags.from_metadata) {
                const auto job = job_from_metadata(read_metadata_file(*scan_flags.from_metadata));
                if (!std::holds_alternative<ScanConfig>(job)) {
                    throw InvalidParameter("metadata describes a trace, not a scan");
                }
                sc = std::get<ScanConfig>(job);
            } else {
                if (preset) {
                    sc = scan_preset(*preset);
                }
                if (kind) {
                    sc.kind = scan_kind_from_string(*kind);
                    if (!preset) {
                        sc.base = RunConfig::defaults(sc.kind == ScanKind::Correlated
                                                          ? Model::Correlated
                                                          : Model::Dephasing);
                    }
                }
                if (scan_rule) {
                    sc.rule = rule_from_flag(*scan_rule);
                }
                apply(scan_flags, sc.base);
                apply(x_flags, sc.x);
                apply(y_flags, sc.y);
            }
            report_paths(emit(run_scan(sc, g.workers), g.out, format, out), out);
        } else if (*figure) {
            const std::filesystem::path dir = g.out.value_or(".");
            for (const auto& panel : figure_panels(figure_number)) {
                const std::string stem = (dir / panel.stem).string();
                report_paths(emit(run_job(panel.job, g.workers), stem, format, out), out);
            }
        } else if (*validate) {
            vopt.seed = g.seed;
            bool all = true;
            for (const auto& r : run_validation(vopt)) {
                out << format_suite_line(r) << '\n';
                all = all && r.pass;
            }
            out << (all ? "all suites passed" : "validation FAILED") << '\n';
            return all ? 0 : 1;
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace tidisc::cli
