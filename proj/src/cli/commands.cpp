// commands.cpp: dataset builders behind the CLI subcommands

#include "cli/commands.hpp"

#include <cmath>

#include "tidisc/duo_dynamics.hpp"
#include "tidisc/errors.hpp"

namespace tidisc::cli {

namespace {

json grid_json(const TimeGrid& g) {
    return {{"tmin", g.tmin}, {"tmax", g.tmax}, {"npoints", g.npoints}};
}

json axis_json(const AxisSpec& a) {
    return {{"name", a.name}, {"lo", a.lo}, {"hi", a.hi}, {"n", a.n}, {"open_lower", a.open_lower}};
}

AxisSpec axis_from_json(const json& j) {
    AxisSpec a;
    a.name = j.at("name").get<std::string>();
    a.lo = j.at("lo").get<double>();
    a.hi = j.at("hi").get<double>();
    a.n = j.at("n").get<int>();
    a.open_lower = j.value("open_lower", false);
    return a;
}

std::string rule_name(BoundaryRule rule) {
    return rule == BoundaryRule::Strict ? "strict" : "long-time";
}

BoundaryRule rule_from(const std::string& name) {
    if (name == "long-time") {
        return BoundaryRule::LongTime;
    }
    if (name == "strict") {
        return BoundaryRule::Strict;
    }
    throw InvalidParameter("rule must be 'long-time' or 'strict'");
}

void require_open_unit_m(double m) {
    if (!(m > 0.0 && m < 1.0)) {
        throw InvalidM("m must lie in (0,1)");
    }
}

json optional_number(const std::optional<double>& v, double scale) {
    return v ? json(*v / scale) : json(nullptr);
}

// "alpha" and "eps" address both per-qubit parameters.
bool on_axis(const std::string& key, const std::string& axis) {
    return key == axis || ((axis == "alpha" || axis == "eps") && key.rfind(axis, 0) == 0);
}

RunConfig correlated_preset(double r, double s, double t_switch) {
    RunConfig cfg = RunConfig::defaults(Model::Correlated);
    cfg.r = r;
    cfg.s = s;
    cfg.c = 0.1;
    cfg.alpha1 = cfg.alpha2 = 0.2;
    cfg.schedule = {0.0, t_switch, t_switch, 2.0 * t_switch};
    cfg.grid = {0.0, 2.0 * t_switch, 2001};
    cfg.horizon = 2.0 * t_switch;
    return cfg;
}

RunConfig combined_preset(double s, double tmax) {
    RunConfig cfg = RunConfig::defaults(Model::Combined);
    cfg.R = 0.01;
    cfg.delta = 50.0;
    cfg.N = 10.0;
    cfg.m = 0.1;
    cfg.s = s;
    cfg.grid = {0.0, tmax, 2001};
    cfg.horizon = tmax;
    return cfg;
}

} // namespace

Dataset run_trace(const RunConfig& cfg, int workers) {
    cfg.validate();
    const std::vector<double> display = cfg.grid.values();
    const double ts = cfg.time_scale();
    std::vector<double> phys(display.size());
    for (std::size_t i = 0; i < display.size(); ++i) {
        phys[i] = display[i] * ts;
    }

    std::vector<CorrelationTriple> triples;
    std::optional<double> transition;
    if (cfg.model == Model::Correlated) {
        const CorrelatedEnvConfig env = cfg.correlated();
        for (double t : phys) {
            triples.push_back(correlations_correlated(t, env));
        }
        if (env.c > 0.0 && env.c < 1.0) {
            const auto tr = correlated_transition_time(env, phys.back());
            if (tr.time && *tr.time >= phys.front()) {
                transition = tr.time;
            }
        }
    } else {
        const CorrelationTrace trace = correlation_trace(cfg.m, phys, cfg.channel(), workers);
        triples = trace.triples;
        transition = trace.transition_time;
    }

    Dataset ds;
    ds.table.columns = {"t", "I", "C", "D"};
    for (std::size_t i = 0; i < display.size(); ++i) {
        ds.table.rows.push_back(
            {display[i], triples[i].mutual_info, triples[i].classical, triples[i].discord});
    }
    ds.metadata = make_metadata("trace", to_string(cfg.model), cfg.params(), grid_json(cfg.grid),
                                cfg.time_unit());
    ds.metadata["transition_time"] = optional_number(transition, ts);
    return ds;
}

json run_transition(const RunConfig& cfg, BoundaryRule rule) {
    if (cfg.model != Model::Correlated) {
        require_open_unit_m(cfg.m);
    }
    cfg.validate();
    const double ts = cfg.time_scale();
    const double horizon = cfg.horizon * ts;
    Classification cl;
    std::string note;
    switch (cfg.model) {
    case Model::Dephasing:
        cl = classify_dephasing(cfg.m, cfg.dephasing(), horizon, rule);
        break;
    case Model::Correlated:
        cl = classify_correlated(cfg.correlated(), horizon);
        break;
    case Model::Thermal:
    case Model::Combined: {
        const auto t = branch_exchange_time(cfg.m, 0.0, horizon, cfg.channel());
        cl.horizon = horizon;
        if (t) {
            cl.kind = ClassKind::Frozen;
            cl.transition_time = t;
        } else {
            note = "no branch exchange up to the horizon; time invariance is not certified";
        }
        break;
    }
    }

    json params = cfg.params();
    if (cfg.model == Model::Dephasing) {
        params["rule"] = rule_name(rule);
    }
    json out;
    out["status"] = to_string(cl.kind);
    if (cl.kind == ClassKind::Frozen) {
        out["transition_time"] = *cl.transition_time / ts;
    } else if (cl.kind == ClassKind::TimeInvariant) {
        out["transition_time"] = "time-invariant";
    } else {
        out["transition_time"] = nullptr;
    }
    out["horizon"] = cl.horizon / ts;
    out["units"] = cfg.time_unit();
    if (cl.asymptote) {
        out["asymptote"] = *cl.asymptote;
    }
    if (cl.min_margin) {
        out["min_margin"] = *cl.min_margin;
    }
    if (cl.transient_crossing) {
        out["transient_crossing"] = *cl.transient_crossing / ts;
    }
    if (!note.empty()) {
        out["note"] = note;
    }
    out["metadata"] = make_metadata("transition", to_string(cfg.model), params,
                                    json::object(), cfg.time_unit());
    return out;
}

std::string to_string(ScanKind kind) {
    switch (kind) {
    case ScanKind::Dephasing:
        return "dephasing";
    case ScanKind::Correlated:
        return "correlated";
    case ScanKind::Landscape:
        return "landscape";
    }
    return "dephasing";
}

ScanKind scan_kind_from_string(const std::string& name) {
    for (auto k : {ScanKind::Dephasing, ScanKind::Correlated, ScanKind::Landscape}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw InvalidParameter("scan kind must be dephasing, correlated or landscape");
}

const std::vector<std::string>& scan_preset_names() {
    static const std::vector<std::string> names = {"fig2a", "fig2b", "fig7a",
                                                   "fig7b", "fig7c", "fig7d"};
    return names;
}

ScanConfig scan_preset(const std::string& name) {
    ScanConfig sc;
    sc.preset = name;
    if (name == "fig2a") {
        sc.kind = ScanKind::Landscape;
        sc.base = RunConfig::defaults(Model::Dephasing);
        sc.x = {"s", 1.5, 5.0, 64, true};
        sc.y = {"t", 0.0, 20.0, 64, false};
        return sc;
    }
    if (name == "fig2b") {
        sc.kind = ScanKind::Dephasing;
        sc.base = RunConfig::defaults(Model::Dephasing);
        sc.x = {"s", 2.0, 5.0, 64, true};
        sc.y = {"m", 0.0, 0.5, 64, true};
        return sc;
    }
    sc.kind = ScanKind::Correlated;
    sc.base = correlated_preset(0.5, 2.5, 100.0);
    const AxisSpec c_axis{"c", 0.0, 0.5, 64, true};
    if (name == "fig7a") {
        sc.x = {"s", 0.5, 5.0, 64, false};
        sc.y = c_axis;
    } else if (name == "fig7b") {
        sc.x = {"r", 0.0, 1.5, 64, false};
        sc.y = c_axis;
    } else if (name == "fig7c") {
        sc.base.c = 0.1;
        sc.x = {"r", 0.0, 1.5, 64, false};
        sc.y = {"s", 0.5, 5.0, 64, false};
    } else if (name == "fig7d") {
        sc.x = {"alpha", 0.0, 0.5, 64, true};
        sc.y = c_axis;
    } else {
        throw InvalidParameter("unknown scan preset '" + name + "'");
    }
    return sc;
}

RegionMap region_map(const ScanConfig& sc, int workers) {
    sc.x.validate();
    sc.y.validate();
    if (sc.kind == ScanKind::Landscape) {
        if (sc.x.name != "s" || sc.y.name != "t") {
            throw InvalidParameter("landscape axes must be s and t");
        }
        require_open_unit_m(sc.base.m);
        return decoherence_landscape(sc.x, sc.y, sc.base.m, sc.base.dephasing(), workers);
    }
    // Unknown axis names fail here rather than once per cell.
    RunConfig probe = sc.base;
    probe.set(sc.x.name, sc.x.lo);
    probe.set(sc.y.name, sc.y.lo);

    std::map<std::string, double> fixed;
    const json base_params = sc.base.params();
    for (const auto& [key, value] : base_params.items()) {
        if (value.is_number() && !on_axis(key, sc.x.name) && !on_axis(key, sc.y.name)) {
            fixed[key] = value.get<double>();
        }
    }
    const CellClassifier classify = [&sc](double x, double y) {
        RunConfig cell = sc.base;
        cell.set(sc.x.name, x);
        cell.set(sc.y.name, y);
        const double horizon = cell.horizon * cell.time_scale();
        if (sc.kind == ScanKind::Correlated) {
            return classify_correlated(cell.correlated(), horizon);
        }
        return classify_dephasing(cell.m, cell.dephasing(), horizon, sc.rule);
    };
    return region_scan_2d(sc.x, sc.y, fixed, classify, workers);
}

Dataset run_scan(const ScanConfig& sc, int workers) {
    const RegionMap map = region_map(sc, workers);
    Dataset ds;
    ds.table.columns = {"x", "y", "label"};
    for (std::size_t ix = 0; ix < map.x.size(); ++ix) {
        for (std::size_t iy = 0; iy < map.y.size(); ++iy) {
            ds.table.rows.push_back({map.x[ix], map.y[iy], to_string(map.at(ix, iy).kind)});
        }
    }
    json params = sc.base.params();
    params["kind"] = to_string(sc.kind);
    params["rule"] = rule_name(sc.rule);
    if (!sc.preset.empty()) {
        params["preset"] = sc.preset;
    }
    ds.metadata = make_metadata("scan", to_string(sc.base.model), params,
                                {{"x", axis_json(sc.x)}, {"y", axis_json(sc.y)}},
                                sc.base.time_unit());
    int inconclusive = 0;
    for (const auto& cell : map.cells) {
        inconclusive += cell.kind == ClassKind::Inconclusive ? 1 : 0;
    }
    ds.metadata["inconclusive_cells"] = inconclusive;
    return ds;
}

std::variant<RunConfig, ScanConfig> job_from_metadata(const json& metadata) {
    try {
        const std::string command = metadata.at("command").get<std::string>();
        const Model model = model_from_string(metadata.at("model").get<std::string>());
        json params = metadata.at("params");
        const json& grid = metadata.at("grid");
        if (command == "trace") {
            RunConfig cfg = RunConfig::from_params(model, params);
            cfg.grid = {grid.at("tmin").get<double>(), grid.at("tmax").get<double>(),
                        grid.at("npoints").get<int>()};
            return cfg;
        }
        if (command == "scan") {
            ScanConfig sc;
            sc.kind = scan_kind_from_string(params.at("kind").get<std::string>());
            sc.rule = rule_from(params.value("rule", std::string("long-time")));
            sc.preset = params.value("preset", std::string());
            for (const char* key : {"kind", "rule", "preset"}) {
                params.erase(key);
            }
            sc.base = RunConfig::from_params(model, params);
            sc.x = axis_from_json(grid.at("x"));
            sc.y = axis_from_json(grid.at("y"));
            return sc;
        }
        throw InvalidParameter("metadata command '" + command + "' cannot be replayed");
    } catch (const json::exception& e) {
        throw InvalidParameter(std::string("incomplete metadata: ") + e.what());
    }
}

std::vector<FigurePanel> figure_panels(int n) {
    std::vector<FigurePanel> panels;
    switch (n) {
    case 1:
        for (auto [stem, s] : {std::pair{"fig1a", 2.5}, std::pair{"fig1b", 3.5}}) {
            RunConfig cfg = RunConfig::defaults(Model::Dephasing);
            cfg.s = s;
            panels.push_back({stem, cfg});
        }
        break;
    case 2:
        panels.push_back({"fig2a", scan_preset("fig2a")});
        panels.push_back({"fig2b", scan_preset("fig2b")});
        break;
    case 3: {
        const struct { const char* stem; double delta, n; } cases[] = {
            {"fig3a", 0.0, 0.0}, {"fig3b", 50.0, 0.0}, {"fig3c", 50.0, 10.0}};
        for (const auto& c : cases) {
            RunConfig cfg = RunConfig::defaults(Model::Thermal);
            cfg.R = 0.01;
            cfg.delta = c.delta;
            cfg.N = c.n;
            cfg.grid = {0.0, 1e4, 4001};
            cfg.horizon = 1e4;
            panels.push_back({c.stem, cfg});
        }
        break;
    }
    case 4: {
        panels.push_back({"fig4a", combined_preset(2.5, 50.0)});
        panels.push_back({"fig4b", combined_preset(3.5, 50.0)});
        panels.push_back({"fig4a_inset", combined_preset(2.5, 1000.0)});
        panels.push_back({"fig4b_inset", combined_preset(3.5, 1000.0)});
        RunConfig c = combined_preset(2.5, 50.0);
        c.R = 0.001;
        c.delta = 0.0;
        c.m = 0.5;
        panels.push_back({"fig4c", c});
        break;
    }
    case 5:
    case 6: {
        const double s = n == 5 ? 1.0 : 2.5;
        const double t_switch = n == 5 ? 20.0 : 100.0;
        const char* stems[] = {"a", "b", "c"};
        const double rs[] = {0.0, 0.5, 1.0};
        for (int i = 0; i < 3; ++i) {
            panels.push_back({"fig" + std::to_string(n) + stems[i], correlated_preset(rs[i], s, t_switch)});
        }
        break;
    }
    case 7:
        for (const char* p : {"fig7a", "fig7b", "fig7c", "fig7d"}) {
            panels.push_back({p, scan_preset(p)});
        }
        break;
    default:
        throw InvalidParameter("figure number must be between 1 and 7");
    }
    return panels;
}

Dataset run_job(const std::variant<RunConfig, ScanConfig>& job, int workers) {
    if (const auto* cfg = std::get_if<RunConfig>(&job)) {
        return run_trace(*cfg, workers);
    }
    return run_scan(std::get<ScanConfig>(job), workers);
}

} // namespace tidisc::cli
