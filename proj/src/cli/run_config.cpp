// run_config.cpp: parameter plumbing and JSON round trip

#include "cli/run_config.hpp"

#include <cmath>
#include <map>

#include "tidisc/errors.hpp"

namespace tidisc::cli {

namespace {

using Field = double RunConfig::*;

const std::map<std::string, Field>& scalar_fields() {
    static const std::map<std::string, Field> fields = {
        {"m", &RunConfig::m},           {"s", &RunConfig::s},
        {"alpha", &RunConfig::alpha},   {"temp_scale", &RunConfig::temp_scale},
        {"omega_t", &RunConfig::omega_t}, {"omega_c", &RunConfig::omega_c},
        {"omega", &RunConfig::omega},   {"R", &RunConfig::R},
        {"delta", &RunConfig::delta},   {"N", &RunConfig::N},
        {"lambda", &RunConfig::lambda}, {"beta", &RunConfig::beta},
        {"r", &RunConfig::r},           {"c", &RunConfig::c},
        {"n1", &RunConfig::n1},         {"n2", &RunConfig::n2},
        {"alpha1", &RunConfig::alpha1}, {"alpha2", &RunConfig::alpha2},
        {"eps1", &RunConfig::eps1},     {"eps2", &RunConfig::eps2},
        {"horizon", &RunConfig::horizon},
    };
    return fields;
}

std::string kappa_form_name(KappaForm f) { return f == KappaForm::Literal ? "literal" : "repaired"; }

KappaForm kappa_form_from(const std::string& name) {
    if (name == "repaired") {
        return KappaForm::Repaired;
    }
    if (name == "literal") {
        return KappaForm::Literal;
    }
    throw InvalidParameter("kappa_form must be 'repaired' or 'literal'");
}

void put_dephasing(json& p, const RunConfig& cfg) {
    p["s"] = cfg.s;
    p["alpha"] = cfg.alpha;
    p["temperature"] = cfg.temperature;
    if (cfg.temperature == "high") {
        p["temp_scale"] = cfg.temp_scale;
    } else if (cfg.temperature == "finite") {
        p["omega_t"] = cfg.omega_t;
    }
}

void put_reservoir(json& p, const RunConfig& cfg) {
    p["R"] = cfg.R;
    p["delta"] = cfg.delta;
    p["N"] = cfg.N;
    p["lambda"] = cfg.lambda;
    p["kappa_form"] = kappa_form_name(cfg.kappa_form);
}

} // namespace

std::string to_string(Model model) {
    switch (model) {
    case Model::Dephasing:
        return "dephasing";
    case Model::Thermal:
        return "thermal";
    case Model::Combined:
        return "combined";
    case Model::Correlated:
        return "correlated";
    }
    return "dephasing";
}

Model model_from_string(const std::string& name) {
    for (auto m : {Model::Dephasing, Model::Thermal, Model::Combined, Model::Correlated}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw InvalidParameter("model must be one of dephasing, thermal, combined, correlated");
}

void TimeGrid::validate() const {
    if (!std::isfinite(tmin) || !std::isfinite(tmax) || !(tmin >= 0.0) || !(tmax > tmin)) {
        throw InvalidParameter("time grid needs finite 0 <= tmin < tmax");
    }
    if (npoints < 2) {
        throw InvalidParameter("npoints must be >= 2");
    }
}

std::vector<double> TimeGrid::values() const {
    validate();
    std::vector<double> v(static_cast<std::size_t>(npoints));
    for (int i = 0; i < npoints; ++i) {
        v[i] = tmin + (tmax - tmin) * i / (npoints - 1);
    }
    v.back() = tmax;
    return v;
}

RunConfig RunConfig::defaults(Model model) {
    RunConfig cfg;
    cfg.model = model;
    switch (model) {
    case Model::Dephasing:
        cfg.grid = {0.0, 12.0, 2000};
        break;
    case Model::Thermal:
        cfg.grid = {0.0, 50.0, 2001};
        cfg.horizon = 50.0;
        break;
    case Model::Combined:
        cfg.delta = 50.0;
        cfg.N = 10.0;
        cfg.grid = {0.0, 50.0, 2001};
        cfg.horizon = 50.0;
        break;
    case Model::Correlated:
        cfg.s = 1.0;
        cfg.schedule = {0.0, 20.0, 20.0, 40.0};
        cfg.grid = {0.0, 40.0, 2001};
        break;
    }
    return cfg;
}

double RunConfig::time_scale() const {
    return (model == Model::Thermal || model == Model::Combined) ? 1.0 / lambda : 1.0 / omega_c;
}

std::string RunConfig::time_unit() const {
    return (model == Model::Thermal || model == Model::Combined) ? "lambda t" : "omega_c t";
}

OhmicDephasing RunConfig::dephasing() const {
    OhmicDephasing d;
    d.alpha = alpha;
    d.s = s;
    d.omega_c = model == Model::Combined ? beta * lambda : omega_c;
    if (temperature == "high") {
        d.temperature = HighTemperature{temp_scale};
    } else if (temperature == "finite") {
        d.temperature = FiniteTemperature{omega_t * d.omega_c};
    } else if (temperature == "zero") {
        d.temperature = ZeroTemperature{};
    } else {
        throw InvalidParameter("temperature must be 'high', 'finite' or 'zero'");
    }
    return d;
}

LorentzianReservoir RunConfig::reservoir() const {
    return LorentzianReservoir::from_ratio(R, delta, N, lambda);
}

ChannelStack RunConfig::channel() const {
    ChannelStack ch;
    if (model == Model::Thermal || model == Model::Combined) {
        ch.res = reservoir();
    }
    if (model == Model::Dephasing || model == Model::Combined) {
        ch.deph = dephasing();
    }
    ch.omega = omega / time_scale();
    ch.kappa_form = kappa_form;
    return ch;
}

CorrelatedEnvConfig RunConfig::correlated() const {
    CorrelatedEnvConfig cfg;
    cfg.r = r;
    cfg.n1 = n1;
    cfg.n2 = n2;
    cfg.alpha1 = alpha1;
    cfg.alpha2 = alpha2;
    cfg.s = s;
    cfg.omega_c = omega_c;
    cfg.eps1 = eps1 * omega_c;
    cfg.eps2 = eps2 * omega_c;
    cfg.schedule = {schedule.t1_start / omega_c, schedule.t1_end / omega_c,
                    schedule.t2_start / omega_c, schedule.t2_end / omega_c};
    cfg.c = c;
    return cfg;
}

void RunConfig::set(const std::string& name, double value) {
    if (name == "alpha" && model == Model::Correlated) {
        alpha1 = alpha2 = value;
        return;
    }
    if (name == "eps") {
        eps1 = eps2 = value;
        return;
    }
    const auto it = scalar_fields().find(name);
    if (it == scalar_fields().end()) {
        throw InvalidParameter("unknown parameter '" + name + "'");
    }
    this->*(it->second) = value;
}

double RunConfig::get(const std::string& name) const {
    if (name == "alpha" && model == Model::Correlated) {
        return alpha1;
    }
    const auto it = scalar_fields().find(name);
    if (it == scalar_fields().end()) {
        throw InvalidParameter("unknown parameter '" + name + "'");
    }
    return this->*(it->second);
}

json RunConfig::params() const {
    json p = json::object();
    switch (model) {
    case Model::Dephasing:
        p["m"] = m;
        put_dephasing(p, *this);
        p["omega_c"] = omega_c;
        p["omega"] = omega;
        break;
    case Model::Thermal:
        p["m"] = m;
        put_reservoir(p, *this);
        p["omega"] = omega;
        break;
    case Model::Combined:
        p["m"] = m;
        put_reservoir(p, *this);
        put_dephasing(p, *this);
        p["beta"] = beta;
        p["omega"] = omega;
        break;
    case Model::Correlated:
        p["r"] = r;
        p["c"] = c;
        p["n1"] = n1;
        p["n2"] = n2;
        p["alpha1"] = alpha1;
        p["alpha2"] = alpha2;
        p["s"] = s;
        p["omega_c"] = omega_c;
        p["eps1"] = eps1;
        p["eps2"] = eps2;
        p["schedule"] = {schedule.t1_start, schedule.t1_end, schedule.t2_start, schedule.t2_end};
        break;
    }
    p["horizon"] = horizon;
    return p;
}

RunConfig RunConfig::from_params(Model model, const json& params) {
    RunConfig cfg = defaults(model);
    if (!params.is_object()) {
        throw InvalidParameter("params must be a JSON object");
    }
    for (const auto& [key, value] : params.items()) {
        if (key == "temperature") {
            cfg.temperature = value.get<std::string>();
        } else if (key == "kappa_form") {
            cfg.kappa_form = kappa_form_from(value.get<std::string>());
        } else if (key == "schedule") {
            const auto v = value.get<std::vector<double>>();
            if (v.size() != 4) {
                throw InvalidParameter("schedule needs four times");
            }
            cfg.schedule = {v[0], v[1], v[2], v[3]};
        } else if (value.is_number()) {
            cfg.set(key, value.get<double>());
        } else {
            throw InvalidParameter("parameter '" + key + "' must be a number");
        }
    }
    return cfg;
}

void RunConfig::validate() const {
    grid.validate();
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw InvalidParameter("horizon must be positive and finite");
    }
    if (!(omega_c > 0.0) || !(lambda > 0.0)) {
        throw InvalidParameter("omega_c and lambda must be > 0");
    }
    if (model == Model::Correlated) {
        correlated().validate();
        return;
    }
    if (!(std::abs(m) < 1.0)) {
        throw InvalidM("m must satisfy |m| < 1");
    }
    channel().validate();
}

} // namespace tidisc::cli
