// run_config.hpp: model selection and parameter set shared by the CLI commands

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tidisc/correlated_env.hpp"
#include "tidisc/duo_dynamics.hpp"
#include "tidisc/thermal_channel.hpp"

namespace tidisc::cli {

using json = nlohmann::json;

enum class Model { Dephasing, Thermal, Combined, Correlated };

std::string to_string(Model model);
Model model_from_string(const std::string& name);

/// Uniform grid in display units (ω_c t or λt), npoints ≥ 2.
struct TimeGrid {
    double tmin = 0.0;
    double tmax = 12.0;
    int npoints = 1001;

    void validate() const;
    [[nodiscard]] std::vector<double> values() const;
};

/// Every physical parameter the four models use. Only the subset relevant to `model` is
/// serialized. Times and horizons are in display units.
struct RunConfig {
    Model model = Model::Dephasing;
    double m = 0.1;

    // Ohmic dephasing bath (dephasing, combined).
    double s = 2.5;
    double alpha = 0.01;
    std::string temperature = "high"; // high | finite | zero
    double temp_scale = 100.0;        // 2k_BT/ħω_c
    double omega_t = 1.0;             // k_BT/ħ in units of ω_c
    double omega_c = 1.0;
    double omega = 0.0;               // qubit frequency in display units

    // Lorentzian reservoir (thermal, combined).
    double R = 0.01;
    double delta = 0.0; // Δ/λ
    double N = 0.0;
    double lambda = 1.0;
    double beta = 1.0;  // ω_c/λ for the combined model
    KappaForm kappa_form = KappaForm::Repaired;

    // Correlated environments.
    double r = 0.0;
    double c = 0.1;
    double n1 = 0.0;
    double n2 = 0.0;
    double alpha1 = 0.2;
    double alpha2 = 0.2;
    double eps1 = 1e-8;
    double eps2 = 1e-8;
    InteractionSchedule schedule;

    TimeGrid grid;
    double horizon = 200.0;

    /// Model defaults: the first panel of the matching figure preset.
    static RunConfig defaults(Model model);

    /// Display time → physical time (divides by ω_c or λ).
    [[nodiscard]] double time_scale() const;
    [[nodiscard]] std::string time_unit() const;

    [[nodiscard]] OhmicDephasing dephasing() const;
    [[nodiscard]] LorentzianReservoir reservoir() const;
    [[nodiscard]] ChannelStack channel() const;
    [[nodiscard]] CorrelatedEnvConfig correlated() const;

    /// Named scalar parameters; "alpha" on the correlated model sets both couplings.
    void set(const std::string& name, double value);
    [[nodiscard]] double get(const std::string& name) const;

    [[nodiscard]] json params() const;
    static RunConfig from_params(Model model, const json& params);

    /// Throws InvalidInput naming the offending parameter.
    void validate() const;
};

} // namespace tidisc::cli
