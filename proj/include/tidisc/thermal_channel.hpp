// thermal_channel.hpp: single-qubit map under dephasing plus dissipation/heating
//
// The qubit obeys a time-local master equation with rates
//   dephasing γ_z(t), heating γ₁(t)/2 = N f(t), dissipation γ₂(t)/2 = (N+1) f(t).
// f(t) comes from a Lorentzian reservoir, γ_z(t) from an ohmic-family bath.
// The resulting map acts on Bloch coordinates (1, x, y, z) as
//
//   | 1   0          0          0  |
//   | 0   η⊥ cos φ  −η⊥ sin φ   0  |
//   | 0   η⊥ sin φ   η⊥ cos φ   0  |
//   | κ   0          0          η∥ |
//
// with η∥ = e^{−Γ}, η⊥ = e^{−Γ/2 − Γ_z}, κ = −(1 − e^{−Γ})/(2N+1), φ = ωt.
// Frequency shifts (Lamb shift) are not modelled.

#pragma once

#include <optional>
#include <variant>

#include "tidisc/qcore.hpp"

namespace tidisc {

/// Lorentzian dissipation/heating reservoir. All rates share one inverse-time unit.
struct LorentzianReservoir {
    double gamma0 = 0.01;   // effective coupling γ₀
    double lambda = 1.0;    // spectral width λ
    double delta = 0.0;     // detuning Δ = ω − ν_c
    double n_photons = 0.0; // mean thermal photon number N

    /// Builds a reservoir from R = γ₀/λ and Δ/λ.
    static LorentzianReservoir from_ratio(double ratio, double delta_over_lambda,
                                          double n_photons, double lambda = 1.0);

    [[nodiscard]] double coupling_ratio() const { return gamma0 / lambda; }
    void validate() const;
};

/// 2k_BT/ħ = scale·ω_c, coth(ħω/2k_BT) replaced by its small-argument form.
struct HighTemperature {
    double scale = 1.0;
};

/// Full coth(ω/2ω_T) with thermal frequency ω_T = k_BT/ħ.
struct FiniteTemperature {
    double omega_t = 1.0;
};

struct ZeroTemperature {};

using TemperatureModel = std::variant<HighTemperature, FiniteTemperature, ZeroTemperature>;

/// Ohmic-family dephasing bath J(ω) = α ω^s ω_c^{1−s} e^{−ω/ω_c}.
struct OhmicDephasing {
    double alpha = 0.01;
    double s = 1.0;
    double omega_c = 1.0;
    TemperatureModel temperature = ZeroTemperature{};

    void validate() const;
};

struct MapElements {
    double eta_par = 1.0;
    double eta_perp = 1.0;
    double kappa = 0.0;
    double phase = 0.0;
};

/// Which closed form feeds κ(t). Literal uses (e^{Γ}−1)/(2N+1), which violates positivity,
/// and is a negative control for the validation suites.
enum class KappaForm { Repaired, Literal };

// --- dissipation/heating ---------------------------------------------------------------

/// C(t)/C(0) = e^{−(λ−iΔ)t/2}(cosh(dt/2) + (λ−iΔ)/d · sinh(dt/2)), d = √((λ−iΔ)² − 2γ₀λ).
Complex c_ratio(double t, const LorentzianReservoir& res);

/// ln|C(t)/C(0)|, evaluated without overflow for large λt.
double log_abs_c_ratio(double t, const LorentzianReservoir& res);

/// f(t) = −2 Re[Ċ/C], analytic. Throws PoleEncountered where |C| < 1e-300.
double f_rate(double t, const LorentzianReservoir& res);

/// Γ(t) = −(2N+1) ln|C(t)/C(0)|².
double big_gamma(double t, const LorentzianReservoir& res);

double kappa(double t, const LorentzianReservoir& res, KappaForm form = KappaForm::Repaired);

// --- dephasing -------------------------------------------------------------------------

/// γ_z(t) by adaptive quadrature (absolute tolerance 1e-10) for every temperature model.
double gamma_z_rate(double t, const OhmicDephasing& deph);

/// Γ_z(t). Closed forms for HighTemperature and ZeroTemperature, time-integrated quadrature
/// within 1e-3 of a gamma-function pole and for FiniteTemperature.
double big_gamma_z(double t, const OhmicDephasing& deph);

/// Γ_z(t) = ∫ J(ω) coth(·) (1 − cos ωt)/ω² dω by quadrature, independent of the closed forms.
double big_gamma_z_quadrature(double t, const OhmicDephasing& deph);

/// lim_{t→∞} Γ_z(t) when finite (HighT/FiniteT need s > 2, ZeroT needs s > 1).
std::optional<double> big_gamma_z_asymptote(const OhmicDephasing& deph);

struct GammaZSupremum {
    double value = 0.0;
    std::optional<double> argmax_time; // nullopt: supremum approached as t → ∞
};

/// sup_t Γ_z(t) from the sign changes of γ_z (closed-form models only).
/// nullopt for FiniteTemperature or when Γ_z is unbounded.
std::optional<GammaZSupremum> big_gamma_z_supremum(const OhmicDephasing& deph);

// --- composite map ---------------------------------------------------------------------

MapElements map_elements(double t, const std::optional<LorentzianReservoir>& res,
                         const std::optional<OhmicDephasing>& deph, double omega = 0.0,
                         KappaForm form = KappaForm::Repaired);

/// 4×4 real action on (1, x, y, z).
Eigen::Matrix4d transfer_matrix(const MapElements& me);

DensityMatrix apply_map(const MapElements& me, const DensityMatrix& rho);

/// Integrates the master equation for an arbitrary 2×2 operator (the generator is linear).
/// Adaptive Dormand–Prince, local tolerance 1e-10. Throws IntegrationFailure.
Matrix2 master_equation_propagate(const Matrix2& x0, double t,
                                  const std::optional<LorentzianReservoir>& res,
                                  const std::optional<OhmicDephasing>& deph, double omega = 0.0);

/// Same as above for a state; checks trace preservation to 1e-9.
DensityMatrix master_equation_oracle(const DensityMatrix& rho0, double t,
                                     const std::optional<LorentzianReservoir>& res,
                                     const std::optional<OhmicDephasing>& deph,
                                     double omega = 0.0);

} // namespace tidisc
