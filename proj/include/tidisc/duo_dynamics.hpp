// duo_dynamics.hpp: two qubits in independent local environments
//
// ρ^{AB}(t) = (Λ^A ⊗ Λ^B) ρ^{AB}(0). On Pauli coordinates R_ij = Tr[ρ σ_i⊗σ_j] the product map
// acts as R ↦ T_A R T_Bᵀ with T the single-qubit transfer matrix.

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tidisc/measures.hpp"
#include "tidisc/thermal_channel.hpp"

namespace tidisc {

/// Local environment of one qubit. At least one channel must be present.
struct ChannelStack {
    std::optional<LorentzianReservoir> res;
    std::optional<OhmicDephasing> deph;
    double omega = 0.0;
    KappaForm kappa_form = KappaForm::Repaired;

    /// β = ω_c/λ when both channels are present.
    [[nodiscard]] std::optional<double> beta() const;
    [[nodiscard]] bool dephasing_only() const { return deph && !res; }
    [[nodiscard]] MapElements elements(double t) const;
    void validate() const;
};

/// Identical environments on both qubits.
DensityMatrix evolve_pair(const DensityMatrix& rho0, double t, const ChannelStack& ch);

/// Separate environments for A and B.
DensityMatrix evolve_pair(const DensityMatrix& rho0, double t, const ChannelStack& ch_a,
                          const ChannelStack& ch_b);

/// Closed-form evolution of a Bell-diagonal state under identical channels:
///   ρ11 = ((1+κ)² + η∥² m3)/4, ρ22 = ρ33 = (1 − κ² − η∥² m3)/4, ρ44 = ((1−κ)² + η∥² m3)/4,
///   ρ23 = (m1+m2) η⊥²/4,      ρ14 = (m1−m2) η⊥² e^{−2iωt}/4.
XState evolve_bell_diagonal(const BellDiagonalParams& p, double t, const ChannelStack& ch);

/// Correlations of the (1, m, −m) family after pure dephasing with integral Γ_z:
///   I = k(m) + k(e^{−2Γ_z}),  C = k(max{e^{−2Γ_z}, |m|}),  k = correlation_kernel.
CorrelationTriple dephased_family_correlations(double m, double gamma_z);

struct CorrelationTrace {
    std::vector<double> times;
    std::vector<CorrelationTriple> triples;
    std::optional<double> transition_time;
};

/// Correlation triples along `times` (strictly increasing, ≥ 0) for the family (1, m, −m), |m| < 1.
/// Dephasing-only stacks use the closed forms; otherwise states are built and measured.
/// transition_time is the first exchange of the optimal measurement inside the window.
CorrelationTrace correlation_trace(double m, std::span<const double> times,
                                   const ChannelStack& ch, int workers = 1);

enum class TransitionStatus { Found, NoTransition, Inconclusive };

struct TransitionSearch {
    TransitionStatus status = TransitionStatus::Inconclusive;
    std::optional<double> time;
    std::optional<std::pair<double, double>> bracket; // final bisection interval around time
    double horizon = 0.0;          // window actually searched (extended when a crossing is certain)
    std::optional<double> floor;   // inf_t e^{−2Γ_z(t)} when known
};

/// Solves e^{−2Γ_z(t)} = m for the first crossing, bisection to 1e-10/ω_c.
/// A crossing certified beyond `horizon` (floor < m) is chased by doubling the window up to
/// 1e15/ω_c. NoTransition requires floor > m. Throws InvalidM unless 0 < m < 1.
TransitionSearch dephasing_transition_time(double m, const OhmicDephasing& deph,
                                           std::optional<double> horizon = std::nullopt);

/// First time in [t0, t1] where the two discord branches exchange order, refined by bisection.
std::optional<double> branch_exchange_time(double m, double t0, double t1, const ChannelStack& ch,
                                           int samples = 2000);

} // namespace tidisc
