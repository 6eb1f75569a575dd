// correlated_env.hpp: two qubits dephased by environments prepared in a correlated
// two-mode Gaussian state, with switchable local interaction windows
//
// Initial qubit state: diag((1+c)/4, (1−c)/4, (1−c)/4, (1+c)/4) with unit coherences.
// The reduced state keeps that X shape, ρ14 = (1+c)κ12/4, ρ23 = (1−c)Λ12/4, where
//   κ12 = κ1 κ2 F,  Λ12 = κ1 κ2* / F.
// κ_j carries local dephasing over the accumulated interaction time t_j(t); F carries the
// inter-environment correlation c₋ and equals 1 for uncorrelated environments.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tidisc/duo_dynamics.hpp"
#include "tidisc/measures.hpp"

namespace tidisc {

/// Qubit j interacts during [tj_start, tj_end]. Requires 0 ≤ t1_start ≤ t2_start and
/// non-empty windows.
struct InteractionSchedule {
    double t1_start = 0.0;
    double t1_end = 20.0;
    double t2_start = 20.0;
    double t2_end = 40.0;

    void validate() const;
};

struct CorrelatedEnvConfig {
    double r = 0.0;       // two-mode squeezing
    double n1 = 0.0;      // mean occupations
    double n2 = 0.0;
    double alpha1 = 0.2;
    double alpha2 = 0.2;
    double s = 1.0;
    double omega_c = 1.0;
    double eps1 = 1e-8;   // qubit gaps, same unit as omega_c
    double eps2 = 1e-8;
    InteractionSchedule schedule;
    double c = 0.1;       // initial-state parameter, |c| < 1

    void validate() const;
};

/// Standard-form covariance matrix entries of each two-mode Gaussian state.
struct CovarianceElements {
    double a = 0.5;
    double b = 0.5;
    double c_plus = 0.0;
    double c_minus = 0.0;
};

CovarianceElements covariance_elements(double r, double n1, double n2);

struct InteractionTimes {
    double t1 = 0.0;
    double t2 = 0.0;
};

/// t_j(t) = clamp(t − tj_start, 0, tj_end − tj_start).
InteractionTimes interaction_clock(double t, const InteractionSchedule& schedule);

/// (1+ω_c²τ²)^{−s/2}(cos(sθ) + ω_cτ sin(sθ)), θ = arctan(ω_cτ).
double g_factor(double tau, double s, double omega_c);

/// κ_j(t), j ∈ {1, 2}. The ohmic point s = 1 uses the exact limit.
Complex local_coherence(double t, int j, const CorrelatedEnvConfig& cfg);

struct CrossCoherence {
    double f = 1.0;         // F = exp(exponent)
    double exponent = 0.0;  // A·[g(t1+t2+t2s) − g(t1+t2s) − g(t2+t2s) + g(t2s)]
    std::optional<double> amplitude; // A = −8 c₋ Γ̃(s−1) √(α1 α2); nullopt at s = 1 with c₋ ≠ 0
};

/// Within 1e-6 of s = 1 the exponent is the two-sided limit, Richardson-extrapolated from
/// s = 1 ± 1e-4 and s = 1 ± 1e-5. Throws LimitUnstable if those disagree beyond 1e-6 relative.
CrossCoherence cross_coherence(double t, const CorrelatedEnvConfig& cfg);

struct CoherencePair {
    Complex kappa12{1.0, 0.0};
    Complex lambda12{1.0, 0.0};
};

CoherencePair coherence_pair(double t, const CorrelatedEnvConfig& cfg);

XState correlated_xstate(double t, const CorrelatedEnvConfig& cfg);
DensityMatrix rho_correlated(double t, const CorrelatedEnvConfig& cfg);

/// ½|(κ12 + Λ12) + c(κ12 − Λ12)|, the competitor of |c| in the classical correlations.
double transition_lhs(double t, const CorrelatedEnvConfig& cfg);

/// C = k(χ), χ = max{|c|, transition_lhs};  I = k(c) + (1+c)/2·k(|κ12|) + (1−c)/2·k(|Λ12|);
/// D = I − C, with k = correlation_kernel. Exact when κ12 and Λ12 share a phase (ε1 t, ε2 t ≪ 1).
CorrelationTriple correlations_correlated(double t, const CorrelatedEnvConfig& cfg);

struct CorrelatedTransition {
    TransitionStatus status = TransitionStatus::Inconclusive;
    std::optional<double> time;
    std::optional<std::pair<double, double>> bracket;
    double min_margin = 0.0; // min over the scan of transition_lhs − c
};

/// First root of transition_lhs(t) = c on [0, horizon] (scan of `samples` points plus Brent
/// polishing of local minima, then bisection). Inconclusive when the margin closes to within
/// 1e-9 without a crossing. Throws InvalidC unless 0 < c < 1.
CorrelatedTransition correlated_transition_time(const CorrelatedEnvConfig& cfg, double horizon,
                                                int samples = 8001);

/// Fock amplitudes √(1−u²)uⁿ, u = tanh r, n = 0..n_max.
std::vector<double> squeezed_vacuum_amplitudes(double r, int n_max);

} // namespace tidisc
