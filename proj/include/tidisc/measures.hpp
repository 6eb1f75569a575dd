// measures.hpp: correlation measures of two-qubit states, measuring qubit B

#pragma once

#include <optional>

#include "tidisc/qcore.hpp"

namespace tidisc {

/// Correlation triple in bits; discord = mutual_info − classical.
struct CorrelationTriple {
    double mutual_info = 0.0;
    double classical = 0.0;
    double discord = 0.0;

    static CorrelationTriple from_ic(double mutual_info, double classical) {
        return {mutual_info, classical, mutual_info - classical};
    }
};

/// Projective measurement {|1><1|, |2><2|} with
/// |1> = cosθ|0> + e^{iφ} sinθ|1>, |2> = sinθ|0> − e^{iφ} cosθ|1>.
struct MeasurementBasis {
    double theta = 0.0; // [0, π/2]
    double phi = 0.0;   // [0, 2π)
};

/// X-shaped two-qubit state with equal inner populations:
/// diag(a, b, b, d), ρ14 = z, ρ23 = w.
struct XState {
    double a = 0.25;
    double b = 0.25;
    double d = 0.25;
    Complex z{0.0, 0.0};
    Complex w{0.0, 0.0};

    [[nodiscard]] DensityMatrix to_density_matrix() const;
};

/// Extracts the X-state data if every off-X entry is below 1e-12 and ρ22 = ρ33
/// within 1e-12; returns nullopt otherwise.
std::optional<XState> as_xstate(const DensityMatrix& rho);

double mutual_information(const DensityMatrix& rho);

/// Σ_k P_k S(ρ_k) for the measurement on B. Outcomes with P_k < 1e-14 contribute 0.
double conditional_entropy(const DensityMatrix& rho, const MeasurementBasis& basis);

struct MeasurementOptimum {
    double classical = 0.0; // bits
    MeasurementBasis basis;
};

/// Maximises S(ρ^A) − Σ_k P_k S(ρ_k) on a grid_n × grid_n (θ, φ) grid, optionally
/// polished by a Nelder–Mead simplex. grid_n must be ≥ 8.
MeasurementOptimum classical_correlations_bruteforce(const DensityMatrix& rho,
                                                     int grid_n = 64, bool refine = true);

/// The two candidate discords: D1 (σ_z measurement) and D2 (equatorial measurement).
struct XStateBranches {
    double d1 = 0.0;
    double d2 = 0.0;
};

XStateBranches xstate_branches(const XState& x);

/// Analytic discord min{D1, D2}: exact on Bell-diagonal states, an upper bound on general
/// X states. Throws NotAState if x is not a valid state.
double discord_xstate(const XState& x);

/// Triple for an arbitrary two-qubit state; X-shaped states take the analytic path.
CorrelationTriple correlations(const DensityMatrix& rho);

/// Brute-force triple (always the optimiser path).
CorrelationTriple correlations_bruteforce(const DensityMatrix& rho, int grid_n = 64);

} // namespace tidisc
