// scan.hpp: time-invariant versus frozen classification and two-parameter region maps

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tidisc/correlated_env.hpp"
#include "tidisc/duo_dynamics.hpp"
#include "tidisc/thermal_channel.hpp"

namespace tidisc {

enum class ClassKind {
    TimeInvariant,
    Frozen,
    Inconclusive,
    ClassicalDecoherence, // landscape cell with t < t̃
    QuantumDecoherence,   // landscape cell with t ≥ t̃
};

/// "time-invariant", "frozen", "inconclusive", "classical-decoherence", "quantum-decoherence".
std::string to_string(ClassKind kind);
ClassKind class_kind_from_string(const std::string& label);

struct Classification {
    ClassKind kind = ClassKind::Inconclusive;
    std::optional<double> transition_time; // set for Frozen, in (0, horizon]
    double horizon = 0.0;                  // effective window searched
    std::optional<double> asymptote;       // e^{−2Γ_z(∞)} when known
    std::optional<std::pair<double, double>> root_bracket;
    std::optional<double> min_margin;      // correlated model: min (lhs − c) over the window
    std::optional<double> transient_crossing; // LongTime rule: crossing that later recovers
    std::string error;                     // non-empty when the cell failed
};

/// LongTime decides by the asymptote e^{−2Γ_z(∞)} versus m whenever it exists; a crossing
/// that recovers before t → ∞ is kept as `transient_crossing`. Strict counts any crossing.
enum class BoundaryRule { LongTime, Strict };

/// High-temperature ohmic dephasing with α·scale = normalization, ω_c = 1.
Classification classify_dephasing(double s, double m, double normalization,
                                  std::optional<double> horizon = std::nullopt,
                                  BoundaryRule rule = BoundaryRule::LongTime);

Classification classify_dephasing(double m, const OhmicDephasing& deph,
                                  std::optional<double> horizon = std::nullopt,
                                  BoundaryRule rule = BoundaryRule::LongTime);

/// TimeInvariant is relative to `horizon`: no root and min margin > 1e-9 on [0, horizon].
Classification classify_correlated(const CorrelatedEnvConfig& cfg, double horizon);

/// Uniform grid of n ≥ 8 points on [lo, hi]; with open_lower the grid is lo + (hi − lo)(i+1)/n.
struct AxisSpec {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    int n = 64;
    bool open_lower = false;

    void validate() const;
    [[nodiscard]] std::vector<double> values() const;
};

/// cells[ix * ny + iy] is the classification at (x[ix], y[iy]).
struct RegionMap {
    AxisSpec x_axis;
    AxisSpec y_axis;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<Classification> cells;
    std::map<std::string, double> fixed;

    [[nodiscard]] const Classification& at(std::size_t ix, std::size_t iy) const {
        return cells[ix * y.size() + iy];
    }
};

using CellClassifier = std::function<Classification(double x, double y)>;

/// Evaluates the classifier on the grid. A cell whose classifier throws a library error is
/// recorded as Inconclusive with the message. Independent of the worker count.
RegionMap region_scan_2d(const AxisSpec& x_axis, const AxisSpec& y_axis,
                         const std::map<std::string, double>& fixed,
                         const CellClassifier& classifier, int workers = 1);

/// (s, ω_c t) landscape for the family (1, m, −m). `deph` supplies the bath;
/// its s is replaced column by column. Columns without a crossing up to the top of the
/// time axis are TimeInvariant when certified, Inconclusive otherwise.
RegionMap decoherence_landscape(const AxisSpec& s_axis, const AxisSpec& t_axis, double m,
                                const OhmicDephasing& deph, int workers = 1);

} // namespace tidisc
