// scan.cpp: classifiers and grid sweeps

#include "tidisc/scan.hpp"

#include <cmath>

#include "tidisc/detail/parallel.hpp"
#include "tidisc/errors.hpp"

namespace tidisc {

namespace {

constexpr double kMarginFloor = 1e-9;

Classification from_search(const TransitionSearch& search) {
    Classification out;
    out.horizon = search.horizon;
    out.root_bracket = search.bracket;
    switch (search.status) {
    case TransitionStatus::Found:
        out.kind = ClassKind::Frozen;
        out.transition_time = search.time;
        break;
    case TransitionStatus::NoTransition:
        out.kind = ClassKind::TimeInvariant;
        break;
    case TransitionStatus::Inconclusive:
        out.kind = ClassKind::Inconclusive;
        break;
    }
    return out;
}

} // namespace

std::string to_string(ClassKind kind) {
    switch (kind) {
    case ClassKind::TimeInvariant:
        return "time-invariant";
    case ClassKind::Frozen:
        return "frozen";
    case ClassKind::Inconclusive:
        return "inconclusive";
    case ClassKind::ClassicalDecoherence:
        return "classical-decoherence";
    case ClassKind::QuantumDecoherence:
        return "quantum-decoherence";
    }
    return "inconclusive";
}

ClassKind class_kind_from_string(const std::string& label) {
    for (auto k : {ClassKind::TimeInvariant, ClassKind::Frozen, ClassKind::Inconclusive,
                   ClassKind::ClassicalDecoherence, ClassKind::QuantumDecoherence}) {
        if (to_string(k) == label) {
            return k;
        }
    }
    throw InvalidParameter("unknown classification label '" + label + "'");
}

Classification classify_dephasing(double s, double m, double normalization,
                                  std::optional<double> horizon, BoundaryRule rule) {
    if (!(normalization > 0.0) || !std::isfinite(normalization)) {
        throw InvalidParameter("dephasing normalization must be positive and finite");
    }
    OhmicDephasing deph;
    deph.alpha = normalization;
    deph.s = s;
    deph.omega_c = 1.0;
    deph.temperature = HighTemperature{1.0};
    return classify_dephasing(m, deph, horizon, rule);
}

Classification classify_dephasing(double m, const OhmicDephasing& deph,
                                  std::optional<double> horizon, BoundaryRule rule) {
    const TransitionSearch search = dephasing_transition_time(m, deph, horizon);
    Classification out = from_search(search);
    const auto asym = big_gamma_z_asymptote(deph);
    if (asym) {
        out.asymptote = std::exp(-2.0 * *asym);
    }
    if (rule == BoundaryRule::Strict || !out.asymptote) {
        return out;
    }
    if (*out.asymptote > m) {
        out.transient_crossing = out.transition_time;
        out.transition_time.reset();
        out.root_bracket.reset();
        out.kind = ClassKind::TimeInvariant;
    } else if (*out.asymptote == m || !out.transition_time) {
        out.kind = ClassKind::Inconclusive;
    }
    return out;
}

Classification classify_correlated(const CorrelatedEnvConfig& cfg, double horizon) {
    const CorrelatedTransition tr = correlated_transition_time(cfg, horizon);
    Classification out;
    out.horizon = horizon;
    out.min_margin = tr.min_margin;
    out.root_bracket = tr.bracket;
    if (tr.status == TransitionStatus::Found) {
        out.kind = ClassKind::Frozen;
        out.transition_time = tr.time;
    } else if (tr.status == TransitionStatus::NoTransition && tr.min_margin > kMarginFloor) {
        out.kind = ClassKind::TimeInvariant;
    } else {
        out.kind = ClassKind::Inconclusive;
    }
    return out;
}

void AxisSpec::validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw InvalidParameter("axis '" + name + "' needs finite lo < hi");
    }
    if (n < 8) {
        throw InvalidParameter("axis '" + name + "' needs at least 8 points");
    }
}

std::vector<double> AxisSpec::values() const {
    validate();
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[i] = open_lower ? lo + (hi - lo) * (i + 1) / n : lo + (hi - lo) * i / (n - 1);
    }
    return v;
}

RegionMap region_scan_2d(const AxisSpec& x_axis, const AxisSpec& y_axis,
                         const std::map<std::string, double>& fixed,
                         const CellClassifier& classifier, int workers) {
    RegionMap map;
    map.x_axis = x_axis;
    map.y_axis = y_axis;
    map.x = x_axis.values();
    map.y = y_axis.values();
    map.fixed = fixed;
    const std::size_t ny = map.y.size();
    map.cells = detail::parallel_map<Classification>(
        map.x.size() * ny, workers, [&](std::size_t k) {
            try {
                return classifier(map.x[k / ny], map.y[k % ny]);
            } catch (const Error& e) {
                Classification failed;
                failed.error = e.what();
                return failed;
            }
        });
    return map;
}

RegionMap decoherence_landscape(const AxisSpec& s_axis, const AxisSpec& t_axis, double m,
                                const OhmicDephasing& deph, int workers) {
    if (!(m > 0.0 && m < 1.0)) {
        throw InvalidM("m must lie in (0,1)");
    }
    RegionMap map;
    map.x_axis = s_axis;
    map.y_axis = t_axis;
    map.x = s_axis.values();
    map.y = t_axis.values();
    map.fixed = {{"m", m}, {"alpha", deph.alpha}, {"omega_c", deph.omega_c}};
    const double unit = 1.0 / deph.omega_c;
    const double top = map.y.back() * unit;

    const auto columns = detail::parallel_map<std::vector<Classification>>(
        map.x.size(), workers, [&](std::size_t ix) {
            OhmicDephasing d = deph;
            d.s = map.x[ix];
            std::vector<Classification> col(map.y.size());
            try {
                const TransitionSearch search = dephasing_transition_time(m, d, top);
                const Classification column = from_search(search);
                for (std::size_t iy = 0; iy < map.y.size(); ++iy) {
                    Classification& cell = col[iy];
                    cell = column;
                    if (column.kind == ClassKind::TimeInvariant) {
                        continue;
                    }
                    // Pointwise label: C decays while e^{−2Γ_z} ≥ m, D decays once it drops below.
                    const double t = map.y[iy] * unit;
                    const bool quantum = std::exp(-2.0 * big_gamma_z(t, d)) < m;
                    cell.kind = quantum ? ClassKind::QuantumDecoherence
                                        : ClassKind::ClassicalDecoherence;
                }
            } catch (const Error& e) {
                for (auto& cell : col) {
                    cell = Classification{};
                    cell.error = e.what();
                }
            }
            return col;
        });

    map.cells.reserve(map.x.size() * map.y.size());
    for (const auto& col : columns) {
        map.cells.insert(map.cells.end(), col.begin(), col.end());
    }
    return map;
}

} // namespace tidisc
