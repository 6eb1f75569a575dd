// duo_dynamics.cpp: product-channel evolution and the dephasing transition solver

#include "tidisc/duo_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "tidisc/detail/parallel.hpp"
#include "tidisc/errors.hpp"

namespace tidisc {

namespace {

constexpr double kBellTolerance = 1e-14;
constexpr double kDefaultHorizon = 200.0; // in units of 1/ω_c
constexpr double kMaxHorizon = 1e15;      // in units of 1/ω_c
constexpr int kScanPoints = 4000;

std::optional<BellDiagonalParams> as_bell_diagonal(const Eigen::Matrix4d& r) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j && std::abs(r(i, j)) > kBellTolerance) {
                return std::nullopt;
            }
        }
    }
    return BellDiagonalParams{r(1, 1), r(2, 2), r(3, 3)};
}

void require_family_m(double m) {
    if (!(std::abs(m) < 1.0)) {
        throw InvalidParameter("m must satisfy |m| < 1");
    }
}

// Bracket [lo, hi] around the first t with pred(t) true, given pred(lo) false and pred(hi) true.
template <class Pred>
std::pair<double, double> bracket_first(double lo, double hi, double abs_tol, Pred&& pred) {
    while (hi - lo > std::max(abs_tol, 4.0 * std::numeric_limits<double>::epsilon() * hi)) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {lo, hi};
}

template <class Pred>
double bisect_first(double lo, double hi, double abs_tol, Pred&& pred) {
    const auto [a, b] = bracket_first(lo, hi, abs_tol, pred);
    return 0.5 * (a + b);
}

// |D1 − D2| at or below this level carries no sign.
constexpr double kGapNoise = 1e-12;

// First sign change of D1 − D2 between sampled times, refined by bisection.
std::optional<double> first_exchange(const BellDiagonalParams& family, const ChannelStack& ch,
                                     const std::vector<double>& times) {
    const auto gap = [&](double t) {
        const auto br = xstate_branches(evolve_bell_diagonal(family, t, ch));
        return br.d1 - br.d2;
    };
    std::optional<bool> start_negative;
    double last = 0.0;
    for (double t : times) {
        const double g = gap(t);
        if (std::abs(g) <= kGapNoise) {
            continue;
        }
        if (!start_negative) {
            start_negative = g < 0.0;
        } else if ((g < 0.0) != *start_negative) {
            return bisect_first(last, t, 1e-10, [&](double tt) {
                const double v = gap(tt);
                return std::abs(v) > kGapNoise && (v < 0.0) != *start_negative;
            });
        }
        last = t;
    }
    return std::nullopt;
}

} // namespace

std::optional<double> ChannelStack::beta() const {
    if (res && deph) {
        return deph->omega_c / res->lambda;
    }
    return std::nullopt;
}

void ChannelStack::validate() const {
    if (!res && !deph) {
        throw InvalidParameter("channel stack needs a reservoir, a dephasing bath, or both");
    }
    if (res) {
        res->validate();
    }
    if (deph) {
        deph->validate();
    }
    if (!std::isfinite(omega)) {
        throw InvalidParameter("omega must be finite");
    }
}

MapElements ChannelStack::elements(double t) const {
    validate();
    return map_elements(t, res, deph, omega, kappa_form);
}

DensityMatrix evolve_pair(const DensityMatrix& rho0, double t, const ChannelStack& ch) {
    if (rho0.dim() != 4) {
        throw DimensionMismatch("evolve_pair expects a two-qubit state");
    }
    if (const auto bell = as_bell_diagonal(pauli_coordinates(rho0.matrix()))) {
        return evolve_bell_diagonal(*bell, t, ch).to_density_matrix();
    }
    return evolve_pair(rho0, t, ch, ch);
}

DensityMatrix evolve_pair(const DensityMatrix& rho0, double t, const ChannelStack& ch_a,
                          const ChannelStack& ch_b) {
    if (rho0.dim() != 4) {
        throw DimensionMismatch("evolve_pair expects a two-qubit state");
    }
    const Eigen::Matrix4d ta = transfer_matrix(ch_a.elements(t));
    const Eigen::Matrix4d tb = transfer_matrix(ch_b.elements(t));
    const Eigen::Matrix4d r = ta * pauli_coordinates(rho0.matrix()) * tb.transpose();
    return DensityMatrix(from_pauli_coordinates(r));
}

XState evolve_bell_diagonal(const BellDiagonalParams& p, double t, const ChannelStack& ch) {
    bell_diagonal_state(p); // validates the parameters
    const MapElements me = ch.elements(t);
    const double k = me.kappa;
    const double zz = me.eta_par * me.eta_par * p.m3;
    const double coh = me.eta_perp * me.eta_perp;
    XState x;
    x.a = 0.25 * ((1.0 + k) * (1.0 + k) + zz);
    x.b = 0.25 * (1.0 - k * k - zz);
    x.d = 0.25 * ((1.0 - k) * (1.0 - k) + zz);
    x.w = 0.25 * (p.m1 + p.m2) * coh;
    x.z = 0.25 * (p.m1 - p.m2) * coh * std::polar(1.0, -2.0 * me.phase);
    return x;
}

CorrelationTriple dephased_family_correlations(double m, double gamma_z) {
    require_family_m(m);
    const double q = std::exp(-2.0 * gamma_z);
    const double mi = correlation_kernel(m) + correlation_kernel(q);
    const double chi = std::max(q, std::abs(m));
    return CorrelationTriple::from_ic(mi, correlation_kernel(chi));
}

std::optional<double> branch_exchange_time(double m, double t0, double t1, const ChannelStack& ch,
                                           int samples) {
    require_family_m(m);
    const auto family = BellDiagonalParams::family(m);
    std::vector<double> times(static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i <= samples; ++i) {
        times[i] = t0 + (t1 - t0) * i / samples;
    }
    return first_exchange(family, ch, times);
}

CorrelationTrace correlation_trace(double m, std::span<const double> times, const ChannelStack& ch,
                                   int workers) {
    require_family_m(m);
    ch.validate();
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
            throw InvalidParameter("trace times must be non-negative and strictly increasing");
        }
    }
    CorrelationTrace trace;
    trace.times.assign(times.begin(), times.end());
    if (times.empty()) {
        return trace;
    }

    if (ch.dephasing_only()) {
        trace.triples = detail::parallel_map<CorrelationTriple>(
            times.size(), workers, [&](std::size_t i) {
                return dephased_family_correlations(m, big_gamma_z(times[i], *ch.deph));
            });
        if (m != 0.0) {
            const auto search = dephasing_transition_time(std::abs(m), *ch.deph, times.back());
            if (search.time && *search.time >= times.front() && *search.time <= times.back()) {
                trace.transition_time = search.time;
            }
        }
        return trace;
    }

    const auto family = BellDiagonalParams::family(m);
    trace.triples =
        detail::parallel_map<CorrelationTriple>(times.size(), workers, [&](std::size_t i) {
            return correlations(evolve_bell_diagonal(family, times[i], ch).to_density_matrix());
        });

    trace.transition_time = first_exchange(family, ch, trace.times);
    return trace;
}

TransitionSearch dephasing_transition_time(double m, const OhmicDephasing& deph,
                                           std::optional<double> horizon) {
    if (!(m > 0.0 && m < 1.0)) {
        throw InvalidM("m must lie in (0,1)");
    }
    deph.validate();
    const double unit = 1.0 / deph.omega_c;
    double window = horizon.value_or(kDefaultHorizon * unit);
    if (!(window > 0.0) || !std::isfinite(window)) {
        throw InvalidParameter("horizon must be positive and finite");
    }
    const double tol = 1e-10 * unit;
    const auto crossed = [&](double t) { return std::exp(-2.0 * big_gamma_z(t, deph)) < m; };

    TransitionSearch out;
    std::vector<double> peaks;
    if (const auto sup = big_gamma_z_supremum(deph)) {
        out.floor = std::exp(-2.0 * sup->value);
        if (sup->argmax_time) {
            peaks.push_back(*sup->argmax_time);
        }
    } else if (const auto asym = big_gamma_z_asymptote(deph)) {
        out.floor = std::exp(-2.0 * *asym);
    }
    // The scan contains every local maximum of Γ_z.
    if (!std::holds_alternative<FiniteTemperature>(deph.temperature)) {
        const double nu = std::holds_alternative<HighTemperature>(deph.temperature) ? deph.s - 1.0
                                                                                    : deph.s;
        for (int k = 1; nu > 0.0; ++k) {
            const double theta = (2.0 * k - 1.0) * std::numbers::pi / nu;
            if (theta >= 0.5 * std::numbers::pi) {
                break;
            }
            peaks.push_back(std::tan(theta) * unit);
        }
    }

    const auto scan = [&](double lo, double hi) -> std::optional<std::pair<double, double>> {
        std::vector<double> grid;
        grid.reserve(kScanPoints + peaks.size() + 1);
        for (int i = 1; i <= kScanPoints; ++i) {
            grid.push_back(lo + (hi - lo) * i / kScanPoints);
        }
        for (double p : peaks) {
            if (p > lo && p < hi) {
                grid.push_back(p);
            }
        }
        std::sort(grid.begin(), grid.end());
        double prev = lo;
        for (double t : grid) {
            if (crossed(t)) {
                return bracket_first(prev, t, tol, crossed);
            }
            prev = t;
        }
        return std::nullopt;
    };

    double searched_from = 0.0;
    while (true) {
        if (const auto hit = scan(searched_from, window)) {
            out.status = TransitionStatus::Found;
            out.time = 0.5 * (hit->first + hit->second);
            out.bracket = hit;
            out.horizon = window;
            return out;
        }
        out.horizon = window;
        if (out.floor && *out.floor > m) {
            out.status = TransitionStatus::NoTransition;
            return out;
        }
        // Crossing is certain (floor < m, or Γ_z unbounded) but lies beyond the window.
        // The equality case floor == m cannot be resolved in finite time.
        if ((out.floor && *out.floor == m) || window >= kMaxHorizon * unit) {
            out.status = TransitionStatus::Inconclusive;
            return out;
        }
        searched_from = window;
        window = std::min(2.0 * window, kMaxHorizon * unit);
    }
}

} // namespace tidisc
