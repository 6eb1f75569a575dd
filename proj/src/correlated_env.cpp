// correlated_env.cpp: coherence functions for correlated dephasing environments

#include "tidisc/correlated_env.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "tidisc/errors.hpp"

namespace tidisc {

namespace {

constexpr double kOhmicWindow = 1e-6;
constexpr double kRichardsonCoarse = 1e-4;
constexpr double kRichardsonFine = 1e-5;
constexpr double kLimitAgreement = 1e-6;
constexpr double kMarginFloor = 1e-9;

// Re[(1 + ix)^{δ}] − 1 without cancellation for small δ.
double re_power_minus_one(double x, double delta) {
    const double a = 0.5 * delta * std::log1p(x * x);
    const double b = delta * std::atan(x);
    const double h = std::sin(0.5 * b);
    return std::expm1(a) * std::cos(b) - 2.0 * h * h;
}

// A·[g(τa) − g(τb) − g(τc) + g(τd)] at ohmicity s (s ≠ 1).
double cross_exponent(double s, const InteractionTimes& tt, const CorrelatedEnvConfig& cfg,
                      double c_minus) {
    const double ts = cfg.schedule.t2_start;
    const double w = cfg.omega_c;
    // g(τ) = Re[(1 + iω_cτ)^{1−s}]; the four signs sum to zero so g − 1 may be used.
    const auto gm1 = [&](double tau) { return re_power_minus_one(w * tau, 1.0 - s); };
    const double bracket = gm1(tt.t1 + tt.t2 + ts) - gm1(tt.t1 + ts) - gm1(tt.t2 + ts) + gm1(ts);
    const double amp = -8.0 * c_minus * std::tgamma(s - 1.0) * std::sqrt(cfg.alpha1 * cfg.alpha2);
    return amp * bracket;
}

} // namespace

void InteractionSchedule::validate() const {
    const bool finite = std::isfinite(t1_start) && std::isfinite(t1_end) &&
                        std::isfinite(t2_start) && std::isfinite(t2_end);
    if (!finite || !(t1_start >= 0.0) || !(t1_start <= t2_start) || !(t1_start < t1_end) ||
        !(t2_start < t2_end)) {
        throw InvalidParameter(
            "schedule requires 0 <= t1_start <= t2_start, t1_start < t1_end, t2_start < t2_end");
    }
}

void CorrelatedEnvConfig::validate() const {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw InvalidParameter("squeezing r must be finite and >= 0");
    }
    if (!(n1 >= 0.0) || !(n2 >= 0.0)) {
        throw InvalidParameter("occupations n1, n2 must be >= 0");
    }
    if (!(alpha1 > 0.0) || !(alpha2 > 0.0)) {
        throw InvalidParameter("couplings alpha1, alpha2 must be > 0");
    }
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw InvalidParameter("ohmicity s must be > 0");
    }
    if (!(omega_c > 0.0)) {
        throw InvalidParameter("omega_c must be > 0");
    }
    if (!std::isfinite(eps1) || !std::isfinite(eps2)) {
        throw InvalidParameter("qubit gaps eps1, eps2 must be finite");
    }
    if (!(std::abs(c) < 1.0)) {
        throw InvalidC("c must satisfy |c| < 1");
    }
    schedule.validate();
}

CovarianceElements covariance_elements(double r, double n1, double n2) {
    const double ch2 = std::cosh(r) * std::cosh(r);
    const double sh2 = std::sinh(r) * std::sinh(r);
    const double half = 0.5 * std::cosh(2.0 * r);
    CovarianceElements e;
    e.a = half + n1 * ch2 + n2 * sh2;
    e.b = half + n2 * ch2 + n1 * sh2;
    e.c_minus = -0.5 * (1.0 + n1 + n2) * std::sinh(2.0 * r);
    e.c_plus = -e.c_minus;
    return e;
}

InteractionTimes interaction_clock(double t, const InteractionSchedule& schedule) {
    schedule.validate();
    return {std::clamp(t - schedule.t1_start, 0.0, schedule.t1_end - schedule.t1_start),
            std::clamp(t - schedule.t2_start, 0.0, schedule.t2_end - schedule.t2_start)};
}

double g_factor(double tau, double s, double omega_c) {
    const double x = omega_c * tau;
    const double th = std::atan(x);
    return std::pow(1.0 + x * x, -0.5 * s) * (std::cos(s * th) + x * std::sin(s * th));
}

Complex local_coherence(double t, int j, const CorrelatedEnvConfig& cfg) {
    cfg.validate();
    if (j != 1 && j != 2) {
        throw InvalidParameter("qubit index must be 1 or 2");
    }
    const auto cov = covariance_elements(cfg.r, cfg.n1, cfg.n2);
    const auto tt = interaction_clock(t, cfg.schedule);
    const double x = cfg.omega_c * (j == 1 ? tt.t1 : tt.t2);
    const double weight = 4.0 * (j == 1 ? cov.a : cov.b) * (j == 1 ? cfg.alpha1 : cfg.alpha2);
    const double eps = j == 1 ? cfg.eps1 : cfg.eps2;

    double decay;
    if (std::abs(cfg.s - 1.0) < kOhmicWindow) {
        decay = weight * std::log1p(x * x);
    } else {
        // Γ̃(s−1)[2 − (1−ix)^{1−s} − (1+ix)^{1−s}] = −2 Γ̃(s−1)(Re[(1+ix)^{1−s}] − 1)
        decay = -2.0 * weight * std::tgamma(cfg.s - 1.0) * re_power_minus_one(x, 1.0 - cfg.s);
    }
    return std::polar(std::exp(-decay), -2.0 * eps * t);
}

CrossCoherence cross_coherence(double t, const CorrelatedEnvConfig& cfg) {
    cfg.validate();
    const auto cov = covariance_elements(cfg.r, cfg.n1, cfg.n2);
    const auto tt = interaction_clock(t, cfg.schedule);
    CrossCoherence out;
    if (cov.c_minus == 0.0) {
        out.amplitude = 0.0;
        return out;
    }
    if (std::abs(cfg.s - 1.0) >= kOhmicWindow) {
        out.amplitude = -8.0 * cov.c_minus * std::tgamma(cfg.s - 1.0) *
                        std::sqrt(cfg.alpha1 * cfg.alpha2);
        out.exponent = cross_exponent(cfg.s, tt, cfg, cov.c_minus);
    } else {
        const auto symmetric = [&](double e) {
            return 0.5 * (cross_exponent(1.0 + e, tt, cfg, cov.c_minus) +
                          cross_exponent(1.0 - e, tt, cfg, cov.c_minus));
        };
        const double coarse = symmetric(kRichardsonCoarse);
        const double fine = symmetric(kRichardsonFine);
        const double scale = std::max(std::abs(fine), 1e-12);
        if (std::abs(coarse - fine) > kLimitAgreement * scale) {
            throw LimitUnstable("cross-coherence limit at s = 1 did not converge");
        }
        out.exponent = (100.0 * fine - coarse) / 99.0;
    }
    out.f = std::exp(out.exponent);
    return out;
}

CoherencePair coherence_pair(double t, const CorrelatedEnvConfig& cfg) {
    const Complex k1 = local_coherence(t, 1, cfg);
    const Complex k2 = local_coherence(t, 2, cfg);
    const double f = cross_coherence(t, cfg).f;
    return {k1 * k2 * f, k1 * std::conj(k2) / f};
}

XState correlated_xstate(double t, const CorrelatedEnvConfig& cfg) {
    const auto cp = coherence_pair(t, cfg);
    XState x;
    x.a = 0.25 * (1.0 + cfg.c);
    x.b = 0.25 * (1.0 - cfg.c);
    x.d = x.a;
    x.z = x.a * cp.kappa12;
    x.w = x.b * cp.lambda12;
    return x;
}

DensityMatrix rho_correlated(double t, const CorrelatedEnvConfig& cfg) {
    return correlated_xstate(t, cfg).to_density_matrix();
}

double transition_lhs(double t, const CorrelatedEnvConfig& cfg) {
    const auto cp = coherence_pair(t, cfg);
    return 0.5 * std::abs((cp.kappa12 + cp.lambda12) + cfg.c * (cp.kappa12 - cp.lambda12));
}

CorrelationTriple correlations_correlated(double t, const CorrelatedEnvConfig& cfg) {
    const auto cp = coherence_pair(t, cfg);
    const double c = cfg.c;
    const double lhs = 0.5 * std::abs((cp.kappa12 + cp.lambda12) + c * (cp.kappa12 - cp.lambda12));
    const double chi = std::max(std::abs(c), lhs);
    const double mi = correlation_kernel(c) + 0.5 * (1.0 + c) * correlation_kernel(std::abs(cp.kappa12)) +
                      0.5 * (1.0 - c) * correlation_kernel(std::abs(cp.lambda12));
    return CorrelationTriple::from_ic(mi, correlation_kernel(std::min(1.0, chi)));
}

CorrelatedTransition correlated_transition_time(const CorrelatedEnvConfig& cfg, double horizon,
                                                int samples) {
    cfg.validate();
    if (!(cfg.c > 0.0 && cfg.c < 1.0)) {
        throw InvalidC("c must lie in (0,1)");
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw InvalidParameter("horizon must be positive and finite");
    }
    if (samples < 3) {
        throw InvalidParameter("at least three samples are required");
    }
    const auto margin = [&](double t) { return transition_lhs(t, cfg) - cfg.c; };
    CorrelatedTransition out;
    const auto first_root = [&](double lo, double hi) {
        // margin(lo) > 0 ≥ margin(hi); tolerance 1e-10/ω_c.
        const double tol = 1e-10 / cfg.omega_c;
        while (hi - lo > std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * hi)) {
            const double mid = 0.5 * (lo + hi);
            (margin(mid) < 0.0 ? hi : lo) = mid;
        }
        out.bracket = {lo, hi};
        return 0.5 * (lo + hi);
    };

    const int n = samples;
    std::vector<double> ts(n), ms(n);
    out.min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        ts[i] = horizon * i / (n - 1);
        ms[i] = margin(ts[i]);
        if (ms[i] < 0.0) {
            out.status = TransitionStatus::Found;
            if (i == 0) {
                out.time = 0.0;
            } else {
                out.time = first_root(ts[i - 1], ts[i]);
            }
            out.min_margin = ms[i];
            return out;
        }
        out.min_margin = std::min(out.min_margin, ms[i]);
    }

    // A dip narrower than the grid spacing can hide between samples: polish every local minimum.
    for (int i = 1; i + 1 < n; ++i) {
        if (!(ms[i] <= ms[i - 1] && ms[i] <= ms[i + 1])) {
            continue;
        }
        std::uintmax_t iters = 200;
        const auto [t_min, m_min] =
            boost::math::tools::brent_find_minima(margin, ts[i - 1], ts[i + 1], 52, iters);
        out.min_margin = std::min(out.min_margin, m_min);
        if (m_min < 0.0) {
            out.status = TransitionStatus::Found;
            out.time = first_root(ts[i - 1], t_min);
            return out;
        }
    }
    out.status = out.min_margin > kMarginFloor ? TransitionStatus::NoTransition
                                               : TransitionStatus::Inconclusive;
    return out;
}

std::vector<double> squeezed_vacuum_amplitudes(double r, int n_max) {
    if (!(r >= 0.0) || !std::isfinite(r) || n_max < 0) {
        throw InvalidParameter("squeezed vacuum needs r >= 0 and n_max >= 0");
    }
    const double u = std::tanh(r);
    std::vector<double> amps(static_cast<std::size_t>(n_max) + 1);
    double term = std::sqrt((1.0 - u) * (1.0 + u));
    for (auto& a : amps) {
        a = term;
        term *= u;
    }
    return amps;
}

} // namespace tidisc
