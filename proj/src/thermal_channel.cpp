// thermal_channel.cpp: decoherence integrals and the one-qubit map

#include "tidisc/thermal_channel.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>
#include <gsl/gsl_sf_gamma.h>

#include "quadrature.hpp"
#include "tidisc/errors.hpp"

namespace tidisc {

namespace {

constexpr double kQuadTolerance = 1e-10;
constexpr double kPoleWindow = 1e-3;
constexpr double kLogTiny = -690.7755278982137; // ln(1e-300)
constexpr double kAsymptoticSplit = 20.0;

struct Kernel {
    Complex x;     // d t/2
    Complex d;
    Complex l;     // λ − iΔ
};

Kernel kernel(double t, const LorentzianReservoir& res) {
    const Complex l(res.lambda, -res.delta);
    const Complex d = std::sqrt(l * l - 2.0 * res.gamma0 * res.lambda);
    return {0.5 * d * t, d, l};
}

// sinh(x)/d = (t/2)·sinh(x)/x, by series near x = 0; regular at d = 0.
Complex sinh_over_d(double t, const Kernel& k) {
    if (std::abs(k.x) < 1e-3) {
        const Complex x2 = k.x * k.x;
        return 0.5 * t * (1.0 + x2 / 6.0 + x2 * x2 / 120.0);
    }
    return std::sinh(k.x) / k.d;
}

// tanh(x)/d, same treatment.
Complex tanh_over_d(double t, const Kernel& k) {
    if (std::abs(k.x) < 1e-3) {
        const Complex x2 = k.x * k.x;
        return 0.5 * t * (1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0);
    }
    return std::tanh(k.x) / k.d;
}

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidParameter("time must be finite and non-negative");
    }
}

// Dimensionless spectral data in u = ω/ω_c:
//   γ_z(t) = ω_c·pref·∫ w(u) sin(u x) du,   Γ_z(t) = pref·∫ w(u)(1 − cos u x)/u du,   x = ω_c t.
struct SpectralWeight {
    double pref = 0.0;
    std::function<double(double)> w;
    double tail = 0.0; // bound on ∫_{u_max}^∞ |w|
    double u_max = 0.0;
};

SpectralWeight spectral_weight(const OhmicDephasing& deph) {
    const double s = deph.s;
    SpectralWeight sw;
    sw.u_max = 40.0 + 4.0 * s;
    if (const auto* ht = std::get_if<HighTemperature>(&deph.temperature)) {
        sw.pref = deph.alpha * ht->scale;
        sw.w = [s](double u) { return std::pow(u, s - 2.0) * std::exp(-u); };
        sw.tail = gsl_sf_gamma_inc(s - 1.0, sw.u_max);
    } else if (const auto* ft = std::get_if<FiniteTemperature>(&deph.temperature)) {
        const double half_inv_tau = 0.5 * deph.omega_c / ft->omega_t;
        sw.pref = deph.alpha;
        sw.w = [s, half_inv_tau](double u) {
            return std::pow(u, s - 1.0) * std::exp(-u) / std::tanh(half_inv_tau * u);
        };
        sw.tail = gsl_sf_gamma_inc(s, sw.u_max) / std::tanh(half_inv_tau * sw.u_max);
    } else {
        sw.pref = deph.alpha;
        sw.w = [s](double u) { return std::pow(u, s - 1.0) * std::exp(-u); };
        sw.tail = gsl_sf_gamma_inc(s, sw.u_max);
    }
    return sw;
}

double checked_tail(const SpectralWeight& sw, double scale) {
    const double bound = scale * sw.tail;
    if (!(bound <= 1e-8)) {
        throw QuadratureFailure("spectral tail beyond the integration window is not negligible");
    }
    return bound;
}

double rate_integral(double x, const SpectralWeight& sw) {
    if (x == 0.0) {
        return 0.0;
    }
    using detail::Oscillation;
    const double u0 = std::min(1.0, 1.0 / x);
    const auto& w = sw.w;
    const auto head = detail::integrate([&](double u) { return w(u) * std::sin(u * x); }, 0.0, u0,
                                        kQuadTolerance, kQuadTolerance);
    const auto body = detail::integrate_weighted(w, u0, sw.u_max, x, Oscillation::Sine,
                                                 kQuadTolerance, kQuadTolerance);
    checked_tail(sw, 1.0);
    return head.value + body.value;
}

double integrated_integral(double x, const SpectralWeight& sw) {
    if (x == 0.0) {
        return 0.0;
    }
    using detail::Oscillation;
    const double u0 = std::min(1.0, 1.0 / x);
    const auto& w = sw.w;
    const auto head = detail::integrate(
        [&](double u) {
            // 1 − cos(ux) = 2 sin²(ux/2), accurate for small ux.
            const double h = std::sin(0.5 * u * x);
            return w(u) * 2.0 * h * h / u;
        },
        0.0, u0, kQuadTolerance, kQuadTolerance);
    const auto over_u = [&](double u) { return w(u) / u; };
    const auto plain = detail::integrate(over_u, u0, sw.u_max, kQuadTolerance, kQuadTolerance);
    const auto cosine = detail::integrate_weighted(over_u, u0, sw.u_max, x, Oscillation::Cosine,
                                                   kQuadTolerance, kQuadTolerance);
    checked_tail(sw, 2.0 / sw.u_max);
    return head.value + plain.value - cosine.value;
}

// Γ̃(a)[1 − (1+x²)^{−a/2} cos(aθ)], θ = arctan x: the closed form of ∫ u^{a−1} e^{−u}(1 − cos ux) du.
double gamma_saturation(double a, double x) {
    const double theta = std::atan(x);
    const double radial = std::exp(-0.5 * a * std::log1p(x * x));
    return std::tgamma(a) * (1.0 - radial * std::cos(a * theta));
}

bool near_pole(double a) {
    // Γ̃(a) has poles at a = 0, −1, −2, …; a > −2 covers every s > 0.
    for (double pole : {0.0, -1.0}) {
        if (std::abs(a - pole) < kPoleWindow) {
            return true;
        }
    }
    return false;
}

using State = std::array<double, 8>;

Matrix2 to_matrix(const State& y) {
    Matrix2 m;
    m << Complex(y[0], y[1]), Complex(y[2], y[3]), Complex(y[4], y[5]), Complex(y[6], y[7]);
    return m;
}

State to_state(const Matrix2& m) {
    return {m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag(),
            m(1, 0).real(), m(1, 0).imag(), m(1, 1).real(), m(1, 1).imag()};
}

} // namespace

LorentzianReservoir LorentzianReservoir::from_ratio(double ratio, double delta_over_lambda,
                                                    double n_photons, double lambda) {
    LorentzianReservoir r{ratio * lambda, lambda, delta_over_lambda * lambda, n_photons};
    r.validate();
    return r;
}

void LorentzianReservoir::validate() const {
    if (!(gamma0 > 0.0) || !(lambda > 0.0) || !(n_photons >= 0.0) || !std::isfinite(delta) ||
        !std::isfinite(gamma0) || !std::isfinite(lambda) || !std::isfinite(n_photons)) {
        throw InvalidParameter("reservoir requires gamma0 > 0, lambda > 0, N >= 0");
    }
}

void OhmicDephasing::validate() const {
    if (!(alpha > 0.0) || !(s > 0.0) || !(omega_c > 0.0) || !std::isfinite(alpha) ||
        !std::isfinite(s) || !std::isfinite(omega_c)) {
        throw InvalidParameter("dephasing bath requires alpha > 0, s > 0, omega_c > 0");
    }
    if (const auto* ht = std::get_if<HighTemperature>(&temperature); ht && !(ht->scale >= 1.0)) {
        throw InvalidParameter("high-temperature scale 2kT/(hbar omega_c) must be >= 1");
    }
    if (const auto* ft = std::get_if<FiniteTemperature>(&temperature); ft && !(ft->omega_t > 0.0)) {
        throw InvalidParameter("thermal frequency must be positive");
    }
}

Complex c_ratio(double t, const LorentzianReservoir& res) {
    require_time(t);
    res.validate();
    const Kernel k = kernel(t, res);
    if (k.x.real() <= kAsymptoticSplit) {
        return std::exp(-0.5 * k.l * t) * (std::cosh(k.x) + k.l * sinh_over_d(t, k));
    }
    // cosh x + L sinh(x)/d = ½ e^{x}(1 + e^{−2x})(1 + L tanh(x)/d)
    return std::exp(-0.5 * k.l * t + k.x) * 0.5 * (1.0 + std::exp(-2.0 * k.x)) *
           (1.0 + k.l * tanh_over_d(t, k));
}

double log_abs_c_ratio(double t, const LorentzianReservoir& res) {
    require_time(t);
    res.validate();
    const Kernel k = kernel(t, res);
    const double decay = -0.5 * res.lambda * t;
    if (k.x.real() <= kAsymptoticSplit) {
        return decay + std::log(std::abs(std::cosh(k.x) + k.l * sinh_over_d(t, k)));
    }
    return decay + k.x.real() - std::numbers::ln2 +
           std::log(std::abs(1.0 + std::exp(-2.0 * k.x))) +
           std::log(std::abs(1.0 + k.l * tanh_over_d(t, k)));
}

double f_rate(double t, const LorentzianReservoir& res) {
    const double log_c = log_abs_c_ratio(t, res);
    if (!(log_c >= kLogTiny)) {
        throw PoleEncountered("|C(t)/C(0)| < 1e-300 at t = " + std::to_string(t));
    }
    const Kernel k = kernel(t, res);
    const double g = res.gamma0 * res.lambda;
    // Ċ/C = −γ₀λ S/(cosh x + L S) = −γ₀λ q/(1 + L q), S = sinh(x)/d, q = tanh(x)/d.
    Complex ratio;
    if (k.x.real() <= kAsymptoticSplit) {
        const Complex s = sinh_over_d(t, k);
        ratio = -g * s / (std::cosh(k.x) + k.l * s);
    } else {
        const Complex q = tanh_over_d(t, k);
        ratio = -g * q / (1.0 + k.l * q);
    }
    return -2.0 * ratio.real();
}

double big_gamma(double t, const LorentzianReservoir& res) {
    const double log_c = log_abs_c_ratio(t, res);
    if (!(log_c >= kLogTiny)) {
        throw PoleEncountered("|C(t)/C(0)| < 1e-300 at t = " + std::to_string(t));
    }
    return -2.0 * (2.0 * res.n_photons + 1.0) * log_c;
}

double kappa(double t, const LorentzianReservoir& res, KappaForm form) {
    const double g = big_gamma(t, res);
    const double n2 = 2.0 * res.n_photons + 1.0;
    if (form == KappaForm::Literal) {
        return std::expm1(g) / n2;
    }
    return std::expm1(-g) / n2;
}

double gamma_z_rate(double t, const OhmicDephasing& deph) {
    require_time(t);
    deph.validate();
    const auto sw = spectral_weight(deph);
    return deph.omega_c * sw.pref * rate_integral(deph.omega_c * t, sw);
}

double big_gamma_z_quadrature(double t, const OhmicDephasing& deph) {
    require_time(t);
    deph.validate();
    const auto sw = spectral_weight(deph);
    return sw.pref * integrated_integral(deph.omega_c * t, sw);
}

double big_gamma_z(double t, const OhmicDephasing& deph) {
    require_time(t);
    deph.validate();
    const double x = deph.omega_c * t;
    if (x == 0.0) {
        return 0.0;
    }
    if (const auto* ht = std::get_if<HighTemperature>(&deph.temperature)) {
        const double a = deph.s - 2.0;
        if (near_pole(a)) {
            return big_gamma_z_quadrature(t, deph);
        }
        return deph.alpha * ht->scale * gamma_saturation(a, x);
    }
    if (std::holds_alternative<ZeroTemperature>(deph.temperature)) {
        const double a = deph.s - 1.0;
        if (a == 0.0) {
            return 0.5 * deph.alpha * std::log1p(x * x);
        }
        if (near_pole(a)) {
            return big_gamma_z_quadrature(t, deph);
        }
        return deph.alpha * gamma_saturation(a, x);
    }
    return big_gamma_z_quadrature(t, deph);
}

std::optional<double> big_gamma_z_asymptote(const OhmicDephasing& deph) {
    deph.validate();
    if (const auto* ht = std::get_if<HighTemperature>(&deph.temperature)) {
        if (deph.s <= 2.0) {
            return std::nullopt;
        }
        return deph.alpha * ht->scale * std::tgamma(deph.s - 2.0);
    }
    if (std::holds_alternative<ZeroTemperature>(deph.temperature)) {
        if (deph.s <= 1.0) {
            return std::nullopt;
        }
        return deph.alpha * std::tgamma(deph.s - 1.0);
    }
    if (deph.s <= 2.0) {
        return std::nullopt;
    }
    const auto sw = spectral_weight(deph);
    const auto q = detail::integrate([&](double u) { return sw.w(u) / u; }, 0.0, sw.u_max,
                                     kQuadTolerance, kQuadTolerance);
    checked_tail(sw, 1.0 / sw.u_max);
    return sw.pref * q.value;
}

std::optional<GammaZSupremum> big_gamma_z_supremum(const OhmicDephasing& deph) {
    deph.validate();
    if (std::holds_alternative<FiniteTemperature>(deph.temperature)) {
        return std::nullopt;
    }
    const auto asymptote = big_gamma_z_asymptote(deph);
    if (!asymptote) {
        return std::nullopt;
    }
    // γ_z ∝ sin(ν θ), θ = arctan(ω_c t) ∈ [0, π/2): Γ_z peaks where ν θ = π, 3π, …
    const double nu =
        std::holds_alternative<HighTemperature>(deph.temperature) ? deph.s - 1.0 : deph.s;
    GammaZSupremum best{*asymptote, std::nullopt};
    for (int k = 1;; ++k) {
        const double theta = (2.0 * k - 1.0) * std::numbers::pi / nu;
        if (theta >= 0.5 * std::numbers::pi) {
            break;
        }
        const double t = std::tan(theta) / deph.omega_c;
        const double value = big_gamma_z(t, deph);
        if (value > best.value) {
            best = {value, t};
        }
    }
    return best;
}

MapElements map_elements(double t, const std::optional<LorentzianReservoir>& res,
                         const std::optional<OhmicDephasing>& deph, double omega, KappaForm form) {
    require_time(t);
    // The map stays finite where |C| underflows or vanishes: Γ = +∞ gives η = 0.
    const double g = res ? -2.0 * (2.0 * res->n_photons + 1.0) * log_abs_c_ratio(t, *res) : 0.0;
    const double gz = deph ? big_gamma_z(t, *deph) : 0.0;
    MapElements me;
    me.eta_par = std::exp(-g);
    me.eta_perp = std::exp(-0.5 * g - gz);
    if (res) {
        const double n2 = 2.0 * res->n_photons + 1.0;
        me.kappa = (form == KappaForm::Literal ? std::expm1(g) : std::expm1(-g)) / n2;
    }
    me.phase = omega * t;
    return me;
}

Eigen::Matrix4d transfer_matrix(const MapElements& me) {
    const double c = std::cos(me.phase);
    const double s = std::sin(me.phase);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = me.eta_perp * c;
    m(1, 2) = -me.eta_perp * s;
    m(2, 1) = me.eta_perp * s;
    m(2, 2) = me.eta_perp * c;
    m(3, 0) = me.kappa;
    m(3, 3) = me.eta_par;
    return m;
}

DensityMatrix apply_map(const MapElements& me, const DensityMatrix& rho) {
    if (rho.dim() != 2) {
        throw DimensionMismatch("apply_map acts on a single qubit");
    }
    const Eigen::Vector4d v = transfer_matrix(me) * bloch_coordinates(rho.matrix());
    return DensityMatrix(from_bloch_coordinates(v));
}

Matrix2 master_equation_propagate(const Matrix2& x0, double t,
                                  const std::optional<LorentzianReservoir>& res,
                                  const std::optional<OhmicDephasing>& deph, double omega) {
    require_time(t);
    if (res) {
        res->validate();
    }
    if (deph) {
        deph->validate();
    }
    if (t == 0.0) {
        return x0;
    }
    Matrix2 sz = Matrix2::Zero();
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    Matrix2 sp = Matrix2::Zero(); // σ₊ = |↑⟩⟨↓|
    sp(0, 1) = 1.0;
    const Matrix2 sm = sp.adjoint();
    const Matrix2 pm = sp * sm; // |↑⟩⟨↑|
    const Matrix2 mp = sm * sp; // |↓⟩⟨↓|
    const Complex i(0.0, 1.0);

    auto rhs = [&](const State& y, State& dy, double time) {
        const Matrix2 r = to_matrix(y);
        Matrix2 dr = -0.5 * i * omega * (sz * r - r * sz);
        if (deph) {
            dr += 0.5 * gamma_z_rate(time, *deph) * (sz * r * sz - r);
        }
        if (res) {
            const double f = f_rate(time, *res);
            const double heat = res->n_photons * f;         // γ₁/2
            const double loss = (res->n_photons + 1.0) * f; // γ₂/2
            dr += heat * (sp * r * sm - 0.5 * (mp * r + r * mp));
            dr += loss * (sm * r * sp - 0.5 * (pm * r + r * pm));
        }
        dy = to_state(dr);
    };

    namespace odeint = boost::numeric::odeint;
    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-12, 1e-10);
    State y = to_state(x0);
    double time = 0.0;
    double dt = std::min(t, 1e-3);
    constexpr long kMaxSteps = 5'000'000;
    for (long step = 0; time < t; ++step) {
        if (step > kMaxSteps) {
            throw IntegrationFailure("master equation: step budget exhausted");
        }
        dt = std::min(dt, t - time);
        if (stepper.try_step(rhs, y, time, dt) == odeint::fail) {
            if (dt < 1e-15 * std::max(1.0, t)) {
                throw IntegrationFailure("master equation: step size underflow");
            }
        }
        if (t - time < 1e-14 * std::max(1.0, t)) {
            break;
        }
    }
    const Matrix2 out = to_matrix(y);
    if (!out.allFinite()) {
        throw IntegrationFailure("master equation produced non-finite values");
    }
    return out;
}

DensityMatrix master_equation_oracle(const DensityMatrix& rho0, double t,
                                     const std::optional<LorentzianReservoir>& res,
                                     const std::optional<OhmicDephasing>& deph, double omega) {
    if (rho0.dim() != 2) {
        throw DimensionMismatch("master equation acts on a single qubit");
    }
    Matrix2 out = master_equation_propagate(rho0.matrix(), t, res, deph, omega);
    if (std::abs(out.trace() - 1.0) > 1e-9) {
        throw IntegrationFailure("master equation: trace drifted beyond 1e-9");
    }
    out = 0.5 * (out + out.adjoint().eval());
    return DensityMatrix(Matrix(out));
}

} // namespace tidisc
