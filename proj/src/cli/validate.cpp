// validate.cpp: analytic routes checked against independent numerical ones

#include "cli/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "tidisc/correlated_env.hpp"
#include "tidisc/duo_dynamics.hpp"
#include "tidisc/errors.hpp"
#include "tidisc/measures.hpp"
#include "tidisc/thermal_channel.hpp"

namespace tidisc::cli {

namespace {

using Rng = std::mt19937_64;

// A NaN deviation counts as infinite.
void track(double& worst, double deviation) {
    worst = std::isnan(deviation) ? std::numeric_limits<double>::infinity()
                                  : std::max(worst, deviation);
}

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Matrix random_state(int dim, Rng& rng) {
    std::normal_distribution<double> g;
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = Complex(g(rng), g(rng));
        }
    }
    Matrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

Matrix random_bell_diagonal(Rng& rng) {
    std::exponential_distribution<double> e;
    std::array<double, 4> p{e(rng), e(rng), e(rng), e(rng)};
    const double total = p[0] + p[1] + p[2] + p[3];
    const double h = std::numbers::sqrt2 / 2.0;
    const Eigen::Vector4cd bell[4] = {
        Eigen::Vector4cd(h, 0, 0, h), Eigen::Vector4cd(h, 0, 0, -h),
        Eigen::Vector4cd(0, h, h, 0), Eigen::Vector4cd(0, h, -h, 0)};
    Matrix rho = Matrix::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
        rho += (p[k] / total) * bell[k] * bell[k].adjoint();
    }
    return rho;
}

XState random_xstate(Rng& rng) {
    std::exponential_distribution<double> e;
    const double pa = e(rng), pb = e(rng), pd = e(rng);
    const double total = pa + 2.0 * pb + pd;
    XState x;
    x.a = pa / total;
    x.b = pb / total;
    x.d = pd / total;
    x.z = std::polar(std::sqrt(x.a * x.d) * uniform(rng, 0.0, 1.0),
                     uniform(rng, 0.0, 2.0 * std::numbers::pi));
    x.w = std::polar(x.b * uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
    return x;
}

double discord_suite(int n, Rng& rng, const ValidateOptions&) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const DensityMatrix rho(i % 2 == 0 ? random_bell_diagonal(rng)
                                           : random_xstate(rng).to_density_matrix().matrix());
        const double analytic = correlations(rho).discord;
        const double brute = correlations_bruteforce(rho).discord;
        track(worst, std::abs(analytic - brute));
    }
    return worst;
}

OhmicDephasing random_dephasing(Rng& rng) {
    const double s = uniform(rng, 0.5, 4.5);
    const double wc = uniform(rng, 0.5, 1.5);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
        return {uniform(rng, 1e-3, 0.05), s, wc, HighTemperature{uniform(rng, 1.0, 11.0)}};
    case 1:
        return {uniform(rng, 1e-3, 0.2), s, wc, FiniteTemperature{uniform(rng, 0.1, 2.1)}};
    default:
        return {uniform(rng, 1e-3, 0.2), s, wc, ZeroTemperature{}};
    }
}

double map_suite(int n, Rng& rng, const ValidateOptions& opt) {
    const KappaForm form = opt.inject_unrepaired_kappa ? KappaForm::Literal : KappaForm::Repaired;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = uniform(rng, 0.2, 10.0);
        const auto res = LorentzianReservoir::from_ratio(uniform(rng, 1e-3, 0.3), uniform(rng, 0.0, 60.0),
                                                         uniform(rng, 0.0, 5.0), uniform(rng, 0.5, 1.5));
        std::optional<OhmicDephasing> deph;
        if (uniform(rng, 0.0, 1.0) < 0.8) {
            deph = random_dephasing(rng);
        }
        const double omega = uniform(rng, 0.0, 2.0);
        const DensityMatrix rho(random_state(2, rng));
        const Matrix mapped = apply_map(map_elements(t, res, deph, omega, form), rho).matrix();
        const Matrix solved = master_equation_oracle(rho, t, res, deph, omega).matrix();
        track(worst, (mapped - solved).cwiseAbs().maxCoeff());
    }
    return worst;
}

double quadrature_suite(int n, Rng& rng, const ValidateOptions&) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        OhmicDephasing d;
        do {
            d = random_dephasing(rng);
        } while (std::holds_alternative<FiniteTemperature>(d.temperature));
        const double t = uniform(rng, 0.0, 50.0) / d.omega_c;
        const double closed = big_gamma_z(t, d);
        const double quad = big_gamma_z_quadrature(t, d);
        track(worst, std::abs(closed - quad) / std::max(1.0, std::abs(quad)));
    }
    return worst;
}

double factorization_suite(int n, Rng& rng, const ValidateOptions&) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        CorrelatedEnvConfig cfg;
        cfg.r = 0.0;
        cfg.s = uniform(rng, 0.5, 4.0);
        cfg.alpha1 = cfg.alpha2 = uniform(rng, 0.01, 0.21);
        cfg.omega_c = uniform(rng, 0.5, 1.5);
        cfg.eps1 = cfg.eps2 = uniform(rng, 0.0, 0.05);
        cfg.c = uniform(rng, -0.9, 0.9);
        const double span = 30.0;
        cfg.schedule = {0.0, span, 0.0, span};
        const ChannelStack ch{std::nullopt,
                              OhmicDephasing{4.0 * cfg.alpha1, cfg.s, cfg.omega_c, ZeroTemperature{}},
                              2.0 * cfg.eps1};
        const double t = uniform(rng, 0.0, span);
        const Matrix direct = rho_correlated(t, cfg).matrix();
        const Matrix local = evolve_pair(bell_diagonal_state({1.0, -cfg.c, cfg.c}), t, ch, ch).matrix();
        track(worst, (direct - local).cwiseAbs().maxCoeff());
    }
    return worst;
}

struct Suite {
    const char* name;
    int default_n;
    double tolerance;
    double (*run)(int, Rng&, const ValidateOptions&);
};

constexpr Suite kSuites[] = {
    {"discord", 200, 1e-6, discord_suite},
    {"map", 20, 1e-6, map_suite},
    {"quadrature", 50, 1e-8, quadrature_suite},
    {"factorization", 50, 1e-8, factorization_suite},
};

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuites) {
            v.emplace_back(s.name);
        }
        return v;
    }();
    return names;
}

std::vector<SuiteResult> run_validation(const ValidateOptions& options) {
    for (const auto& name : options.suites) {
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
            throw InvalidParameter("unknown suite '" + name + "'");
        }
    }
    if (options.n < 0) {
        throw InvalidParameter("n must be >= 0");
    }
    std::vector<SuiteResult> results;
    for (std::size_t k = 0; k < std::size(kSuites); ++k) {
        const Suite& suite = kSuites[k];
        if (!options.suites.empty() &&
            std::find(options.suites.begin(), options.suites.end(), suite.name) == options.suites.end()) {
            continue;
        }
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                          static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(k)};
        Rng rng(seq);
        SuiteResult r;
        r.name = suite.name;
        r.n = options.n > 0 ? options.n : suite.default_n;
        r.tolerance = suite.tolerance;
        const auto start = std::chrono::steady_clock::now();
        r.max_deviation = suite.run(r.n, rng, options);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.pass = r.max_deviation <= r.tolerance;
        results.push_back(r);
    }
    return results;
}

std::string format_suite_line(const SuiteResult& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-14s %s  n=%-5d max_dev=%.3e  tol=%.1e  (%.2f s)",
                  r.name.c_str(), r.pass ? "PASS" : "FAIL", r.n, r.max_deviation, r.tolerance,
                  r.seconds);
    return buf;
}

} // namespace tidisc::cli
