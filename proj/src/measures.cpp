// measures.cpp: correlation measures for two-qubit states

#include "tidisc/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "tidisc/errors.hpp"

namespace tidisc {

namespace {

constexpr double kOffXTolerance = 1e-12;
constexpr double kMinProbability = 1e-14;

double binary_entropy(double p) {
    const std::array<double, 2> probs{p, 1.0 - p};
    return shannon_entropy_bits(probs);
}

// Entropy of a (possibly unnormalised) 2×2 Hermitian block, scaled by its trace.
// Returns P·S(ρ/P) and writes P.
double weighted_block_entropy(Complex r00, Complex r01, Complex r11, double& weight) {
    weight = r00.real() + r11.real();
    if (weight < kMinProbability) {
        weight = 0.0;
        return 0.0;
    }
    const double dz = (r00.real() - r11.real()) / weight;
    const double offd = 2.0 * std::abs(r01) / weight;
    const double len = std::min(1.0, std::hypot(dz, offd));
    return weight * binary_entropy(0.5 * (1.0 + len));
}

double conditional_entropy_of(const Matrix& m, const MeasurementBasis& basis) {
    const Complex phase = std::polar(1.0, basis.phi);
    const double c = std::cos(basis.theta);
    const double s = std::sin(basis.theta);
    const std::array<std::array<Complex, 2>, 2> vectors{{{c, phase * s}, {s, -phase * c}}};

    double total = 0.0;
    for (const auto& v : vectors) {
        // Unnormalised conditional state of A: Σ_{b,b'} conj(v_b) ρ(ab, a'b') v_b'.
        std::array<std::array<Complex, 2>, 2> block{};
        for (int a = 0; a < 2; ++a) {
            for (int ap = 0; ap < 2; ++ap) {
                Complex acc = 0.0;
                for (int b = 0; b < 2; ++b) {
                    for (int bp = 0; bp < 2; ++bp) {
                        acc += std::conj(v[b]) * m(2 * a + b, 2 * ap + bp) * v[bp];
                    }
                }
                block[a][ap] = acc;
            }
        }
        double weight = 0.0;
        total += weighted_block_entropy(block[0][0], block[0][1], block[1][1], weight);
    }
    return total;
}

double objective(const gsl_vector* x, void* params) {
    const auto* m = static_cast<const Matrix*>(params);
    return conditional_entropy_of(*m, {gsl_vector_get(x, 0), gsl_vector_get(x, 1)});
}

} // namespace

DensityMatrix XState::to_density_matrix() const {
    Matrix rho = Matrix::Zero(4, 4);
    rho(0, 0) = a;
    rho(1, 1) = b;
    rho(2, 2) = b;
    rho(3, 3) = d;
    rho(0, 3) = z;
    rho(3, 0) = std::conj(z);
    rho(1, 2) = w;
    rho(2, 1) = std::conj(w);
    return DensityMatrix(std::move(rho));
}

std::optional<XState> as_xstate(const DensityMatrix& rho) {
    if (rho.dim() != 4) {
        return std::nullopt;
    }
    const Matrix& m = rho.matrix();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool on_x = (i == j) || (i + j == 3);
            if (!on_x && std::abs(m(i, j)) >= kOffXTolerance) {
                return std::nullopt;
            }
        }
    }
    if (std::abs(m(1, 1) - m(2, 2)) >= kOffXTolerance) {
        return std::nullopt;
    }
    return XState{m(0, 0).real(), 0.5 * (m(1, 1).real() + m(2, 2).real()), m(3, 3).real(),
                  m(0, 3), m(1, 2)};
}

double mutual_information(const DensityMatrix& rho) {
    if (rho.dim() != 4) {
        throw DimensionMismatch("mutual_information expects a two-qubit state");
    }
    return von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
           von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
}

double conditional_entropy(const DensityMatrix& rho, const MeasurementBasis& basis) {
    if (rho.dim() != 4) {
        throw DimensionMismatch("conditional_entropy expects a two-qubit state");
    }
    return conditional_entropy_of(rho.matrix(), basis);
}

MeasurementOptimum classical_correlations_bruteforce(const DensityMatrix& rho, int grid_n,
                                                     bool refine) {
    if (rho.dim() != 4) {
        throw DimensionMismatch("classical correlations need a two-qubit state");
    }
    if (grid_n < 8) {
        throw InvalidParameter("grid_n must be at least 8");
    }
    const double half_pi = std::numbers::pi / 2.0;
    const double two_pi = 2.0 * std::numbers::pi;
    const double dtheta = half_pi / (grid_n - 1);
    const double dphi = two_pi / grid_n;

    MeasurementBasis best{0.0, 0.0};
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const MeasurementBasis trial{i * dtheta, j * dphi};
            const double v = conditional_entropy_of(rho.matrix(), trial);
            if (v < best_value) {
                best_value = v;
                best = trial;
            }
        }
    }

    if (refine) {
        Matrix m = rho.matrix();
        gsl_multimin_function fn{&objective, 2, &m};
        gsl_vector* x = gsl_vector_alloc(2);
        gsl_vector* step = gsl_vector_alloc(2);
        gsl_vector_set(x, 0, best.theta);
        gsl_vector_set(x, 1, best.phi);
        gsl_vector_set(step, 0, 0.5 * dtheta);
        gsl_vector_set(step, 1, 0.5 * dphi);
        gsl_multimin_fminimizer* nm =
            gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2);
        gsl_multimin_fminimizer_set(nm, &fn, x, step);
        for (int iter = 0; iter < 2000; ++iter) {
            if (gsl_multimin_fminimizer_iterate(nm) != GSL_SUCCESS) {
                break;
            }
            const double size = gsl_multimin_fminimizer_size(nm);
            if (gsl_multimin_test_size(size, 1e-10) == GSL_SUCCESS) {
                break;
            }
        }
        if (nm->fval < best_value) {
            best_value = nm->fval;
            double theta = std::fmod(gsl_vector_get(nm->x, 0), std::numbers::pi);
            double phi = gsl_vector_get(nm->x, 1);
            if (theta < 0.0) {
                theta += std::numbers::pi;
            }
            // θ and π−θ (with φ → φ+π) describe the same projector pair.
            if (theta > half_pi) {
                theta = std::numbers::pi - theta;
                phi += std::numbers::pi;
            }
            phi = std::fmod(phi, two_pi);
            if (phi < 0.0) {
                phi += two_pi;
            }
            best = {theta, phi};
        }
        gsl_multimin_fminimizer_free(nm);
        gsl_vector_free(step);
        gsl_vector_free(x);
    }

    const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    return {s_a - best_value, best};
}

XStateBranches xstate_branches(const XState& x) {
    const double tol = 1e-12;
    const double trace = x.a + 2.0 * x.b + x.d;
    if (x.a < -tol || x.b < -tol || x.d < -tol || std::abs(trace - 1.0) > tol ||
        std::norm(x.z) > x.a * x.d + tol || std::abs(x.w) > x.b + tol) {
        throw NotAState("X-state data do not describe a density matrix");
    }
    const double a = std::max(0.0, x.a);
    const double b = std::max(0.0, x.b);
    const double d = std::max(0.0, x.d);
    const double z = std::abs(x.z);
    const double w = std::abs(x.w);

    const std::array<double, 2> marginal{a + b, b + d};
    const double s_b = shannon_entropy_bits(marginal);
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), z);
    const std::array<double, 4> spectrum{mid + rad, mid - rad, b + w, b - w};
    const double s_ab = shannon_entropy_bits(spectrum);

    // σ_z on B: A is left in diag(a, b)/(a+b) or diag(b, d)/(b+d).
    const std::array<double, 2> up{a, b};
    const std::array<double, 2> down{b, d};
    const double cond_z = shannon_entropy_bits(up) + (a + b) * std::log2(a + b > 0 ? a + b : 1.0) +
                          shannon_entropy_bits(down) +
                          (b + d) * std::log2(b + d > 0 ? b + d : 1.0);

    const double big_m = std::min(1.0, std::sqrt((a - d) * (a - d) + 4.0 * (z + w) * (z + w)));
    const double cond_eq = binary_entropy(0.5 * (1.0 + big_m));

    return {s_b - s_ab + cond_z, s_b - s_ab + cond_eq};
}

double discord_xstate(const XState& x) {
    const auto br = xstate_branches(x);
    return std::min(br.d1, br.d2);
}

CorrelationTriple correlations(const DensityMatrix& rho) {
    if (rho.dim() != 4) {
        throw DimensionMismatch("correlations expect a two-qubit state");
    }
    if (const auto x = as_xstate(rho)) {
        const double mi = mutual_information(rho);
        const double disc = discord_xstate(*x);
        return {mi, mi - disc, disc};
    }
    return correlations_bruteforce(rho);
}

CorrelationTriple correlations_bruteforce(const DensityMatrix& rho, int grid_n) {
    const double mi = mutual_information(rho);
    const auto opt = classical_correlations_bruteforce(rho, grid_n, true);
    return CorrelationTriple::from_ic(mi, opt.classical);
}

} // namespace tidisc
