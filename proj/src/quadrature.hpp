// quadrature.hpp: thin RAII wrappers over GSL's QUADPACK routines (internal)

#pragma once

#include <functional>

namespace tidisc::detail {

struct Quadrature {
    double value = 0.0;
    double abserr = 0.0;
};

enum class Oscillation { Sine, Cosine };

/// ∫_a^b f, adaptive Gauss–Kronrod with extrapolation (tolerates endpoint singularities).
Quadrature integrate(const std::function<double(double)>& f, double a, double b, double epsabs,
                     double epsrel = 0.0);

/// ∫_a^b f(u) sin(ωu) du or cos(ωu), with the weight handled exactly.
Quadrature integrate_weighted(const std::function<double(double)>& f, double a, double b,
                              double omega, Oscillation kind, double epsabs,
                              double epsrel = 0.0);

} // namespace tidisc::detail
