// quadrature.cpp: GSL QUADPACK wrappers

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "tidisc/errors.hpp"

namespace tidisc::detail {

namespace {

constexpr std::size_t kLimit = 4000;
constexpr std::size_t kQawoLevels = 60;

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};
struct QawoTableDeleter {
    void operator()(gsl_integration_qawo_table* t) const { gsl_integration_qawo_table_free(t); }
};

double trampoline(double x, void* params) {
    return (*static_cast<const std::function<double(double)>*>(params))(x);
}

// GSL's default handler aborts; every call site checks the status instead.
const bool kHandlerOff = [] {
    gsl_set_error_handler_off();
    return true;
}();

void check(int status, const Quadrature& q, double epsabs, double epsrel, const char* routine) {
    if (status == GSL_SUCCESS && std::isfinite(q.value)) {
        return;
    }
    // QUADPACK reports roundoff trouble conservatively; accept a result whose own error
    // estimate still meets the target.
    if (std::isfinite(q.value) && q.abserr <= std::max(epsabs, epsrel * std::abs(q.value)) &&
        (status == GSL_EROUND || status == GSL_ESING || status == GSL_EDIVERGE)) {
        return;
    }
    throw QuadratureFailure(std::string(routine) + ": " + gsl_strerror(status) +
                            " (error estimate " + std::to_string(q.abserr) + ")");
}

} // namespace

Quadrature integrate(const std::function<double(double)>& f, double a, double b, double epsabs,
                     double epsrel) {
    (void)kHandlerOff;
    Quadrature q;
    if (b <= a) {
        return q;
    }
    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
        gsl_integration_workspace_alloc(kLimit));
    gsl_function fn{&trampoline, const_cast<std::function<double(double)>*>(&f)};
    const int status =
        gsl_integration_qags(&fn, a, b, epsabs, epsrel, kLimit, ws.get(), &q.value, &q.abserr);
    check(status, q, epsabs, epsrel, "qags");
    return q;
}

Quadrature integrate_weighted(const std::function<double(double)>& f, double a, double b,
                              double omega, Oscillation kind, double epsabs,
                              double epsrel) {
    (void)kHandlerOff;
    Quadrature q;
    if (b <= a) {
        return q;
    }
    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
        gsl_integration_workspace_alloc(kLimit));
    std::unique_ptr<gsl_integration_qawo_table, QawoTableDeleter> table(
        gsl_integration_qawo_table_alloc(omega, b - a,
                                         kind == Oscillation::Sine ? GSL_INTEG_SINE
                                                                   : GSL_INTEG_COSINE,
                                         kQawoLevels));
    gsl_function fn{&trampoline, const_cast<std::function<double(double)>*>(&f)};
    const int status = gsl_integration_qawo(&fn, a, epsabs, epsrel, kLimit, ws.get(), table.get(),
                                            &q.value, &q.abserr);
    check(status, q, epsabs, epsrel, "qawo");
    return q;
}

} // namespace tidisc::detail
