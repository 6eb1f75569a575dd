#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "tidisc/errors.hpp"
#include "tidisc/measures.hpp"

using namespace tidisc;
using Catch::Matchers::WithinAbs;

namespace {

DensityMatrix bell_pair() { return bell_diagonal_state({1.0, -1.0, 1.0}); }

DensityMatrix product_state(std::mt19937_64& rng) {
    return DensityMatrix(
        oracle::kron(oracle::random_state(2, rng), oracle::random_state(2, rng)));
}

Matrix local_rotation(const Matrix& rho, std::mt19937_64& rng) {
    const Matrix u = oracle::kron(oracle::random_unitary(2, rng), oracle::random_unitary(2, rng));
    const Matrix r = u * rho * u.adjoint();
    return 0.5 * (r + r.adjoint());
}

} // namespace

TEST_CASE("mutual information", "[measures]") {
    std::mt19937_64 rng(3);
    CHECK_THAT(mutual_information(product_state(rng)), WithinAbs(0.0, 1e-12));
    CHECK_THAT(mutual_information(bell_pair()), WithinAbs(2.0, 1e-12));
    const double s = -0.45 * std::log2(0.45) - 0.55 * std::log2(0.55);
    CHECK_THAT(mutual_information(bell_diagonal_state(BellDiagonalParams::family(0.1))),
               WithinAbs(2.0 - s, 1e-12));
    CHECK_THAT(2.0 - s, WithinAbs(1.00723, 5e-6));
}

TEST_CASE("classical correlations by optimisation", "[measures]") {
    std::mt19937_64 rng(4);
    CHECK_THAT(classical_correlations_bruteforce(product_state(rng)).classical,
               WithinAbs(0.0, 1e-9));
    CHECK_THAT(classical_correlations_bruteforce(bell_pair()).classical, WithinAbs(1.0, 1e-9));
    for (double m : {-0.9, -0.3, 0.0, 0.1, 0.6, 0.95}) {
        const auto rho = bell_diagonal_state(BellDiagonalParams::family(m));
        CHECK_THAT(classical_correlations_bruteforce(rho).classical, WithinAbs(1.0, 1e-9));
    }
    CHECK_THROWS_AS(classical_correlations_bruteforce(bell_pair(), 4), InvalidParameter);
}

TEST_CASE("X-state discord", "[measures]") {
    CHECK_THAT(discord_xstate({0.25, 0.25, 0.25, 0.0, 0.0}), WithinAbs(0.0, 1e-14));
    CHECK_THAT(discord_xstate({0.5, 0.0, 0.5, 0.5, 0.0}), WithinAbs(1.0, 1e-12));

    const auto rho = bell_diagonal_state(BellDiagonalParams::family(0.1));
    const auto x = as_xstate(rho);
    REQUIRE(x.has_value());
    const double expected = correlation_kernel(0.1);
    CHECK_THAT(discord_xstate(*x), WithinAbs(expected, 1e-13));
    CHECK_THAT(expected, WithinAbs(0.0072258, 5e-7));
    CHECK_THAT(correlations_bruteforce(rho).discord, WithinAbs(expected, 1e-8));

    CHECK_THROWS_AS(discord_xstate({0.6, 0.25, 0.25, 0.0, 0.0}), NotAState);
    CHECK_THROWS_AS(discord_xstate({0.25, 0.25, 0.25, 0.5, 0.0}), NotAState);
}

TEST_CASE("correlation triple", "[measures]") {
    std::mt19937_64 rng(8);
    const auto prod = correlations(product_state(rng));
    CHECK_THAT(prod.mutual_info, WithinAbs(0.0, 1e-10));
    CHECK_THAT(prod.classical, WithinAbs(0.0, 1e-9));
    CHECK_THAT(prod.discord, WithinAbs(0.0, 1e-9));

    const auto bell = correlations(bell_pair());
    CHECK_THAT(bell.mutual_info, WithinAbs(2.0, 1e-12));
    CHECK_THAT(bell.classical, WithinAbs(1.0, 1e-12));
    CHECK_THAT(bell.discord, WithinAbs(1.0, 1e-12));

    SECTION("fast path agrees with the optimiser on Bell-diagonal states") {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        int done = 0;
        while (done < 100) {
            const BellDiagonalParams p{u(rng), u(rng), u(rng)};
            const auto lam = bell_eigenvalues(p);
            if (*std::min_element(lam.begin(), lam.end()) < 0.0) {
                continue;
            }
            ++done;
            const auto rho = bell_diagonal_state(p);
            const auto fast = correlations(rho);
            const auto slow = correlations_bruteforce(rho);
            CHECK_THAT(fast.discord, WithinAbs(slow.discord, 1e-6));
            CHECK_THAT(fast.classical, WithinAbs(slow.classical, 1e-6));
            CHECK(fast.discord <= slow.discord + 1e-6);
            CHECK(fast.discord >= -1e-12);
            CHECK(fast.discord <= fast.mutual_info + 1e-12);
            CHECK(fast.classical <= fast.mutual_info + 1e-12);
            // θ = π/4 is optimal and the value does not depend on φ.
            const double s_a = 1.0;
            const double at_quarter = s_a - conditional_entropy(rho, {std::numbers::pi / 4, 0.0});
            const double at_zero = s_a - conditional_entropy(rho, {0.0, 0.0});
            const double at_quarter_y =
                s_a - conditional_entropy(rho, {std::numbers::pi / 4, std::numbers::pi / 2});
            const double best = std::max({at_quarter, at_quarter_y, at_zero});
            CHECK_THAT(slow.classical, WithinAbs(best, 1e-8));
        }
    }
}

TEST_CASE("discord is invariant under local unitaries", "[measures]") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        const auto rho = oracle::random_state(4, rng);
        const auto before = correlations_bruteforce(DensityMatrix(rho));
        const auto after = correlations_bruteforce(DensityMatrix(local_rotation(rho, rng)));
        CHECK_THAT(after.discord, WithinAbs(before.discord, 1e-6));
        CHECK_THAT(after.classical, WithinAbs(before.classical, 1e-6));
        CHECK(before.discord >= -1e-9);
        CHECK(before.discord <= before.mutual_info + 1e-9);
    }
}

TEST_CASE("degenerate measurement outcomes contribute nothing", "[measures]") {
    // |00><00| measured along z on B: the |1> outcome has zero probability.
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    CHECK_THAT(conditional_entropy(DensityMatrix(m), {0.0, 0.0}), WithinAbs(0.0, 1e-15));
    CHECK_THAT(conditional_entropy(DensityMatrix(m), {std::numbers::pi / 2, 0.0}),
               WithinAbs(0.0, 1e-15));
}

TEST_CASE("two-branch X-state discord bounds the optimiser from above", "[measures]") {
    std::mt19937_64 rng(34);
    std::exponential_distribution<double> e;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double pa = e(rng), pb = e(rng), pd = e(rng);
        const double sum = pa + 2.0 * pb + pd;
        XState x;
        x.a = pa / sum;
        x.b = pb / sum;
        x.d = pd / sum;
        x.z = std::polar(std::sqrt(x.a * x.d) * u(rng), 2.0 * std::numbers::pi * u(rng));
        x.w = std::polar(x.b * u(rng), 2.0 * std::numbers::pi * u(rng));
        const double brute = correlations_bruteforce(x.to_density_matrix()).discord;
        CHECK(brute <= discord_xstate(x) + 1e-9);
    }

    // Interior optimum: the measurement maximising C lies strictly between σ_z and the equator.
    XState x;
    x.a = 0.0534;
    x.b = 0.069867;
    x.d = 1.0 - x.a - 2.0 * x.b;
    x.z = 0.104943;
    x.w = 0.025651;
    const auto rho = x.to_density_matrix();
    const auto opt = classical_correlations_bruteforce(rho);
    CHECK(opt.basis.theta > 1e-3);
    CHECK(opt.basis.theta < std::numbers::pi / 2 - 1e-3);
    CHECK(std::abs(opt.basis.theta - std::numbers::pi / 4) > 1e-3);
    CHECK(discord_xstate(x) - correlations_bruteforce(rho).discord > 1e-5);
}
