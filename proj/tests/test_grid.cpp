#include <random>
#include <cmath>

#include "doctest.h"
#include "giantatom/errors.hpp"
#include "giantatom/grid.hpp"

using namespace giantatom;

TEST_CASE("aligned grid keeps the nominal step when already commensurate") {
    const double tau = 0.2;
    const double nominal = tau / 64.0;
    const auto grid = build_aligned_grid(10.0, nominal, tau, {});
    CHECK(grid.step == doctest::Approx(nominal));
    CHECK(grid.n_steps == 3200);
    CHECK(grid.delay_steps == 64);
}

TEST_CASE("aligned grid refines onto breakpoints") {
    // quench edges at multiples of 0.1 force the common grid 0.1
    const std::vector<double> edges = {0.1, 0.5, 0.6, 1.0};
    const auto grid = build_aligned_grid(2.0, 0.2 / 64.0, 0.2, edges);
    CHECK(std::fabs(grid.delay_steps * grid.step - 0.2) < 1e-12);
    for (double b : edges) {
        const double k = std::round(b / grid.step);
        CHECK(std::fabs(k * grid.step - b) < 1e-12 * 2.0);
    }
    CHECK(grid.step <= 0.2 / 64.0 + 1e-15);
}

TEST_CASE("decimal times survive binary rounding") {
    // 0.3 and 0.2 are not exact binary fractions; the gcd must still find 0.1
    const auto grid = build_aligned_grid(1.0, 0.003, 0.2, {0.3});
    CHECK(std::fabs(grid.delay_steps * grid.step - 0.2) < 1e-12);
    const double k = std::round(0.3 / grid.step);
    CHECK(std::fabs(k * grid.step - 0.3) < 1e-12);
}

TEST_CASE("incommensurate times raise GridError") {
    CHECK_THROWS_AS(build_aligned_grid(1.0, 0.01, 0.2, {1.0 / 3.0 * 0.998123}), GridError);
    CHECK_THROWS_AS(build_aligned_grid(1.0, 0.01, std::sqrt(2.0) / 10.0, {0.25}), GridError);
}

TEST_CASE("zero delay grid") {
    const auto grid = build_aligned_grid(1.0, 1.0 / 64.0, 0.0, {});
    CHECK(grid.delay_steps == 0);
    CHECK(grid.n_steps == 64);
}

TEST_CASE("random two-decimal schedules always land on the grid") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> cents(1, 80);
    for (int trial = 0; trial < 100; ++trial) {
        const double tau = cents(rng) / 100.0;
        const double horizon = cents(rng) / 10.0;
        std::vector<double> marks;
        const int n_marks = 1 + trial % 3;
        for (int k = 0; k < n_marks; ++k) {
            const double b = cents(rng) / 100.0;
            if (b <= horizon) marks.push_back(b);
        }
        const auto grid = build_aligned_grid(horizon, tau / 32.0, tau, marks);
        const double tol = 1e-12 * horizon;
        CHECK(std::fabs(grid.delay_steps * grid.step - tau) <= tol);
        CHECK(std::fabs(grid.n_steps * grid.step - horizon) <= tol);
        for (double b : marks) {
            const double k = std::round(b / grid.step);
            CHECK(std::fabs(k * grid.step - b) <= tol);
        }
    }
}
