#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "jcsusy/errors.hpp"
#include "jcsusy/evolve.hpp"
#include "jcsusy/hierarchy.hpp"
#include "jcsusy/observables.hpp"

using namespace jcsusy;

TEST_CASE("Fock inversion: t=0, resonant limit, numeric oracle") {
    for (long k : {-9L, 0L, 2L, 8L}) {
        for (long n : {0L, 3L, 7L}) {
            CHECK(inversion_fock_value(HierarchyParams(3.0, 1.0, k), n, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
        }
    }
    const HierarchyParams res(0.0, 1.0, 0);
    for (long n = 0; n <= 10; ++n) {
        for (double t = 0.0; t <= 100.0; t += 0.37) {
            CHECK(std::abs(inversion_fock_value(res, n, t) - std::cos(2.0 * std::sqrt(static_cast<double>(n + 1)) * t)) <=
                  1e-12);
        }
    }

    const HierarchyParams p(3.0, 1.0, 2);
    const std::size_t dim = 12;
    const SpectralPropagator prop(hamiltonian_matrix(p, dim));
    const SpinorState init = SpinorState::excited(number_state(4, dim));
    const TimeGrid grid{0.0, 50.0, 0.05};
    const InversionSeries series = inversion_fock_closed(p, 4, grid);
    REQUIRE(series.values.size() == grid.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(series.values[i] - expect_sigma3(prop.apply(init, grid.at(i)))));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("coherent inversion: t=0, state path, mean") {
    const HierarchyParams p(3.0, 1.0, 0);
    const CoherentSpec spec{Complex(2.0, 0.0), 1e-12};
    const TimeGrid grid{0.0, 60.0, 0.1};
    const InversionSeries w = inversion_coherent(p, spec, grid);
    CHECK(std::abs(w.values[0] - 1.0) <= spec.tail_tol);

    const std::size_t dim = choose_dim(spec.alpha, DimMargin::Evolution);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); i += 7) {
        worst = std::max(worst, std::abs(w.values[i] - expect_sigma3(evolve_coherent_closed(p, spec, grid.at(i), dim))));
    }
    CHECK(worst <= 1e-7);

    // Mean: Poisson-weighted d^2/R^2 summed directly.
    double mean = 0.0;
    for (long m = 0; m < 80; ++m) {
        const double pm = std::exp(-4.0 + static_cast<double>(m) * std::log(4.0) - std::lgamma(static_cast<double>(m) + 1.0));
        mean += pm * 9.0 / (9.0 + static_cast<double>(m + 1));
    }
    CHECK(inversion_coherent_mean(p, spec) == doctest::Approx(mean).epsilon(1e-10));
}

TEST_CASE("sigma3 expectation") {
    const std::size_t dim = 6;
    CHECK(expect_sigma3(SpinorState::excited(number_state(2, dim))) == 1.0);
    CHECK(expect_sigma3(SpinorState::ground(number_state(0, dim))) == -1.0);
    const double r = 1.0 / std::sqrt(2.0);
    const SpinorState mix(Complex(r) * number_state(1, dim), Complex(0.0, r) * number_state(2, dim));
    CHECK(std::abs(expect_sigma3(mix)) <= 1e-15);
}

TEST_CASE("field expectation and quadratures") {
    const CoherentSpec spec{Complex(3.0, 0.0), 1e-12};
    const std::size_t dim = choose_dim(spec.alpha, DimMargin::Evolution);
    const SpinorState s = SpinorState::excited(coherent_state(spec, dim));
    const Complex am = expect_field(s, FieldOp::Annihilate);
    const Complex ap = expect_field(s, FieldOp::Create);
    CHECK(std::abs(am - 3.0) <= 1e-8);
    CHECK(ap == std::conj(am));

    const Quadratures q = quadratures(s);
    CHECK(q.x1 == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(std::abs(q.x2) <= 1e-12);

    const CoherentSpec cs{std::polar(2.0, 0.8), 1e-12};
    const SpinorState c = SpinorState::excited(coherent_state(cs, choose_dim(cs.alpha, DimMargin::Evolution)));
    const Quadratures qc = quadratures(c);
    CHECK(qc.x1 * qc.x1 + qc.x2 * qc.x2 == doctest::Approx(std::norm(expect_field(c, FieldOp::Annihilate))).epsilon(1e-14));
    CHECK(std::abs(Complex(qc.x1, qc.x2) - cs.alpha) <= 1e-8);

    // Support within two indices of the boundary is refused.
    CHECK_THROWS_AS(expect_field(SpinorState::excited(number_state(5, 6)), FieldOp::Annihilate), RangeError);
}

TEST_CASE("free-field reference") {
    const TimeGrid grid{0.0, 10.0, 0.5};
    const FieldSeries f = free_coherent_reference(Complex(3.0, 0.0), grid);
    CHECK(f.values[0] == Complex(3.0, 0.0));
    for (const Complex& v : f.values) {
        CHECK(std::abs(v) == doctest::Approx(3.0).epsilon(1e-15));
    }
    const FieldSeries at_pi = free_coherent_reference(Complex(3.0, 0.0), TimeGrid{0.0, std::numbers::pi, std::numbers::pi});
    CHECK(std::abs(at_pi.values[1] - Complex(-3.0, 0.0)) <= 1e-14);
}

TEST_CASE("field series along coherent evolution") {
    const HierarchyParams p(4.0, 1.0, 0);
    const CoherentSpec spec{Complex(3.0, 0.0), 1e-12};
    const TimeGrid grid{0.0, 20.0, 0.5};
    const FieldSeries am = field_coherent(p, spec, grid, FieldOp::Annihilate);
    const FieldSeries ap = field_coherent(p, spec, grid, FieldOp::Create);
    CHECK(std::abs(am.values[0] - 3.0) <= 1e-8);
    const std::size_t dim = choose_dim(spec.alpha, DimMargin::Evolution);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(ap.values[i] == std::conj(am.values[i]));
        const Complex direct = expect_field(evolve_coherent_closed(p, spec, grid.at(i), dim), FieldOp::Annihilate);
        CHECK(std::abs(direct - am.values[i]) <= 1e-12);
        // |<a>|^2 <= <N> <= |alpha|^2 + 1 by conservation of N + sigma+sigma-.
        CHECK(std::abs(am.values[i]) <= std::sqrt(10.0) + 1e-8);
    }
}

TEST_CASE("periodogram locates a pure tone within one bin") {
    const double dt = 0.01;
    const double omega = 7.3;
    std::vector<double> x(6000);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = 0.4 + std::cos(omega * dt * static_cast<double>(i) + 0.2);
    }
    const Periodogram pg = periodogram(x, dt);
    CHECK(pg.bin_width == doctest::Approx(2.0 * std::numbers::pi / (6000.0 * dt)));
    CHECK(pg.omega.size() == 3001);
    CHECK(std::abs(dominant_frequency(x, dt) - omega) <= pg.bin_width);
    CHECK(pg.power[0] <= 1e-18 * pg.power[1] + 1e-20);
    CHECK_THROWS_AS(periodogram(std::vector<double>{1.0, 2.0}, dt), RangeError);
}
