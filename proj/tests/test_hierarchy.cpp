#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include "jcsusy/errors.hpp"
#include "jcsusy/hierarchy.hpp"

using namespace jcsusy;

namespace {

Eigen::VectorXd numeric_eigenvalues(const HierarchyParams& p, std::size_t dim) {
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(hamiltonian_matrix(p, dim), Eigen::EigenvaluesOnly)
        .eigenvalues();
}

double nearest_distance(const Eigen::VectorXd& values, double x) {
    return (values.array() - x).abs().minCoeff();
}

// Independent H^(k) built from explicit ladder matrices with an extra row of headroom,
// then cropped to the requested block size.
Eigen::MatrixXcd reference_hamiltonian(double delta, double lambda, long k, std::size_t dim) {
    const auto big = static_cast<Eigen::Index>(dim + 1);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(big, big);
    for (Eigen::Index m = 1; m < big; ++m) {
        a(m - 1, m) = std::sqrt(static_cast<double>(m));
    }
    const Eigen::MatrixXd ad = a.transpose();
    const double d = std::sqrt(delta * delta + static_cast<double>(k) * lambda * lambda);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(big, big);
    const Eigen::MatrixXd upper = a * ad + (static_cast<double>(k) + d) * id;
    const Eigen::MatrixXd lower = ad * a + (static_cast<double>(k) - d) * id;
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    h.topLeftCorner(n, n) = upper.topLeftCorner(n, n).cast<Complex>();
    h.topRightCorner(n, n) = (lambda * a).topLeftCorner(n, n).cast<Complex>();
    h.bottomLeftCorner(n, n) = (lambda * ad).topLeftCorner(n, n).cast<Complex>();
    h.bottomRightCorner(n, n) = lower.topLeftCorner(n, n).cast<Complex>();
    return h;
}

double residual(const HierarchyParams& p, const EigenPair& e, std::size_t dim) {
    const Eigen::VectorXcd v = e.state.to_vector();
    return (hamiltonian_matrix(p, dim) * v - e.energy * v).norm();
}

}  // namespace

TEST_CASE("parameter validation and admissibility") {
    CHECK_THROWS_AS(HierarchyParams(3.0, 0.0, 0), RangeError);
    CHECK_THROWS_AS(HierarchyParams(3.0, -1.0, 0), RangeError);
    CHECK_THROWS_AS(HierarchyParams(NAN, 1.0, 0), RangeError);
    CHECK_THROWS_AS(HierarchyParams(3.0, 1.0, -10), AdmissibilityError);
    CHECK_NOTHROW(HierarchyParams(3.0, 1.0, -9));

    CHECK(min_admissible_k(3.0, 1.0) == -9);
    CHECK(min_admissible_k(0.0, 1.0) == 0);
    CHECK(min_admissible_k(3.0, 2.0) == -2);
    CHECK(min_admissible_k(std::sqrt(9.5), 1.0) == -9);

    const HierarchyParams p(3.0, 1.0, 0);
    CHECK(step(step(p, 1), -1) == p);
    CHECK(step(p, -9).k() == -9);
    try {
        (void)step(p, -10);
        FAIL("expected AdmissibilityError");
    } catch (const AdmissibilityError& e) {
        CHECK(e.min_k() == -9);
    }
}

TEST_CASE("detuning from frequencies") {
    CHECK(detuning_from_frequencies(1.0, 1.0) == 0.0);
    CHECK(detuning_from_frequencies(3.0, 1.0) == 1.0);
    CHECK(detuning_from_frequencies(0.0, 1.0) == -0.5);
    CHECK_THROWS_AS(detuning_from_frequencies(1.0, 0.0), RangeError);
}

TEST_CASE("closed-form eigenvalues") {
    const HierarchyParams p(3.0, 1.0, 0);
    CHECK(eigenvalue_closed(p, 0, Branch::Minus) == doctest::Approx(-3.0).epsilon(1e-15));
    CHECK(eigenvalue_closed(p, 1, Branch::Plus) == doctest::Approx(1.0 + std::sqrt(10.0)).epsilon(1e-15));
    CHECK(eigenvalue_closed(p, 1, Branch::Minus) == doctest::Approx(1.0 - std::sqrt(10.0)).epsilon(1e-15));
    CHECK(eigenvalue_closed(HierarchyParams(0.0, 1.0, 0), 4, Branch::Plus) == 6.0);
    CHECK_THROWS_AS(eigenvalue_closed(p, 0, Branch::Plus), RangeError);
    CHECK_THROWS_AS(eigenvalue_closed(p, -1, Branch::Minus), RangeError);

    // Against the numeric spectrum of the truncated matrix.
    const Eigen::VectorXd num = numeric_eigenvalues(p, 16);
    CHECK(nearest_distance(num, -3.0) <= 1e-10);
    CHECK(nearest_distance(num, 1.0 + std::sqrt(10.0)) <= 1e-10);
    CHECK(nearest_distance(num, 1.0 - std::sqrt(10.0)) <= 1e-10);
    CHECK(nearest_distance(numeric_eigenvalues(HierarchyParams(0.0, 1.0, 0), 16), 6.0) <= 1e-10);
}

TEST_CASE("matrix eigenvalues match the closed form for n <= 40 at dim 64") {
    for (long k : {0L, 1L, 2L, -9L, 8L}) {
        const HierarchyParams p(3.0, 1.0, k);
        const Eigen::VectorXd num = numeric_eigenvalues(p, 64);
        double worst = 0.0;
        for (const Level& lv : spectrum_levels(p, 40)) {
            worst = std::max(worst, nearest_distance(num, lv.energy));
        }
        CAPTURE(k);
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("Hamiltonian matrix: Hermitian, reduces to the JC form, matches a ladder-operator build") {
    for (long k : {0L, 1L, 3L}) {
        const HierarchyParams p(3.0, 1.0, k);
        const Eigen::MatrixXcd m = hamiltonian_matrix(p, 12);
        CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((m - reference_hamiltonian(3.0, 1.0, k, 12)).cwiseAbs().maxCoeff() <= 1e-12);
    }
    // k = 0: diagonal N + 1 + delta on top, N - delta below.
    const Eigen::MatrixXcd jc = hamiltonian_matrix(HierarchyParams(2.5, 0.7, 0), 5);
    for (Eigen::Index m = 0; m < 5; ++m) {
        CHECK(jc(m, m).real() == doctest::Approx(static_cast<double>(m) + 1.0 + 2.5));
        CHECK(jc(5 + m, 5 + m).real() == doctest::Approx(static_cast<double>(m) - 2.5));
    }
    CHECK_THROWS_AS(hamiltonian_matrix(HierarchyParams(3.0, 1.0, 0), 1), RangeError);
}

TEST_CASE("closed-form eigenstates") {
    const HierarchyParams p(3.0, 1.0, 2);
    const std::size_t dim = 16;
    const EigenPair ground = eigenstate_closed(p, 0, Branch::Minus, dim);
    CHECK(ground.state.upper().norm() == 0.0);
    CHECK(std::abs(ground.state.lower()[0] - Complex(1.0)) == 0.0);
    CHECK(residual(p, ground, dim) <= 1e-10);

    for (Branch b : {Branch::Plus, Branch::Minus}) {
        const EigenPair e = eigenstate_closed(p, 3, b, dim);
        CHECK(residual(p, e, dim) <= 1e-10);
        CHECK(std::abs(e.state.norm() - 1.0) <= 1e-14);
        CHECK(e.state.upper()[2].real() >= 0.0);
    }
    const EigenPair plus = eigenstate_closed(p, 3, Branch::Plus, dim);
    const EigenPair minus = eigenstate_closed(p, 3, Branch::Minus, dim);
    CHECK(std::abs(inner(plus.state, minus.state)) <= 1e-12);

    // Sweep: residual stays small over admissible parameters and both branches.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dd(-5.0, 5.0);
    std::uniform_real_distribution<double> ld(0.1, 3.0);
    for (int i = 0; i < 30; ++i) {
        const double delta = dd(rng);
        const double lambda = ld(rng);
        const long k = min_admissible_k(delta, lambda) + (i % 5);
        const HierarchyParams q(delta, lambda, k);
        for (long n = 1; n < 10; ++n) {
            if (q.discriminant(static_cast<double>(n)) <= 0.0) {
                continue;
            }
            for (Branch b : {Branch::Plus, Branch::Minus}) {
                const EigenPair e = eigenstate_closed(q, n, b, 24);
                CHECK(residual(q, e, 24) <= 1e-10 * (1.0 + std::abs(e.energy)));
            }
        }
    }
    CHECK_THROWS_AS(eigenstate_closed(p, 15, Branch::Plus, 15), RangeError);
}

TEST_CASE("mixing coefficients") {
    const HierarchyParams p(3.0, 1.0, 0);
    const std::size_t dim = 8;
    const long n = 2;
    const MixingCoefficients cs = mixing_coefficients(p, n);
    const SpinorState target = SpinorState::excited(number_state(n, dim));
    const SpinorState recon = Complex(cs.c) * eigenstate_closed(p, n + 1, Branch::Plus, dim).state +
                              Complex(cs.s) * eigenstate_closed(p, n + 1, Branch::Minus, dim).state;
    CHECK((target - recon).norm() <= 1e-12);

    const MixingCoefficients res = mixing_coefficients(HierarchyParams(0.0, 1.0, 0), 3);
    CHECK(res.c == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(res.s == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    const SpinorState recon0 =
        Complex(res.c) * eigenstate_closed(HierarchyParams(0.0, 1.0, 0), 4, Branch::Plus, dim).state +
        Complex(res.s) * eigenstate_closed(HierarchyParams(0.0, 1.0, 0), 4, Branch::Minus, dim).state;
    CHECK((SpinorState::excited(number_state(3, dim)) - recon0).norm() <= 1e-12);

    for (int i = 0; i < 50; ++i) {
        const HierarchyParams q(-4.0 + 0.17 * i, 0.2 + 0.05 * i, 0);
        const MixingCoefficients m = mixing_coefficients(q, i % 7);
        CHECK(std::abs(m.c * m.c + m.s * m.s - 1.0) <= 1e-12);
    }
}

TEST_CASE("intertwiner constant and residual") {
    CHECK(intertwiner_constant(HierarchyParams(0.0, 1.0, 0)) == -1.0);
    CHECK(intertwiner_constant(HierarchyParams(3.0, 1.0, 0)) ==
          doctest::Approx(3.0 - std::sqrt(10.0)).epsilon(1e-14));

    auto interior_residual = [](const HierarchyParams& p, std::size_t dim) {
        const auto d = static_cast<Eigen::Index>(dim);
        const Eigen::MatrixXcd l = intertwiner_matrix(p, dim);
        const Eigen::MatrixXcd r = l * hamiltonian_matrix(p, dim) - hamiltonian_matrix(step(p, 1), dim) * l;
        double worst = 0.0;
        for (Eigen::Index row = 0; row < 2 * d; ++row) {
            if (row % d < d - 2) {
                worst = std::max(worst, r.row(row).cwiseAbs().maxCoeff());
            }
        }
        return worst;
    };
    CHECK(interior_residual(HierarchyParams(3.0, 1.0, 0), 32) <= 1e-10);
    CHECK(interior_residual(HierarchyParams(3.0, 1.0, -9), 32) <= 1e-10);
    CHECK(interior_residual(HierarchyParams(1.5, 0.4, 4), 32) <= 1e-10);

    // L maps eigenstates of H^(k) to eigenstates of H^(k+1) with the same energy.
    const HierarchyParams p(3.0, 1.0, 0);
    const std::size_t dim = 20;
    const Eigen::MatrixXcd l = intertwiner_matrix(p, dim);
    const Eigen::MatrixXcd h1 = hamiltonian_matrix(step(p, 1), dim);
    for (long n = 2; n < 8; ++n) {
        for (Branch b : {Branch::Plus, Branch::Minus}) {
            const EigenPair e = eigenstate_closed(p, n, b, dim);
            const Eigen::VectorXcd mapped = l * e.state.to_vector();
            CHECK(mapped.norm() > 1e-6);
            CHECK((h1 * mapped - e.energy * mapped).norm() <= 1e-10 * mapped.norm() * (1.0 + std::abs(e.energy)));
        }
    }
}

TEST_CASE("anti-JC map") {
    const HierarchyParams a = anti_jc(3.0, 1.0);
    CHECK(a.delta() == -3.0);
    CHECK(a.lambda() == 1.0);
    CHECK(a.k() == 0);
    CHECK(anti_jc(0.0, 1.0) == HierarchyParams(0.0, 1.0, 0));

    const auto jc = spectrum_levels(HierarchyParams(3.0, 1.0, 0), 15);
    const auto ajc = spectrum_levels(a, 15);
    REQUIRE(jc.size() == ajc.size());
    for (std::size_t i = 0; i < jc.size(); ++i) {
        CHECK(jc[i].energy == ajc[i].energy);
    }
    const Eigen::VectorXd num_a = numeric_eigenvalues(a, 24);
    for (const Level& lv : spectrum_levels(a, 15)) {
        CHECK(nearest_distance(num_a, lv.energy) <= 1e-10);
    }
}

TEST_CASE("partner spectra differ only in the lowest levels") {
    const HierarchyParams base(3.0, 1.0, 0);
    const SpectrumDiff d1 = spectrum_diff(base, step(base, 1), 20);
    REQUIRE(d1.missing_in_partner.size() == 2);
    std::vector<double> missing;
    for (const Level& lv : d1.missing_in_partner) {
        missing.push_back(lv.energy);
    }
    std::sort(missing.begin(), missing.end());
    CHECK(missing[0] == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(missing[1] == doctest::Approx(1.0 + std::sqrt(10.0)).epsilon(1e-14));
    CHECK(d1.shared.size() == 39);

    const SpectrumDiff d2 = spectrum_diff(base, step(base, 2), 20);
    CHECK(d2.missing_in_partner.size() == 4);

    // Brute-force multiset intersection of the two level lists.
    for (long j = 1; j <= 3; ++j) {
        const HierarchyParams partner = step(base, j);
        std::vector<double> a;
        std::vector<double> b;
        for (const Level& lv : spectrum_levels(base, 20)) {
            a.push_back(lv.energy);
        }
        for (const Level& lv : spectrum_levels(partner, 20 + j)) {
            b.push_back(lv.energy);
        }
        std::size_t common = 0;
        std::vector<bool> used(b.size(), false);
        for (double x : a) {
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (!used[i] && std::abs(b[i] - x) <= 1e-10 * (1.0 + std::abs(x))) {
                    used[i] = true;
                    ++common;
                    break;
                }
            }
        }
        const SpectrumDiff d = spectrum_diff(base, partner, 20);
        CAPTURE(j);
        CHECK(d.shared.size() == common);
        CHECK(d.missing_in_partner.size() == a.size() - common);
        CHECK(d.missing_in_partner.size() == static_cast<std::size_t>(2 * j));
        for (const SharedLevel& s : d.shared) {
            CHECK(std::abs(s.base.energy - s.partner.energy) <= 1e-10 * (1.0 + std::abs(s.base.energy)));
            CHECK(s.partner.n == s.base.n - j);
        }
    }
    CHECK_THROWS_AS(spectrum_diff(base, base, 10), RangeError);
    CHECK_THROWS_AS(spectrum_diff(base, HierarchyParams(2.0, 1.0, 1), 10), RangeError);
}

TEST_CASE("shape invariance: H^(k) at delta equals H^(0) at delta^2 + k lambda^2") {
    for (long k : {1L, 2L, 5L}) {
        const HierarchyParams pk(3.0, 1.0, k);
        const HierarchyParams p0(std::sqrt(9.0 + static_cast<double>(k)), 1.0, 0);
        const Eigen::MatrixXcd diff = hamiltonian_matrix(pk, 10) -
                                      (hamiltonian_matrix(p0, 10) +
                                       static_cast<double>(k) * Eigen::MatrixXcd::Identity(20, 20));
        CHECK(diff.cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("matrix dump round-trip") {
    const HierarchyParams p(3.0, 1.0, 2);
    const Eigen::MatrixXcd m = hamiltonian_matrix(p, 6);
    std::stringstream ss;
    write_matrix_dump(ss, p, 6, m);
    CHECK(ss.str().rfind("# jcsusy-matrix rows=12 cols=12 dim=6", 0) == 0);
    const Eigen::MatrixXcd back = read_matrix_dump(ss);
    CHECK(back.rows() == 12);
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);

    std::stringstream bad("not a header\n");
    CHECK_THROWS(read_matrix_dump(bad));
}
