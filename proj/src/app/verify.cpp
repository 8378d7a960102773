#include "jcsusy/app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "jcsusy/errors.hpp"
#include "jcsusy/evolve.hpp"
#include "jcsusy/hierarchy.hpp"
#include "jcsusy/numfmt.hpp"
#include "jcsusy/observables.hpp"

namespace jcsusy::app {

namespace {

std::string sci(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

CheckResult check_eigenvalues(const HierarchyParams& base) {
    constexpr std::size_t kDim = 64;
    constexpr long kMaxN = 40;
    double worst = 0.0;
    for (long j = 0; j <= 2; ++j) {
        const HierarchyParams p = step(base, j);
        const Eigen::VectorXd numeric = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(
                                            hamiltonian_matrix(p, kDim), Eigen::EigenvaluesOnly)
                                            .eigenvalues();
        for (const Level& lv : spectrum_levels(p, kMaxN)) {
            double nearest = INFINITY;
            for (Eigen::Index i = 0; i < numeric.size(); ++i) {
                nearest = std::min(nearest, std::abs(numeric(i) - lv.energy));
            }
            worst = std::max(worst, nearest);
        }
    }
    return {"eigenvalues", worst <= 1e-9, "max |closed - numeric| = " + sci(worst) + " (tol 1e-9)"};
}

double intertwining_residual(const HierarchyParams& p, std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    const Eigen::MatrixXcd l = intertwiner_matrix(p, dim);
    const Eigen::MatrixXcd r = l * hamiltonian_matrix(p, dim) - hamiltonian_matrix(step(p, 1), dim) * l;
    double worst = 0.0;
    for (Eigen::Index row = 0; row < 2 * d; ++row) {
        const Eigen::Index in_block = row % d;
        if (in_block >= d - 2) {
            continue;
        }
        worst = std::max(worst, r.row(row).cwiseAbs().maxCoeff());
    }
    return worst;
}

CheckResult check_intertwining(const HierarchyParams& base) {
    constexpr std::size_t kDim = 32;
    double worst = intertwining_residual(base, kDim);
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> delta_dist(0.0, 5.0);
    std::uniform_real_distribution<double> lambda_dist(0.2, 2.0);
    for (int i = 0; i < 20; ++i) {
        const HierarchyParams p(delta_dist(rng), lambda_dist(rng), 0);
        worst = std::max(worst, intertwining_residual(p, kDim));
    }
    return {"intertwining", worst <= 1e-10, "max residual on interior rows = " + sci(worst) + " (tol 1e-10)"};
}

CheckResult check_isospectrality(const HierarchyParams& base) {
    std::ostringstream detail;
    bool ok = true;
    for (long j = 1; j <= 3; ++j) {
        const SpectrumDiff diff = spectrum_diff(base, step(base, j), 20);
        bool expected = diff.missing_in_partner.size() == static_cast<std::size_t>(2 * j);
        for (const Level& lv : diff.missing_in_partner) {
            const bool listed = (lv.branch == Branch::Plus && lv.n >= 1 && lv.n <= j) ||
                                (lv.branch == Branch::Minus && lv.n >= 0 && lv.n <= j - 1);
            expected = expected && listed;
        }
        ok = ok && expected;
        detail << "j=" << j << ": " << diff.missing_in_partner.size() << " missing; ";
    }
    return {"isospectrality", ok, detail.str()};
}

CheckResult check_oracle(const HierarchyParams& base) {
    constexpr std::size_t kDim = 16;
    const TimeGrid grid{0.0, 50.0, 0.05};
    double worst_state = 0.0;
    double worst_inv = 0.0;
    for (long j = 0; j <= 2; ++j) {
        const HierarchyParams p = step(base, j);
        const SpectralPropagator prop(hamiltonian_matrix(p, kDim));
        for (long n : {0L, 1L, 4L}) {
            const SpinorState init = SpinorState::excited(number_state(static_cast<std::size_t>(n), kDim));
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double t = grid.at(i);
                const SpinorState numeric = prop.apply(init, t);
                worst_state = std::max(worst_state, max_abs_difference(evolve_fock_closed(p, n, t, kDim), numeric));
                worst_inv = std::max(worst_inv, std::abs(inversion_fock_value(p, n, t) - expect_sigma3(numeric)));
            }
        }
    }
    const bool ok = worst_state <= 1e-8 && worst_inv <= 1e-8;
    return {"oracle-equivalence", ok,
            "state max dev = " + sci(worst_state) + ", inversion max dev = " + sci(worst_inv) + " (tol 1e-8)"};
}

CheckResult check_coherent(const HierarchyParams& base) {
    const CoherentSpec spec{Complex(2.0, 0.0), 1e-12};
    const std::size_t dim = choose_dim(spec.alpha, DimMargin::Evolution);
    const TimeGrid grid{0.0, 50.0, 0.25};
    const InversionSeries closed = inversion_coherent(base, spec, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = expect_sigma3(evolve_coherent_closed(base, spec, grid.at(i), dim));
        worst = std::max(worst, std::abs(w - closed.values[i]));
    }
    return {"coherent-inversion", worst <= 1e-7, "max |W_alpha - <sigma3>| = " + sci(worst) + " (tol 1e-7)"};
}

template <class Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {name, false, std::string("error: ") + e.what()};
    }
}

}  // namespace

std::vector<CheckResult> run_verification(double delta, double lambda) {
    std::vector<CheckResult> out;
    std::vector<HierarchyParams> bases{HierarchyParams(3.0, 1.0, 0)};
    if (!(delta == 3.0 && lambda == 1.0)) {
        bases.insert(bases.begin(), HierarchyParams(std::abs(delta), lambda, 0));
    }
    for (const auto& base : bases) {
        const std::string tag = " [delta=" + format_double(base.delta()) + " lambda=" + format_double(base.lambda()) + "]";
        auto add = [&](const std::string& name, auto fn) {
            CheckResult r = guarded(name, fn);
            r.name += tag;
            out.push_back(std::move(r));
        };
        add("eigenvalues", [&] { return check_eigenvalues(base); });
        add("intertwining", [&] { return check_intertwining(base); });
        add("isospectrality", [&] { return check_isospectrality(base); });
        add("oracle-equivalence", [&] { return check_oracle(base); });
        add("coherent-inversion", [&] { return check_coherent(base); });
    }
    return out;
}

}  // namespace jcsusy::app
