#include "jcsusy/evolve.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "jcsusy/errors.hpp"

namespace jcsusy {

void TimeGrid::validate() const {
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || !std::isfinite(step)) {
        throw RangeError("TimeGrid: bounds must be finite");
    }
    if (t_start < 0.0) {
        throw RangeError("TimeGrid: t_start must be >= 0");
    }
    if (!(t_end > t_start)) {
        throw RangeError("TimeGrid: t_end must exceed t_start");
    }
    if (!(step > 0.0)) {
        throw RangeError("TimeGrid: step must be positive");
    }
    if ((t_end - t_start) / step > kMaxSamples) {
        throw RangeError("TimeGrid: more than 1e7 samples requested");
    }
}

std::size_t TimeGrid::size() const {
    validate();
    // The relative slack keeps t_end when (t_end - t_start)/step is an integer up to round-off.
    const double span = (t_end - t_start) / step;
    return static_cast<std::size_t>(std::floor(span * (1.0 + 1e-12) + 1e-9)) + 1;
}

std::vector<double> TimeGrid::times() const {
    const std::size_t n = size();
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = at(j);
    }
    return out;
}

CoherentSeries coherent_series(const CoherentSpec& spec) {
    spec.validate();
    const std::size_t count = required_dim(spec.alpha, spec.tail_tol);
    CoherentSeries series;
    series.amplitudes = coherent_amplitudes(spec.alpha, count);
    series.dropped = coherent_tail_probability(spec.alpha, count);
    return series;
}

std::pair<Complex, Complex> fock_evolution_amplitudes(const HierarchyParams& p, long n, double t) {
    if (n < 0) {
        throw RangeError("fock evolution: n must be non-negative");
    }
    const double disc = p.discriminant(static_cast<double>(n + 1));
    if (!(disc > 0.0)) {
        throw AdmissibilityError("fock evolution: delta^2 + (n+k+1) lambda^2 must be positive (n=" +
                                     std::to_string(n) + ", k=" + std::to_string(p.k()) + ")",
                                 min_admissible_k(p.delta(), p.lambda()));
    }
    const double r = std::sqrt(disc);
    const double d = p.shift();
    const Complex phase = std::polar(1.0, -static_cast<double>(n + p.k() + 1) * t);
    const double c = std::cos(t * r);
    const double s = std::sin(t * r) / r;
    const Complex upper = phase * Complex(c, -d * s);
    const Complex lower = phase * Complex(0.0, -p.lambda() * std::sqrt(static_cast<double>(n + 1)) * s);
    return {upper, lower};
}

SpinorState evolve_fock_closed(const HierarchyParams& p, long n, double t, std::size_t dim) {
    if (n < 0 || static_cast<std::size_t>(n) + 1 >= dim) {
        throw RangeError("evolve_fock_closed: need dim > n+1 (n=" + std::to_string(n) + ", dim=" +
                         std::to_string(dim) + ")");
    }
    const auto [up, lo] = fock_evolution_amplitudes(p, n, t);
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::VectorXcd upper = Eigen::VectorXcd::Zero(d);
    Eigen::VectorXcd lower = Eigen::VectorXcd::Zero(d);
    upper(n) = up;
    lower(n + 1) = lo;
    return SpinorState(FockVector(std::move(upper)), FockVector(std::move(lower)));
}

SpinorState evolve_coherent_closed(const HierarchyParams& p, const CoherentSpec& spec, double t, std::size_t dim) {
    const CoherentSeries series = coherent_series(spec);
    const std::size_t count = series.amplitudes.size();
    if (count + 1 > dim) {
        throw TruncationError("evolve_coherent_closed: dim=" + std::to_string(dim) + " cannot hold " +
                                  std::to_string(count) + " coherent terms plus the m+1 partner; required dim " +
                                  std::to_string(count + 1),
                              count + 1);
    }
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::VectorXcd upper = Eigen::VectorXcd::Zero(d);
    Eigen::VectorXcd lower = Eigen::VectorXcd::Zero(d);
    for (std::size_t m = 0; m < count; ++m) {
        const auto [up, lo] = fock_evolution_amplitudes(p, static_cast<long>(m), t);
        const auto i = static_cast<Eigen::Index>(m);
        upper(i) += series.amplitudes[m] * up;
        lower(i + 1) += series.amplitudes[m] * lo;
    }
    return SpinorState(FockVector(std::move(upper)), FockVector(std::move(lower)));
}

SpectralPropagator::SpectralPropagator(const Eigen::MatrixXcd& hamiltonian) {
    if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0) {
        throw DimensionError("SpectralPropagator: Hamiltonian must be square and non-empty");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
    if (solver.info() != Eigen::Success) {
        throw DomainError("SpectralPropagator: Hermitian eigensolver failed");
    }
    energies_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
}

Eigen::VectorXcd SpectralPropagator::apply(const Eigen::VectorXcd& state, double t) const {
    if (state.size() != energies_.size()) {
        throw DimensionError("SpectralPropagator::apply: state size " + std::to_string(state.size()) +
                             " does not match Hamiltonian size " + std::to_string(energies_.size()));
    }
    Eigen::VectorXcd coords = vectors_.adjoint() * state;
    for (Eigen::Index i = 0; i < coords.size(); ++i) {
        coords(i) *= std::polar(1.0, -energies_(i) * t);
    }
    return vectors_ * coords;
}

SpinorState SpectralPropagator::apply(const SpinorState& state, double t) const {
    return SpinorState::from_vector(apply(state.to_vector(), t));
}

SpinorState evolve_numeric(const HierarchyParams& p, const SpinorState& initial, double t) {
    const SpectralPropagator prop(hamiltonian_matrix(p, initial.dim()));
    return prop.apply(initial, t);
}

}  // namespace jcsusy
