#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "jcsusy/fock.hpp"
#include "jcsusy/hierarchy.hpp"
#include "jcsusy/spinor.hpp"

namespace jcsusy {

// Inclusive sampling grid t_j = t_start + j*step, j = 0..size()-1, in units of 1/omega.
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 1.0;
    double step = 0.01;

    static constexpr double kMaxSamples = 1e7;

    void validate() const;
    std::size_t size() const;
    double at(std::size_t j) const { return t_start + static_cast<double>(j) * step; }
    std::vector<double> times() const;

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

// Leading Poisson amplitudes C_0..C_M of a coherent state, M minimal with
// sum_{m>M} |C_m|^2 <= tail_tol. Not renormalized.
struct CoherentSeries {
    std::vector<Complex> amplitudes;
    double dropped = 0.0;
};

CoherentSeries coherent_series(const CoherentSpec& spec);

// Amplitudes (upper on psi_n, lower on psi_{n+1}) of (psi_n, 0) evolved for time t under H^(k).
std::pair<Complex, Complex> fock_evolution_amplitudes(const HierarchyParams& p, long n, double t);

// Closed-form U(t)(psi_n, 0). Requires delta^2 + (n+k+1) lambda^2 > 0 and dim > n+1.
SpinorState evolve_fock_closed(const HierarchyParams& p, long n, double t, std::size_t dim);

// sum_m C_m U(t)(psi_m, 0) over the truncated coherent series. The result is
// not renormalized; its norm deficit equals the dropped tail probability.
// Requires dim >= M+2, which choose_dim(alpha, DimMargin::Evolution) satisfies.
SpinorState evolve_coherent_closed(const HierarchyParams& p, const CoherentSpec& spec, double t, std::size_t dim);

// exp(-i H t) from one Hermitian eigendecomposition. Immutable after
// construction, so apply() may be called concurrently.
class SpectralPropagator {
public:
    explicit SpectralPropagator(const Eigen::MatrixXcd& hamiltonian);

    std::size_t size() const noexcept { return static_cast<std::size_t>(energies_.size()); }
    const Eigen::VectorXd& energies() const noexcept { return energies_; }
    const Eigen::MatrixXcd& eigenvectors() const noexcept { return vectors_; }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& state, double t) const;
    SpinorState apply(const SpinorState& state, double t) const;

private:
    Eigen::VectorXd energies_;
    Eigen::MatrixXcd vectors_;
};

// Numeric oracle: diagonalizes hamiltonian_matrix(p, initial.dim()) and propagates.
SpinorState evolve_numeric(const HierarchyParams& p, const SpinorState& initial, double t);

}  // namespace jcsusy
