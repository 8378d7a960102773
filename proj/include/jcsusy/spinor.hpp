#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "jcsusy/fock.hpp"

namespace jcsusy {

// Atom-field state as a two-component spinor: upper = excited atom,
// lower = ground atom. Both components share one truncation dimension.
//
// Flattened layout (see to_vector) is all-upper then all-lower, matching
// the basis ordering of hamiltonian_matrix().
class SpinorState {
public:
    SpinorState(FockVector upper, FockVector lower);

    // |e> (x) v  and  |g> (x) v
    static SpinorState excited(FockVector v);
    static SpinorState ground(FockVector v);
    static SpinorState from_vector(const Eigen::VectorXcd& flat);

    std::size_t dim() const noexcept { return upper_.dim(); }
    const FockVector& upper() const noexcept { return upper_; }
    const FockVector& lower() const noexcept { return lower_; }

    double norm_squared() const { return upper_.norm_squared() + lower_.norm_squared(); }
    double norm() const;

    // Smallest support margin of the two components.
    long support_margin(double amp_eps = FockVector::kSupportEps) const;

    Eigen::VectorXcd to_vector() const;

    SpinorState& operator+=(const SpinorState& other);
    SpinorState& operator-=(const SpinorState& other);
    SpinorState& operator*=(Complex s);

private:
    FockVector upper_;
    FockVector lower_;
};

SpinorState operator+(SpinorState a, const SpinorState& b);
SpinorState operator-(SpinorState a, const SpinorState& b);
SpinorState operator*(Complex s, SpinorState v);

Complex inner(const SpinorState& u, const SpinorState& v);

// Largest modulus over all coefficients of a - b.
double max_abs_difference(const SpinorState& a, const SpinorState& b);

}  // namespace jcsusy
