#include "jcsusy/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jcsusy/errors.hpp"

namespace jcsusy {

SpinorState::SpinorState(FockVector upper, FockVector lower) : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (upper_.dim() != lower_.dim()) {
        throw DimensionError("SpinorState: component dimensions differ (" + std::to_string(upper_.dim()) + " vs " +
                             std::to_string(lower_.dim()) + ")");
    }
}

SpinorState SpinorState::excited(FockVector v) {
    FockVector zero(v.dim());
    return SpinorState(std::move(v), std::move(zero));
}

SpinorState SpinorState::ground(FockVector v) {
    FockVector zero(v.dim());
    return SpinorState(std::move(zero), std::move(v));
}

SpinorState SpinorState::from_vector(const Eigen::VectorXcd& flat) {
    if (flat.size() == 0 || flat.size() % 2 != 0) {
        throw DimensionError("SpinorState::from_vector: length must be even and positive");
    }
    const Eigen::Index d = flat.size() / 2;
    return SpinorState(FockVector(Eigen::VectorXcd(flat.head(d))), FockVector(Eigen::VectorXcd(flat.tail(d))));
}

double SpinorState::norm() const { return std::sqrt(norm_squared()); }

long SpinorState::support_margin(double amp_eps) const {
    return std::min(upper_.support_margin(amp_eps), lower_.support_margin(amp_eps));
}

Eigen::VectorXcd SpinorState::to_vector() const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::VectorXcd flat(2 * d);
    flat.head(d) = upper_.coeffs();
    flat.tail(d) = lower_.coeffs();
    return flat;
}

SpinorState& SpinorState::operator+=(const SpinorState& other) {
    upper_ += other.upper_;
    lower_ += other.lower_;
    return *this;
}

SpinorState& SpinorState::operator-=(const SpinorState& other) {
    upper_ -= other.upper_;
    lower_ -= other.lower_;
    return *this;
}

SpinorState& SpinorState::operator*=(Complex s) {
    upper_ *= s;
    lower_ *= s;
    return *this;
}

SpinorState operator+(SpinorState a, const SpinorState& b) { return a += b; }
SpinorState operator-(SpinorState a, const SpinorState& b) { return a -= b; }
SpinorState operator*(Complex s, SpinorState v) { return v *= s; }

Complex inner(const SpinorState& u, const SpinorState& v) {
    return inner(u.upper(), v.upper()) + inner(u.lower(), v.lower());
}

double max_abs_difference(const SpinorState& a, const SpinorState& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("max_abs_difference: dimension mismatch");
    }
    return (a.to_vector() - b.to_vector()).cwiseAbs().maxCoeff();
}

}  // namespace jcsusy
