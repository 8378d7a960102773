#include "jcsusy/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jcsusy/errors.hpp"

namespace jcsusy {

namespace {

void require_finite(const Eigen::VectorXcd& c) {
    if (!c.allFinite()) {
        throw RangeError("FockVector: non-finite coefficient");
    }
}

void require_same_dim(const FockVector& a, const FockVector& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
    }
}

// Index past which every Poisson amplitude of mean nbar underflows or is
// irrelevant at double precision.
std::size_t amplitude_horizon(double nbar) {
    return static_cast<std::size_t>(std::ceil(nbar + 40.0 * std::sqrt(std::max(nbar, 1.0)) + 60.0));
}

}  // namespace

FockVector::FockVector(std::size_t dim) : coeffs_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim))) {
    if (dim == 0) {
        throw RangeError("FockVector: dimension must be positive");
    }
}

FockVector::FockVector(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) {
        throw RangeError("FockVector: dimension must be positive");
    }
    require_finite(coeffs_);
}

long FockVector::top_support(double amp_eps) const {
    for (Eigen::Index m = coeffs_.size() - 1; m >= 0; --m) {
        if (std::abs(coeffs_(m)) > amp_eps) {
            return static_cast<long>(m);
        }
    }
    return -1;
}

long FockVector::support_margin(double amp_eps) const {
    return static_cast<long>(dim()) - 1 - top_support(amp_eps);
}

FockVector& FockVector::operator+=(const FockVector& other) {
    require_same_dim(*this, other, "FockVector +=");
    coeffs_ += other.coeffs_;
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
    require_same_dim(*this, other, "FockVector -=");
    coeffs_ -= other.coeffs_;
    return *this;
}

FockVector& FockVector::operator*=(Complex s) {
    coeffs_ *= s;
    return *this;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
FockVector operator*(Complex s, FockVector v) { return v *= s; }

void CoherentSpec::validate() const {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw RangeError("CoherentSpec: alpha must be finite");
    }
    if (!(tail_tol > 0.0 && tail_tol <= 1e-3)) {
        throw RangeError("CoherentSpec: tail_tol must lie in (0, 1e-3], got " + std::to_string(tail_tol));
    }
}

FockVector number_state(std::size_t n, std::size_t dim) {
    if (n >= dim) {
        throw RangeError("number_state: n=" + std::to_string(n) + " out of range for dim=" + std::to_string(dim));
    }
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    c(static_cast<Eigen::Index>(n)) = 1.0;
    return FockVector(std::move(c));
}

std::vector<Complex> coherent_amplitudes(Complex alpha, std::size_t count) {
    std::vector<Complex> out;
    out.reserve(count);
    if (count == 0) {
        return out;
    }
    Complex c = std::exp(-0.5 * std::norm(alpha));
    out.push_back(c);
    for (std::size_t m = 0; m + 1 < count; ++m) {
        c *= alpha / std::sqrt(static_cast<double>(m + 1));
        out.push_back(c);
    }
    return out;
}

double coherent_tail_probability(Complex alpha, std::size_t from) {
    const std::size_t horizon = std::max(amplitude_horizon(std::norm(alpha)), from + 1);
    const auto amps = coherent_amplitudes(alpha, horizon);
    double tail = 0.0;
    for (std::size_t m = horizon; m-- > from;) {
        tail += std::norm(amps[m]);
    }
    return tail;
}

std::size_t required_dim(Complex alpha, double tail_tol) {
    const std::size_t horizon = amplitude_horizon(std::norm(alpha));
    const auto amps = coherent_amplitudes(alpha, horizon);
    // suffix[m] = probability of indices >= m
    std::vector<double> suffix(horizon + 1, 0.0);
    for (std::size_t m = horizon; m-- > 0;) {
        suffix[m] = suffix[m + 1] + std::norm(amps[m]);
    }
    std::size_t dim = 1;
    while (dim < horizon && suffix[dim] > tail_tol) {
        ++dim;
    }
    return dim;
}

std::size_t choose_dim(Complex alpha, DimMargin margin) {
    const double nbar = std::norm(alpha);
    const double d = std::ceil(nbar + 10.0 * std::sqrt(std::max(nbar, 1.0)) + 20.0);
    const std::size_t extra = margin == DimMargin::Evolution ? 2 : 0;
    return static_cast<std::size_t>(d) + extra;
}

FockVector coherent_state(const CoherentSpec& spec, std::size_t dim) {
    spec.validate();
    if (dim == 0) {
        throw RangeError("coherent_state: dimension must be positive");
    }
    const double dropped = coherent_tail_probability(spec.alpha, dim);
    if (dropped > spec.tail_tol) {
        const std::size_t need = required_dim(spec.alpha, spec.tail_tol);
        throw TruncationError("coherent_state: dim=" + std::to_string(dim) + " drops probability " +
                                  std::to_string(dropped) + " > tail_tol; required dim " + std::to_string(need),
                              need);
    }
    const auto amps = coherent_amplitudes(spec.alpha, dim);
    Eigen::VectorXcd c(static_cast<Eigen::Index>(dim));
    for (std::size_t m = 0; m < dim; ++m) {
        c(static_cast<Eigen::Index>(m)) = amps[m];
    }
    c /= c.norm();
    return FockVector(std::move(c));
}

FockVector annihilate(const FockVector& v) {
    const auto d = static_cast<Eigen::Index>(v.dim());
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d);
    for (Eigen::Index m = 0; m + 1 < d; ++m) {
        out(m) = std::sqrt(static_cast<double>(m + 1)) * v.coeffs()(m + 1);
    }
    return FockVector(std::move(out));
}

FockVector create(const FockVector& v) {
    const auto d = static_cast<Eigen::Index>(v.dim());
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d);
    for (Eigen::Index m = 1; m < d; ++m) {
        out(m) = std::sqrt(static_cast<double>(m)) * v.coeffs()(m - 1);
    }
    return FockVector(std::move(out));
}

FockVector number(const FockVector& v) {
    const auto d = static_cast<Eigen::Index>(v.dim());
    Eigen::VectorXcd out(d);
    for (Eigen::Index m = 0; m < d; ++m) {
        out(m) = static_cast<double>(m) * v.coeffs()(m);
    }
    return FockVector(std::move(out));
}

Complex inner(const FockVector& u, const FockVector& v) {
    require_same_dim(u, v, "inner");
    return u.coeffs().dot(v.coeffs());
}

Eigen::MatrixXd annihilation_matrix(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index m = 0; m + 1 < d; ++m) {
        a(m, m + 1) = std::sqrt(static_cast<double>(m + 1));
    }
    return a;
}

Eigen::MatrixXd creation_matrix(std::size_t dim) { return annihilation_matrix(dim).transpose(); }

}  // namespace jcsusy
