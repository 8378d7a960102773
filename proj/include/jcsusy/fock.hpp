#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace jcsusy {

using Complex = std::complex<double>;

// State of a single bosonic mode truncated to the number states |0>..|dim-1>.
// Coefficient of |m> lives at index m. All coefficients are finite.
class FockVector {
public:
    explicit FockVector(std::size_t dim);
    explicit FockVector(Eigen::VectorXcd coeffs);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(coeffs_.size()); }
    const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
    Complex operator[](std::size_t m) const { return coeffs_(static_cast<Eigen::Index>(m)); }

    double norm_squared() const { return coeffs_.squaredNorm(); }
    double norm() const { return coeffs_.norm(); }

    // Highest index whose amplitude exceeds amp_eps, or -1 for a (numerically) zero vector.
    long top_support(double amp_eps = kSupportEps) const;
    // Number of indices between the top of the support and dim-1.
    long support_margin(double amp_eps = kSupportEps) const;

    FockVector& operator+=(const FockVector& other);
    FockVector& operator-=(const FockVector& other);
    FockVector& operator*=(Complex s);

    static constexpr double kSupportEps = 1e-10;

private:
    Eigen::VectorXcd coeffs_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(Complex s, FockVector v);

// Coherent state request: amplitude and the admissible dropped probability.
struct CoherentSpec {
    Complex alpha{0.0, 0.0};
    double tail_tol = 1e-12;

    double mean_photon_number() const { return std::norm(alpha); }
    void validate() const;
};

enum class DimMargin {
    Standard,   // the state itself
    Evolution,  // two extra indices, since JC evolution populates m+1
};

FockVector number_state(std::size_t n, std::size_t dim);

// e^{-|a|^2/2} a^m / sqrt(m!) for m < count via C_{m+1} = C_m a / sqrt(m+1).
std::vector<Complex> coherent_amplitudes(Complex alpha, std::size_t count);

// Probability carried by number states m >= from, summed from the far tail
// inwards so the result keeps full relative accuracy.
double coherent_tail_probability(Complex alpha, std::size_t from);

// Smallest dimension whose dropped Poisson tail is <= tail_tol.
std::size_t required_dim(Complex alpha, double tail_tol);

// ceil(|a|^2 + 10 sqrt(max(|a|^2, 1)) + 20), plus 2 for DimMargin::Evolution.
std::size_t choose_dim(Complex alpha, DimMargin margin = DimMargin::Standard);

// Truncated Glauber state renormalized to unit norm. Throws TruncationError
// (with the required dimension) if the dropped tail exceeds spec.tail_tol.
FockVector coherent_state(const CoherentSpec& spec, std::size_t dim);

// Ladder operators on the truncated space. create() loses the |dim-1>
// coefficient, annihilate() leaves index dim-1 empty.
FockVector annihilate(const FockVector& v);
FockVector create(const FockVector& v);
FockVector number(const FockVector& v);

Complex inner(const FockVector& u, const FockVector& v);

// Dense matrices of the ladder operators in the number basis.
Eigen::MatrixXd annihilation_matrix(std::size_t dim);
Eigen::MatrixXd creation_matrix(std::size_t dim);

}  // namespace jcsusy
