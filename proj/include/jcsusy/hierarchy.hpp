#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "jcsusy/spinor.hpp"

namespace jcsusy {

// Parameters of the k-th partner Hamiltonian
//
//   H^(k) = [[a-a+ + k + d_k,  lambda a-      ],
//            [lambda a+,       a+a- + k - d_k ]],   d_k = sqrt(delta^2 + k lambda^2)
//
// in units of hbar*omega. Construction enforces lambda > 0 and
// delta^2 + k lambda^2 >= 0.
class HierarchyParams {
public:
    HierarchyParams(double delta, double lambda, long k = 0);

    double delta() const noexcept { return delta_; }
    double lambda() const noexcept { return lambda_; }
    long k() const noexcept { return k_; }

    // delta^2 + (k + offset) lambda^2; round-off negatives within a few ulps are clamped to 0.
    double discriminant(double offset = 0.0) const;
    // sqrt(discriminant(offset)); throws AdmissibilityError when negative.
    double root(double offset = 0.0) const;
    // d_k, the detuning-like diagonal shift of H^(k).
    double shift() const { return root(0.0); }

    friend bool operator==(const HierarchyParams&, const HierarchyParams&) = default;

private:
    double delta_;
    double lambda_;
    long k_;
};

// Smallest k with delta^2 + k lambda^2 >= 0.
long min_admissible_k(double delta, double lambda);

enum class Branch { Plus, Minus };

char branch_symbol(Branch b);

struct MixingCoefficients {
    double c = 1.0;
    double s = 0.0;
};

struct EigenPair {
    long n;
    Branch branch;
    double energy;
    SpinorState state;
};

struct Level {
    long n;
    Branch branch;
    double energy;
};

struct SharedLevel {
    Level base;
    Level partner;
};

struct SpectrumDiff {
    std::vector<SharedLevel> shared;
    std::vector<Level> missing_in_partner;
};

// (omega0 - omega) / (2 omega)
double detuning_from_frequencies(double omega0, double omega);

// (n+k) +- sqrt(delta^2 + (n+k) lambda^2); n = 0 exists only on the minus branch.
double eigenvalue_closed(const HierarchyParams& p, long n, Branch branch);

// Normalized dressed state. Both branches are phased so the upper component
// is non-negative: Psi_n^+ = (c psi_{n-1}, s psi_n), Psi_n^- = (s psi_{n-1}, -c psi_n).
EigenPair eigenstate_closed(const HierarchyParams& p, long n, Branch branch, std::size_t dim);

// (c_n, s_n) of the level-(n+1) doublet, so that (psi_n, 0) = c_n Psi_{n+1}^+ + s_n Psi_{n+1}^-.
MixingCoefficients mixing_coefficients(const HierarchyParams& p, long n);

// Levels eps_0^-, eps_1^+-, ..., eps_{n_max}^+- in that order.
std::vector<Level> spectrum_levels(const HierarchyParams& p, long n_max);

// Dense H^(k) on 2*dim basis states ordered (upper |0..dim-1>, lower |0..dim-1>).
// Diagonal entries use the exact number-operator values, so every doublet
// {(psi_{n-1},0), (0,psi_n)} with n < dim is reproduced without truncation
// error. The lone upper state psi_{dim-1} is a boundary artifact.
Eigen::MatrixXcd hamiltonian_matrix(const HierarchyParams& p, std::size_t dim);

// sigma_0 (x) N: the free field Hamiltonian in the same basis.
Eigen::MatrixXcd field_hamiltonian_matrix(std::size_t dim);

// Constant K of the intertwiner L = [[a-, 0], [K, a-]] mapping H^(k) to H^(k+1):
// K = (d_k - d_{k+1}) / lambda.
double intertwiner_constant(const HierarchyParams& p);

// L with L H^(k) = H^(k+1) L away from the truncation boundary.
Eigen::MatrixXcd intertwiner_matrix(const HierarchyParams& p, std::size_t dim);

// (delta, lambda, k + by). Throws AdmissibilityError carrying the minimal k.
HierarchyParams step(const HierarchyParams& p, long by);

// Anti-JC Hamiltonian as the delta -> -delta image: (-delta, lambda, 0).
HierarchyParams anti_jc(double delta, double lambda);

// Levels of `base` up to n_max compared against the partner step(base, j), j > 0.
SpectrumDiff spectrum_diff(const HierarchyParams& base, const HierarchyParams& partner, long n_max);

// Plain-text matrix dump: one header line
//   # jcsusy-matrix rows=R cols=C dim=D delta=.. lambda=.. k=..
// then R lines of C space-separated "re,im" entries (row-major).
void write_matrix_dump(std::ostream& os, const HierarchyParams& p, std::size_t dim, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_matrix_dump(std::istream& is);

}  // namespace jcsusy
