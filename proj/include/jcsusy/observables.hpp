#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jcsusy/evolve.hpp"
#include "jcsusy/hierarchy.hpp"
#include "jcsusy/spinor.hpp"

namespace jcsusy {

struct InversionSeries {
    TimeGrid grid;
    HierarchyParams params;
    std::vector<double> values;
};

struct FieldSeries {
    TimeGrid grid;
    std::vector<Complex> values;
};

enum class FieldOp { Annihilate, Create };

struct Quadratures {
    double x1 = 0.0;
    double x2 = 0.0;
};

// W_n(t) = [d_k^2 + lambda^2 (n+1) cos(2 t R)] / R^2,  R^2 = delta^2 + lambda^2 (n+k+1).
double inversion_fock_value(const HierarchyParams& p, long n, double t);
InversionSeries inversion_fock_closed(const HierarchyParams& p, long n, const TimeGrid& grid);

// W_alpha(t) = sum_m |C_m|^2 W_m(t) over the truncated coherent series (no renormalization).
InversionSeries inversion_coherent(const HierarchyParams& p, const CoherentSpec& spec, const TimeGrid& grid);

// Time average of W_alpha: sum_m |C_m|^2 d_k^2 / R_m^2.
double inversion_coherent_mean(const HierarchyParams& p, const CoherentSpec& spec);

// <sigma_3> = |upper|^2 - |lower|^2
double expect_sigma3(const SpinorState& state);

// <(sigma_0 (x) a-)>; <a+> is its conjugate. Throws RangeError when the state
// reaches within two indices of the truncation boundary.
Complex expect_field(const SpinorState& state, FieldOp which);

// x1 = <(a+ + a-)/2> = Re<a->, x2 = <(a- - a+)/(2i)> = Im<a->.
Quadratures quadratures(const SpinorState& state);

// alpha e^{-i t} (free field, omega = 1).
FieldSeries free_coherent_reference(Complex alpha, const TimeGrid& grid);

// <a-> or <a+> along evolve_coherent_closed over the grid.
FieldSeries field_coherent(const HierarchyParams& p, const CoherentSpec& spec, const TimeGrid& grid, FieldOp which);

// Rectangular-window periodogram of mean-subtracted real samples spaced dt
// apart. Bin j sits at angular frequency 2 pi j / (N dt), j = 0..N/2.
struct Periodogram {
    std::vector<double> omega;
    std::vector<double> power;
    double bin_width = 0.0;
};

Periodogram periodogram(std::span<const double> samples, double dt);

// Angular frequency of the strongest non-DC periodogram bin.
double dominant_frequency(std::span<const double> samples, double dt);

}  // namespace jcsusy
