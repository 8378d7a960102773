#pragma once

#include <optional>

#include "jcsusy/hierarchy.hpp"

namespace jcsusy {

// Characteristic times are in units of 1/omega. n_bar enters as a real
// number (|alpha|^2 for coherent runs, n for Fock runs).

// pi / sqrt(delta^2 + (n_bar+k+1) lambda^2)
double classical_time(const HierarchyParams& p, double n_bar);

// 2 pi sqrt(delta^2 + (n_bar+k+1) lambda^2) / lambda^2
double revival_time(const HierarchyParams& p, double n_bar);

// t_r(k) - t_r(k-1); requires k-1 to be admissible.
double revival_difference(const HierarchyParams& p, double n_bar);

struct FieldFrequencies {
    double omega1 = 0.0;  // 1 + d(n) + d(n+1)
    double omega2 = 0.0;  // 1 + d(n) - d(n+1)
};

// d(x) = sqrt(delta^2 + (k+x) lambda^2)
FieldFrequencies field_frequencies(const HierarchyParams& p, double n);

// d omega1 / dn = (lambda^2/2) (1/d(n) + 1/d(n+1))
double field_frequency_slope(const HierarchyParams& p, double n);

struct FieldPeriods {
    // |2 pi / omega2|; empty when omega2 == 0 (classical period undefined).
    std::optional<double> classical;
    int classical_sign = 0;  // sign of omega2
    // 2 pi / (d omega1 / dn); empty when d(n_bar) = 0 makes the slope diverge.
    std::optional<double> revival;
};

FieldPeriods field_periods(const HierarchyParams& p, double n_bar);

// Omega = eps_{n+1}^+ - eps_{n+1}^- = 2 sqrt(delta^2 + (n+k+1) lambda^2)
double rabi_frequency(const HierarchyParams& p, double n);

struct TimescaleReport {
    double t_c = 0.0;
    double t_r = 0.0;
    std::optional<double> delta_t_r;  // empty when k-1 is inadmissible
    FieldFrequencies omega;
    FieldPeriods periods;
};

TimescaleReport timescale_report(const HierarchyParams& p, double n_bar);

}  // namespace jcsusy
