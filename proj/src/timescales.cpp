#include "jcsusy/timescales.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jcsusy/errors.hpp"
#include "jcsusy/numfmt.hpp"

namespace jcsusy {

namespace {

constexpr double kPi = std::numbers::pi;

double positive_root(const HierarchyParams& p, double offset, const char* who) {
    const double v = p.discriminant(offset);
    if (!(v > 0.0)) {
        throw AdmissibilityError(std::string(who) + ": delta^2 + (k + " + format_double(offset) +
                                     ") lambda^2 must be positive",
                                 min_admissible_k(p.delta(), p.lambda()));
    }
    return std::sqrt(v);
}

void require_n(double n, const char* who) {
    if (!std::isfinite(n) || n < 0.0) {
        throw RangeError(std::string(who) + ": photon number must be finite and >= 0");
    }
}

}  // namespace

double classical_time(const HierarchyParams& p, double n_bar) {
    require_n(n_bar, "classical_time");
    return kPi / positive_root(p, n_bar + 1.0, "classical_time");
}

double revival_time(const HierarchyParams& p, double n_bar) {
    require_n(n_bar, "revival_time");
    const double l2 = p.lambda() * p.lambda();
    return 2.0 * kPi * positive_root(p, n_bar + 1.0, "revival_time") / l2;
}

double revival_difference(const HierarchyParams& p, double n_bar) {
    const HierarchyParams previous = step(p, -1);
    return revival_time(p, n_bar) - revival_time(previous, n_bar);
}

FieldFrequencies field_frequencies(const HierarchyParams& p, double n) {
    require_n(n, "field_frequencies");
    const double lo = p.root(n);
    const double hi = positive_root(p, n + 1.0, "field_frequencies");
    return FieldFrequencies{1.0 + lo + hi, 1.0 + lo - hi};
}

double field_frequency_slope(const HierarchyParams& p, double n) {
    require_n(n, "field_frequency_slope");
    const double lo = positive_root(p, n, "field_frequency_slope");
    const double hi = positive_root(p, n + 1.0, "field_frequency_slope");
    const double l2 = p.lambda() * p.lambda();
    return 0.5 * l2 * (1.0 / lo + 1.0 / hi);
}

FieldPeriods field_periods(const HierarchyParams& p, double n_bar) {
    const FieldFrequencies w = field_frequencies(p, n_bar);
    FieldPeriods out;
    if (w.omega2 != 0.0) {
        out.classical = 2.0 * kPi / std::abs(w.omega2);
        out.classical_sign = w.omega2 > 0.0 ? 1 : -1;
    }
    if (p.discriminant(n_bar) > 0.0) {
        out.revival = 2.0 * kPi / field_frequency_slope(p, n_bar);
    }
    return out;
}

double rabi_frequency(const HierarchyParams& p, double n) {
    require_n(n, "rabi_frequency");
    return 2.0 * positive_root(p, n + 1.0, "rabi_frequency");
}

TimescaleReport timescale_report(const HierarchyParams& p, double n_bar) {
    TimescaleReport r;
    r.t_c = classical_time(p, n_bar);
    r.t_r = revival_time(p, n_bar);
    if (p.discriminant(-1.0) >= 0.0) {
        r.delta_t_r = revival_difference(p, n_bar);
    }
    r.omega = field_frequencies(p, n_bar);
    r.periods = field_periods(p, n_bar);
    return r;
}

}  // namespace jcsusy
