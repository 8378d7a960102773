#include "jcsusy/observables.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "jcsusy/errors.hpp"
#include "jcsusy/parallel.hpp"

namespace jcsusy {

double inversion_fock_value(const HierarchyParams& p, long n, double t) {
    if (n < 0) {
        throw RangeError("inversion: n must be non-negative");
    }
    const double r2 = p.discriminant(static_cast<double>(n + 1));
    if (!(r2 > 0.0)) {
        throw AdmissibilityError("inversion: delta^2 + lambda^2 (n+k+1) must be positive",
                                 min_admissible_k(p.delta(), p.lambda()));
    }
    const double l2 = p.lambda() * p.lambda();
    const double num = p.discriminant(0.0) + l2 * static_cast<double>(n + 1) * std::cos(2.0 * t * std::sqrt(r2));
    return num / r2;
}

InversionSeries inversion_fock_closed(const HierarchyParams& p, long n, const TimeGrid& grid) {
    const std::size_t count = grid.size();
    InversionSeries out{grid, p, std::vector<double>(count)};
    for (std::size_t j = 0; j < count; ++j) {
        out.values[j] = inversion_fock_value(p, n, grid.at(j));
    }
    return out;
}

InversionSeries inversion_coherent(const HierarchyParams& p, const CoherentSpec& spec, const TimeGrid& grid) {
    const CoherentSeries series = coherent_series(spec);
    const std::size_t count = grid.size();
    // Fail on inadmissible terms before fanning out.
    for (std::size_t m = 0; m < series.amplitudes.size(); ++m) {
        (void)inversion_fock_value(p, static_cast<long>(m), 0.0);
    }
    InversionSeries out{grid, p, std::vector<double>(count)};
    parallel_for(count, [&](std::size_t j) {
        const double t = grid.at(j);
        double w = 0.0;
        for (std::size_t m = 0; m < series.amplitudes.size(); ++m) {
            w += std::norm(series.amplitudes[m]) * inversion_fock_value(p, static_cast<long>(m), t);
        }
        out.values[j] = w;
    });
    return out;
}

double inversion_coherent_mean(const HierarchyParams& p, const CoherentSpec& spec) {
    const CoherentSeries series = coherent_series(spec);
    const double d2 = p.discriminant(0.0);
    double mean = 0.0;
    for (std::size_t m = 0; m < series.amplitudes.size(); ++m) {
        mean += std::norm(series.amplitudes[m]) * d2 / p.discriminant(static_cast<double>(m + 1));
    }
    return mean;
}

double expect_sigma3(const SpinorState& state) {
    return state.upper().norm_squared() - state.lower().norm_squared();
}

Complex expect_field(const SpinorState& state, FieldOp which) {
    if (state.support_margin() < 2) {
        throw RangeError("expect_field: state support reaches within 2 indices of the truncation boundary (dim=" +
                         std::to_string(state.dim()) + ")");
    }
    const Complex lowering = inner(state.upper(), annihilate(state.upper())) +
                             inner(state.lower(), annihilate(state.lower()));
    return which == FieldOp::Annihilate ? lowering : std::conj(lowering);
}

Quadratures quadratures(const SpinorState& state) {
    const Complex a = expect_field(state, FieldOp::Annihilate);
    return Quadratures{a.real(), a.imag()};
}

FieldSeries free_coherent_reference(Complex alpha, const TimeGrid& grid) {
    const std::size_t count = grid.size();
    FieldSeries out{grid, std::vector<Complex>(count)};
    for (std::size_t j = 0; j < count; ++j) {
        out.values[j] = alpha * std::polar(1.0, -grid.at(j));
    }
    return out;
}

FieldSeries field_coherent(const HierarchyParams& p, const CoherentSpec& spec, const TimeGrid& grid, FieldOp which) {
    const std::size_t dim = choose_dim(spec.alpha, DimMargin::Evolution);
    const std::size_t count = grid.size();
    // Validates truncation and admissibility once up front.
    (void)expect_field(evolve_coherent_closed(p, spec, grid.at(0), dim), which);
    FieldSeries out{grid, std::vector<Complex>(count)};
    parallel_for(count, [&](std::size_t j) {
        out.values[j] = expect_field(evolve_coherent_closed(p, spec, grid.at(j), dim), which);
    });
    return out;
}

Periodogram periodogram(std::span<const double> samples, double dt) {
    const std::size_t n = samples.size();
    if (n < 4) {
        throw RangeError("periodogram: need at least 4 samples");
    }
    if (!(dt > 0.0)) {
        throw RangeError("periodogram: dt must be positive");
    }
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(n);
    const std::size_t bins = n / 2 + 1;
    Periodogram out;
    out.bin_width = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
    out.omega.resize(bins);
    out.power.resize(bins);
    parallel_for(bins, [&](std::size_t j) {
        const double theta = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        // Rotate by a fixed phasor, re-anchored periodically to bound drift.
        const Complex rot = std::polar(1.0, theta);
        Complex w(1.0, 0.0);
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (i % 64 == 0) {
                w = std::polar(1.0, theta * static_cast<double>(i));
            }
            acc += (samples[i] - mean) * w;
            w *= rot;
        }
        out.omega[j] = out.bin_width * static_cast<double>(j);
        out.power[j] = std::norm(acc) / static_cast<double>(n);
    });
    return out;
}

double dominant_frequency(std::span<const double> samples, double dt) {
    const Periodogram pg = periodogram(samples, dt);
    std::size_t best = 1;
    for (std::size_t j = 2; j < pg.power.size(); ++j) {
        if (pg.power[j] > pg.power[best]) {
            best = j;
        }
    }
    return pg.omega[best];
}

}  // namespace jcsusy
