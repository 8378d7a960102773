#include "jcsusy/hierarchy.hpp"

#include <cfloat>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "jcsusy/errors.hpp"
#include "jcsusy/numfmt.hpp"

namespace jcsusy {

namespace {

// delta^2 + x lambda^2 with round-off negatives clamped; NaN-free for finite input.
double clamped_discriminant(double delta, double lambda, double x) {
    const double d2 = delta * delta;
    const double l2x = x * lambda * lambda;
    const double value = d2 + l2x;
    const double eps = 64.0 * DBL_EPSILON * (d2 + std::abs(l2x));
    if (value < 0.0 && value > -eps) {
        return 0.0;
    }
    return value;
}

std::string describe(double delta, double lambda, long k) {
    std::ostringstream os;
    os << "delta=" << format_double(delta) << " lambda=" << format_double(lambda) << " k=" << k;
    return os.str();
}

void require_level(long n, Branch branch) {
    if (n < 0) {
        throw RangeError("level index must be non-negative, got n=" + std::to_string(n));
    }
    if (n == 0 && branch == Branch::Plus) {
        throw RangeError("no plus-branch level exists for n=0");
    }
}

}  // namespace

HierarchyParams::HierarchyParams(double delta, double lambda, long k) : delta_(delta), lambda_(lambda), k_(k) {
    if (!std::isfinite(delta) || !std::isfinite(lambda)) {
        throw RangeError("HierarchyParams: delta and lambda must be finite");
    }
    if (!(lambda > 0.0)) {
        throw RangeError("HierarchyParams: lambda must be positive, got " + format_double(lambda));
    }
    if (clamped_discriminant(delta, lambda, static_cast<double>(k)) < 0.0) {
        const long kmin = min_admissible_k(delta, lambda);
        throw AdmissibilityError("inadmissible parameters " + describe(delta, lambda, k) +
                                     ": delta^2 + k lambda^2 < 0 (minimal admissible k is " + std::to_string(kmin) +
                                     ")",
                                 kmin);
    }
}

double HierarchyParams::discriminant(double offset) const {
    return clamped_discriminant(delta_, lambda_, static_cast<double>(k_) + offset);
}

double HierarchyParams::root(double offset) const {
    const double v = discriminant(offset);
    if (v < 0.0) {
        throw AdmissibilityError("negative discriminant delta^2 + (k + " + format_double(offset) +
                                     ") lambda^2 for " + describe(delta_, lambda_, k_),
                                 min_admissible_k(delta_, lambda_));
    }
    return std::sqrt(v);
}

long min_admissible_k(double delta, double lambda) {
    if (!(lambda > 0.0)) {
        throw RangeError("min_admissible_k: lambda must be positive");
    }
    auto k = static_cast<long>(std::ceil(-(delta * delta) / (lambda * lambda)));
    while (clamped_discriminant(delta, lambda, static_cast<double>(k - 1)) >= 0.0) {
        --k;
    }
    while (clamped_discriminant(delta, lambda, static_cast<double>(k)) < 0.0) {
        ++k;
    }
    return k;
}

char branch_symbol(Branch b) { return b == Branch::Plus ? '+' : '-'; }

double detuning_from_frequencies(double omega0, double omega) {
    if (!std::isfinite(omega0) || !std::isfinite(omega)) {
        throw RangeError("detuning_from_frequencies: frequencies must be finite");
    }
    if (!(omega > 0.0)) {
        throw RangeError("detuning_from_frequencies: field frequency must be positive");
    }
    return (omega0 - omega) / (2.0 * omega);
}

double eigenvalue_closed(const HierarchyParams& p, long n, Branch branch) {
    require_level(n, branch);
    const double level = static_cast<double>(n + p.k());
    const double r = p.root(static_cast<double>(n));
    return branch == Branch::Plus ? level + r : level - r;
}

MixingCoefficients mixing_coefficients(const HierarchyParams& p, long n) {
    if (n < 0) {
        throw RangeError("mixing_coefficients: n must be non-negative");
    }
    const double disc = p.discriminant(static_cast<double>(n + 1));
    if (!(disc > 0.0)) {
        throw DomainError("mixing_coefficients: degenerate doublet (delta^2 + (n+1+k) lambda^2 = 0)");
    }
    const double r = std::sqrt(disc);
    const double d = p.shift();
    // r - d = (n+1) lambda^2 / (r + d) avoids cancellation when d >> lambda.
    const double l2 = p.lambda() * p.lambda();
    const double r_minus_d = static_cast<double>(n + 1) * l2 / (r + d);
    MixingCoefficients mc;
    mc.c = std::sqrt((r + d) / (2.0 * r));
    mc.s = std::sqrt(r_minus_d / (2.0 * r));
    return mc;
}

EigenPair eigenstate_closed(const HierarchyParams& p, long n, Branch branch, std::size_t dim) {
    require_level(n, branch);
    if (static_cast<std::size_t>(n) >= dim) {
        throw RangeError("eigenstate_closed: dim=" + std::to_string(dim) + " too small for n=" + std::to_string(n));
    }
    const double energy = eigenvalue_closed(p, n, branch);
    if (n == 0) {
        return EigenPair{0, Branch::Minus, energy, SpinorState::ground(number_state(0, dim))};
    }
    const MixingCoefficients mc = mixing_coefficients(p, n - 1);
    const auto m = static_cast<std::size_t>(n);
    FockVector upper = number_state(m - 1, dim);
    FockVector lower = number_state(m, dim);
    if (branch == Branch::Plus) {
        upper *= mc.c;
        lower *= mc.s;
    } else {
        upper *= mc.s;
        lower *= -mc.c;
    }
    return EigenPair{n, branch, energy, SpinorState(std::move(upper), std::move(lower))};
}

std::vector<Level> spectrum_levels(const HierarchyParams& p, long n_max) {
    std::vector<Level> levels;
    levels.push_back(Level{0, Branch::Minus, eigenvalue_closed(p, 0, Branch::Minus)});
    for (long n = 1; n <= n_max; ++n) {
        levels.push_back(Level{n, Branch::Plus, eigenvalue_closed(p, n, Branch::Plus)});
        levels.push_back(Level{n, Branch::Minus, eigenvalue_closed(p, n, Branch::Minus)});
    }
    return levels;
}

Eigen::MatrixXcd hamiltonian_matrix(const HierarchyParams& p, std::size_t dim) {
    if (dim < 2) {
        throw RangeError("hamiltonian_matrix: dim must be at least 2");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    const double shift = p.shift();
    const double k = static_cast<double>(p.k());
    const double lambda = p.lambda();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    for (Eigen::Index m = 0; m < d; ++m) {
        const double md = static_cast<double>(m);
        h(m, m) = md + 1.0 + k + shift;  // a-a+ |m> = (m+1)|m>
        h(d + m, d + m) = md + k - shift;  // a+a- |m> = m|m>
        if (m + 1 < d) {
            const double g = lambda * std::sqrt(md + 1.0);
            h(m, d + m + 1) = g;  // lambda a- : lower |m+1> -> upper |m>
            h(d + m + 1, m) = g;  // lambda a+ : upper |m> -> lower |m+1>
        }
    }
    return h;
}

Eigen::MatrixXcd field_hamiltonian_matrix(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    for (Eigen::Index m = 0; m < d; ++m) {
        h(m, m) = static_cast<double>(m);
        h(d + m, d + m) = static_cast<double>(m);
    }
    return h;
}

double intertwiner_constant(const HierarchyParams& p) {
    return (p.shift() - p.root(1.0)) / p.lambda();
}

Eigen::MatrixXcd intertwiner_matrix(const HierarchyParams& p, std::size_t dim) {
    if (dim < 2) {
        throw RangeError("intertwiner_matrix: dim must be at least 2");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    const double kc = intertwiner_constant(p);
    Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    const Eigen::MatrixXd a = annihilation_matrix(dim);
    l.topLeftCorner(d, d) = a.cast<Complex>();
    l.bottomRightCorner(d, d) = a.cast<Complex>();
    l.bottomLeftCorner(d, d) = kc * Eigen::MatrixXcd::Identity(d, d);
    return l;
}

HierarchyParams step(const HierarchyParams& p, long by) {
    return HierarchyParams(p.delta(), p.lambda(), p.k() + by);
}

HierarchyParams anti_jc(double delta, double lambda) { return HierarchyParams(-delta, lambda, 0); }

SpectrumDiff spectrum_diff(const HierarchyParams& base, const HierarchyParams& partner, long n_max) {
    if (base.delta() != partner.delta() || base.lambda() != partner.lambda()) {
        throw RangeError("spectrum_diff: inputs are not partners (delta and lambda must agree)");
    }
    const long j = partner.k() - base.k();
    if (j <= 0) {
        throw RangeError("spectrum_diff: partner must be a forward step of base (j > 0), got j=" + std::to_string(j));
    }
    if (n_max < 0) {
        throw RangeError("spectrum_diff: n_max must be non-negative");
    }
    constexpr double kMatchTol = 1e-10;
    SpectrumDiff diff;
    for (const Level& lv : spectrum_levels(base, n_max)) {
        const long pn = lv.n - j;
        const bool exists = lv.branch == Branch::Minus ? pn >= 0 : pn >= 1;
        if (exists) {
            const Level pl{pn, lv.branch, eigenvalue_closed(partner, pn, lv.branch)};
            if (std::abs(pl.energy - lv.energy) <= kMatchTol * std::max(1.0, std::abs(lv.energy))) {
                diff.shared.push_back(SharedLevel{lv, pl});
                continue;
            }
        }
        diff.missing_in_partner.push_back(lv);
    }
    return diff;
}

void write_matrix_dump(std::ostream& os, const HierarchyParams& p, std::size_t dim, const Eigen::MatrixXcd& m) {
    os << "# jcsusy-matrix rows=" << m.rows() << " cols=" << m.cols() << " dim=" << dim
       << " delta=" << format_double(p.delta()) << " lambda=" << format_double(p.lambda()) << " k=" << p.k() << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                os << ' ';
            }
            os << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
        }
        os << '\n';
    }
}

Eigen::MatrixXcd read_matrix_dump(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# jcsusy-matrix", 0) != 0) {
        throw RangeError("read_matrix_dump: missing header line");
    }
    long rows = -1;
    long cols = -1;
    std::istringstream hs(header.substr(15));
    std::string field;
    while (hs >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) {
            continue;
        }
        const std::string key = field.substr(0, eq);
        if (key == "rows") {
            rows = std::stol(field.substr(eq + 1));
        } else if (key == "cols") {
            cols = std::stol(field.substr(eq + 1));
        }
    }
    if (rows <= 0 || cols <= 0) {
        throw RangeError("read_matrix_dump: header lacks rows/cols");
    }
    Eigen::MatrixXcd m(rows, cols);
    for (long r = 0; r < rows; ++r) {
        std::string line;
        if (!std::getline(is, line)) {
            throw RangeError("read_matrix_dump: truncated at row " + std::to_string(r));
        }
        std::istringstream ls(line);
        for (long c = 0; c < cols; ++c) {
            std::string entry;
            if (!(ls >> entry)) {
                throw RangeError("read_matrix_dump: short row " + std::to_string(r));
            }
            const auto comma = entry.find(',');
            if (comma == std::string::npos) {
                throw RangeError("read_matrix_dump: entry without 're,im' form");
            }
            m(r, c) = Complex(parse_double(std::string_view(entry).substr(0, comma)),
                              parse_double(std::string_view(entry).substr(comma + 1)));
        }
    }
    return m;
}

}  // namespace jcsusy
