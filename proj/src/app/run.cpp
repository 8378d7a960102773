#include "jcsusy/app/run.hpp"

#include <cmath>
#include <sstream>

#include "jcsusy/app/csv.hpp"
#include "jcsusy/app/plot.hpp"
#include "jcsusy/app/verify.hpp"
#include "jcsusy/errors.hpp"
#include "jcsusy/numfmt.hpp"
#include "jcsusy/observables.hpp"
#include "jcsusy/timescales.hpp"

namespace jcsusy::app {

namespace {

// Physical runs keep this many empty indices below the truncation boundary.
constexpr long kPhysicalSupportMargin = 5;

struct Column {
    std::string name;
    std::vector<double> values;
};

struct SeriesData {
    std::vector<double> t;
    std::vector<Column> columns;
};

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += (c == '\n') ? ' ' : c;
    }
    return out + "\"";
}

void fail(RunResult& res, int code, const std::string& kind, const std::string& message,
          std::optional<long> min_k = std::nullopt) {
    res.exit_code = code;
    std::ostringstream os;
    os << "error kind=" << kind;
    if (min_k) {
        os << " min_k=" << *min_k;
    }
    os << " message=" << quote(message);
    res.error_line = os.str();
}

std::vector<HierarchyParams> params_for(double delta, double lambda, const std::vector<long>& ks) {
    std::vector<HierarchyParams> out;
    out.reserve(ks.size());
    for (long k : ks) {
        out.emplace_back(delta, lambda, k);
    }
    return out;
}

CoherentSpec spec_of(const RunConfig& cfg) { return CoherentSpec{cfg.alpha.value_or(Complex{}), cfg.tail_tol}; }

void require_physical_support(const HierarchyParams& p, const CoherentSpec& spec, double t) {
    const std::size_t dim = choose_dim(spec.alpha, DimMargin::Evolution);
    const SpinorState s = evolve_coherent_closed(p, spec, t, dim);
    if (s.support_margin() < kPhysicalSupportMargin) {
        throw TruncationError("coherent state support reaches within " + std::to_string(kPhysicalSupportMargin) +
                                  " indices of the truncation boundary (dim=" + std::to_string(dim) + ")",
                              dim + kPhysicalSupportMargin);
    }
}

SeriesData evaluate(Mode mode, const HierarchyParams& p, const RunConfig& cfg) {
    SeriesData out;
    out.t = cfg.grid.times();
    switch (mode) {
        case Mode::InversionFock: {
            out.columns.push_back({"value", inversion_fock_closed(p, *cfg.n, cfg.grid).values});
            break;
        }
        case Mode::InversionCoherent: {
            out.columns.push_back({"value", inversion_coherent(p, spec_of(cfg), cfg.grid).values});
            break;
        }
        case Mode::Field:
        case Mode::Quadrature: {
            const CoherentSpec spec = spec_of(cfg);
            require_physical_support(p, spec, cfg.grid.t_start);
            const FieldOp op = mode == Mode::Field ? cfg.op : FieldOp::Annihilate;
            const FieldSeries field = field_coherent(p, spec, cfg.grid, op);
            const FieldSeries free = free_coherent_reference(spec.alpha, cfg.grid);
            const std::size_t n = out.t.size();
            Column re{mode == Mode::Field ? "re" : "x1", std::vector<double>(n)};
            Column im{mode == Mode::Field ? "im" : "x2", std::vector<double>(n)};
            Column ab{"abs", std::vector<double>(n)};
            Column fre{mode == Mode::Field ? "free_re" : "free_x1", std::vector<double>(n)};
            Column fim{mode == Mode::Field ? "free_im" : "free_x2", std::vector<double>(n)};
            for (std::size_t j = 0; j < n; ++j) {
                const Complex f = op == FieldOp::Create ? std::conj(free.values[j]) : free.values[j];
                re.values[j] = field.values[j].real();
                im.values[j] = field.values[j].imag();
                ab.values[j] = std::abs(field.values[j]);
                fre.values[j] = f.real();
                fim.values[j] = f.imag();
            }
            out.columns.push_back(std::move(re));
            out.columns.push_back(std::move(im));
            if (mode == Mode::Field) {
                out.columns.push_back(std::move(ab));
            }
            out.columns.push_back(std::move(fre));
            out.columns.push_back(std::move(fim));
            break;
        }
        default:
            throw std::logic_error("evaluate: not a time-series mode");
    }
    return out;
}

CsvTable to_table(const SeriesData& data) {
    std::vector<std::string> header{"t"};
    for (const auto& c : data.columns) {
        header.push_back(c.name);
    }
    CsvTable table(std::move(header));
    for (std::size_t j = 0; j < data.t.size(); ++j) {
        std::vector<std::string> row{cell(data.t[j])};
        for (const auto& c : data.columns) {
            row.push_back(cell(c.values[j]));
        }
        table.add_row(std::move(row));
    }
    return table;
}

std::string series_label(const HierarchyParams& p) {
    std::ostringstream os;
    os << "delta=" << format_double(p.delta()) << " lambda=" << format_double(p.lambda()) << " k=" << p.k();
    return os.str();
}

std::string y_label(Mode m, FieldOp op) {
    switch (m) {
        case Mode::InversionFock:
        case Mode::InversionCoherent: return "W(t)";
        case Mode::Field: return op == FieldOp::Create ? "Re <a+>" : "Re <a->";
        case Mode::Quadrature: return "x1";
        default: return "";
    }
}

double n_bar_of(const RunConfig& cfg, Mode m) {
    if (cfg.n_bar) {
        return *cfg.n_bar;
    }
    if (m == Mode::InversionFock && cfg.n) {
        return static_cast<double>(*cfg.n);
    }
    if (cfg.alpha) {
        return std::norm(*cfg.alpha);
    }
    if (cfg.n) {
        return static_cast<double>(*cfg.n);
    }
    return 0.0;
}

void run_series(const RunConfig& cfg, RunResult& res) {
    const auto params = params_for(cfg.delta, cfg.lambda, cfg.ks);
    std::vector<PlotSeries> plots;
    for (const auto& p : params) {
        const SeriesData data = evaluate(cfg.mode, p, cfg);
        const std::string path = cfg.output + "_k" + std::to_string(p.k()) + ".csv";
        to_table(data).write(path);
        res.files.push_back(path);
        plots.push_back(PlotSeries{series_label(p), data.t, data.columns.front().values});
        res.report.push_back(std::string(mode_name(cfg.mode)) + " " + series_label(p) + " -> " + path);
    }
    if (cfg.emit_plot) {
        const std::string path = cfg.output + ".svg";
        write_svg(path, cfg.title.empty() ? std::string(mode_name(cfg.mode)) : cfg.title, "t", y_label(cfg.mode, cfg.op),
                  plots);
        res.files.push_back(path);
    }
}

void run_timescales(const RunConfig& cfg, RunResult& res) {
    const auto params = params_for(cfg.delta, cfg.lambda, cfg.ks);
    const double n_bar = n_bar_of(cfg, Mode::Timescales);
    CsvTable table({"k", "n_bar", "t_c", "t_r", "delta_t_r", "omega1", "omega2", "T_cl", "T_cl_sign", "T_rev"});
    std::vector<double> ks;
    std::vector<double> tc;
    std::vector<double> dtr;
    for (const auto& p : params) {
        const TimescaleReport r = timescale_report(p, n_bar);
        table.add_row({cell(p.k()), cell(n_bar), cell(r.t_c), cell(r.t_r), cell(r.delta_t_r), cell(r.omega.omega1),
                       cell(r.omega.omega2), cell(r.periods.classical),
                       cell(static_cast<long>(r.periods.classical_sign)), cell(r.periods.revival)});
        ks.push_back(static_cast<double>(p.k()));
        tc.push_back(r.t_c);
        dtr.push_back(r.delta_t_r.value_or(std::nan("")));
    }
    const std::string path = cfg.output + ".csv";
    table.write(path);
    res.files.push_back(path);
    if (cfg.emit_plot) {
        const std::string svg = cfg.output + ".svg";
        write_svg(svg, cfg.title.empty() ? "classical time and revival differences" : cfg.title, "k", "time",
                  {PlotSeries{"t_c", ks, tc}, PlotSeries{"delta t_r", ks, dtr}});
        res.files.push_back(svg);
    }
}

void run_spectrum(const RunConfig& cfg, RunResult& res) {
    const auto params = params_for(cfg.delta, cfg.lambda, cfg.ks);
    CsvTable table({"k", "n", "branch", "energy", "status"});
    std::optional<SpectrumDiff> diff;
    if (params.size() >= 2 && params.back().k() > params.front().k()) {
        diff = spectrum_diff(params.front(), params.back(), cfg.n_max);
    }
    auto status_of = [&](const Level& lv) -> std::string {
        if (!diff) {
            return "-";
        }
        for (const auto& m : diff->missing_in_partner) {
            if (m.n == lv.n && m.branch == lv.branch) {
                return "missing";
            }
        }
        return "shared";
    };
    std::vector<PlotSeries> plots;
    for (std::size_t i = 0; i < params.size(); ++i) {
        PlotSeries plus{"k=" + std::to_string(params[i].k()) + " +", {}, {}};
        PlotSeries minus{"k=" + std::to_string(params[i].k()) + " -", {}, {}};
        for (const Level& lv : spectrum_levels(params[i], cfg.n_max)) {
            table.add_row({cell(params[i].k()), cell(lv.n), std::string(1, branch_symbol(lv.branch)),
                           cell(lv.energy), i == 0 ? status_of(lv) : std::string("-")});
            auto& ps = lv.branch == Branch::Plus ? plus : minus;
            ps.x.push_back(static_cast<double>(lv.n));
            ps.y.push_back(lv.energy);
        }
        plots.push_back(std::move(plus));
        plots.push_back(std::move(minus));
    }
    if (diff) {
        res.report.push_back("missing in partner k=" + std::to_string(params.back().k()) + ": " +
                             std::to_string(diff->missing_in_partner.size()) + " levels");
    }
    const std::string path = cfg.output + ".csv";
    table.write(path);
    res.files.push_back(path);
    if (cfg.emit_plot) {
        const std::string svg = cfg.output + ".svg";
        write_svg(svg, cfg.title.empty() ? "spectrum" : cfg.title, "n", "energy", plots);
        res.files.push_back(svg);
    }
}

void run_verify(const RunConfig& cfg, RunResult& res) {
    (void)params_for(cfg.delta, cfg.lambda, cfg.ks);
    bool all = true;
    for (const auto& c : run_verification(cfg.delta, cfg.lambda)) {
        res.report.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail);
        all = all && c.passed;
    }
    if (!all) {
        fail(res, kExitVerification, "verification", "one or more verification checks failed");
    }
}

template <class Body>
RunResult guarded(Body&& body) {
    RunResult res;
    try {
        body(res);
    } catch (const ConfigError& e) {
        fail(res, kExitConfig, "config", e.what());
    } catch (const AdmissibilityError& e) {
        fail(res, kExitAdmissibility, "admissibility", e.what(), e.min_k());
    } catch (const Error& e) {
        fail(res, kExitConfig, "config", e.what());
    } catch (const std::exception& e) {
        fail(res, kExitConfig, "internal", e.what());
    }
    if (res.exit_code != kExitSuccess && res.exit_code != kExitVerification) {
        res.files.clear();
    }
    return res;
}

}  // namespace

RunConfig derive_other(const RunConfig& cfg) {
    RunConfig b = cfg;
    if (cfg.other.delta) {
        b.delta = *cfg.other.delta;
    }
    if (cfg.other.lambda) {
        b.lambda = *cfg.other.lambda;
    }
    if (cfg.other.k) {
        b.ks = {*cfg.other.k};
    }
    if (cfg.other.alpha) {
        b.alpha = cfg.other.alpha;
    }
    b.other = SeriesOverride{};
    return b;
}

RunResult compare(const RunConfig& a, const RunConfig& b) {
    return guarded([&](RunResult& res) {
        a.validate();
        b.validate();
        const Mode ma = a.mode == Mode::Compare ? a.series_mode : a.mode;
        const Mode mb = b.mode == Mode::Compare ? b.series_mode : b.mode;
        if (ma != mb) {
            throw ConfigError("compare: series modes differ (" + std::string(mode_name(ma)) + " vs " +
                              std::string(mode_name(mb)) + ")");
        }
        if (!(a.grid == b.grid)) {
            throw ConfigError("compare: time grids differ");
        }
        if (ma != Mode::InversionFock && ma != Mode::InversionCoherent && ma != Mode::Field &&
            ma != Mode::Quadrature) {
            throw ConfigError("compare: unsupported series mode " + std::string(mode_name(ma)));
        }
        const HierarchyParams pa(a.delta, a.lambda, a.ks.front());
        const HierarchyParams pb(b.delta, b.lambda, b.ks.front());
        const SeriesData da = evaluate(ma, pa, a);
        const SeriesData db = evaluate(ma, pb, b);

        // Real series compare value columns; complex ones the first two columns (re/im or x1/x2).
        const bool scalar = ma == Mode::InversionFock || ma == Mode::InversionCoherent;
        std::vector<std::string> header{"t"};
        if (scalar) {
            header.insert(header.end(), {"a", "b", "diff"});
        } else {
            const std::string c0 = da.columns[0].name;
            const std::string c1 = da.columns[1].name;
            header.insert(header.end(), {"a_" + c0, "a_" + c1, "b_" + c0, "b_" + c1, "diff_abs"});
        }
        CsvTable table(std::move(header));
        std::vector<double> diff(da.t.size());
        for (std::size_t j = 0; j < da.t.size(); ++j) {
            if (scalar) {
                const double va = da.columns[0].values[j];
                const double vb = db.columns[0].values[j];
                diff[j] = va - vb;
                table.add_row({cell(da.t[j]), cell(va), cell(vb), cell(diff[j])});
            } else {
                const Complex za(da.columns[0].values[j], da.columns[1].values[j]);
                const Complex zb(db.columns[0].values[j], db.columns[1].values[j]);
                diff[j] = std::abs(za - zb);
                table.add_row({cell(da.t[j]), cell(za.real()), cell(za.imag()), cell(zb.real()), cell(zb.imag()),
                               cell(diff[j])});
            }
        }
        const std::string path = a.output + ".csv";
        table.write(path);
        res.files.push_back(path);

        CsvTable revivals({"series", "delta", "lambda", "k", "n_bar", "t_c", "t_r"});
        const double nba = n_bar_of(a, ma);
        const double nbb = n_bar_of(b, mb);
        revivals.add_row({"a", cell(pa.delta()), cell(pa.lambda()), cell(pa.k()), cell(nba),
                          cell(classical_time(pa, nba)), cell(revival_time(pa, nba))});
        revivals.add_row({"b", cell(pb.delta()), cell(pb.lambda()), cell(pb.k()), cell(nbb),
                          cell(classical_time(pb, nbb)), cell(revival_time(pb, nbb))});
        const std::string rpath = a.output + "_revivals.csv";
        revivals.write(rpath);
        res.files.push_back(rpath);

        if (a.emit_plot) {
            const std::string svg = a.output + ".svg";
            write_svg(svg, a.title.empty() ? "compare" : a.title, "t", y_label(ma, a.op),
                      {PlotSeries{series_label(pa), da.t, da.columns[0].values},
                       PlotSeries{series_label(pb), db.t, db.columns[0].values}});
            res.files.push_back(svg);
        }
        res.report.push_back("t_r(a)=" + format_double(revival_time(pa, nba)) +
                             " t_r(b)=" + format_double(revival_time(pb, nbb)));
    });
}

RunResult run(const RunConfig& cfg) {
    if (cfg.mode == Mode::Compare) {
        return compare(cfg, derive_other(cfg));
    }
    return guarded([&](RunResult& res) {
        cfg.validate();
        switch (cfg.mode) {
            case Mode::InversionFock:
            case Mode::InversionCoherent:
            case Mode::Field:
            case Mode::Quadrature: run_series(cfg, res); break;
            case Mode::Timescales: run_timescales(cfg, res); break;
            case Mode::Spectrum: run_spectrum(cfg, res); break;
            case Mode::Verify: run_verify(cfg, res); break;
            case Mode::Compare: break;
        }
    });
}

}  // namespace jcsusy::app
