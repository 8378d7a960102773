#include "jcsusy/app/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "jcsusy/errors.hpp"
#include "jcsusy/numfmt.hpp"

namespace jcsusy::app {

namespace {

struct ModeEntry {
    Mode mode;
    std::string_view name;
};

constexpr ModeEntry kModes[] = {
    {Mode::InversionFock, "inversion-fock"},
    {Mode::InversionCoherent, "inversion-coherent"},
    {Mode::Field, "field"},
    {Mode::Quadrature, "quadrature"},
    {Mode::Timescales, "timescales"},
    {Mode::Spectrum, "spectrum"},
    {Mode::Verify, "verify"},
    {Mode::Compare, "compare"},
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

long parse_long(std::string_view text) {
    text = trim(text);
    double v = 0.0;
    try {
        v = parse_double(text);
    } catch (const RangeError& e) {
        throw ConfigError(e.what());
    }
    if (v != std::floor(v) || std::abs(v) > 1e15) {
        throw ConfigError("expected an integer, got '" + std::string(text) + "'");
    }
    return static_cast<long>(v);
}

bool parse_bool(std::string_view text) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no" || text == "off") {
        return false;
    }
    throw ConfigError("expected a boolean, got '" + std::string(text) + "'");
}

FieldOp parse_op(std::string_view text) {
    text = trim(text);
    if (text == "a-" || text == "annihilate") {
        return FieldOp::Annihilate;
    }
    if (text == "a+" || text == "create") {
        return FieldOp::Create;
    }
    throw ConfigError("op must be a- or a+, got '" + std::string(text) + "'");
}

void set_alpha_part(std::optional<Complex>& alpha, bool real_part, double value) {
    Complex a = alpha.value_or(Complex(0.0, 0.0));
    if (real_part) {
        a.real(value);
    } else {
        a.imag(value);
    }
    alpha = a;
}

void set_alpha_polar(std::optional<Complex>& alpha, bool modulus, double value) {
    const Complex a = alpha.value_or(Complex(0.0, 0.0));
    double r = std::abs(a);
    double phi = std::arg(a);
    if (modulus) {
        r = value;
    } else {
        phi = value;
    }
    alpha = parse_alpha_polar(r, phi);
}

}  // namespace

std::string_view mode_name(Mode m) {
    for (const auto& e : kModes) {
        if (e.mode == m) {
            return e.name;
        }
    }
    return "unknown";
}

Mode parse_mode(std::string_view name) {
    name = trim(name);
    for (const auto& e : kModes) {
        if (e.name == name) {
            return e.mode;
        }
    }
    throw ConfigError("unknown mode '" + std::string(name) + "'");
}

Complex parse_alpha_polar(double modulus, double argument) {
    if (modulus < 0.0) {
        throw ConfigError("alpha modulus must be >= 0");
    }
    return std::polar(modulus, argument);
}

double parse_real_expr(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        throw ConfigError("empty numeric value");
    }
    try {
        bool negative = false;
        if (text.front() == '-') {
            negative = true;
            text = trim(text.substr(1));
        }
        double v = 0.0;
        if (text.starts_with("sqrt(") && text.ends_with(")")) {
            const double inside = parse_real_expr(text.substr(5, text.size() - 6));
            if (inside < 0.0) {
                throw ConfigError("sqrt of a negative number");
            }
            v = std::sqrt(inside);
        } else if (text == "pi") {
            v = std::numbers::pi;
        } else if (text.starts_with("pi/")) {
            v = std::numbers::pi / parse_double(text.substr(3));
        } else if (text.ends_with("*pi")) {
            v = parse_double(text.substr(0, text.size() - 3)) * std::numbers::pi;
        } else {
            v = parse_double(text);
        }
        return negative ? -v : v;
    } catch (const RangeError& e) {
        throw ConfigError(e.what());
    }
}

std::vector<long> parse_k_list(std::string_view text) {
    text = trim(text);
    std::vector<long> out;
    const auto colon = text.find(':', 1);
    if (colon != std::string_view::npos) {
        const long lo = parse_long(text.substr(0, colon));
        const long hi = parse_long(text.substr(colon + 1));
        if (hi < lo) {
            throw ConfigError("k range must be ascending");
        }
        if (hi - lo > 10000) {
            throw ConfigError("k range too long");
        }
        for (long k = lo; k <= hi; ++k) {
            out.push_back(k);
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_long(item));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

KeyValues parse_key_values(std::string_view text, std::string_view origin) {
    KeyValues kv;
    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') {
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(origin) + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        const auto key = trim(s.substr(0, eq));
        std::string_view value = s.substr(eq + 1);
        // A '#' after whitespace opens a trailing comment.
        for (std::size_t i = 1; i < value.size(); ++i) {
            if (value[i] == '#' && std::isspace(static_cast<unsigned char>(value[i - 1]))) {
                value = value.substr(0, i);
                break;
            }
        }
        value = trim(value);
        if (key.empty()) {
            throw ConfigError(std::string(origin) + ":" + std::to_string(lineno) + ": empty key");
        }
        kv.emplace_back(std::string(key), std::string(value));
    }
    return kv;
}

KeyValues read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_key_values(buf.str(), path);
}

void apply_one(RunConfig& cfg, std::string_view key, std::string_view value) {
    if (key.starts_with("b.")) {
        const auto sub = key.substr(2);
        if (sub == "delta") {
            cfg.other.delta = parse_real_expr(value);
        } else if (sub == "lambda") {
            cfg.other.lambda = parse_real_expr(value);
        } else if (sub == "k") {
            cfg.other.k = parse_long(value);
        } else if (sub == "alpha_re") {
            set_alpha_part(cfg.other.alpha, true, parse_real_expr(value));
        } else if (sub == "alpha_im") {
            set_alpha_part(cfg.other.alpha, false, parse_real_expr(value));
        } else {
            throw ConfigError("unknown compare key '" + std::string(key) + "'");
        }
        return;
    }
    if (key == "mode") {
        cfg.mode = parse_mode(value);
    } else if (key == "series") {
        cfg.series_mode = parse_mode(value);
    } else if (key == "delta") {
        cfg.delta = parse_real_expr(value);
    } else if (key == "lambda") {
        cfg.lambda = parse_real_expr(value);
    } else if (key == "k") {
        cfg.ks = parse_k_list(value);
    } else if (key == "alpha_re") {
        set_alpha_part(cfg.alpha, true, parse_real_expr(value));
    } else if (key == "alpha_im") {
        set_alpha_part(cfg.alpha, false, parse_real_expr(value));
    } else if (key == "alpha_abs") {
        set_alpha_polar(cfg.alpha, true, parse_real_expr(value));
    } else if (key == "alpha_arg") {
        set_alpha_polar(cfg.alpha, false, parse_real_expr(value));
    } else if (key == "n") {
        cfg.n = parse_long(value);
    } else if (key == "n_bar") {
        cfg.n_bar = parse_real_expr(value);
    } else if (key == "n_max") {
        cfg.n_max = parse_long(value);
    } else if (key == "op") {
        cfg.op = parse_op(value);
    } else if (key == "t_start") {
        cfg.grid.t_start = parse_real_expr(value);
    } else if (key == "t_end") {
        cfg.grid.t_end = parse_real_expr(value);
    } else if (key == "t_step") {
        cfg.grid.step = parse_real_expr(value);
    } else if (key == "tail_tol") {
        cfg.tail_tol = parse_real_expr(value);
    } else if (key == "out") {
        cfg.output = std::string(trim(value));
    } else if (key == "plot") {
        cfg.emit_plot = parse_bool(value);
    } else if (key == "title") {
        cfg.title = std::string(trim(value));
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

void apply(RunConfig& cfg, const KeyValues& kv) {
    for (const auto& [key, value] : kv) {
        apply_one(cfg, key, value);
    }
}

void RunConfig::validate() const {
    if (ks.empty()) {
        throw ConfigError("at least one hierarchy index k is required");
    }
    if (!std::isfinite(delta) || !std::isfinite(lambda)) {
        throw ConfigError("delta and lambda must be finite");
    }
    if (!(lambda > 0.0)) {
        throw ConfigError("lambda must be positive");
    }
    if (!(tail_tol > 0.0 && tail_tol <= 1e-3)) {
        throw ConfigError("tail_tol must lie in (0, 1e-3]");
    }
    if (output.empty()) {
        throw ConfigError("output prefix must not be empty");
    }
    const Mode m = mode == Mode::Compare ? series_mode : mode;
    if (mode == Mode::Compare && (series_mode == Mode::Compare || series_mode == Mode::Verify ||
                                  series_mode == Mode::Timescales || series_mode == Mode::Spectrum)) {
        throw ConfigError("compare supports inversion-fock, inversion-coherent, field and quadrature series");
    }
    const bool needs_grid = m == Mode::InversionFock || m == Mode::InversionCoherent || m == Mode::Field ||
                            m == Mode::Quadrature;
    if (needs_grid) {
        try {
            grid.validate();
        } catch (const RangeError& e) {
            throw ConfigError(e.what());
        }
    }
    if (m == Mode::InversionFock) {
        if (!n) {
            throw ConfigError(std::string(mode_name(m)) + " requires n");
        }
        if (*n < 0) {
            throw ConfigError("n must be >= 0");
        }
    }
    if ((m == Mode::InversionCoherent || m == Mode::Field || m == Mode::Quadrature) && !alpha) {
        throw ConfigError(std::string(mode_name(m)) + " requires alpha");
    }
    if (m == Mode::Timescales && !n_bar && !n && !alpha) {
        throw ConfigError("timescales requires n_bar (or n, or alpha)");
    }
    if (n_bar && (!std::isfinite(*n_bar) || *n_bar < 0.0)) {
        throw ConfigError("n_bar must be finite and >= 0");
    }
    if (m == Mode::Spectrum && n_max < 1) {
        throw ConfigError("n_max must be >= 1");
    }
    if (alpha && std::abs(*alpha) > 30.0) {
        throw ConfigError("|alpha| above 30 is outside the supported truncation range");
    }
}

std::string preset_dir() {
    if (const char* env = std::getenv("JCSUSY_PRESET_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return JCSUSY_PRESET_DIR;
}

std::string resolve_preset(const std::string& name_or_path) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(name_or_path)) {
        return name_or_path;
    }
    const fs::path candidate = fs::path(preset_dir()) / (name_or_path + ".cfg");
    if (fs::is_regular_file(candidate)) {
        return candidate.string();
    }
    throw ConfigError("unknown preset '" + name_or_path + "' (looked in " + preset_dir() + ")");
}

std::vector<std::string> list_presets() {
    namespace fs = std::filesystem;
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(preset_dir(), ec)) {
        if (entry.path().extension() == ".cfg") {
            names.push_back(entry.path().stem().string());
        }
    }
    std::sort(names.begin(), names.end());
    return names;
}

}  // namespace jcsusy::app
