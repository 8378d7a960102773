#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jcsusy/evolve.hpp"
#include "jcsusy/fock.hpp"
#include "jcsusy/observables.hpp"

namespace jcsusy::app {

enum class Mode {
    InversionFock,
    InversionCoherent,
    Field,
    Quadrature,
    Timescales,
    Spectrum,
    Verify,
    Compare,
};

std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view name);

// Bad or incomplete configuration (exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters that a compare run overrides for its second series.
struct SeriesOverride {
    std::optional<double> delta;
    std::optional<double> lambda;
    std::optional<long> k;
    std::optional<Complex> alpha;
};

struct RunConfig {
    Mode mode = Mode::InversionCoherent;
    Mode series_mode = Mode::InversionCoherent;  // what a compare run evaluates
    double delta = 0.0;
    double lambda = 1.0;
    std::vector<long> ks{0};
    std::optional<Complex> alpha;
    std::optional<long> n;
    std::optional<double> n_bar;
    long n_max = 10;
    FieldOp op = FieldOp::Annihilate;
    TimeGrid grid{0.0, 50.0, 0.01};
    double tail_tol = 1e-12;
    std::string output = "jcsusy_out";
    bool emit_plot = false;
    std::string title;
    SeriesOverride other;  // "b." keys

    // Mode-specific required fields and numeric ranges. Does not check
    // hierarchy admissibility (that is reported separately).
    void validate() const;
};

// Flat key-value grammar, one assignment per line:
//
//   # comment
//   key = value
//
// Reals accept a decimal literal, sqrt(x), pi, pi/x or x*pi. `k` accepts an
// integer, a comma list (0,1,2) or an inclusive range (-9:10). Keys prefixed
// with "b." set the second series of a compare run.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

KeyValues parse_key_values(std::string_view text, std::string_view origin = "config");
KeyValues read_config_file(const std::string& path);

// Applies assignments in order; unknown keys raise ConfigError.
void apply(RunConfig& cfg, const KeyValues& kv);
void apply_one(RunConfig& cfg, std::string_view key, std::string_view value);

double parse_real_expr(std::string_view text);
std::vector<long> parse_k_list(std::string_view text);
Complex parse_alpha_polar(double modulus, double argument);

// Directory holding figNN.cfg presets: $JCSUSY_PRESET_DIR or the build-time default.
std::string preset_dir();
// Accepts a preset name (fig04) or a path to a config file.
std::string resolve_preset(const std::string& name_or_path);
std::vector<std::string> list_presets();

}  // namespace jcsusy::app
