#include "aiisac/config.hpp"

#include "aiisac/errors.hpp"
#include "aiisac/numerics.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace aiisac {

std::string preset_name(Preset preset)
{
    return preset == Preset::tableI_dbm ? "tableI-dbm" : "tableI-normalized";
}

Preset parse_preset(const std::string& name)
{
    if (name == "tableI-dbm") {
        return Preset::tableI_dbm;
    }
    if (name == "tableI-normalized") {
        return Preset::tableI_normalized;
    }
    throw ConfigError("unknown preset '" + name + "' (expected tableI-dbm or tableI-normalized)");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbm_to_watts(double dbm) { return db_to_linear(dbm) * 1e-3; }

std::vector<double> uniform_grid(double lo, double hi, double step)
{
    if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
        throw ConfigError(fmt::format("invalid grid [{}, {}] step {}", lo, hi, step));
    }
    const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (n > 1000000) {
        throw ConfigError("grid has too many points");
    }
    std::vector<double> g;
    for (long long i = 0; i < n; ++i) {
        g.push_back(lo + static_cast<double>(i) * step);
    }
    return g;
}

ScalarScenario RunConfig::scenario() const
{
    return {power, gain_c, gain_s, noise_c, noise_s, prior_var};
}

AllocationProblem RunConfig::allocation_problem() const
{
    AllocationProblem p;
    p.scenario = scenario();
    p.budget = AiBudget(alloc_c_ai);
    p.weight = alloc_weight;
    p.comm_time_fraction = alloc_comm_time_fraction;
    p.mode = alloc_mode;
    p.coupling = alloc_coupling;
    p.time_split = alloc_time_split;
    return p;
}

namespace {

void require(bool ok, const std::string& field, const std::string& what)
{
    if (!ok) {
        throw ConfigError(field + " " + what);
    }
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string mode_name(ObjectiveMode m) { return m == ObjectiveMode::penalty ? "penalty" : "weighted"; }
std::string coupling_name(NoiseCoupling c) { return c == NoiseCoupling::total_power ? "total_power" : "per_task"; }
std::string time_split_name(TimeSplit t) { return t == TimeSplit::fixed_half ? "fixed_half" : "energy"; }

void RunConfig::validate() const
{
    require(positive(power), "power", "must be positive");
    require(positive(noise_c), "noise_c", "must be positive");
    require(positive(noise_s), "noise_s", "must be positive");
    require(std::isfinite(gain_c) && gain_c > 0.0, "gain_c", "must be positive");
    require(std::isfinite(gain_s) && gain_s > 0.0, "gain_s", "must be positive");
    require(positive(prior_var), "prior_var", "must be positive");
    require(quadrature_order >= 1 && quadrature_order <= kMaxQuadratureOrder, "quadrature_order",
            "must be in [1, 128]");
    require(sweep_c_min >= 0.0, "gaussian-sweep.c_min", "must be non-negative");
    require(std::isfinite(rician_k) && rician_k >= 0.0, "gaussian-sweep.rician_k_db", "must be finite");
    require(!frontier_budgets.empty(), "frontier.budgets", "must not be empty");
    for (double b : frontier_budgets) {
        require(b >= 0.0, "frontier.budgets", "entries must be non-negative");
    }
    require(frontier_points >= 2, "frontier.points", "must be at least 2");
    require(mimo_n_t >= 1 && mimo_n_t <= 64, "mimo-surface.n_t", "must be in [1, 64]");
    require(mimo_n_r >= 1 && mimo_n_r <= 64, "mimo-surface.n_r", "must be in [1, 64]");
    require(positive(mimo_noise), "mimo-surface.noise", "must be positive");
    require(mimo_c_min >= 0.0, "mimo-surface.c_min", "must be non-negative");
    require(alloc_weight >= 0.0 && alloc_weight <= 1.0, "allocate.weight", "must be in [0, 1]");
    require(alloc_alpha0 >= 0.0 && alloc_alpha0 <= 1.0, "allocate.alpha0", "must be in [0, 1]");
    require(alloc_c_ai >= 0.0, "allocate.c_ai", "must be non-negative");
    require(alloc_max_iter >= 1, "allocate.max_iter", "must be at least 1");
    require(positive(alloc_tol), "allocate.tol", "must be positive");
    require(alloc_comm_time_fraction >= 0.0 && alloc_comm_time_fraction <= 1.0, "allocate.comm_time_fraction",
            "must be in [0, 1]");
    require(verify_alpha >= 0.0 && verify_alpha <= 1.0, "verify.alpha", "must be in [0, 1]");
    require(verify_mc_samples >= 1, "verify.mc_samples", "must be at least 1");
    (void)uniform_grid(sweep_c_min, sweep_c_max, sweep_c_step);
    (void)uniform_grid(mimo_c_min, mimo_c_max, mimo_c_step);
    (void)uniform_grid(mimo_snr_min_db, mimo_snr_max_db, mimo_snr_step_db);
}

std::string RunConfig::describe() const
{
    return fmt::format(
        "preset={} power={} noise_c={} noise_s={} gain_c={} gain_s={} prior_var={} quadrature_order={} seed={} "
        "carrier_ghz={} blocklength={}",
        preset_name(preset), power, noise_c, noise_s, gain_c, gain_s, prior_var, quadrature_order, seed,
        carrier_ghz, blocklength);
}

void apply_preset(RunConfig& cfg, Preset preset)
{
    cfg.preset = preset;
    cfg.noise_c = 0.1;
    cfg.noise_s = 0.1;
    cfg.power = preset == Preset::tableI_dbm ? dbm_to_watts(10.0) : 10.0;
}

namespace {

struct Entry {
    std::string section;
    std::string key;
    std::string value;
    int line;
};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v)
{
    if (v == "inf" || v == "+inf") {
        return std::numeric_limits<double>::infinity();
    }
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || ptr != end || std::isnan(out)) {
        throw ConfigError("expected a number, got '" + v + "'");
    }
    return out;
}

long long to_integer(const std::string& v)
{
    long long out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("expected an integer, got '" + v + "'");
    }
    return out;
}

std::uint64_t to_unsigned(const std::string& v)
{
    std::uint64_t out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("expected a non-negative integer, got '" + v + "'");
    }
    return out;
}

int to_int(const std::string& v)
{
    const long long x = to_integer(v);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw ConfigError("integer out of range: '" + v + "'");
    }
    return static_cast<int>(x);
}

std::vector<double> to_list(const std::string& v)
{
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(to_double(trim(item)));
    }
    return out;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters()
{
    static const std::map<std::string, Setter> table = {
        {"scenario.power", [](RunConfig& c, const std::string& v) { c.power = to_double(v); }},
        {"scenario.power_dbm", [](RunConfig& c, const std::string& v) { c.power = dbm_to_watts(to_double(v)); }},
        {"scenario.noise_c", [](RunConfig& c, const std::string& v) { c.noise_c = to_double(v); }},
        {"scenario.noise_s", [](RunConfig& c, const std::string& v) { c.noise_s = to_double(v); }},
        {"scenario.gain_c", [](RunConfig& c, const std::string& v) { c.gain_c = to_double(v); }},
        {"scenario.gain_s", [](RunConfig& c, const std::string& v) { c.gain_s = to_double(v); }},
        {"scenario.prior_var", [](RunConfig& c, const std::string& v) { c.prior_var = to_double(v); }},
        {"scenario.carrier_ghz", [](RunConfig& c, const std::string& v) { c.carrier_ghz = to_double(v); }},
        {"scenario.blocklength", [](RunConfig& c, const std::string& v) { c.blocklength = to_integer(v); }},
        {"scenario.quadrature_order", [](RunConfig& c, const std::string& v) { c.quadrature_order = to_int(v); }},
        {"scenario.seed", [](RunConfig& c, const std::string& v) { c.seed = to_unsigned(v); }},
        {"gaussian-sweep.c_min", [](RunConfig& c, const std::string& v) { c.sweep_c_min = to_double(v); }},
        {"gaussian-sweep.c_max", [](RunConfig& c, const std::string& v) { c.sweep_c_max = to_double(v); }},
        {"gaussian-sweep.c_step", [](RunConfig& c, const std::string& v) { c.sweep_c_step = to_double(v); }},
        {"gaussian-sweep.rician_k_db",
         [](RunConfig& c, const std::string& v) { c.rician_k = db_to_linear(to_double(v)); }},
        {"frontier.budgets", [](RunConfig& c, const std::string& v) { c.frontier_budgets = to_list(v); }},
        {"frontier.points", [](RunConfig& c, const std::string& v) { c.frontier_points = to_int(v); }},
        {"mimo-surface.n_t", [](RunConfig& c, const std::string& v) { c.mimo_n_t = to_int(v); }},
        {"mimo-surface.n_r", [](RunConfig& c, const std::string& v) { c.mimo_n_r = to_int(v); }},
        {"mimo-surface.noise", [](RunConfig& c, const std::string& v) { c.mimo_noise = to_double(v); }},
        {"mimo-surface.c_min", [](RunConfig& c, const std::string& v) { c.mimo_c_min = to_double(v); }},
        {"mimo-surface.c_max", [](RunConfig& c, const std::string& v) { c.mimo_c_max = to_double(v); }},
        {"mimo-surface.c_step", [](RunConfig& c, const std::string& v) { c.mimo_c_step = to_double(v); }},
        {"mimo-surface.snr_min_db", [](RunConfig& c, const std::string& v) { c.mimo_snr_min_db = to_double(v); }},
        {"mimo-surface.snr_max_db", [](RunConfig& c, const std::string& v) { c.mimo_snr_max_db = to_double(v); }},
        {"mimo-surface.snr_step_db", [](RunConfig& c, const std::string& v) { c.mimo_snr_step_db = to_double(v); }},
        {"allocate.weight", [](RunConfig& c, const std::string& v) { c.alloc_weight = to_double(v); }},
        {"allocate.alpha0", [](RunConfig& c, const std::string& v) { c.alloc_alpha0 = to_double(v); }},
        {"allocate.c_ai", [](RunConfig& c, const std::string& v) { c.alloc_c_ai = to_double(v); }},
        {"allocate.max_iter", [](RunConfig& c, const std::string& v) { c.alloc_max_iter = to_int(v); }},
        {"allocate.tol", [](RunConfig& c, const std::string& v) { c.alloc_tol = to_double(v); }},
        {"allocate.mode",
         [](RunConfig& c, const std::string& v) {
             if (v == "penalty") {
                 c.alloc_mode = ObjectiveMode::penalty;
             } else if (v == "weighted") {
                 c.alloc_mode = ObjectiveMode::weighted;
             } else {
                 throw ConfigError("expected penalty or weighted, got '" + v + "'");
             }
         }},
        {"allocate.coupling",
         [](RunConfig& c, const std::string& v) {
             if (v == "total_power") {
                 c.alloc_coupling = NoiseCoupling::total_power;
             } else if (v == "per_task") {
                 c.alloc_coupling = NoiseCoupling::per_task;
             } else {
                 throw ConfigError("expected total_power or per_task, got '" + v + "'");
             }
         }},
        {"allocate.time_split",
         [](RunConfig& c, const std::string& v) {
             if (v == "fixed_half") {
                 c.alloc_time_split = TimeSplit::fixed_half;
             } else if (v == "energy") {
                 c.alloc_time_split = TimeSplit::energy;
             } else {
                 throw ConfigError("expected fixed_half or energy, got '" + v + "'");
             }
         }},
        {"allocate.comm_time_fraction",
         [](RunConfig& c, const std::string& v) { c.alloc_comm_time_fraction = to_double(v); }},
        {"verify.alpha", [](RunConfig& c, const std::string& v) { c.verify_alpha = to_double(v); }},
        {"verify.mc_samples", [](RunConfig& c, const std::string& v) { c.verify_mc_samples = to_unsigned(v); }},
    };
    return table;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin, const ConfigOverrides& overrides)
{
    std::vector<Entry> entries;
    std::optional<Entry> preset_entry;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    const auto fail = [&](int line, const std::string& msg) {
        throw ConfigError(fmt::format("{}:{}: {}", origin, line, msg));
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find_first_of("#;");
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                fail(line_no, "malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "gaussian-sweep" && section != "frontier" &&
                section != "mimo-surface" && section != "allocate" && section != "verify") {
                fail(line_no, "unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(line_no, "expected 'key = value'");
        }
        if (section.empty()) {
            fail(line_no, "key outside of any section");
        }
        Entry e{section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
        if (e.value.empty()) {
            fail(line_no, "missing value for '" + e.key + "'");
        }
        if (section == "scenario" && e.key == "preset") {
            preset_entry = e;
            continue;
        }
        if (setters().find(section + "." + e.key) == setters().end()) {
            fail(line_no, "unknown key '" + e.key + "' in [" + section + "]");
        }
        entries.push_back(e);
    }

    RunConfig cfg;
    Preset preset = Preset::tableI_dbm;
    if (overrides.preset) {
        preset = *overrides.preset;
    } else if (preset_entry) {
        try {
            preset = parse_preset(preset_entry->value);
        } catch (const ConfigError& err) {
            fail(preset_entry->line, err.what());
        }
    }
    apply_preset(cfg, preset);
    for (const auto& e : entries) {
        try {
            setters().at(e.section + "." + e.key)(cfg, e.value);
        } catch (const ConfigError& err) {
            fail(e.line, e.key + ": " + err.what());
        }
    }
    if (overrides.seed) {
        cfg.seed = *overrides.seed;
    }
    if (overrides.quadrature_order) {
        cfg.quadrature_order = *overrides.quadrature_order;
    }
    try {
        cfg.validate();
    } catch (const ConfigError& err) {
        throw ConfigError(origin + ": " + err.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path, const ConfigOverrides& overrides)
{
    if (path.empty()) {
        return parse_config("", "defaults", overrides);
    }
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream text;
    text << file.rdbuf();
    return parse_config(text.str(), path, overrides);
}

}  // namespace aiisac
