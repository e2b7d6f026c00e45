#include "relaysel/config.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace relaysel {

const char* to_string(RunMode mode) {
    switch (mode) {
        case RunMode::Simulate: return "simulate";
        case RunMode::Analytic: return "analytic";
        case RunMode::Validate: return "validate";
    }
    return "?";
}

const char* to_string(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

std::vector<double> SweepSpec::values_db() const {
    std::vector<double> values;
    const auto count =
        static_cast<std::size_t>(std::floor((stop_db - start_db) / step_db + 1e-9)) + 1;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) values.push_back(start_db + step_db * i);
    return values;
}

std::vector<double> RunConfig::threshold_grid_linear() const {
    std::vector<double> grid;
    grid.reserve(threshold_grid_db.size());
    for (double db : threshold_grid_db) grid.push_back(db_to_linear(db));
    return grid;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

struct RawValue {
    std::string text;
    int line = 0;
};

class KeyMap {
public:
    void insert(const std::string& key, const std::string& value, int line) {
        if (entries_.count(key)) throw ConfigError("duplicate key '" + key + "'", line);
        entries_[key] = RawValue{value, line};
    }

    std::optional<RawValue> take(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        RawValue v = it->second;
        entries_.erase(it);
        return v;
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    void reject_leftovers() const {
        if (entries_.empty()) return;
        // Report the earliest unknown key.
        const auto it = std::min_element(
            entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.second.line < b.second.line; });
        throw ConfigError("unknown key '" + it->first + "'", it->second.line);
    }

    int line_of(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

private:
    std::map<std::string, RawValue> entries_;
};

double parse_double(const RawValue& raw, const std::string& key) {
    const std::string t = trim(raw.text);
    double value = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ConfigError("malformed number for '" + key + "': '" + t + "'", raw.line);
    return value;
}

std::int64_t parse_int(const RawValue& raw, const std::string& key) {
    const std::string t = trim(raw.text);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ConfigError("malformed integer for '" + key + "': '" + t + "'", raw.line);
    return value;
}

std::uint64_t parse_u64(const RawValue& raw, const std::string& key) {
    const std::string t = trim(raw.text);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ConfigError("malformed unsigned integer for '" + key + "': '" + t + "'", raw.line);
    return value;
}

std::vector<double> parse_double_list(const RawValue& raw, const std::string& key) {
    std::vector<double> values;
    std::stringstream ss(raw.text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        values.push_back(parse_double(RawValue{item, raw.line}, key));
    }
    if (values.empty()) throw ConfigError("empty list for '" + key + "'", raw.line);
    return values;
}

// Maps a validate() message like "n_branches must be >= 1" back to the line
// of the config key that set the offending field.
int locate_field(const std::string& message, const KeyMap& keys) {
    const auto space = message.find(' ');
    const std::string field = message.substr(0, space);
    for (const std::string& candidate : {field, field + "_db"}) {
        if (int line = keys.line_of(candidate); line > 0) return line;
    }
    return 0;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    KeyMap keys;
    {
        std::stringstream ss(text);
        std::string line;
        int line_no = 0;
        while (std::getline(ss, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            const std::string stripped = trim(line);
            if (stripped.empty()) continue;
            const auto eq = stripped.find('=');
            if (eq == std::string::npos)
                throw ConfigError("expected 'key = value'", line_no);
            const std::string key = trim(stripped.substr(0, eq));
            const std::string value = trim(stripped.substr(eq + 1));
            if (key.empty()) throw ConfigError("missing key before '='", line_no);
            if (value.empty()) throw ConfigError("missing value for '" + key + "'", line_no);
            keys.insert(key, value, line_no);
        }
    }

    // Keep a copy of the raw map for error-line lookup after consumption.
    const KeyMap raw_keys = keys;

    RunConfig cfg;
    auto require_key = [&](const char* key) -> RawValue {
        auto v = keys.take(key);
        if (!v) throw ConfigError(std::string("missing required key '") + key + "'", 0);
        return *v;
    };

    cfg.params.n_branches = static_cast<int>(parse_int(require_key("n_branches"), "n_branches"));
    cfg.params.n_interferers =
        static_cast<int>(parse_int(require_key("n_interferers"), "n_interferers"));
    cfg.params.m_first = parse_double(require_key("m_first"), "m_first");
    cfg.params.m_second = parse_double(require_key("m_second"), "m_second");
    cfg.params.avg_snr_first =
        db_to_linear(parse_double(require_key("avg_snr_first_db"), "avg_snr_first_db"));
    cfg.params.avg_snr_second =
        db_to_linear(parse_double(require_key("avg_snr_second_db"), "avg_snr_second_db"));

    if (auto v = keys.take("m_interf")) cfg.params.m_interf = parse_double(*v, "m_interf");
    if (auto v = keys.take("avg_inr_db"))
        cfg.params.avg_inr = db_to_linear(parse_double(*v, "avg_inr_db"));
    else if (cfg.params.n_interferers > 0)
        throw ConfigError("missing required key 'avg_inr_db' (n_interferers >= 1)", 0);

    const auto single = keys.take("outage_threshold_db");
    const auto grid = keys.take("threshold_grid_db");
    if (single && grid)
        throw ConfigError("give either 'outage_threshold_db' or 'threshold_grid_db', not both",
                          grid->line);
    if (!single && !grid)
        throw ConfigError("missing required key 'outage_threshold_db' or 'threshold_grid_db'", 0);
    if (single)
        cfg.threshold_grid_db = {parse_double(*single, "outage_threshold_db")};
    else
        cfg.threshold_grid_db = parse_double_list(*grid, "threshold_grid_db");

    if (auto v = keys.take("n_trials")) {
        cfg.n_trials = parse_u64(*v, "n_trials");
        if (cfg.n_trials < 1) throw ConfigError("n_trials must be >= 1", v->line);
    }
    if (auto v = keys.take("master_seed")) cfg.master_seed = parse_u64(*v, "master_seed");
    if (auto v = keys.take("mld_packet_symbols"))
        cfg.params.mld_packet_symbols =
            static_cast<int>(parse_int(*v, "mld_packet_symbols"));

    if (auto v = keys.take("decoding_policy")) {
        const std::string t = trim(v->text);
        if (t == "outage_threshold")
            cfg.params.decoding_policy = DecodingPolicy::OutageThreshold;
        else if (t == "mld_proxy")
            cfg.params.decoding_policy = DecodingPolicy::MldProxy;
        else
            throw ConfigError("decoding_policy must be 'outage_threshold' or 'mld_proxy'",
                              v->line);
    }
    if (auto v = keys.take("mode")) {
        const std::string t = trim(v->text);
        if (t == "simulate") cfg.mode = RunMode::Simulate;
        else if (t == "analytic") cfg.mode = RunMode::Analytic;
        else if (t == "validate") cfg.mode = RunMode::Validate;
        else throw ConfigError("mode must be 'simulate', 'analytic' or 'validate'", v->line);
    }
    if (auto v = keys.take("output_format")) {
        const std::string t = trim(v->text);
        if (t == "csv") cfg.output_format = OutputFormat::Csv;
        else if (t == "json") cfg.output_format = OutputFormat::Json;
        else throw ConfigError("output_format must be 'csv' or 'json'", v->line);
    }
    if (auto v = keys.take("output_path")) cfg.output_path = trim(v->text);

    const bool any_sweep = keys.has("sweep_field") || keys.has("sweep_start_db") ||
                           keys.has("sweep_stop_db") || keys.has("sweep_step_db");
    if (any_sweep) {
        SweepSpec sweep;
        const RawValue field = require_key("sweep_field");
        sweep.field = trim(field.text);
        static const char* kSweepable[] = {"avg_snr_first_db", "avg_snr_second_db",
                                           "avg_inr_db"};
        if (std::find(std::begin(kSweepable), std::end(kSweepable), sweep.field) ==
            std::end(kSweepable))
            throw ConfigError("sweep_field must name a dB parameter "
                              "(avg_snr_first_db, avg_snr_second_db or avg_inr_db)",
                              field.line);
        sweep.start_db = parse_double(require_key("sweep_start_db"), "sweep_start_db");
        sweep.stop_db = parse_double(require_key("sweep_stop_db"), "sweep_stop_db");
        const RawValue step = require_key("sweep_step_db");
        sweep.step_db = parse_double(step, "sweep_step_db");
        if (!(sweep.step_db > 0.0)) throw ConfigError("sweep_step_db must be > 0", step.line);
        if (sweep.stop_db < sweep.start_db)
            throw ConfigError("sweep_stop_db must be >= sweep_start_db", step.line);
        if (sweep.field == "avg_inr_db" && cfg.params.n_interferers == 0)
            throw ConfigError("cannot sweep avg_inr_db with n_interferers = 0", field.line);
        cfg.sweep = sweep;
    }

    keys.reject_leftovers();

    // The engine takes the threshold from the grid; keep the params field
    // coherent with the first grid point.
    cfg.params.outage_threshold = db_to_linear(cfg.threshold_grid_db.front());

    try {
        validate(cfg.params);
    } catch (const std::invalid_argument& err) {
        throw ConfigError(err.what(), locate_field(err.what(), raw_keys));
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

NetworkParams apply_sweep_value(const NetworkParams& base, const std::string& field,
                                double value_db) {
    NetworkParams params = base;
    const double linear = db_to_linear(value_db);
    if (field == "avg_snr_first_db") params.avg_snr_first = linear;
    else if (field == "avg_snr_second_db") params.avg_snr_second = linear;
    else if (field == "avg_inr_db") params.avg_inr = linear;
    else throw std::invalid_argument("unknown sweep field: " + field);
    return params;
}

}  // namespace relaysel
