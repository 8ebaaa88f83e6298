#include "gchn/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gchn {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

// nlohmann reports a byte offset; turn it into line/column for the message.
std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

void reject_unknown(const json& obj, const std::string& scope,
                    std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail("config: " + scope + " must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) fail("config: unknown key \"" + key + "\" in " + scope);
    }
}

double num(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(std::string("config: ") + key + " must be a number");
    return v.get<double>();
}

int integer(const json& obj, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(std::string("config: ") + key + " must be an integer");
    return v.get<int>();
}

} // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        fail(origin + ": malformed JSON at line " + std::to_string(line) + ", column " +
             std::to_string(col) + ": " + e.what());
    }

    RunConfig cfg;
    reject_unknown(doc, "top level",
                   {"grid", "model", "besov", "witness", "sweep", "expansion",
                    "conserve", "tolerances", "output_dir", "seed"});

    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        reject_unknown(g, "grid", {"n", "m"});
        cfg.grid.n = integer(g, "n", cfg.grid.n);
        cfg.grid.m = integer(g, "m", cfg.grid.m);
    }
    if (doc.contains("model")) {
        const json& m = doc["model"];
        reject_unknown(m, "model", {"k", "variant"});
        cfg.model.k = integer(m, "k", cfg.model.k);
        if (m.contains("variant")) {
            const std::string v = m["variant"].get<std::string>();
            if (v == "gchn")
                cfg.model.variant = Variant::GCHN;
            else if (v == "dp")
                cfg.model.variant = Variant::DP;
            else
                fail("config: variant must be \"gchn\" or \"dp\"");
        }
    }
    if (doc.contains("besov")) {
        const json& b = doc["besov"];
        reject_unknown(b, "besov", {"s", "p"});
        cfg.besov.s = num(b, "s", cfg.besov.s);
        if (b.contains("p")) {
            const json& p = b["p"];
            if (p.is_string() && (p == "inf" || p == "infinity"))
                cfg.besov.p = std::numeric_limits<double>::infinity();
            else if (p.is_number())
                cfg.besov.p = p.get<double>();
            else
                fail("config: p must be a number or \"inf\"");
        }
    }
    if (doc.contains("witness")) {
        const json& w = doc["witness"];
        reject_unknown(w, "witness", {"n_min", "n_max", "headroom"});
        cfg.witness.n_min = integer(w, "n_min", cfg.witness.n_min);
        cfg.witness.n_max = integer(w, "n_max", cfg.witness.n_max);
        cfg.witness.headroom = integer(w, "headroom", cfg.witness.headroom);
    }
    if (doc.contains("sweep")) {
        const json& s = doc["sweep"];
        reject_unknown(s, "sweep", {"epsilon", "steps_per_horizon"});
        cfg.sweep.epsilon = num(s, "epsilon", cfg.sweep.epsilon);
        cfg.sweep.steps_per_horizon =
            integer(s, "steps_per_horizon", cfg.sweep.steps_per_horizon);
    }
    if (doc.contains("expansion")) {
        const json& e = doc["expansion"];
        reject_unknown(e, "expansion", {"t_min", "t_max", "points"});
        cfg.expansion.t_min = num(e, "t_min", cfg.expansion.t_min);
        cfg.expansion.t_max = num(e, "t_max", cfg.expansion.t_max);
        cfg.expansion.points = integer(e, "points", cfg.expansion.points);
    }
    if (doc.contains("conserve")) {
        const json& c = doc["conserve"];
        reject_unknown(c, "conserve", {"n", "m", "amplitude", "horizon", "base_steps"});
        cfg.conserve.n = integer(c, "n", cfg.conserve.n);
        cfg.conserve.m = integer(c, "m", cfg.conserve.m);
        cfg.conserve.amplitude = num(c, "amplitude", cfg.conserve.amplitude);
        cfg.conserve.horizon = num(c, "horizon", cfg.conserve.horizon);
        cfg.conserve.base_steps = integer(c, "base_steps", cfg.conserve.base_steps);
    }
    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        reject_unknown(t, "tolerances",
                       {"partition_dev", "block_err_rel", "bump_tail_rel",
                        "besov_variation", "lbq_min_ratio", "comm_max_over_median",
                        "pq_variation", "d1_slope_lo", "d1_slope_hi", "d2_slope_lo",
                        "d2_slope_hi", "control_slope_lo", "control_slope_hi",
                        "dt_refine_rel", "ds_floor_ratio", "ds1_slope_lo",
                        "ds1_slope_hi", "h1_drift", "drift_ratio", "drift_ratio_rel"});
        Tolerances& tl = cfg.tolerances;
        tl.partition_dev = num(t, "partition_dev", tl.partition_dev);
        tl.block_err_rel = num(t, "block_err_rel", tl.block_err_rel);
        tl.bump_tail_rel = num(t, "bump_tail_rel", tl.bump_tail_rel);
        tl.besov_variation = num(t, "besov_variation", tl.besov_variation);
        tl.lbq_min_ratio = num(t, "lbq_min_ratio", tl.lbq_min_ratio);
        tl.comm_max_over_median = num(t, "comm_max_over_median", tl.comm_max_over_median);
        tl.pq_variation = num(t, "pq_variation", tl.pq_variation);
        tl.d1_slope_lo = num(t, "d1_slope_lo", tl.d1_slope_lo);
        tl.d1_slope_hi = num(t, "d1_slope_hi", tl.d1_slope_hi);
        tl.d2_slope_lo = num(t, "d2_slope_lo", tl.d2_slope_lo);
        tl.d2_slope_hi = num(t, "d2_slope_hi", tl.d2_slope_hi);
        tl.control_slope_lo = num(t, "control_slope_lo", tl.control_slope_lo);
        tl.control_slope_hi = num(t, "control_slope_hi", tl.control_slope_hi);
        tl.dt_refine_rel = num(t, "dt_refine_rel", tl.dt_refine_rel);
        tl.ds_floor_ratio = num(t, "ds_floor_ratio", tl.ds_floor_ratio);
        tl.ds1_slope_lo = num(t, "ds1_slope_lo", tl.ds1_slope_lo);
        tl.ds1_slope_hi = num(t, "ds1_slope_hi", tl.ds1_slope_hi);
        tl.h1_drift = num(t, "h1_drift", tl.h1_drift);
        tl.drift_ratio = num(t, "drift_ratio", tl.drift_ratio);
        tl.drift_ratio_rel = num(t, "drift_ratio_rel", tl.drift_ratio_rel);
    }
    if (doc.contains("output_dir")) cfg.output_dir = doc["output_dir"].get<std::string>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<unsigned>();

    validate(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

void validate(const RunConfig& cfg) {
    const double s = cfg.besov.s, p = cfg.besov.p;
    if (!(p >= 1.0)) fail("config: p must be >= 1");
    if (!(s > std::max(1.5, 1.0 + 1.0 / p)))
        fail("config: need s > max{3/2, 1 + 1/p}; got s = " + std::to_string(s));
    if (cfg.model.k < 1 || cfg.model.k > 8) fail("config: k must be in [1, 8]");
    if (cfg.witness.n_min < 3) fail("config: n_min must be >= 3");
    if (cfg.witness.n_max < cfg.witness.n_min) fail("config: n_max must be >= n_min");
    if (cfg.witness.headroom < 2) fail("config: headroom must be >= 2");
    if (!(cfg.sweep.epsilon > 0.0 && cfg.sweep.epsilon <= 0.1))
        fail("config: epsilon must lie in (0, 0.1]");
    if (cfg.sweep.steps_per_horizon < 1) fail("config: steps_per_horizon must be >= 1");
    if (!(cfg.expansion.t_min > 0.0 && cfg.expansion.t_max > cfg.expansion.t_min))
        fail("config: need 0 < t_min < t_max");
    if (cfg.expansion.points < 2) fail("config: expansion needs >= 2 ladder points");
    if (cfg.conserve.base_steps < 1) fail("config: base_steps must be >= 1");
    if (!(cfg.conserve.amplitude > 0.0) || !(cfg.conserve.horizon > 0.0))
        fail("config: conserve amplitude and horizon must be positive");
    // Grid shape itself (power of two, etc.) is checked by Grid::make.
}

} // namespace gchn
