#include "richards/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "richards/errors.hpp"

namespace richards {

void ScenarioConfig::validate() const {
    if (dimension != 1 && dimension != 2) throw config_error("dimension: must be 1 or 2");
    if (!(depth > 0.0)) throw config_error("depth: must be positive");
    if (n_z < 3) throw config_error("n_z: need at least 3 nodes");
    if (dimension == 2) {
        if (!(width > 0.0)) throw config_error("width: must be positive");
        if (n_x < 3) throw config_error("n_x: need at least 3 nodes");
    }
    if (!(dt > 0.0)) throw config_error("dt: must be positive");
    if (!(total_time >= 0.0)) throw config_error("total_time: must be nonnegative");
    if (!(eps > 0.0)) throw config_error("eps: must be positive");
    if (n_s < 2) throw config_error("n_s: stencil size must be at least 2");
    if (!(tol > 0.0)) throw config_error("tol: must be positive");
    if (max_picard < 1) throw config_error("max_picard: must be at least 1");
    if (oracle_n_z < 3) throw config_error("oracle_n_z: need at least 3 nodes");
    if (!(oracle_dt > 0.0)) throw config_error("oracle_dt: must be positive");
    if (!std::is_sorted(output_times.begin(), output_times.end()))
        throw config_error("output_times: must be sorted ascending");
    for (double t : output_times)
        if (t < 0.0 || t > total_time + 1e-12)
            throw config_error("output_times: values must lie in [0, total_time]");
    soil.validate();
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double out;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw config_error(key + ": not a number: " + v);
    }
    if (pos != v.size()) throw config_error(key + ": trailing garbage: " + v);
    return out;
}

int to_int(const std::string& key, const std::string& v) {
    const double d = to_double(key, v);
    const int i = static_cast<int>(std::lround(d));
    if (d != static_cast<double>(i)) throw config_error(key + ": not an integer: " + v);
    return i;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw config_error("config line " + std::to_string(lineno) + ": empty key or value");
        if (!kv.emplace(key, val).second) throw config_error("duplicate key: " + key);
    }

    static const std::vector<std::string> known = {
        "dimension", "depth",   "width", "n_z",     "n_x",        "dt",
        "total_time", "output_times", "soil",  "eps",     "n_s",        "tol",
        "max_picard", "theta_r", "theta_s", "theta_0", "K_s", "h_cap", "lambda", "m",
        "oracle_n_z", "oracle_dt"};
    for (const auto& [key, val] : kv)
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw config_error("unknown config key: " + key);

    ScenarioConfig cfg;
    auto take = [&](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        if (it == kv.end()) {
            cfg.defaulted.push_back(key);
            return nullptr;
        }
        return &it->second;
    };

    if (const auto* v = take("dimension")) cfg.dimension = to_int("dimension", *v);
    if (const auto* v = take("depth")) cfg.depth = to_double("depth", *v);
    if (const auto* v = take("width")) cfg.width = to_double("width", *v);
    if (const auto* v = take("n_z")) cfg.n_z = to_int("n_z", *v);
    if (const auto* v = take("n_x")) cfg.n_x = to_int("n_x", *v);
    if (const auto* v = take("dt")) cfg.dt = to_double("dt", *v);
    if (const auto* v = take("eps")) cfg.eps = to_double("eps", *v);
    if (const auto* v = take("n_s")) cfg.n_s = to_int("n_s", *v);
    if (const auto* v = take("tol")) cfg.tol = to_double("tol", *v);
    if (const auto* v = take("max_picard")) cfg.max_picard = to_int("max_picard", *v);
    if (const auto* v = take("oracle_n_z")) cfg.oracle_n_z = to_int("oracle_n_z", *v);
    if (const auto* v = take("oracle_dt")) cfg.oracle_dt = to_double("oracle_dt", *v);

    auto required = kv.find("total_time");
    if (required == kv.end()) throw config_error("missing required key: total_time");
    cfg.total_time = to_double("total_time", required->second);

    auto soil_it = kv.find("soil");
    if (soil_it == kv.end()) throw config_error("missing required key: soil");
    cfg.soil_name = soil_it->second;
    if (cfg.soil_name == "custom") {
        for (const char* key : {"theta_r", "theta_s", "theta_0", "K_s", "h_cap", "lambda", "m"})
            if (!kv.count(key))
                throw config_error(std::string("custom soil: missing key: ") + key);
        cfg.soil = SoilParams{to_double("theta_r", kv.at("theta_r")),
                              to_double("theta_s", kv.at("theta_s")),
                              to_double("theta_0", kv.at("theta_0")),
                              to_double("K_s", kv.at("K_s")),
                              to_double("h_cap", kv.at("h_cap")),
                              to_double("lambda", kv.at("lambda")),
                              to_double("m", kv.at("m"))};
    } else {
        for (const char* key : {"theta_r", "theta_s", "theta_0", "K_s", "h_cap", "lambda", "m"})
            if (kv.count(key))
                throw config_error(std::string(key) + ": only valid with soil = custom");
        cfg.soil = soil_by_name(cfg.soil_name);
    }

    if (auto it = kv.find("output_times"); it != kv.end()) {
        std::istringstream ts(it->second);
        std::string item;
        while (std::getline(ts, item, ',')) {
            item = trim(item);
            if (!item.empty()) cfg.output_times.push_back(to_double("output_times", item));
        }
    } else {
        cfg.defaulted.push_back("output_times");
        cfg.output_times = {cfg.total_time};
    }

    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace richards
