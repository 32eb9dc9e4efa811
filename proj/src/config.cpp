#include "rkdg/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "rkdg/errors.hpp"

namespace rkdg {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_num(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' has non-numeric value '" + v + "'");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    double x = parse_num(key, v);
    int n = static_cast<int>(x);
    if (static_cast<double>(n) != x)
        throw ConfigError("config key '" + key + "' expects an integer, got '" + v + "'");
    return n;
}

}  // namespace

FileConfig parse_config_text(const std::string& text) {
    FileConfig fc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              " is not key=value: '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "problem") {
            fc.problem = val;
            fc.has_problem = true;
        } else if (key == "p") {
            fc.cfg.p = parse_int(key, val);
            fc.has_p = true;
        } else if (key == "k") {
            fc.cfg.k = parse_int(key, val);
            fc.has_k = true;
        } else if (key == "h") {
            fc.cfg.h = parse_num(key, val);
            fc.has_h = true;
        } else if (key == "mu") {
            fc.cfg.mu = parse_num(key, val);
            fc.has_mu = true;
        } else if (key == "gamma") {
            fc.cfg.gamma = parse_num(key, val);
            fc.has_gamma = true;
        } else if (key == "tau") {
            fc.cfg.tau_fixed = parse_num(key, val);
            fc.has_tau = true;
        } else if (key == "mode") {
            if (val == "fixed")
                fc.cfg.mode = CflMode::fixed;
            else if (val == "auto")
                fc.cfg.mode = CflMode::automatic;
            else
                throw ConfigError("config key 'mode' must be fixed or auto, got '" + val + "'");
            fc.has_mode = true;
        } else if (key == "tfinal") {
            fc.cfg.t_final = parse_num(key, val);
            fc.has_tfinal = true;
        } else if (key == "kappa") {
            fc.cfg.kappa = parse_num(key, val);
            fc.has_kappa = true;
        } else if (key == "ceiling") {
            fc.cfg.m_ceiling = parse_num(key, val);
            fc.has_ceiling = true;
        } else if (key == "snapshots") {
            fc.cfg.snapshots.clear();
            std::istringstream items(val);
            std::string item;
            while (std::getline(items, item, ','))
                fc.cfg.snapshots.push_back(parse_num(key, trim(item)));
            fc.has_snapshots = true;
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return fc;
}

FileConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void apply_file_config(const FileConfig& fc, RunConfig& cfg) {
    if (fc.has_p) cfg.p = fc.cfg.p;
    if (fc.has_k) cfg.k = fc.cfg.k;
    if (fc.has_h) cfg.h = fc.cfg.h;
    if (fc.has_mu) cfg.mu = fc.cfg.mu;
    if (fc.has_gamma) cfg.gamma = fc.cfg.gamma;
    if (fc.has_tau) cfg.tau_fixed = fc.cfg.tau_fixed;
    if (fc.has_mode) cfg.mode = fc.cfg.mode;
    if (fc.has_tfinal) cfg.t_final = fc.cfg.t_final;
    if (fc.has_kappa) cfg.kappa = fc.cfg.kappa;
    if (fc.has_ceiling) cfg.m_ceiling = fc.cfg.m_ceiling;
    if (fc.has_snapshots) cfg.snapshots = fc.cfg.snapshots;
}

}  // namespace rkdg
