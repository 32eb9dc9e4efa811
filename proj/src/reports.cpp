#include "rkdg/reports.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "rkdg/errors.hpp"

namespace rkdg {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const fs::path& p) {
    std::ofstream out(p, std::ios::binary);  // binary keeps line endings stable
    if (!out) throw ConfigError("cannot write " + p.string());
    return out;
}

// FNV-1a over the canonical config text, so summaries can cite the exact
// configuration that produced them.
std::string config_hash(const std::string& text) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string canonical_config(const RunArtifact& art) {
    const RunConfig& c = art.cfg;
    std::ostringstream os;
    os << "problem=" << art.problem_name << "\np=" << c.p << "\nk=" << c.k
       << "\nh=" << format_double(c.h) << "\nmu=" << format_double(c.mu)
       << "\ngamma=" << format_double(art.gamma_effective)
       << "\ntau=" << format_double(c.tau_fixed)
       << "\nmode=" << (c.mode == CflMode::fixed ? "fixed" : "auto")
       << "\ntfinal=" << format_double(c.t_final)
       << "\nkappa=" << format_double(c.kappa)
       << "\nceiling=" << format_double(c.m_ceiling) << "\n";
    return os.str();
}

void write_spatial_csv(const Snapshot& snap, double h, std::ofstream out) {
    const SpatialIndicator& S = snap.S;
    out << "t,j";
    for (int l = 0; l <= S.p; ++l) out << ",M" << l;
    for (int l = 0; l <= S.p; ++l) out << ",J" << l;
    for (int l = 0; l <= S.p; ++l) out << ",D" << l;
    for (int l = 0; l <= S.p; ++l) out << ",loghJ" << l;
    for (int l = 0; l <= S.p; ++l) out << ",signJ" << l;
    out << "\n";
    double logh = std::log(h);
    for (int j = 0; j < S.m; ++j) {
        out << format_double(snap.t) << "," << j;
        for (int l = 0; l <= S.p; ++l) out << "," << format_double(S.at(S.M, j, l));
        for (int l = 0; l <= S.p; ++l) out << "," << format_double(S.at(S.J, j, l));
        for (int l = 0; l <= S.p; ++l) out << "," << format_double(S.at(S.D, j, l));
        for (int l = 0; l <= S.p; ++l) {
            double J = S.at(S.J, j, l);
            out << "," << format_double(std::log(std::abs(J)) / logh);
        }
        for (int l = 0; l <= S.p; ++l) {
            double J = S.at(S.J, j, l);
            out << "," << (J > 0 ? "1" : J < 0 ? "-1" : "0");
        }
        out << "\n";
    }
}

void write_temporal_csv(const Snapshot& snap, std::ofstream out) {
    const TemporalIndicator& T = snap.T;
    const DGSolution& u = snap.u;
    out << "t,j,node";
    for (size_t l = 1; l <= T.d.size(); ++l) out << ",d" << l;
    out << "\n";
    const Basis& B = *u.basis;
    for (int j = 0; j < u.mesh.m; ++j)
        for (int q = 0; q < B.n_quad(); ++q) {
            double x = u.mesh.from_ref(j, B.qnode(q));
            out << format_double(snap.t) << "," << j << "," << format_double(x);
            for (const auto& field : T.d) {
                double s = 0.0;
                for (int i = 0; i < B.n_modes(); ++i)
                    s += field[u.idx(j, i)] * B.val(q, i);
                out << "," << format_double(s);
            }
            out << "\n";
        }
}

void write_solution_csv(const Snapshot& snap, std::ofstream out) {
    out << "x,u\n";
    const DGSolution& u = snap.u;
    const int per_cell = 5;
    for (int j = 0; j < u.mesh.m; ++j)
        for (int s = 0; s < per_cell; ++s) {
            double xi = -1.0 + 2.0 * s / (per_cell - 1);
            double x = u.mesh.from_ref(j, xi);
            auto v = basis_values(u.degree(), xi, 0);
            double uv = 0.0;
            for (int i = 0; i <= u.degree(); ++i) uv += u.c[u.idx(j, i)] * v[i];
            out << format_double(x) << "," << format_double(uv) << "\n";
        }
}

}  // namespace

std::vector<std::string> emit_reports(const RunArtifact& art, const std::string& out_dir) {
    fs::create_directories(out_dir);
    std::vector<std::string> files;

    for (const auto& snap : art.snapshots) {
        if (snap.S.m == 0) continue;  // blow-up placeholder has no indicators
        std::string label = format_double(snap.t);
        std::string f1 = "indicators_spatial_" + label + ".csv";
        std::string f2 = "indicators_temporal_" + label + ".csv";
        std::string f3 = "solution_" + label + ".csv";
        write_spatial_csv(snap, snap.u.mesh.h, open_out(fs::path(out_dir) / f1));
        write_temporal_csv(snap, open_out(fs::path(out_dir) / f2));
        write_solution_csv(snap, open_out(fs::path(out_dir) / f3));
        files.push_back(f1);
        files.push_back(f2);
        files.push_back(f3);
    }

    {
        auto out = open_out(fs::path(out_dir) / "error_budget.csv");
        out << "n,t,tau,F,G,local_space,local_time,E_global,trusted\n";
        out << "0,0,0,0,0,0,0," << format_double(art.budget.E0) << ",1\n";
        for (const auto& r : art.budget.steps) {
            out << r.n << "," << format_double(r.t) << "," << format_double(r.tau) << ","
                << format_double(r.F) << "," << format_double(r.G) << ","
                << format_double(r.local_space) << "," << format_double(r.local_time)
                << "," << format_double(r.E_global) << "," << (r.trusted ? 1 : 0) << "\n";
        }
        files.push_back("error_budget.csv");
    }

    {
        std::string cfg_text = canonical_config(art);
        json s;
        s["problem"] = art.problem_name;
        s["config"] = {{"p", art.cfg.p},
                       {"k", art.cfg.k},
                       {"h", art.cfg.h},
                       {"mu", art.cfg.mu},
                       {"gamma", art.gamma_effective},
                       {"tau", art.cfg.tau_fixed},
                       {"mode", art.cfg.mode == CflMode::fixed ? "fixed" : "auto"},
                       {"tfinal", art.cfg.t_final},
                       {"kappa", art.cfg.kappa},
                       {"ceiling", art.cfg.m_ceiling}};
        s["config_hash"] = config_hash(cfg_text);
        s["estimator_policy"] = "budget-linear-tau-v1";
        s["steps"] = art.steps;
        s["wall_seconds"] = art.wall_seconds;
        s["completed"] = art.completed;
        s["abort_reason"] = art.abort_reason;
        s["cfl_warnings"] = {{"standard", art.cfl_standard_warned},
                             {"strengthened", art.cfl_strengthened_warned}};
        s["maxima"] = {{"D_tilde", art.max_D_tilde},
                       {"M", art.max_M},
                       {"d", art.max_d}};
        s["E0"] = art.budget.E0;
        s["E_global"] = art.budget.E_global;
        s["all_trusted"] = art.budget.all_trusted;
        s["files"] = files;
        auto out = open_out(fs::path(out_dir) / "summary.json");
        out << s.dump(2) << "\n";
        files.push_back("summary.json");
    }
    return files;
}

std::string report_text(const std::string& out_dir) {
    std::ifstream in(fs::path(out_dir) / "summary.json");
    if (!in) throw ConfigError("no summary.json under " + out_dir);
    json s = json::parse(in);
    std::ostringstream os;
    os << "problem:        " << s.value("problem", "?") << "\n"
       << "completed:      " << (s.value("completed", false) ? "yes" : "no") << "\n"
       << "steps:          " << s.value("steps", 0) << "\n"
       << "wall seconds:   " << s.value("wall_seconds", 0.0) << "\n"
       << "E0:             " << s.value("E0", 0.0) << "\n"
       << "E_global:       " << s.value("E_global", 0.0) << "\n"
       << "all trusted:    " << (s.value("all_trusted", true) ? "yes" : "no") << "\n";
    if (s.contains("maxima"))
        os << "max D_tilde:    " << s["maxima"].value("D_tilde", 0.0) << "\n"
           << "max |M|:        " << s["maxima"].value("M", 0.0) << "\n"
           << "max |d|:        " << s["maxima"].value("d", 0.0) << "\n";
    if (s.contains("cfl_warnings")) {
        bool std_w = s["cfl_warnings"].value("standard", false);
        bool str_w = s["cfl_warnings"].value("strengthened", false);
        os << "cfl warnings:   standard=" << (std_w ? "yes" : "no")
           << " strengthened=" << (str_w ? "yes" : "no") << "\n";
    }
    if (!s.value("abort_reason", std::string()).empty())
        os << "abort reason:   " << s["abort_reason"].get<std::string>() << "\n";
    return os.str();
}

void emit_study(const StudyResult& study, const std::string& out_dir) {
    fs::create_directories(out_dir);
    auto out = open_out(fs::path(out_dir) / "convergence.csv");
    out << "h,l1_error,estimate,effectivity\n";
    for (const auto& r : study.rows)
        out << format_double(r.h) << "," << format_double(r.l1_error) << ","
            << format_double(r.estimate) << "," << format_double(r.effectivity) << "\n";
    out << "# fitted_order," << format_double(study.fitted_order) << "\n";
}

}  // namespace rkdg
