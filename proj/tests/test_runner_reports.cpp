#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "rkdg/config.hpp"
#include "rkdg/errors.hpp"
#include "rkdg/problems.hpp"
#include "rkdg/reports.hpp"
#include "rkdg/runner.hpp"

using namespace rkdg;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE_MESSAGE(bool(in), "missing file ", p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string f;
    while (std::getline(in, f, ',')) out.push_back(f);
    return out;
}

fs::path fresh_dir(const std::string& leaf) {
    fs::path d = fs::temp_directory_path() / "rkdg_report_tests" / leaf;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

bool has_file(const std::vector<std::string>& files, const std::string& name) {
    for (const auto& f : files)
        if (f == name) return true;
    return false;
}

RunArtifact short_example1_run() {
    ProblemSpec ps = example1();
    RunConfig cfg = ps.defaults;
    cfg.t_final = 0.05;
    cfg.snapshots = {0.05};
    return run_simulation(ps, cfg);
}

}  // namespace

TEST_CASE("ten fixed steps of the production problem") {
    RunArtifact art = short_example1_run();

    CHECK(art.completed);
    CHECK(art.abort_reason.empty());
    CHECK(art.steps == 10);
    CHECK(art.problem_name == "example1");
    CHECK(!art.cfl_standard_warned);
    CHECK(!art.cfl_strengthened_warned);
    CHECK(art.gamma_effective ==
          doctest::Approx(0.005 / std::pow(0.05, 4.0 / 3.0)).epsilon(1e-14));

    REQUIRE(art.budget.steps.size() == 10);
    CHECK(art.budget.E0 > 0.0);
    CHECK(art.budget.all_trusted);
    double prev = art.budget.E0;
    for (size_t i = 0; i < art.budget.steps.size(); ++i) {
        const StepRecord& r = art.budget.steps[i];
        CHECK(r.n == static_cast<int>(i) + 1);
        CHECK(r.t == doctest::Approx(0.005 * (i + 1)).epsilon(1e-12));
        CHECK(r.tau == doctest::Approx(0.005).epsilon(1e-12));
        CHECK(r.trusted);
        CHECK(std::isfinite(r.F));
        CHECK(std::isfinite(r.G));
        CHECK(r.F > 0.0);
        CHECK(r.G > 0.0);
        CHECK(r.local_space > 0.0);
        CHECK(r.local_time > 0.0);
        CHECK(r.E_global >= prev);
        prev = r.E_global;
    }
    CHECK(art.budget.E_global == prev);
    CHECK(art.budget.E_global > art.budget.E0);

    REQUIRE(art.snapshots.size() == 1);
    const Snapshot& snap = art.snapshots.front();
    CHECK(snap.t == 0.05);
    CHECK(snap.u.t == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(snap.S.m == 200);
    CHECK(snap.S.p == 3);
    CHECK(snap.T.k == 3);

    CHECK(art.max_D_tilde > 0.0);
    CHECK(std::isfinite(art.max_D_tilde));
    CHECK(art.max_M > 0.0);
    CHECK(art.max_d > 0.0);
}

TEST_CASE("an oversized step blows up into the artifact, not an exception") {
    ProblemSpec ps = example1();
    RunConfig cfg = ps.defaults;
    cfg.tau_fixed = 0.5;
    cfg.t_final = 2.0;
    cfg.snapshots = {2.0};

    RunArtifact art = run_simulation(ps, cfg);
    CHECK(!art.completed);
    CHECK(!art.abort_reason.empty());
    CHECK(art.steps < 6);
    CHECK(art.cfl_standard_warned);
    CHECK(!art.budget.steps.empty());
    REQUIRE(!art.snapshots.empty());
    CHECK(art.snapshots.back().S.m == 0);  // placeholder carries no indicators

    fs::path dir = fresh_dir("blowup");
    auto files = emit_reports(art, dir.string());
    CHECK(files.size() == 2);
    CHECK(has_file(files, "error_budget.csv"));
    CHECK(has_file(files, "summary.json"));

    std::string txt = report_text(dir.string());
    CHECK(txt.find("completed:      no") != std::string::npos);
    CHECK(txt.find("abort reason:") != std::string::npos);
}

TEST_CASE("report files carry the advertised shapes") {
    RunArtifact art = short_example1_run();
    fs::path dir = fresh_dir("shapes");
    auto files = emit_reports(art, dir.string());

    CHECK(has_file(files, "indicators_spatial_0.05.csv"));
    CHECK(has_file(files, "indicators_temporal_0.05.csv"));
    CHECK(has_file(files, "solution_0.05.csv"));
    CHECK(has_file(files, "error_budget.csv"));
    CHECK(has_file(files, "summary.json"));

    // spatial: header + one row per cell, 2 + 5(p+1) columns
    auto sp = lines_of(slurp(dir / "indicators_spatial_0.05.csv"));
    REQUIRE(sp.size() == 201);
    auto head = fields_of(sp[0]);
    REQUIRE(head.size() == 22);
    CHECK(head[0] == "t");
    CHECK(head[1] == "j");
    CHECK(head[2] == "M0");
    CHECK(head[6] == "J0");
    CHECK(head[10] == "D0");
    CHECK(head[14] == "loghJ0");
    CHECK(head[18] == "signJ0");
    bool checked_logh = false;
    for (size_t r = 1; r < sp.size(); ++r) {
        auto f = fields_of(sp[r]);
        REQUIRE(f.size() == 22);
        CHECK(std::stod(f[0]) == 0.05);
        CHECK(std::stoi(f[1]) == static_cast<int>(r) - 1);
        for (int l = 0; l < 4; ++l) {
            double J = std::stod(f[6 + l]);
            std::string sign = f[18 + l];
            CHECK((sign == "1" || sign == "-1" || sign == "0"));
            if (J > 0) CHECK(sign == "1");
            if (J < 0) CHECK(sign == "-1");
            if (J == 0) CHECK(sign == "0");
            if (J != 0 && !checked_logh) {
                double logh = std::stod(f[14 + l]);
                CHECK(logh == doctest::Approx(std::log(std::abs(J)) / std::log(0.05))
                                  .epsilon(1e-12));
                checked_logh = true;
            }
        }
    }
    CHECK(checked_logh);

    // temporal: one row per quadrature node, d1..d4 columns
    auto tp = lines_of(slurp(dir / "indicators_temporal_0.05.csv"));
    REQUIRE(tp.size() == 1 + 200 * 5);
    auto thead = fields_of(tp[0]);
    REQUIRE(thead.size() == 7);
    CHECK(thead[2] == "node");
    CHECK(thead[3] == "d1");
    CHECK(thead[6] == "d4");
    auto row1 = fields_of(tp[1]);
    REQUIRE(row1.size() == 7);
    double node0 = std::stod(row1[2]);
    CHECK(node0 > 0.0);
    CHECK(node0 < 0.05);
    double prev_node = -1.0;
    for (int q = 0; q < 5; ++q) {
        double x = std::stod(fields_of(tp[1 + q])[2]);
        CHECK(x > prev_node);
        prev_node = x;
    }

    // solution: 5 sample points per cell
    auto so = lines_of(slurp(dir / "solution_0.05.csv"));
    REQUIRE(so.size() == 1 + 200 * 5);
    CHECK(so[0] == "x,u");
    auto first = fields_of(so[1]);
    auto last = fields_of(so.back());
    CHECK(std::abs(std::stod(first[0])) <= 1e-12);
    CHECK(std::stod(last[0]) == doctest::Approx(10.0).epsilon(1e-12));
    for (size_t r = 1; r < so.size(); r += 97) {
        double uv = std::stod(fields_of(so[r])[1]);
        CHECK(uv > 0.4);
        CHECK(uv < 1.6);
    }

    // budget: header, the E0 row, then one row per step
    auto bu = lines_of(slurp(dir / "error_budget.csv"));
    REQUIRE(bu.size() == 12);
    CHECK(bu[0] == "n,t,tau,F,G,local_space,local_time,E_global,trusted");
    CHECK(bu[1] == "0,0,0,0,0,0,0," + format_double(art.budget.E0) + ",1");
    auto lastrow = fields_of(bu.back());
    REQUIRE(lastrow.size() == 9);
    CHECK(std::stoi(lastrow[0]) == 10);
    CHECK(std::stod(lastrow[7]) == art.budget.E_global);  // shortest form round-trips
    CHECK(lastrow[8] == "1");

    // summary document
    auto s = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(s["problem"] == "example1");
    CHECK(s["estimator_policy"] == "budget-linear-tau-v1");
    CHECK(s["steps"] == 10);
    CHECK(s["completed"] == true);
    CHECK(s["all_trusted"] == true);
    CHECK(s["config"]["p"] == 3);
    CHECK(s["config"]["k"] == 3);
    CHECK(s["config"]["tau"] == 0.005);
    CHECK(s["config"]["mode"] == "fixed");
    CHECK(s["config_hash"].is_string());
    CHECK(!s["config_hash"].get<std::string>().empty());
    CHECK(s["E0"].get<double>() == doctest::Approx(art.budget.E0).epsilon(1e-15));
    CHECK(s["E_global"].get<double>() >= s["E0"].get<double>());
    CHECK(s["cfl_warnings"]["standard"] == false);
    CHECK(s["cfl_warnings"]["strengthened"] == false);
    CHECK(s["maxima"]["D_tilde"].get<double>() > 0.0);
    CHECK(s["wall_seconds"].get<double>() >= 0.0);
    // the file list inside the summary covers everything except itself
    auto listed = s["files"].get<std::vector<std::string>>();
    CHECK(has_file(listed, "error_budget.csv"));
    CHECK(has_file(listed, "indicators_spatial_0.05.csv"));
    CHECK(!has_file(listed, "summary.json"));

    std::string txt = report_text(dir.string());
    CHECK(txt.find("problem:        example1") != std::string::npos);
    CHECK(txt.find("completed:      yes") != std::string::npos);
    CHECK(txt.find("steps:          10") != std::string::npos);
    CHECK(txt.find("all trusted:    yes") != std::string::npos);
    CHECK(txt.find("cfl warnings:   standard=no strengthened=no") != std::string::npos);
    CHECK(txt.find("abort reason:") == std::string::npos);
}

TEST_CASE("identical runs emit identical bytes") {
    RunArtifact a1 = short_example1_run();
    RunArtifact a2 = short_example1_run();
    fs::path d1 = fresh_dir("det1");
    fs::path d2 = fresh_dir("det2");
    auto f1 = emit_reports(a1, d1.string());
    auto f2 = emit_reports(a2, d2.string());
    REQUIRE(f1 == f2);
    for (const auto& name : f1) {
        if (name == "summary.json") continue;  // wall_seconds differs
        CHECK_MESSAGE(slurp(d1 / name) == slurp(d2 / name), name);
    }
    auto s1 = nlohmann::json::parse(slurp(d1 / "summary.json"));
    auto s2 = nlohmann::json::parse(slurp(d2 / "summary.json"));
    s1.erase("wall_seconds");
    s2.erase("wall_seconds");
    CHECK(s1 == s2);
}

TEST_CASE("a zero-length run still writes the budget skeleton") {
    ProblemSpec ps = example1();
    RunConfig cfg = ps.defaults;
    cfg.t_final = 0.0;
    cfg.snapshots.clear();

    RunArtifact art = run_simulation(ps, cfg);
    CHECK(art.completed);
    CHECK(art.steps == 0);
    CHECK(art.budget.steps.empty());
    CHECK(art.budget.E_global == art.budget.E0);
    REQUIRE(art.snapshots.size() == 1);
    CHECK(art.snapshots[0].t == 0.0);
    CHECK(art.snapshots[0].S.m == 200);

    fs::path dir = fresh_dir("zero");
    auto files = emit_reports(art, dir.string());
    CHECK(has_file(files, "indicators_spatial_0.csv"));
    auto bu = lines_of(slurp(dir / "error_budget.csv"));
    REQUIRE(bu.size() == 2);
    CHECK(bu[1] == "0,0,0,0,0,0,0," + format_double(art.budget.E0) + ",1");
}

TEST_CASE("the advection study observes the design order") {
    ProblemSpec ps = linear_advection();
    RunConfig cfg = ps.defaults;
    cfg.p = 2;
    cfg.k = 3;
    cfg.mu = 1.0;
    cfg.gamma = 0.4;
    cfg.mode = CflMode::automatic;
    cfg.t_final = 0.5;

    std::vector<double> hs = {0.2, 0.1, 0.05, 0.025};
    StudyResult st = convergence_study(ps, cfg, hs);
    REQUIRE(st.rows.size() == 4);
    for (size_t i = 0; i < hs.size(); ++i) {
        const StudyRow& r = st.rows[i];
        CHECK(r.h == hs[i]);
        CHECK(r.l1_error > 0.0);
        CHECK(std::isfinite(r.estimate));
        CHECK(r.effectivity == doctest::Approx(r.estimate / r.l1_error).epsilon(1e-12));
        CHECK(r.effectivity >= 1.0);
    }
    CHECK(st.fitted_order > 2.7);
    CHECK(st.fitted_order < 3.8);

    fs::path dir = fresh_dir("study");
    emit_study(st, dir.string());
    auto cv = lines_of(slurp(dir / "convergence.csv"));
    REQUIRE(cv.size() == 6);
    CHECK(cv[0] == "h,l1_error,estimate,effectivity");
    CHECK(fields_of(cv[1])[0] == "0.2");
    CHECK(cv[5].rfind("# fitted_order,", 0) == 0);
    CHECK(std::stod(cv[5].substr(std::string("# fitted_order,").size())) ==
          doctest::Approx(st.fitted_order).epsilon(1e-12));
}

TEST_CASE("config text parses keys, comments and snapshot lists") {
    std::string text =
        "# run setup\n"
        "problem = example2\n"
        "p=4\n"
        "k = 3\n"
        "h=0.1   # coarse pass\n"
        "mu = 0.8\n"
        "gamma = 0.3\n"
        "tau = 0.002\n"
        "mode = fixed\n"
        "tfinal = 0.5\n"
        "kappa = 2.5\n"
        "ceiling = 5000\n"
        "\n"
        "snapshots = 0.1, 0.3 ,0.5\n";
    FileConfig fc = parse_config_text(text);
    CHECK(fc.has_problem);
    CHECK(fc.problem == "example2");
    CHECK(fc.cfg.p == 4);
    CHECK(fc.cfg.k == 3);
    CHECK(fc.cfg.h == 0.1);
    CHECK(fc.cfg.mu == 0.8);
    CHECK(fc.cfg.gamma == 0.3);
    CHECK(fc.cfg.tau_fixed == 0.002);
    CHECK(fc.cfg.mode == CflMode::fixed);
    CHECK(fc.cfg.t_final == 0.5);
    CHECK(fc.cfg.kappa == 2.5);
    CHECK(fc.cfg.m_ceiling == 5000.0);
    REQUIRE(fc.cfg.snapshots.size() == 3);
    CHECK(fc.cfg.snapshots[0] == 0.1);
    CHECK(fc.cfg.snapshots[1] == 0.3);
    CHECK(fc.cfg.snapshots[2] == 0.5);
}

TEST_CASE("file config overlays only the keys it names") {
    RunConfig cfg = example1().defaults;
    FileConfig fc = parse_config_text("h = 0.2\nmode = auto\n");
    apply_file_config(fc, cfg);
    CHECK(cfg.h == 0.2);
    CHECK(cfg.mode == CflMode::automatic);
    CHECK(cfg.p == 3);
    CHECK(cfg.k == 3);
    CHECK(cfg.tau_fixed == 0.005);
    CHECK(cfg.snapshots.size() == 3);
}

TEST_CASE("malformed config text is rejected with the offending key") {
    CHECK_THROWS_WITH_AS(parse_config_text("speed = 3\n"),
                         doctest::Contains("unknown config key"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("h = abc\n"),
                         doctest::Contains("non-numeric"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("p = 2.5\n"),
                         doctest::Contains("expects an integer"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("mode = banana\n"),
                         doctest::Contains("must be fixed or auto"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("h 0.2\n"),
                         doctest::Contains("not key=value"), ConfigError);
    CHECK_THROWS_AS(load_config_file("/nonexistent/rkdg.cfg"), ConfigError);
    CHECK_THROWS_WITH_AS(problem_by_name("example9"),
                         doctest::Contains("unknown problem"), ConfigError);
}

TEST_CASE("meshes that do not tile the domain are rejected") {
    ProblemSpec ps = example1();
    RunConfig cfg = ps.defaults;
    cfg.h = 0.3;  // 10/0.3 is not an integer
    cfg.t_final = 0.0;
    CHECK_THROWS_WITH_AS(run_simulation(ps, cfg),
                         doctest::Contains("does not tile"), ConfigError);
}
