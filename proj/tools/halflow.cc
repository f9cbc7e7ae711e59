#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "halflow/cjk.hpp"
#include "halflow/flow.hpp"
#include "halflow/lab.hpp"
#include "halflow/report_io.hpp"
#include "verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitIntegrationFailed = 3;

halflow::FlowConfig flow_config_from(const json& j, uint64_t seed) {
    halflow::FlowConfig cfg;
    cfg.seed = seed;
    if (j.contains("grid_size")) cfg.grid_size = j.at("grid_size").get<int>();
    if (j.contains("components")) cfg.components = j.at("components").get<int>();
    if (j.contains("dt")) cfg.dt = j.at("dt").get<double>();
    if (j.contains("horizon")) cfg.horizon = j.at("horizon").get<double>();
    if (j.contains("scheme"))
        cfg.scheme = halflow::scheme_from_string(j.at("scheme").get<std::string>());
    if (j.contains("projection")) cfg.projection = j.at("projection").get<bool>();
    if (j.contains("initial_family"))
        cfg.initial_family = j.at("initial_family").get<std::string>();
    if (j.contains("degree")) cfg.degree = j.at("degree").get<int>();
    if (j.contains("band")) cfg.band = j.at("band").get<int>();
    if (j.contains("amplitude")) cfg.amplitude = j.at("amplitude").get<double>();
    if (j.contains("diag_cadence")) cfg.diag_cadence = j.at("diag_cadence").get<int>();
    if (j.contains("snapshot_cadence"))
        cfg.snapshot_cadence = j.at("snapshot_cadence").get<int>();
    cfg.validate();
    return cfg;
}

halflow::SampleFamily family_from(const json& j, uint64_t seed) {
    halflow::SampleFamily fam;
    fam.seed = seed;
    if (j.contains("generator")) fam.generator = j.at("generator").get<std::string>();
    if (j.contains("count")) fam.count = j.at("count").get<int>();
    if (j.contains("band")) fam.band = j.at("band").get<int>();
    if (j.contains("components")) fam.components = j.at("components").get<int>();
    if (j.contains("amplitude")) fam.amplitude = j.at("amplitude").get<double>();
    if (j.contains("grid_size")) fam.grid_size = j.at("grid_size").get<int>();
    return fam;
}

void write_manifest(const std::string& out_dir, const std::string& kind,
                    const std::string& config_text, uint64_t seed, double wall_seconds) {
    json m;
    m["version"] = "0.1.0";
    m["kind"] = kind;
    char digest[32];
    std::snprintf(digest, sizeof digest, "%016llx",
                  (unsigned long long)halflow::fnv1a64(config_text));
    m["config_digest"] = digest;
    m["seed"] = seed;
    m["wall_time_seconds"] = wall_seconds;
    halflow::atomic_write(out_dir + "/manifest.json", m.dump(2) + "\n");
}

int run_ineq(const std::string& name, const json& cfg, uint64_t seed,
             const std::string& out_dir) {
    json p = cfg.contains("ineq") ? cfg.at("ineq") : json::object();
    halflow::RatioReport rep;
    if (name == "ladyzhenskaya") {
        rep = halflow::ladyzhenskaya_report(family_from(p, seed));
    } else if (name == "fracgrad") {
        rep = halflow::fracgrad_constant(family_from(p, seed));
    } else if (name == "wente") {
        int n = p.value("grid_size", 512);
        rep = halflow::wente_report(halflow::degree_map(halflow::CircleGrid(n), 1),
                                    family_from(p, seed));
    } else if (name == "product_regularity") {
        halflow::SampleFamily uf = family_from(p, seed);
        halflow::SampleFamily vf = family_from(p, seed + 1);
        rep = halflow::product_regularity_report(uf, vf, p.value("s", 0.5),
                                                 p.value("eps", 0.125));
    } else if (name == "holder") {
        std::vector<int> res = p.value("resolutions",
                                       std::vector<int>{256, 512, 1024, 2048});
        rep = halflow::holder_laplacian_probe(p.value("alpha", 0.8), p.value("s", 0.3),
                                              res);
    } else if (name == "stereographic") {
        halflow::CircleGrid grid(p.value("grid_size", 256));
        halflow::GridField u = halflow::degree_map(grid, p.value("degree", 1)).field();
        std::vector<double> pts;
        for (int k : {0, 2, 4, 6, 8}) pts.push_back(grid.node(k * grid.size() / 16));
        rep = halflow::stereographic_check(u, pts, p.value("truncation", 1000.0));
    } else if (name == "mollify") {
        halflow::CircleGrid grid(p.value("grid_size", 2048));
        std::vector<double> eps;
        for (int m = 3; m <= 7; ++m) eps.push_back(std::pow(2.0, -m));
        rep = halflow::approximation_report(halflow::degree_map(grid, 1), eps);
    } else if (name == "norm_equivalence") {
        rep = halflow::norm_equivalence_report(family_from(p, seed), p.value("s", 0.5),
                                               p.value("p", 4.0), p.value("q", 2.0));
    } else {
        std::fprintf(stderr, "unknown inequality check: %s\n", name.c_str());
        return kExitBadConfig;
    }
    halflow::atomic_write(out_dir + "/" + rep.name + ".json",
                          halflow::ratio_report_json(rep, seed, p.dump()));
    return rep.verdict == "pass" ? kExitOk : kExitCheckFailed;
}

struct Anchor {
    const char* check;
    const char* anchor;
};

constexpr Anchor kAnchors[] = {
    {"spectral_exactness", "multiplier / roundtrip / semigroup exactness"},
    {"fejer_and_cs_bound", "C(j,-j) = 2pi|j|, |C| <= 2pi sqrt(|j||k|)"},
    {"identity_fixed_point", "identity map stationary under the flow"},
    {"sphere_drift_order", "drift O(dt) without projection"},
    {"energy_decay", "half-energy non-increasing"},
    {"dissipation_identity", "E(T)-E(0)+int ||u_t||^2 -> 0"},
    {"twin_uniqueness", "scheme divergence first-order in dt"},
    {"longtime_convergence", "small-energy flow converges to a point"},
    {"decomposition_identity", "u lambda_raw = Omega.du + T(u)"},
    {"divfree_correction", "div_{1/2} Omega removable by a potential"},
    {"product_spectrum_oracle", "spectral convolution = singular quadrature"},
    {"wente", "H^{-1/2} compensation bound"},
    {"ladyzhenskaya", "||u||_{H^{1/4}}^2 <= ||u||_{L^2} ||u||_{H^{1/2}}"},
    {"fracgrad_constant", "int |d_{1/2}u|^2 = 2pi ||(-D)^{1/4}u||^2"},
    {"holder_probe", "(-D)^s of C^{0,alpha} bounded iff 2s < alpha"},
    {"stereographic", "line/circle singular-energy identity"},
    {"mollify_project", "mollify-and-project approximation"},
    {"product_regularity", "H^s bound for d_{1/2}u . d_{1/2}v"},
    {"norm_equivalence", "double-quadrature vs dyadic-block norms"},
    {"local_monitors", "local energy estimates"},
    {"linearized_growth", "linearized-flow maximum principle"},
};

int emit_report(const std::string& artifacts_dir) {
    int bad = 0;
    std::printf("%-26s %-52s %-14s %-12s %s\n", "check", "anchor", "measured",
                "tolerance", "verdict");
    for (const Anchor& a : kAnchors) {
        std::string path = artifacts_dir + "/" + a.check + ".json";
        if (!std::filesystem::exists(path)) {
            std::printf("%-26s %-52s %-14s %-12s %s\n", a.check, a.anchor, "-", "-",
                        "SKIPPED");
            ++bad;
            continue;
        }
        json j = json::parse(halflow::read_file(path));
        double measured = j.value("max_ratio", 0.0);
        std::string tol = "-";
        if (j.contains("samples") && !j.at("samples").empty()) {
            double rhs = j.at("samples").front().value("rhs", 0.0);
            if (rhs > 0.0) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3g", rhs);
                tol = buf;
            }
        }
        std::string verdict = j.value("verdict", "?");
        if (verdict != "pass") ++bad;
        char meas[32];
        std::snprintf(meas, sizeof meas, "%.6g", measured);
        std::printf("%-26s %-52s %-14s %-12s %s\n", a.check, a.anchor, meas,
                    tol.c_str(), verdict == "pass" ? "PASS" : "FAIL");
    }
    return bad == 0 ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"half-harmonic gradient flow experiment runner"};
    std::string config_path;
    std::string out_dir;
    std::string level;
    uint64_t seed_flag = 0;
    bool seed_set = false;
    int threads = 1;
    app.add_option("--config", config_path, "JSON experiment config")->required();
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed_flag, "seed override")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--level", level, "verification level: fast | full");
    app.add_option("--threads", threads, "worker threads (speed only, never results)");
    CLI11_PARSE(app, argc, argv);

    std::string config_text;
    json cfg;
    try {
        config_text = halflow::read_file(config_path);
        cfg = json::parse(config_text);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "malformed config %s: %s\n", config_path.c_str(), e.what());
        return kExitBadConfig;
    }

    std::string kind;
    uint64_t seed = 1;
    try {
        kind = cfg.at("kind").get<std::string>();
        if (cfg.contains("seed")) seed = cfg.at("seed").get<uint64_t>();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "malformed config, field 'kind': %s\n", e.what());
        return kExitBadConfig;
    }
    if (seed_set) seed = seed_flag;
    if (out_dir.empty()) {
        if (cfg.contains("out")) out_dir = cfg.at("out").get<std::string>();
        else if (const char* env = std::getenv("HALFLOW_OUT")) out_dir = env;
        else out_dir = "halflow_out";
    }
    if (level.empty()) level = cfg.value("level", "fast");
    if (level != "fast" && level != "full") {
        std::fprintf(stderr, "malformed config, field 'level': must be fast or full\n");
        return kExitBadConfig;
    }

    auto t0 = std::chrono::steady_clock::now();
    int status = kExitOk;
    try {
        std::filesystem::create_directories(out_dir);
        if (kind == "flow") {
            halflow::FlowConfig fc = flow_config_from(
                cfg.contains("flow") ? cfg.at("flow") : json::object(), seed);
            halflow::RunResult r = halflow::run(fc);
            halflow::atomic_write(out_dir + "/diagnostics.csv",
                                  halflow::diagnostics_csv(r.diagnostics));
            halflow::atomic_write(out_dir + "/snapshots.json",
                                  halflow::snapshots_json(r.snapshots));
            if (r.failed) status = kExitIntegrationFailed;
            else if (!r.halt_event.empty()) status = kExitCheckFailed;
            if (!r.halt_event.empty())
                std::fprintf(stderr, "run halted: %s at t=%g\n", r.halt_event.c_str(),
                             r.final_time);
        } else if (kind == "twin") {
            json t = cfg.contains("twin") ? cfg.at("twin") : json::object();
            halflow::FlowConfig fc = flow_config_from(
                cfg.contains("flow") ? cfg.at("flow") : json::object(), seed);
            std::vector<double> dts = t.value("dts", std::vector<double>{0.02, 0.01, 0.005});
            halflow::Scheme sa =
                halflow::scheme_from_string(t.value("scheme_a", "exponential"));
            halflow::Scheme sb =
                halflow::scheme_from_string(t.value("scheme_b", "semi-implicit"));
            halflow::TwinReport tr = halflow::twin_run(halflow::initial_data(fc), sa, sb,
                                                       dts, t.value("horizon", 5.0));
            json out;
            out["dts"] = tr.dts;
            out["sup_divergence"] = tr.sup_divergence;
            out["event"] = tr.event;
            halflow::atomic_write(out_dir + "/twin.json", out.dump(2) + "\n");
            if (!tr.event.empty()) status = kExitIntegrationFailed;
        } else if (kind == "longtime") {
            halflow::FlowConfig fc = flow_config_from(
                cfg.contains("flow") ? cfg.at("flow") : json::object(), seed);
            halflow::LongTimeReport lr = halflow::long_time_harness(fc);
            json out;
            out["times"] = lr.times;
            out["energy"] = lr.energy;
            out["h_half_to_mean"] = lr.h_half_to_mean;
            out["harmonic_residuals"] = lr.harmonic_residuals;
            out["dissipation_tails"] = lr.dissipation_tails;
            out["verdict"] = lr.verdict;
            halflow::atomic_write(out_dir + "/longtime.json", out.dump(2) + "\n");
            if (lr.verdict == "fail") status = kExitCheckFailed;
        } else if (kind == "verify-all") {
            std::vector<halflow::RatioReport> reports =
                halflow::run_verify_suite(level == "full", seed, out_dir);
            for (const halflow::RatioReport& r : reports) {
                std::printf("%-26s %s\n", r.name.c_str(),
                            r.verdict == "pass" ? "PASS" : "FAIL");
                if (r.verdict != "pass") status = kExitCheckFailed;
            }
        } else if (kind == "cjk-table") {
            int jmax = cfg.contains("cjk") ? cfg.at("cjk").value("max_frequency", 64) : 64;
            halflow::save_table_csv(halflow::build_table(jmax), out_dir + "/cjk.csv");
        } else if (kind == "report") {
            std::string dir =
                cfg.contains("report") ? cfg.at("report").value("artifacts", out_dir)
                                       : out_dir;
            status = emit_report(dir);
        } else if (kind.rfind("ineq:", 0) == 0) {
            status = run_ineq(kind.substr(5), cfg, seed, out_dir);
        } else {
            std::fprintf(stderr, "malformed config, field 'kind': unknown kind %s\n",
                         kind.c_str());
            return kExitBadConfig;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "malformed config: %s\n", e.what());
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "integration failure: %s\n", e.what());
        return kExitIntegrationFailed;
    }

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    try {
        write_manifest(out_dir, kind, config_text, seed, wall);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "cannot write manifest: %s\n", e.what());
        return kExitIntegrationFailed;
    }
    return status;
}
