// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria are evaluated from a full verification-suite run; the
// determinism criterion reruns the suite with the same seed and requires
// bitwise identical artifacts.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <initializer_list>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "halflow/report_io.hpp"
#include "verify.hpp"

namespace {

bool artifacts_identical(const std::string& dir_a, const std::string& dir_b) {
    namespace fs = std::filesystem;
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir_a))
        names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    for (const std::string& name : names) {
        if (name == "manifest.json") continue; // carries wall time
        fs::path other = fs::path(dir_b) / name;
        if (!fs::exists(other)) return false;
        if (halflow::read_file((fs::path(dir_a) / name).string())
            != halflow::read_file(other.string()))
            return false;
    }
    return true;
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const uint64_t seed = 20260824;
    const std::string dir_a = "acceptance_run_a";
    const std::string dir_b = "acceptance_run_b";

    auto t0 = clock::now();
    std::vector<halflow::RatioReport> reports =
        halflow::run_verify_suite(true, seed, dir_a);
    double suite_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    halflow::run_verify_suite(true, seed, dir_b);

    std::map<std::string, bool> ok;
    for (const halflow::RatioReport& r : reports) ok[r.name] = r.verdict == "pass";
    auto all = [&](std::initializer_list<const char*> names) {
        for (const char* n : names)
            if (!ok.count(n) || !ok[n]) return false;
        return true;
    };

    struct Line {
        int id;
        bool pass;
        const char* text;
    };
    std::vector<Line> lines;
    lines.push_back({1, all({"spectral_exactness"}),
                     "spectral transforms, multipliers, semigroup exact to 1e-12"});
    lines.push_back({2, all({"fejer_and_cs_bound", "fracgrad_constant"}),
                     "normalization ledger: Fejer identity, Cauchy-Schwarz bound, "
                     "gradient-energy ratio 2pi"});
    lines.push_back({3, all({"identity_fixed_point"}),
                     "identity map is a discrete fixed point to 1e-10 per step"});
    lines.push_back({4, all({"sphere_drift_order"}),
                     "sphere drift without projection is first order in dt"});
    lines.push_back({5, all({"energy_decay", "dissipation_identity"}),
                     "energy decays monotonically; dissipation defect first order"});
    lines.push_back({6, all({"twin_uniqueness"}),
                     "twin-scheme divergence is first order in dt"});
    lines.push_back({7, all({"longtime_convergence"}),
                     "small-energy run converges to a point by T = 50"});
    lines.push_back({8, all({"decomposition_identity", "divfree_correction"}),
                     "potential decomposition closes; divergence correction gains 1e3"});
    lines.push_back({9, all({"product_spectrum_oracle"}),
                     "spectral product formula matches direct pair quadrature"});
    lines.push_back({10, all({"wente"}),
                     "compensation ratio finite and stable under refinement"});
    lines.push_back({11, all({"ladyzhenskaya", "product_regularity",
                              "norm_equivalence", "holder_probe"}),
                     "inequality sweeps: interpolation, product bounds, norm "
                     "equivalence, singular-quadrature probe"});
    lines.push_back({12, all({"stereographic"}),
                     "line-circle quadrature identity within budget"});
    lines.push_back({13, all({"mollify_project"}),
                     "mollify-project errors decrease along the eps schedule"});
    bool deterministic = artifacts_identical(dir_a, dir_b)
                         && artifacts_identical(dir_b, dir_a);
    bool in_budget = suite_seconds <= 1800.0;
    lines.push_back({14, deterministic && in_budget,
                     "suite rerun bitwise identical; runtime within budget"});

    int failures = 0;
    for (const Line& l : lines) {
        std::printf("criterion %2d: %s  %s\n", l.id, l.pass ? "PASS" : "FAIL", l.text);
        if (!l.pass) ++failures;
    }
    int extra_bad = 0;
    for (const halflow::RatioReport& r : reports)
        if (r.verdict != "pass") {
            std::printf("suite check failed: %s\n", r.name.c_str());
            ++extra_bad;
        }
    std::printf("suite runtime: %.1f s; %d/14 criteria pass\n", suite_seconds,
                14 - failures);
    return (failures + extra_bad) == 0 ? 0 : 1;
}
