#include <doctest.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "halflow/report_io.hpp"

using namespace halflow;

TEST_CASE("fnv digest") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("atomic write round trip") {
    std::string path = "io_roundtrip_test.txt";
    std::string body = "line one\nline two\n";
    atomic_write(path, body);
    CHECK(read_file(path) == body);
    atomic_write(path, "replaced");
    CHECK(read_file(path) == "replaced");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file(path), std::runtime_error);
}

TEST_CASE("ratio report json") {
    RatioReport rep;
    rep.name = "demo";
    rep.samples.push_back({1.0, 2.0, 0.5});
    rep.samples.push_back({3.0, 4.0, 0.75});
    rep.max_ratio = 0.75;
    rep.violations = 0;
    rep.verdict = "pass";
    rep.notes.push_back("note");
    std::string text = ratio_report_json(rep, 42, "level=fast");
    CHECK(text == ratio_report_json(rep, 42, "level=fast")); // deterministic
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["name"] == "demo");
    CHECK(j["seed"] == 42);
    CHECK(j["verdict"] == "pass");
    CHECK(j["violations"] == 0);
    CHECK(j["max_ratio"] == 0.75);
    CHECK(j["samples"].size() == 2);
    CHECK(j["samples"][1]["ratio"] == 0.75);
}

TEST_CASE("diagnostics csv") {
    std::vector<DiagnosticsRecord> recs(2);
    recs[0].t = 0.0;
    recs[0].energy = 1.5;
    recs[1].t = 0.1;
    recs[1].energy = 1.25;
    std::string csv = diagnostics_csv(recs);
    CHECK(csv.rfind("t,energy,dissipation,sphere_drift,orth_residual,"
                    "harmonic_residual,eps_R\n", 0) == 0);
    CHECK(csv.find("\n0.10000000000000001,") != std::string::npos);
}

TEST_CASE("summary csv") {
    RatioReport a;
    a.name = "alpha";
    a.verdict = "pass";
    a.max_ratio = 1.0;
    a.samples.push_back({1.0, 1.0, 1.0});
    std::string csv = summary_csv({a});
    CHECK(csv.rfind("name,verdict,max_ratio,violations,samples\n", 0) == 0);
    CHECK(csv.find("alpha,pass,") != std::string::npos);
}

TEST_CASE("snapshots json") {
    CircleGrid g(8);
    GridField f(g, 2);
    for (int i = 0; i < 8; ++i) { f.at(0, i) = i; f.at(1, i) = -i; }
    std::vector<Snapshot> snaps;
    snaps.push_back({0.25, f});
    nlohmann::json j = nlohmann::json::parse(snapshots_json(snaps));
    REQUIRE(j.size() == 1);
    CHECK(j[0]["grid_size"] == 8);
    CHECK(j[0]["components"] == 2);
    CHECK(j[0]["t"] == 0.25);
    CHECK(j[0]["values"][1][3] == -3.0);
}
