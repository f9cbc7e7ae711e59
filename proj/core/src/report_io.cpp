#include "halflow/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace halflow {

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp);
        out.write(content.data(), std::streamsize(content.size()));
        if (!out) throw std::runtime_error("atomic_write: short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("atomic_write: rename failed for " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_file: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string ratio_report_json(const RatioReport& rep, uint64_t seed,
                              const std::string& params) {
    nlohmann::json j;
    j["name"] = rep.name;
    j["params"] = params;
    j["seed"] = seed;
    j["verdict"] = rep.verdict;
    j["max_ratio"] = rep.max_ratio;
    j["violations"] = rep.violations;
    j["resolution_stable"] = rep.resolution_stable;
    j["notes"] = rep.notes;
    nlohmann::json rows = nlohmann::json::array();
    for (const SampleRow& r : rep.samples)
        rows.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", r.ratio}});
    j["samples"] = rows;
    return j.dump(2) + "\n";
}

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records) {
    std::string out =
        "t,energy,dissipation,sphere_drift,orth_residual,harmonic_residual,eps_R\n";
    for (const DiagnosticsRecord& r : records) {
        out += num(r.t) + "," + num(r.energy) + "," + num(r.dissipation) + ","
               + num(r.sphere_drift) + "," + num(r.orth_residual) + ","
               + num(r.harmonic_residual) + "," + num(r.eps_r) + "\n";
    }
    return out;
}

std::string snapshots_json(const std::vector<Snapshot>& snapshots) {
    nlohmann::json j = nlohmann::json::array();
    for (const Snapshot& s : snapshots) {
        nlohmann::json item;
        item["t"] = s.t;
        item["grid_size"] = s.u.grid().size();
        item["components"] = s.u.components();
        nlohmann::json comps = nlohmann::json::array();
        for (int c = 0; c < s.u.components(); ++c) {
            nlohmann::json vals = nlohmann::json::array();
            for (int n = 0; n < s.u.size(); ++n) vals.push_back(s.u.at(c, n));
            comps.push_back(vals);
        }
        item["values"] = comps;
        j.push_back(item);
    }
    return j.dump() + "\n";
}

std::string summary_csv(const std::vector<RatioReport>& reports) {
    std::string out = "name,verdict,max_ratio,violations,samples\n";
    for (const RatioReport& r : reports)
        out += r.name + "," + r.verdict + "," + num(r.max_ratio) + ","
               + std::to_string(r.violations) + "," + std::to_string(r.samples.size())
               + "\n";
    return out;
}

} // namespace halflow
