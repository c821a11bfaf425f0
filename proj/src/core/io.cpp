#include "core/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"

namespace deltaric {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer()) {
        fail(ErrorKind::Parse, std::string("field '") + field + "' missing or not an integer");
    }
    return j[field].get<int>();
}

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number()) {
        fail(ErrorKind::Parse, std::string("field '") + field + "' missing or not a number");
    }
    return j[field].get<double>();
}

} // namespace

Instance parse_instance(const std::string& text, const Config& cfg) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("malformed instance document: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::Parse, "instance document must be a JSON object");

    Instance inst;
    inst.n = require_int(doc, "n");
    inst.m = require_int(doc, "m");
    inst.c = require_number(doc, "c");
    if (inst.n < 1 || inst.m < 1) {
        fail(ErrorKind::Parse, "fields 'n' and 'm' must be positive integers");
    }
    const int normals = inst.num_normals();
    if (normals < 1) fail(ErrorKind::Parse, "normal count 2m-n must be positive");
    inst.h.assign(static_cast<std::size_t>(normals), Eigen::MatrixXd::Zero(inst.n, inst.n));

    if (doc.contains("h")) {
        if (!doc["h"].is_array()) fail(ErrorKind::Parse, "field 'h' must be an array of records");
        std::set<int> seen;
        for (const json& rec : doc["h"]) {
            if (!rec.is_object()) fail(ErrorKind::Parse, "each 'h' record must be an object");
            const int r = require_int(rec, "r");
            if (r < 1 || r > normals) {
                fail(ErrorKind::Parse, "record r=" + std::to_string(r) +
                                           " out of range 1..=" + std::to_string(normals));
            }
            if (!seen.insert(r).second) {
                fail(ErrorKind::Parse, "duplicate record for r=" + std::to_string(r));
            }
            if (!rec.contains("matrix") || !rec["matrix"].is_array() ||
                static_cast<int>(rec["matrix"].size()) != inst.n) {
                fail(ErrorKind::Parse, "record r=" + std::to_string(r) + " needs a 'matrix' with " +
                                           std::to_string(inst.n) + " rows");
            }
            Eigen::MatrixXd& a = inst.h[static_cast<std::size_t>(r - 1)];
            for (int i = 0; i < inst.n; ++i) {
                const json& row = rec["matrix"][static_cast<std::size_t>(i)];
                if (!row.is_array() || static_cast<int>(row.size()) != inst.n) {
                    fail(ErrorKind::Parse, "record r=" + std::to_string(r) + ", row " +
                                               std::to_string(i + 1) + " needs " +
                                               std::to_string(inst.n) + " numbers");
                }
                for (int j = 0; j < inst.n; ++j) {
                    const json& cell = row[static_cast<std::size_t>(j)];
                    if (!cell.is_number()) {
                        fail(ErrorKind::Parse, "record r=" + std::to_string(r) + ", entry (" +
                                                   std::to_string(i + 1) + "," +
                                                   std::to_string(j + 1) + ") is not a number");
                    }
                    a(i, j) = cell.get<double>();
                }
            }
        }
    }
    inst.validate(cfg);
    return inst;
}

Instance load_instance(const std::string& path, const Config& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), cfg);
}

std::string serialize_instance(const Instance& inst) {
    json doc;
    doc["n"] = inst.n;
    doc["m"] = inst.m;
    doc["c"] = inst.c;
    json records = json::array();
    for (int r = 1; r <= inst.num_normals(); ++r) {
        const Eigen::MatrixXd& a = inst.h[static_cast<std::size_t>(r - 1)];
        if (a.size() == 0 || a.isZero(0.0)) continue;
        json rows = json::array();
        for (int i = 0; i < inst.n; ++i) {
            json row = json::array();
            for (int j = 0; j < inst.n; ++j) row.push_back(a(i, j));
            rows.push_back(std::move(row));
        }
        records.push_back(json{{"r", r}, {"matrix", std::move(rows)}});
    }
    doc["h"] = std::move(records);
    return doc.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::Io, "cannot write instance file '" + path + "'");
    out << serialize_instance(inst);
    if (!out) fail(ErrorKind::Io, "write to '" + path + "' failed");
}

void apply_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("malformed config file: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::Parse, "config file must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number()) {
            fail(ErrorKind::Parse, "config key '" + key + "' must map to a number");
        }
        try {
            cfg.set(key, value.get<double>());
        } catch (const Error& e) {
            fail(ErrorKind::Parse, std::string("config file: ") + e.what());
        }
    }
}

} // namespace deltaric
