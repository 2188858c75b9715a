#pragma once

// JSON set format and the JSON-lines catalog.
//
//   {"group":[19],"lambda":2,"P":[[1],[5],...],"N":[[3],...]}
//
// Elements are coordinate arrays in the group's factor order, sorted by rank.
// Catalog lines are the same object followed by "v", "k", "source",
// "canonical_key", "timestamp" and "provenance".

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sds/signed_set.hpp"

namespace sds {

using ordered_json = nlohmann::ordered_json;

inline ordered_json set_to_json(const SignedDiffSet& d)
{
    ordered_json j;
    j["group"] = d.group.orders();
    j["lambda"] = d.lambda;
    auto elems = [](const std::vector<GroupElement>& xs) {
        ordered_json a = ordered_json::array();
        for (const auto& x : xs) a.push_back(x.coords);
        return a;
    };
    j["P"] = elems(d.P);
    j["N"] = elems(d.N);
    return j;
}

inline std::string dump_set(const SignedDiffSet& d) { return set_to_json(d).dump(); }

inline SignedDiffSet set_from_json(const nlohmann::json& j, const std::string& where = "input")
{
    auto fail = [&](const std::string& msg) -> SignedDiffSet { throw Error(Errc::parse, where + ": " + msg); };
    if (!j.is_object()) return fail("expected a JSON object");
    for (const char* key : {"group", "lambda", "P", "N"})
        if (!j.contains(key)) return fail(std::string("missing key \"") + key + "\"");
    const auto& jg = j["group"];
    if (!jg.is_array() || jg.empty()) return fail("\"group\" must be a nonempty array of cyclic orders");
    std::vector<i64> orders;
    for (const auto& o : jg) {
        if (!o.is_number_integer()) return fail("\"group\" entries must be integers");
        orders.push_back(o.get<i64>());
    }
    AbelianGroup G;
    try {
        G = AbelianGroup(orders);
    } catch (const Error& e) {
        return fail(e.what());
    }
    if (!j["lambda"].is_number_integer()) return fail("\"lambda\" must be an integer");
    auto elems = [&](const char* key) {
        std::vector<GroupElement> out;
        const auto& arr = j[key];
        if (!arr.is_array()) fail(std::string("\"") + key + "\" must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto& e = arr[i];
            const std::string loc = std::string(key) + "[" + std::to_string(i) + "]";
            if (!e.is_array() || e.size() != orders.size()) fail(loc + " must have " + std::to_string(orders.size()) + " coordinates");
            GroupElement g;
            for (const auto& c : e) {
                if (!c.is_number_integer()) fail(loc + " has a non-integer coordinate");
                g.coords.push_back(c.get<i64>());
            }
            if (!G.contains(g)) fail(loc + " = " + AbelianGroup::to_string(g) + " is outside group " + G.literal());
            out.push_back(std::move(g));
        }
        return out;
    };
    auto P = elems("P");
    auto N = elems("N");
    for (const auto& x : P)
        for (const auto& y : N)
            if (x == y) fail("element " + AbelianGroup::to_string(x) + " is in both P and N");
    try {
        return SignedDiffSet(G, std::move(P), std::move(N), j["lambda"].get<i64>());
    } catch (const Error& e) {
        return fail(e.what());
    }
}

inline SignedDiffSet parse_set(const std::string& text, const std::string& where = "input")
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse, where + ": " + e.what());
    }
    return set_from_json(j, where);
}

inline ordered_json provenance_to_json(const Provenance& p)
{
    ordered_json j;
    j["family"] = p.family;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : p.parameters) params[name] = value;
    j["parameters"] = params;
    if (!p.fields.empty()) {
        ordered_json fields = ordered_json::array();
        for (const auto& f : p.fields) fields.push_back(ordered_json{{"p", f.p}, {"k", f.k}, {"modulus", f.modulus}});
        j["fields"] = fields;
    }
    return j;
}

inline Provenance provenance_from_json(const nlohmann::json& j)
{
    Provenance p;
    if (!j.is_object()) return p;
    p.family = j.value("family", "");
    if (j.contains("parameters") && j["parameters"].is_object())
        for (const auto& [name, value] : j["parameters"].items())
            if (value.is_number_integer()) p.parameters.emplace_back(name, value.get<i64>());
    if (j.contains("fields") && j["fields"].is_array())
        for (const auto& f : j["fields"])
            p.fields.push_back({f.value("p", i64{0}), f.value("k", 0), f.value("modulus", std::vector<i64>{})});
    return p;
}

inline std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct CatalogRecord {
    SignedDiffSet set;
    std::string source;
    std::string canonical_key;
    std::string timestamp;
    std::size_t line = 0;  // 1-based line in the catalog file, 0 if not loaded
};

inline CatalogRecord make_record(const SignedDiffSet& set, std::string source)
{
    return {set, std::move(source), canonical_form(set), utc_timestamp(), 0};
}

inline std::string record_to_line(const CatalogRecord& r)
{
    auto j = set_to_json(r.set);
    j["v"] = r.set.v();
    j["k"] = r.set.k();
    j["source"] = r.source;
    j["canonical_key"] = r.canonical_key;
    j["timestamp"] = r.timestamp;
    j["provenance"] = provenance_to_json(r.set.provenance);
    return j.dump();
}

inline CatalogRecord record_from_line(const std::string& line, std::size_t lineno)
{
    const std::string where = "catalog line " + std::to_string(lineno);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse, where + ": " + e.what());
    }
    CatalogRecord r;
    r.set = set_from_json(j, where);
    if (j.contains("provenance")) r.set.provenance = provenance_from_json(j["provenance"]);
    r.source = j.value("source", "");
    r.canonical_key = j.value("canonical_key", "");
    r.timestamp = j.value("timestamp", "");
    r.line = lineno;
    return r;
}

/// Problems found in one catalog line.
struct CatalogIssue {
    std::size_t line;
    std::string problem;
};

struct CatalogLoad {
    std::vector<CatalogRecord> records;
    std::vector<CatalogIssue> issues;
};

/// Reads every nonblank line; unparsable lines become issues rather than errors.
inline CatalogLoad load_catalog(const std::string& path)
{
    CatalogLoad out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.records.push_back(record_from_line(line, lineno));
        } catch (const Error& e) {
            out.issues.push_back({lineno, e.what()});
        }
    }
    return out;
}

/// Appends unless a record with the same group and canonical key exists. Returns true if written.
inline bool catalog_append(const std::string& path, const CatalogRecord& rec)
{
    const auto existing = load_catalog(path);
    for (const auto& r : existing.records)
        if (r.set.group == rec.set.group && r.canonical_key == rec.canonical_key) return false;
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error(Errc::parse, "cannot open catalog " + path + " for writing");
    out << record_to_line(rec) << '\n';
    return true;
}

/// Re-verifies every record and recomputes its canonical key.
inline std::vector<CatalogIssue> catalog_check(const std::string& path)
{
    auto load = load_catalog(path);
    auto issues = load.issues;
    for (const auto& r : load.records) {
        const auto rep = verify(r.set);
        if (!rep.passed) {
            issues.push_back({r.line, "set fails verification: " + rep.message});
            continue;
        }
        if (canonical_form(r.set) != r.canonical_key) issues.push_back({r.line, "canonical_key does not match recomputation"});
    }
    std::sort(issues.begin(), issues.end(), [](const auto& a, const auto& b) { return a.line < b.line; });
    return issues;
}

} // namespace sds
