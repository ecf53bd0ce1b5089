/*
   Copyright 2026 The bogomolov-toolkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BOGO_FIXTURE_HPP
#define BOGO_FIXTURE_HPP

// Newform fixture files (schema_version 1).
//
// FixtureFile layout:
//   schema_version  integer, must be 1
//   record.label             "N.k.x.y"
//   record.level, .weight    integers
//   record.field_poly        integer coefficients, constant term first
//   record.field_disc        integer or null (unknown)
//   record.hecke_ring_index  integer or null (unknown)
//   record.basis             {"kind":"power"} or
//                            {"kind":"explicit","numerators":[[..]..],"denominators":[..]}
//   record.an                object "n" -> coordinate list
//   provenance               {"source": URL or "manual", "retrieved": date, "note"?: text}
// Integers that do not fit in 64 bits are written as decimal strings.

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "bogo/error.hpp"
#include "bogo/modforms.hpp"

namespace bogo {

inline constexpr int kFixtureSchemaVersion = 1;

struct Provenance {
    std::string source = "manual";
    std::string retrieved;
    std::string note;
};

struct FixtureFile {
    int schema_version = kFixtureSchemaVersion;
    ModFormRecord record;
    Provenance provenance;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

template <class J>
BigInt bigint_from_json(const J& j, const std::string& what) {
    if (j.is_number_integer()) return BigInt(j.template get<long long>());
    if (j.is_string()) {
        const auto s = j.template get<std::string>();
        static const std::regex re("^-?[0-9]+$");
        if (std::regex_match(s, re)) return BigInt(s);
    }
    fail(ErrorKind::SchemaMismatch, what + ": expected an integer");
}

template <class J>
const J& require(const J& obj, const char* key, const std::string& ctx) {
    if (!obj.is_object() || !obj.contains(key)) fail(ErrorKind::SchemaMismatch, ctx + ": missing field '" + key + "'");
    return obj.at(key);
}

template <class J>
std::vector<BigInt> int_list(const J& j, const std::string& what) {
    if (!j.is_array()) fail(ErrorKind::SchemaMismatch, what + ": expected a list");
    std::vector<BigInt> out;
    for (const auto& x : j) out.push_back(bigint_from_json(x, what));
    return out;
}

template <class J>
std::optional<BigInt> optional_int(const J& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    return bigint_from_json(obj.at(key), ctx + "." + key);
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

inline nlohmann::ordered_json record_to_json(const ModFormRecord& rec) {
    using detail::bigint_to_json;
    detail::ojson j;
    j["label"] = rec.label;
    j["level"] = rec.level;
    j["weight"] = rec.weight;
    j["field_poly"] = detail::ojson::array();
    for (const auto& c : rec.field_poly) j["field_poly"].push_back(bigint_to_json(c));
    j["field_disc"] = rec.field_disc ? bigint_to_json(*rec.field_disc) : detail::ojson(nullptr);
    j["hecke_ring_index"] = rec.hecke_ring_index ? bigint_to_json(*rec.hecke_ring_index) : detail::ojson(nullptr);
    detail::ojson b;
    if (rec.basis.kind == HeckeBasis::Kind::Power) {
        b["kind"] = "power";
    } else {
        b["kind"] = "explicit";
        b["numerators"] = detail::ojson::array();
        for (const auto& row : rec.basis.numerators) {
            auto r = detail::ojson::array();
            for (const auto& c : row) r.push_back(bigint_to_json(c));
            b["numerators"].push_back(r);
        }
        b["denominators"] = detail::ojson::array();
        for (const auto& c : rec.basis.denominators) b["denominators"].push_back(bigint_to_json(c));
    }
    j["basis"] = b;
    detail::ojson an = detail::ojson::object();
    for (const auto& [n, c] : rec.an) {
        auto r = detail::ojson::array();
        for (const auto& x : c) r.push_back(bigint_to_json(x));
        an[std::to_string(n)] = r;
    }
    j["an"] = an;
    return j;
}

template <class J>
ModFormRecord record_from_json(const J& j) {
    using namespace detail;
    ModFormRecord rec;
    const std::string ctx = "record";
    const auto& label = require(j, "label", ctx);
    if (!label.is_string()) fail(ErrorKind::SchemaMismatch, "record.label must be a string");
    rec.label = label.template get<std::string>();
    rec.level = static_cast<i64>(bigint_from_json(require(j, "level", ctx), "record.level"));
    rec.weight = static_cast<i64>(bigint_from_json(require(j, "weight", ctx), "record.weight"));
    rec.field_poly = int_list(require(j, "field_poly", ctx), "record.field_poly");
    rec.field_disc = optional_int(j, "field_disc", ctx);
    rec.hecke_ring_index = optional_int(j, "hecke_ring_index", ctx);
    const auto& b = require(j, "basis", ctx);
    const auto& kind = require(b, "kind", "record.basis");
    if (kind == "power") {
        rec.basis.kind = HeckeBasis::Kind::Power;
    } else if (kind == "explicit") {
        rec.basis.kind = HeckeBasis::Kind::Explicit;
        for (const auto& row : require(b, "numerators", "record.basis"))
            rec.basis.numerators.push_back(int_list(row, "record.basis.numerators"));
        rec.basis.denominators = int_list(require(b, "denominators", "record.basis"), "record.basis.denominators");
    } else {
        fail(ErrorKind::SchemaMismatch, "record.basis.kind: unsupported basis convention");
    }
    const auto& an = require(j, "an", ctx);
    if (!an.is_object()) fail(ErrorKind::SchemaMismatch, "record.an must be an object");
    static const std::regex idx("^[1-9][0-9]{0,8}$");
    for (const auto& [key, val] : an.items()) {
        if (!std::regex_match(key, idx)) fail(ErrorKind::SchemaMismatch, "record.an: bad index '" + key + "'");
        rec.an[std::stoll(key)] = int_list(val, "record.an." + key);
    }
    rec.validate();
    return rec;
}

inline FixtureFile parse_fixture(const std::string& text) {
    detail::ojson j;
    try {
        j = detail::ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
    FixtureFile f;
    const auto& v = detail::require(j, "schema_version", "fixture");
    if (!v.is_number_integer() || v.get<int>() != kFixtureSchemaVersion)
        fail(ErrorKind::SchemaMismatch, "fixture: unsupported schema_version");
    f.record = record_from_json(detail::require(j, "record", "fixture"));
    if (j.contains("provenance") && j["provenance"].is_object()) {
        const auto& p = j["provenance"];
        f.provenance.source = p.value("source", "manual");
        f.provenance.retrieved = p.value("retrieved", "");
        f.provenance.note = p.value("note", "");
    }
    return f;
}

inline FixtureFile load_fixture_file(const std::filesystem::path& path) { return parse_fixture(detail::read_file(path)); }

inline ModFormRecord load_fixture(const std::filesystem::path& path) { return load_fixture_file(path).record; }

inline std::string dump_fixture(const ModFormRecord& rec, const Provenance& prov = {}) {
    detail::ojson j;
    j["schema_version"] = kFixtureSchemaVersion;
    j["record"] = record_to_json(rec);
    detail::ojson p;
    p["source"] = prov.source;
    if (!prov.note.empty()) p["note"] = prov.note;
    p["retrieved"] = prov.retrieved;
    j["provenance"] = p;
    return j.dump(1) + "\n";
}

inline void save_fixture(const ModFormRecord& rec, const std::filesystem::path& path, const Provenance& prov = {}) {
    rec.validate();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::InvariantViolation, "cannot write " + path.string());
    out << dump_fixture(rec, prov);
}

}  // namespace bogo

#endif  // BOGO_FIXTURE_HPP
