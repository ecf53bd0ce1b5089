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

#ifndef BOGO_LMFDB_CLIENT_HPP
#define BOGO_LMFDB_CLIENT_HPP

// HTTP client for the modular-forms database JSON API with a per-label raw
// cache. Fetched forms are normalised into the same record type the fixture
// files hold.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "bogo/error.hpp"
#include "bogo/fixture.hpp"
#include "bogo/modforms.hpp"

namespace bogo {

struct ClientConfig {
    std::string base_url = "https://www.lmfdb.org";
    int timeout = 30;  // seconds
    std::filesystem::path cache_dir;
    bool offline = false;
    std::string newform_route = "/api/mf_newforms/?label={label}&_format=json";
    std::string hecke_route = "/api/mf_hecke_nf/?label={label}&_format=json";
    std::size_t coefficient_bound = 100;

    /// Defaults overridden by BOGO_LMFDB_BASE_URL, BOGO_CACHE_DIR, BOGO_OFFLINE.
    static ClientConfig from_env() {
        ClientConfig c;
        if (const char* v = std::getenv("BOGO_LMFDB_BASE_URL"); v && *v) c.base_url = v;
        if (const char* v = std::getenv("BOGO_CACHE_DIR"); v && *v) c.cache_dir = v;
        if (const char* v = std::getenv("BOGO_OFFLINE"); v && *v && std::string(v) != "0") c.offline = true;
        return c;
    }
};

inline bool is_wellformed_label(const std::string& label) {
    static const std::regex re("^[1-9][0-9]*\\.[1-9][0-9]*\\.[a-z]+\\.[a-z]+$");
    return std::regex_match(label, re);
}

inline void validate_label(const std::string& label) {
    if (!is_wellformed_label(label)) fail(ErrorKind::MalformedLabel, "'" + label + "' is not of the form N.k.x.y");
}

/// Raw upstream bodies for one label, exactly as received.
struct RawPayload {
    std::string newform;
    std::string hecke;

    bool operator==(const RawPayload&) const = default;
};

namespace detail {

inline ojson first_row(const std::string& body, const std::string& what) {
    ojson j;
    try {
        j = ojson::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::SchemaMismatch, what + ": response is not JSON");
    }
    const auto& data = require(j, "data", what);
    if (!data.is_array()) fail(ErrorKind::SchemaMismatch, what + ": 'data' is not a list");
    if (data.empty()) fail(ErrorKind::NotFound, what + ": no rows");
    return data.front();
}

inline std::vector<BigInt> coefficient_vector(const ojson& v, std::size_t dim, const std::string& what) {
    std::vector<BigInt> c = v.is_array() ? int_list(v, what) : std::vector<BigInt>{bigint_from_json(v, what)};
    if (c.size() != dim) fail(ErrorKind::SchemaMismatch, what + ": coordinate length differs from the field degree");
    return c;
}

inline std::string expand_route(std::string route, const std::string& label) {
    for (std::size_t at; (at = route.find("{label}")) != std::string::npos;) route.replace(at, 7, label);
    return route;
}

}  // namespace detail

/// Pure function of the raw payload. Handles the power-basis and the
/// explicit numerator/denominator conventions; anything else is rejected.
inline ModFormRecord normalize_payload(const std::string& label, const RawPayload& raw, std::size_t bound) {
    using namespace detail;
    const auto nf = first_row(raw.newform, "newform");
    const auto hk = first_row(raw.hecke, "hecke");
    ModFormRecord rec;
    rec.label = require(nf, "label", "newform").get<std::string>();
    if (rec.label != label) fail(ErrorKind::SchemaMismatch, "newform: label mismatch");
    rec.level = static_cast<i64>(bigint_from_json(require(nf, "level", "newform"), "newform.level"));
    rec.weight = static_cast<i64>(bigint_from_json(require(nf, "weight", "newform"), "newform.weight"));
    const auto dim = static_cast<std::size_t>(bigint_from_json(require(nf, "dim", "newform"), "newform.dim"));
    if (nf.contains("field_poly") && !nf["field_poly"].is_null())
        rec.field_poly = int_list(nf["field_poly"], "newform.field_poly");
    else if (dim == 1)
        rec.field_poly = {0, 1};
    else
        fail(ErrorKind::SchemaMismatch, "newform: field_poly missing");
    if (rec.field_poly.size() != dim + 1) fail(ErrorKind::SchemaMismatch, "newform: field_poly degree differs from dim");
    rec.field_disc = optional_int(nf, "field_disc", "newform");
    rec.hecke_ring_index = optional_int(nf, "hecke_ring_index", "newform");
    if (!rec.field_disc && dim == 1) rec.field_disc = 1;
    if (!rec.hecke_ring_index && dim == 1) rec.hecke_ring_index = 1;

    const bool power = hk.value("hecke_ring_power_basis", dim == 1);
    if (power) {
        rec.basis.kind = HeckeBasis::Kind::Power;
    } else if (hk.contains("hecke_ring_numerators") && hk.contains("hecke_ring_denominators")) {
        rec.basis.kind = HeckeBasis::Kind::Explicit;
        for (const auto& row : hk["hecke_ring_numerators"])
            rec.basis.numerators.push_back(coefficient_vector(row, dim, "hecke.hecke_ring_numerators"));
        rec.basis.denominators = int_list(hk["hecke_ring_denominators"], "hecke.hecke_ring_denominators");
    } else {
        fail(ErrorKind::SchemaMismatch, "hecke: unrecognised basis convention");
    }
    const auto& an = require(hk, "an", "hecke");
    if (!an.is_array()) fail(ErrorKind::SchemaMismatch, "hecke.an is not a list");
    if (an.size() < bound)
        fail(ErrorKind::InsufficientCoefficients, label + ": " + std::to_string(an.size()) + " coefficients, need " +
                                                      std::to_string(bound));
    for (std::size_t n = 1; n <= an.size(); ++n)
        rec.an[static_cast<i64>(n)] = coefficient_vector(an[n - 1], dim, "hecke.an");
    try {
        rec.validate();
    } catch (const Error& e) {
        fail(ErrorKind::SchemaMismatch, std::string("normalised record invalid: ") + e.what());
    }
    return rec;
}

inline std::filesystem::path cache_path(const ClientConfig& cfg, const std::string& label) {
    return cfg.cache_dir / (label + ".json");
}

inline std::optional<RawPayload> cache_read(const ClientConfig& cfg, const std::string& label) {
    if (cfg.cache_dir.empty()) return std::nullopt;
    const auto path = cache_path(cfg, label);
    if (!std::filesystem::exists(path)) return std::nullopt;
    detail::ojson j;
    try {
        j = detail::ojson::parse(detail::read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, "cache entry " + path.string() + ": " + e.what());
    }
    return RawPayload{detail::require(j, "newform", "cache").get<std::string>(),
                      detail::require(j, "hecke", "cache").get<std::string>()};
}

/// Writes via a temporary and rename. An existing entry with identical
/// content is left alone; different content raises CacheConflict.
inline void cache_write(const ClientConfig& cfg, const std::string& label, const RawPayload& raw) {
    if (cfg.cache_dir.empty()) return;
    std::filesystem::create_directories(cfg.cache_dir);
    const auto path = cache_path(cfg, label);
    if (auto old = cache_read(cfg, label)) {
        if (*old == raw) return;
        fail(ErrorKind::CacheConflict, "cache entry for " + label + " differs from the new response");
    }
    detail::ojson j;
    j["newform"] = raw.newform;
    j["hecke"] = raw.hecke;
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

namespace detail {

inline std::string http_get(const ClientConfig& cfg, const std::string& route) {
    if (cfg.offline) fail(ErrorKind::OfflineViolation, "network access attempted in offline mode");
    httplib::Client cli(cfg.base_url);
    if (!cli.is_valid()) fail(ErrorKind::NetworkError, "unusable base url " + cfg.base_url);
    cli.set_connection_timeout(cfg.timeout, 0);
    cli.set_read_timeout(cfg.timeout, 0);
    cli.set_follow_location(true);
    auto res = cli.Get(route);
    if (!res) fail(ErrorKind::NetworkError, "GET " + route + ": " + httplib::to_string(res.error()));
    if (res->status == 404) fail(ErrorKind::NotFound, "GET " + route + ": 404");
    if (res->status != 200) fail(ErrorKind::NetworkError, "GET " + route + ": HTTP " + std::to_string(res->status));
    return res->body;
}

}  // namespace detail

/// Cache first, then network. With cfg.offline a cache miss is an
/// OfflineViolation and no socket is opened.
inline ModFormRecord fetch_form(const std::string& label, const ClientConfig& cfg) {
    validate_label(label);
    if (auto hit = cache_read(cfg, label)) return normalize_payload(label, *hit, cfg.coefficient_bound);
    if (cfg.offline) fail(ErrorKind::OfflineViolation, label + " is not cached and offline mode is set");
    RawPayload raw;
    raw.newform = detail::http_get(cfg, detail::expand_route(cfg.newform_route, label));
    raw.hecke = detail::http_get(cfg, detail::expand_route(cfg.hecke_route, label));
    auto rec = normalize_payload(label, raw, cfg.coefficient_bound);
    cache_write(cfg, label, raw);
    return rec;
}

}  // namespace bogo

#endif  // BOGO_LMFDB_CLIENT_HPP
