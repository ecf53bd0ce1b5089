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

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include "bogo/lmfdb_client.hpp"

namespace {

using namespace bogo;
namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

const std::vector<std::string> kLabels{"73.2.a.c",  "167.2.a.a",  "383.2.a.a", "151.2.a.a", "186.4.a.a",
                                       "210.4.a.e", "1265.4.a.c", "390.6.a.c", "66.8.a.a"};

fs::path corpus(const std::string& label) { return fs::path(BOGO_CORPUS_DIR) / (label + ".json"); }

fs::path scratch(const std::string& name) {
    auto d = fs::temp_directory_path() / ("bogo_client_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

template <class Mutate>
std::string mutated_fixture(const std::string& label, Mutate m) {
    auto j = ojson::parse(detail::read_file(corpus(label)));
    m(j);
    return j.dump();
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return static_cast<ErrorKind>(-1);
}

TEST(Fixture, RoundTripAllCorpus) {
    const auto dir = scratch("rt");
    for (const auto& l : kLabels) {
        const auto file = load_fixture_file(corpus(l));
        EXPECT_EQ(file.record.label, l);
        EXPECT_EQ(file.provenance.source, "manual");
        save_fixture(file.record, dir / "x.json", file.provenance);
        const auto back = load_fixture(dir / "x.json");
        EXPECT_EQ(back, file.record) << l;
        // the shipped files are in canonical form
        EXPECT_EQ(detail::read_file(dir / "x.json"), detail::read_file(corpus(l))) << l;
    }
    fs::remove_all(dir);
}

TEST(Fixture, Errors) {
    EXPECT_EQ(kind_of([] { parse_fixture("{not json"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { load_fixture("/nonexistent/file.json"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_fixture(mutated_fixture("73.2.a.c", [](ojson& j) { j["record"]["an"]["1"] = {0, 0}; })); }),
              ErrorKind::InvariantViolation);
    EXPECT_EQ(kind_of([] { parse_fixture(mutated_fixture("73.2.a.c", [](ojson& j) { j["record"].erase("field_poly"); })); }),
              ErrorKind::SchemaMismatch);
    EXPECT_EQ(kind_of([] { parse_fixture(mutated_fixture("73.2.a.c", [](ojson& j) { j["schema_version"] = 2; })); }),
              ErrorKind::SchemaMismatch);
    EXPECT_EQ(kind_of([] { parse_fixture(mutated_fixture("73.2.a.c", [](ojson& j) { j["record"]["basis"]["kind"] = "mystery"; })); }),
              ErrorKind::SchemaMismatch);
    EXPECT_EQ(kind_of([] { parse_fixture(mutated_fixture("73.2.a.c", [](ojson& j) { j["record"]["an"]["2"] = {1}; })); }),
              ErrorKind::InvariantViolation);
    EXPECT_EQ(kind_of([] { parse_fixture(mutated_fixture("73.2.a.c", [](ojson& j) { j["record"]["weight"] = 3; })); }),
              ErrorKind::InvariantViolation);
    EXPECT_EQ(kind_of([] { parse_fixture(mutated_fixture("73.2.a.c", [](ojson& j) { j["record"]["an"]["x"] = {0, 0}; })); }),
              ErrorKind::SchemaMismatch);
}

TEST(Fixture, OptionalFieldsAndBigIntegers) {
    auto text = mutated_fixture("73.2.a.c", [](ojson& j) {
        j["record"]["field_disc"] = nullptr;
        j["record"].erase("hecke_ring_index");
        j["record"]["an"]["100"] = {"123456789012345678901234567890", 0};
    });
    const auto rec = parse_fixture(text).record;
    EXPECT_FALSE(rec.field_disc.has_value());
    EXPECT_FALSE(rec.hecke_ring_index.has_value());
    EXPECT_EQ(rec.an.at(100)[0], BigInt("123456789012345678901234567890"));
    const auto again = parse_fixture(dump_fixture(rec)).record;
    EXPECT_EQ(again, rec);
}

TEST(Labels, Shape) {
    for (const char* ok : {"73.2.a.c", "1265.4.a.c", "11.2.a.a", "23.1.b.aa"}) EXPECT_TRUE(is_wellformed_label(ok)) << ok;
    for (const char* bad : {"73", "73.2", "73.2.a", "73.2.a.C", "0.2.a.a", "73.2.1.a", "73.2.a.c ", "a.2.a.c"})
        EXPECT_FALSE(is_wellformed_label(bad)) << bad;
}

// ---------------------------------------------------------------- local server

// Serves database-shaped responses built from the corpus and counts requests.
class FakeDatabase {
public:
    FakeDatabase() {
        server_.set_pre_routing_handler([this](const httplib::Request&, httplib::Response&) {
            ++requests;
            return httplib::Server::HandlerResponse::Unhandled;
        });
        server_.Get("/api/mf_newforms/", [this](const httplib::Request& req, httplib::Response& res) {
            respond(req, res, true);
        });
        server_.Get("/api/mf_hecke_nf/", [this](const httplib::Request& req, httplib::Response& res) {
            respond(req, res, false);
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~FakeDatabase() {
        server_.stop();
        thread_.join();
    }

    std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

    std::atomic<int> requests{0};
    std::size_t coefficient_count = 100;
    bool explicit_basis = false;
    std::string override_hecke;

private:
    void respond(const httplib::Request& req, httplib::Response& res, bool newform) {
        const auto label = req.get_param_value("label");
        if (label == "404.2.a.a") {
            res.status = 404;
            return;
        }
        ojson body;
        body["data"] = ojson::array();
        if (!fs::exists(corpus(label))) {
            res.set_content(body.dump(), "application/json");
            return;
        }
        if (!newform && !override_hecke.empty()) {
            res.set_content(override_hecke, "application/json");
            return;
        }
        const auto rec = load_fixture(corpus(label));
        const std::size_t dim = rec.degK();
        ojson row;
        if (newform) {
            row["label"] = rec.label;
            row["level"] = rec.level;
            row["weight"] = rec.weight;
            row["dim"] = dim;
            if (dim > 1) row["field_poly"] = record_to_json(rec)["field_poly"];
            if (dim > 1) row["field_disc"] = record_to_json(rec)["field_disc"];
            if (dim > 1) row["hecke_ring_index"] = record_to_json(rec)["hecke_ring_index"];
        } else {
            row["label"] = rec.label;
            ojson an = ojson::array();
            for (std::size_t n = 1; n <= coefficient_count; ++n) {
                ojson c = ojson::array();
                for (const auto& x : rec.an.at(static_cast<i64>(n))) c.push_back(detail::bigint_to_json(x));
                if (explicit_basis && dim == 2) c[1] = -c[1].get<long long>();  // basis 1, -y
                an.push_back(dim == 1 ? c[0] : c);
            }
            row["an"] = an;
            if (explicit_basis && dim == 2) {
                row["hecke_ring_power_basis"] = false;
                row["hecke_ring_numerators"] = {{1, 0}, {0, -1}};
                row["hecke_ring_denominators"] = {1, 1};
            } else {
                row["hecke_ring_power_basis"] = true;
            }
        }
        body["data"].push_back(row);
        res.set_content(body.dump(), "application/json");
    }

    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

ClientConfig config_for(const FakeDatabase& db, const fs::path& cache) {
    ClientConfig c;
    c.base_url = db.url();
    c.cache_dir = cache;
    c.timeout = 5;
    return c;
}

TEST(Fetch, MatchesFixtures) {
    FakeDatabase db;
    const auto cache = scratch("fetch");
    const auto cfg = config_for(db, cache);
    for (const auto& l : kLabels) {
        const auto rec = fetch_form(l, cfg);
        EXPECT_EQ(rec, load_fixture(corpus(l))) << l;
    }
    EXPECT_EQ(db.requests, 18);
    const auto r73 = fetch_form("73.2.a.c", cfg);
    EXPECT_EQ(r73.level, 73);
    EXPECT_EQ(r73.degK(), 2u);
    EXPECT_EQ(*r73.field_disc, 13);
    EXPECT_EQ(fetch_form("151.2.a.a", cfg).degK(), 3u);
    EXPECT_EQ(db.requests, 18);  // cache hits
    fs::remove_all(cache);
}

TEST(Fetch, MalformedLabelNeverTouchesNetwork) {
    FakeDatabase db;
    const auto cfg = config_for(db, scratch("malformed"));
    EXPECT_EQ(kind_of([&] { fetch_form("73", cfg); }), ErrorKind::MalformedLabel);
    EXPECT_EQ(kind_of([&] { fetch_form("../../etc/passwd", cfg); }), ErrorKind::MalformedLabel);
    EXPECT_EQ(db.requests, 0);
}

TEST(Fetch, OfflineHarness) {
    FakeDatabase db;
    const auto cache = scratch("offline");
    auto cfg = config_for(db, cache);
    cfg.offline = true;
    EXPECT_EQ(kind_of([&] { fetch_form("73.2.a.c", cfg); }), ErrorKind::OfflineViolation);
    EXPECT_EQ(kind_of([&] { detail::http_get(cfg, "/"); }), ErrorKind::OfflineViolation);
    EXPECT_EQ(db.requests, 0);
    // populate the cache online, then serve it offline without I/O
    cfg.offline = false;
    const auto online = fetch_form("73.2.a.c", cfg);
    const int after = db.requests;
    cfg.offline = true;
    EXPECT_EQ(fetch_form("73.2.a.c", cfg), online);
    EXPECT_EQ(db.requests, after);
    fs::remove_all(cache);
}

TEST(Fetch, CacheIsRawAndConflictsAreRejected) {
    FakeDatabase db;
    const auto cache = scratch("cache");
    const auto cfg = config_for(db, cache);
    fetch_form("73.2.a.c", cfg);
    const auto raw = cache_read(cfg, "73.2.a.c");
    ASSERT_TRUE(raw.has_value());
    httplib::Client cli(db.url());
    EXPECT_EQ(raw->newform, cli.Get("/api/mf_newforms/?label=73.2.a.c&_format=json")->body);
    EXPECT_EQ(raw->hecke, cli.Get("/api/mf_hecke_nf/?label=73.2.a.c&_format=json")->body);
    // normalisation is a pure function of the cached bytes
    EXPECT_EQ(normalize_payload("73.2.a.c", *raw, 100), fetch_form("73.2.a.c", cfg));
    cache_write(cfg, "73.2.a.c", *raw);  // identical content is fine
    auto other = *raw;
    other.hecke += " ";
    EXPECT_EQ(kind_of([&] { cache_write(cfg, "73.2.a.c", other); }), ErrorKind::CacheConflict);
    fs::remove_all(cache);
}

TEST(Fetch, ConcurrentSameLabel) {
    FakeDatabase db;
    const auto cache = scratch("concurrent");
    const auto cfg = config_for(db, cache);
    std::vector<std::thread> threads;
    std::vector<ModFormRecord> out(6);
    std::atomic<int> failures{0};
    for (std::size_t i = 0; i < out.size(); ++i)
        threads.emplace_back([&, i] {
            try {
                out[i] = fetch_form(i % 2 ? "73.2.a.c" : "151.2.a.a", cfg);
            } catch (...) {
                ++failures;
            }
        });
    for (auto& t : threads) t.join();
    EXPECT_EQ(failures, 0);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], load_fixture(corpus(i % 2 ? "73.2.a.c" : "151.2.a.a")));
    EXPECT_EQ(std::distance(fs::directory_iterator(cache), fs::directory_iterator{}), 2);
    fs::remove_all(cache);
}

TEST(Fetch, ExplicitBasisIsKeptAsUpstream) {
    FakeDatabase db;
    db.explicit_basis = true;
    auto cfg = config_for(db, scratch("explicit"));
    const auto rec = fetch_form("73.2.a.c", cfg);
    const auto ref = load_fixture(corpus("73.2.a.c"));
    EXPECT_EQ(rec.basis.kind, HeckeBasis::Kind::Explicit);
    EXPECT_NE(rec.an, ref.an);  // stored in the upstream basis
    for (i64 n = 1; n <= 100; ++n) EXPECT_EQ(rec.coefficient(n), ref.coefficient(n)) << n;
    fs::remove_all(cfg.cache_dir);
}

TEST(Fetch, UpstreamErrors) {
    FakeDatabase db;
    auto cfg = config_for(db, scratch("errors"));
    EXPECT_EQ(kind_of([&] { fetch_form("404.2.a.a", cfg); }), ErrorKind::NotFound);
    EXPECT_EQ(kind_of([&] { fetch_form("999.2.a.a", cfg); }), ErrorKind::NotFound);
    cfg.coefficient_bound = 200;
    EXPECT_EQ(kind_of([&] { fetch_form("73.2.a.c", cfg); }), ErrorKind::InsufficientCoefficients);
    cfg.coefficient_bound = 100;
    db.override_hecke = R"({"data":[{"label":"73.2.a.c","an":[[1,0]],"hecke_ring_power_basis":false}]})";
    EXPECT_EQ(kind_of([&] { fetch_form("73.2.a.c", cfg); }), ErrorKind::SchemaMismatch);
    db.override_hecke = "<html>maintenance</html>";
    EXPECT_EQ(kind_of([&] { fetch_form("73.2.a.c", cfg); }), ErrorKind::SchemaMismatch);
    db.override_hecke.clear();
    EXPECT_FALSE(cache_read(cfg, "73.2.a.c").has_value());  // nothing cached on failure
    cfg.newform_route = "/nowhere?label={label}";
    EXPECT_EQ(kind_of([&] { fetch_form("73.2.a.c", cfg); }), ErrorKind::NotFound);

    ClientConfig dead;
    dead.base_url = "http://127.0.0.1:9";
    dead.timeout = 2;
    EXPECT_EQ(kind_of([&] { fetch_form("73.2.a.c", dead); }), ErrorKind::NetworkError);
    fs::remove_all(cfg.cache_dir);
}

TEST(Config, EnvironmentOverrides) {
    ::setenv("BOGO_LMFDB_BASE_URL", "http://example.invalid", 1);
    ::setenv("BOGO_CACHE_DIR", "/tmp/bogo-cache-test", 1);
    ::setenv("BOGO_OFFLINE", "1", 1);
    auto c = ClientConfig::from_env();
    EXPECT_EQ(c.base_url, "http://example.invalid");
    EXPECT_EQ(c.cache_dir, fs::path("/tmp/bogo-cache-test"));
    EXPECT_TRUE(c.offline);
    ::unsetenv("BOGO_LMFDB_BASE_URL");
    ::unsetenv("BOGO_CACHE_DIR");
    ::unsetenv("BOGO_OFFLINE");
    c = ClientConfig::from_env();
    EXPECT_EQ(c.base_url, "https://www.lmfdb.org");
    EXPECT_TRUE(c.cache_dir.empty());
    EXPECT_FALSE(c.offline);
}

}  // namespace
