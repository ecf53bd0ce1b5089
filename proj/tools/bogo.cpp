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

// bogo: command-line front end.
//
//   bogo groups verify --algebra F5xF5 --k 2
//   bogo ram --p 5 --k 2 --n 2
//   bogo bound --p 5 --kind cyclotomic
//   bogo height --coeffs -1,-1,1
//   bogo scan --fixture corpus/73.2.a.c.json --pmax 60
//   bogo fetch --label 73.2.a.c
//
// Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.

#include <algorithm>
#include <chrono>
#include <ctime>
#include <future>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bogo/algebra_spec.hpp"
#include "bogo/heights.hpp"
#include "bogo/lmfdb_client.hpp"
#include "bogo/matgroup.hpp"
#include "bogo/modforms.hpp"
#include "bogo/ramification.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace bogo;

struct Globals {
    std::string format = "json";
    unsigned jobs = 1;
    bool offline = false;
    std::string base_url;
    std::string cache_dir;
    bool timing = false;
};

json big(const BigInt& v) { return detail::bigint_to_json(v); }

void emit(const Globals& g, const json& j, const std::string& table) {
    if (g.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << table;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// ------------------------------------------------------------------ groups

struct Check {
    std::string name;
    std::string status;  // pass, fail, skipped
    json detail;
    double seconds = 0;
};

template <class F>
Check timed(const std::string& name, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c{name, "pass", json::object(), 0};
    body(c);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

int cmd_groups_verify(const Globals& g, const std::string& spec, i64 k) {
    const auto desc = parse_algebra_spec(spec);
    const auto A = desc.build();
    const i64 p = A.p();
    std::vector<Check> checks;

    checks.push_back(timed("unit-squares-span", [&](Check& c) {
        const auto r = span_of_unit_squares(A);
        c.detail["dim"] = r.span.dim();
        c.detail["algebra_dim"] = A.dim();
        c.detail["equals_algebra"] = r.equals_algebra;
        if (!r.equals_algebra) c.status = "fail";
    }));

    std::optional<GroupSet> sl2;
    checks.push_back(timed("sl2-order", [&](Check& c) {
        sl2.emplace(enumerate_SL2(A));
        c.detail["order"] = sl2->order();
        c.detail["predicted"] = predicted_sl2_order(A);
        if (sl2->order() != predicted_sl2_order(A)) c.status = "fail";
    }));

    std::optional<GroupSet> ghat;
    checks.push_back(timed("ghat-order", [&](Check& c) {
        ghat.emplace(enumerate_ghat(A, k));
        const auto expected = sl2->order() * static_cast<u64>(det_image_order(p, k));
        c.detail["order"] = ghat->order();
        c.detail["predicted"] = expected;
        if (ghat->order() != expected) c.status = "fail";
    }));

    checks.push_back(timed("normal-closure-of-diagonal-sl2", [&](Check& c) {
        const ProductAlgebra F(std::vector<LocalAlgebraSpec>{LocalAlgebraSpec::prime_field()}, p);
        std::vector<Mat2> gens;
        for (const auto& m : sl2_generators(F)) gens.push_back(embed_scalar(m, A));
        const auto N = normal_closure(gens, *sl2);
        c.detail["order"] = N.order();
        if (!(N == *sl2)) c.status = "fail";
    }));

    checks.push_back(timed("normal-closure-curated", [&](Check& c) {
        if (p < 5) {
            c.status = "skipped";
            c.detail["reason"] = "needs p >= 5";
            return;
        }
        json rows = json::array();
        for (const auto& H : curated_subgroups(p, k)) {
            std::vector<Mat2> gens;
            for (const auto& m : H.generators) gens.push_back(embed_scalar(m, A));
            const auto N = normal_closure(gens, *ghat);
            const bool ok = N == *ghat;
            rows.push_back({{"subgroup", H.name}, {"closure_order", N.order()}, {"equals_ghat", ok}});
            if (!ok) c.status = "fail";
        }
        c.detail["subgroups"] = rows;
    }));

    checks.push_back(timed("adjoint-orbit-span", [&](Check& c) {
        std::size_t seeds = 0, full = 0;
        for (i64 a = 0; a < p; ++a)
            for (i64 b = 0; b < p; ++b)
                for (i64 cc = 0; cc < p; ++cc) {
                    if (a == 0 && b == 0 && cc == 0) continue;
                    const Mat2 seed(A.scalar(a), A.scalar(b), A.scalar(cc), A.scalar(mod(-a, p)));
                    ++seeds;
                    if (adjoint_orbit_span(seed).is_full()) ++full;
                }
        c.detail["seeds"] = seeds;
        c.detail["full_span"] = full;
        c.detail["target_dim"] = 3 * A.dim();
        if (full != seeds) c.status = "fail";
    }));

    bool all = true;
    for (const auto& c : checks) all = all && c.status != "fail";
    json j;
    j["algebra"] = format_algebra_spec(desc);
    j["p"] = p;
    j["k"] = k;
    j["dim"] = A.dim();
    j["checks"] = json::array();
    std::ostringstream t;
    t << "algebra " << format_algebra_spec(desc) << "  p=" << p << "  k=" << k << "  dim=" << A.dim() << '\n';
    for (const auto& c : checks) {
        json cj{{"name", c.name}, {"status", c.status}, {"detail", c.detail}};
        if (g.timing) cj["seconds"] = c.seconds;
        j["checks"].push_back(cj);
        t << std::left << std::setw(34) << c.name << std::setw(8) << c.status << c.detail.dump();
        if (g.timing) t << "  " << std::fixed << std::setprecision(3) << c.seconds << "s";
        t << '\n';
    }
    j["all_pass"] = all;
    t << "all checks " << (all ? "pass" : "do not pass") << '\n';
    emit(g, j, t.str());
    return 0;
}

// ------------------------------------------------------------------ ram

int cmd_ram(const Globals& g, i64 p, i64 k, i64 n) {
    const auto r = ram_profile(p, k, n);
    json j = to_json(r);
    j["p3_holds"] = r.p3_holds;
    j["ratio_bound"] = ratio_bound_check(p, k, n);
    std::ostringstream t;
    t << "p=" << r.p << " k=" << r.k << " n=" << r.n << " q=" << r.q << " d=" << r.d << " delta=" << r.delta << '\n';
    t << "e_n=" << r.e_n << " i_n=" << r.i_n << '\n';
    const auto inv = [](const std::vector<i64>& v) {
        std::string s;
        for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
        return "[" + s + "]";
    };
    t << "group=" << inv(r.group) << " last_group=" << inv(r.last_group) << '\n';
    t << std::right << std::setw(10) << "i_lo" << std::setw(12) << "i_hi" << std::setw(4) << "j" << std::setw(14)
      << "|G_i|" << '\n';
    for (const auto& x : r.jumps)
        t << std::setw(10) << x.i_lo << std::setw(12) << x.i_hi << std::setw(4) << x.j << std::setw(14) << x.group_order
          << '\n';
    if (!r.p3_holds) t << "warning: (P3) fails, last-group statement not covered\n";
    emit(g, j, t.str());
    return 0;
}

// ------------------------------------------------------------------ bound

int cmd_bound(const Globals& g, i64 p, const std::string& kind, unsigned degK) {
    const BoundKind bk = kind == "cyclotomic" ? BoundKind::Cyclotomic : BoundKind::Modular;
    const auto b = bogomolov_bound(p, bk, degK);
    std::ostringstream l, l10;
    l << std::setprecision(15) << static_cast<double>(b.log_c);
    l10 << std::setprecision(15) << static_cast<double>(b.log10_c);
    json j;
    j["p"] = p;
    j["kind"] = kind;
    if (bk == BoundKind::Modular) j["degK"] = degK;
    j["C1"] = big(b.C1);
    j["C2"] = big(b.C2);
    j["lambda_policy"] = UltrametricAcceleration::name;
    j["lambda"] = big(b.lambda);
    j["expression"] = b.expression;
    j["log_c"] = l.str();
    j["log10_c"] = l10.str();
    j["c"] = b.c_scientific;
    std::ostringstream t;
    t << "p        " << p << '\n'
      << "kind     " << kind << (bk == BoundKind::Modular ? " (degK=" + std::to_string(degK) + ")" : "") << '\n'
      << "C1       " << b.C1 << '\n'
      << "C2       " << b.C2 << '\n'
      << "lambda   " << b.lambda << "  (" << UltrametricAcceleration::name << ")\n"
      << "c        " << b.expression << '\n'
      << "         ~ " << b.c_scientific << "  (log c = " << l.str() << ")\n";
    emit(g, j, t.str());
    return 0;
}

// ------------------------------------------------------------------ height

IntPoly parse_coeffs(const std::string& s) {
    IntPoly f;
    std::stringstream ss(s);
    std::string item;
    static const std::regex re("^\\s*-?[0-9]+\\s*$");
    while (std::getline(ss, item, ',')) {
        if (!std::regex_match(item, re)) fail(ErrorKind::InvalidSpec, "bad coefficient '" + item + "'");
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        f.emplace_back(item);
    }
    if (f.empty()) fail(ErrorKind::InvalidSpec, "no coefficients given");
    return f;
}

int cmd_height(const Globals& g, const std::string& coeffs) {
    const auto a = make_algebraic(parse_coeffs(coeffs));
    const bool torsion = is_root_of_unity(a);
    const auto h = weil_height(a);
    std::ostringstream v, e;
    v << std::fixed << std::setprecision(12) << h.value;
    e << std::scientific << std::setprecision(1) << std::max(h.abs_error, 1e-300);
    json j;
    j["poly"] = a.to_string();
    j["degree"] = a.degree;
    j["irreducible"] = a.irreducible ? json(*a.irreducible) : json(nullptr);
    j["root_of_unity"] = torsion;
    j["height"] = v.str();
    j["error_bound"] = h.abs_error == 0 ? "0" : e.str();
    std::ostringstream t;
    t << "f             " << a.to_string() << '\n'
      << "degree        " << a.degree << '\n'
      << "irreducible   " << (a.irreducible ? yesno(*a.irreducible) : "unchecked") << '\n'
      << "root of unity " << yesno(torsion) << '\n'
      << "height        " << v.str() << '\n';
    emit(g, j, t.str());
    return 0;
}

// ------------------------------------------------------------------ scan / fetch

ClientConfig client_config(const Globals& g) {
    auto cfg = ClientConfig::from_env();
    if (!g.base_url.empty()) cfg.base_url = g.base_url;
    if (!g.cache_dir.empty()) cfg.cache_dir = g.cache_dir;
    if (g.offline) cfg.offline = true;
    return cfg;
}

std::vector<AssumptionReport> parallel_scan(const ModFormRecord& rec, i64 p_max, unsigned jobs) {
    if (jobs <= 1) return scan(rec, p_max);
    require_prime_coefficients(rec, p_max);
    const auto primes = primes_up_to(p_max);
    std::vector<std::future<std::vector<AssumptionReport>>> parts;
    const std::size_t chunk = (primes.size() + jobs - 1) / jobs;
    for (std::size_t lo = 0; lo < primes.size(); lo += chunk) {
        const std::size_t hi = std::min(primes.size(), lo + chunk);
        parts.push_back(std::async(std::launch::async, [&rec, &primes, lo, hi] {
            std::vector<AssumptionReport> out;
            for (std::size_t i = lo; i < hi; ++i)
                if (check_P1(rec, primes[i])) out.push_back(assess(rec, primes[i]));
            return out;
        }));
    }
    std::vector<AssumptionReport> out;
    for (auto& f : parts)
        for (auto& r : f.get()) out.push_back(std::move(r));
    return out;
}

int cmd_scan(const Globals& g, const std::string& fixture, const std::string& label, i64 p_max) {
    const ModFormRecord rec = !fixture.empty() ? load_fixture(fixture) : fetch_form(label, client_config(g));
    const auto reports = parallel_scan(rec, p_max, g.jobs);
    json j;
    j["label"] = rec.label;
    j["level"] = rec.level;
    j["weight"] = rec.weight;
    j["degK"] = rec.degK();
    j["p_max"] = p_max;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    emit(g, j, reports_table(reports));
    return 0;
}

std::string today() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[16];
    std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
    return buf;
}

int cmd_fetch(const Globals& g, const std::string& label, const std::string& out) {
    const auto cfg = client_config(g);
    const auto rec = fetch_form(label, cfg);
    const Provenance prov{cfg.base_url, today(), ""};
    if (!out.empty()) save_fixture(rec, out, prov);
    if (g.format == "json") {
        std::cout << dump_fixture(rec, prov);
    } else {
        std::cout << "label        " << rec.label << '\n'
                  << "level        " << rec.level << '\n'
                  << "weight       " << rec.weight << '\n'
                  << "degK         " << rec.degK() << '\n'
                  << "coefficients " << rec.an.size() << '\n';
    }
    return 0;
}

void report_error(const std::string& kind, const std::string& message) {
    json e;
    e["error"] = kind;
    e["message"] = message;
    std::cerr << e.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for Bogomolov-type height bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--offline", g.offline, "Forbid network access");
    app.add_option("--base-url", g.base_url, "Database base URL");
    app.add_option("--cache-dir", g.cache_dir, "Directory for cached responses");
    app.add_flag("--timing", g.timing, "Include wall-clock timings (output no longer reproducible)");

    std::function<int()> run;

    auto* groups = app.add_subcommand("groups", "Finite-ring matrix group checks");
    groups->require_subcommand(1);
    auto* verify = groups->add_subcommand("verify", "Run the brute-force suite on one algebra");
    std::string alg;
    i64 k = 2;
    verify->add_option("--algebra", alg, "Algebra, e.g. F5xF5 or F5[x]/x^2")->required();
    verify->add_option("--k", k, "Weight");
    verify->callback([&] { run = [&] { return cmd_groups_verify(g, alg, k); }; });

    auto* ram = app.add_subcommand("ram", "Ramification filtration");
    i64 rp = 0, rk = 0, rn = 0;
    ram->add_option("--p", rp)->required();
    ram->add_option("--k", rk)->required();
    ram->add_option("--n", rn)->required();
    ram->callback([&] { run = [&] { return cmd_ram(g, rp, rk, rn); }; });

    auto* bound = app.add_subcommand("bound", "Explicit height lower bound");
    i64 bp = 0;
    std::string kind = "cyclotomic";
    unsigned degk = 1;
    bound->add_option("--p", bp)->required();
    bound->add_option("--kind", kind)->check(CLI::IsMember({"cyclotomic", "modular"}));
    bound->add_option("--degk", degk)->check(CLI::Range(1u, 64u));
    bound->callback([&] { run = [&] { return cmd_bound(g, bp, kind, degk); }; });

    auto* height = app.add_subcommand("height", "Weil height of an algebraic number");
    std::string coeffs;
    height->add_option("--coeffs", coeffs, "Minimal polynomial, constant term first")->required()->allow_extra_args(false);
    height->callback([&] { run = [&] { return cmd_height(g, coeffs); }; });

    auto* scan_cmd = app.add_subcommand("scan", "Check (P0)-(P3) over primes up to pmax");
    std::string fixture, slabel;
    i64 pmax = 100;
    auto* fx = scan_cmd->add_option("--fixture", fixture, "Fixture file");
    auto* lb = scan_cmd->add_option("--label", slabel, "Newform label");
    fx->excludes(lb);
    scan_cmd->add_option("--pmax", pmax);
    scan_cmd->callback([&] {
        if (fixture.empty() && slabel.empty()) throw CLI::RequiredError("--fixture or --label");
        run = [&] { return cmd_scan(g, fixture, slabel, pmax); };
    });

    auto* fetch = app.add_subcommand("fetch", "Download a newform and print it as a fixture");
    std::string flabel, fout;
    fetch->add_option("--label", flabel)->required();
    fetch->add_option("--out", fout, "Also write the fixture here");
    fetch->callback([&] { run = [&] { return cmd_fetch(g, flabel, fout); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return run();
    } catch (const Error& e) {
        report_error(std::string(to_string(e.kind())), e.what());
        return 1;
    } catch (const std::exception& e) {
        report_error("Internal", e.what());
        return 1;
    }
}
