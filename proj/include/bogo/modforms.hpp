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

#ifndef BOGO_MODFORMS_HPP
#define BOGO_MODFORMS_HPP

// Newform eigenvalue records and the checker for the four hypotheses
// (P0) p does not divide N, (P1) a_p = 0, (P2) large image mod p (graded
// evidence only), (P3) p >= 5 with p and (p+1)/2 not dividing k - 1.

#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bogo/error.hpp"
#include "bogo/number_field.hpp"
#include "bogo/numeric.hpp"
#include "bogo/ramification.hpp"

namespace bogo {

/// Basis of K_f in which the a_n coordinates are written. `Power` is
/// 1, y, .., y^{d-1}; `Explicit` lists basis vector j as
/// numerators[j] / denominators[j] in the power basis.
struct HeckeBasis {
    enum class Kind { Power, Explicit };
    Kind kind = Kind::Power;
    std::vector<std::vector<BigInt>> numerators;
    std::vector<BigInt> denominators;

    bool operator==(const HeckeBasis&) const = default;
};

struct ModFormRecord {
    std::string label;
    i64 level = 0;
    i64 weight = 0;
    std::vector<BigInt> field_poly;  // defines K_f, constant term first
    std::optional<BigInt> field_disc;
    std::optional<BigInt> hecke_ring_index;  // 1 when O_f is generated by the a_n
    HeckeBasis basis;
    std::map<i64, std::vector<BigInt>> an;  // n -> coordinates of a_n

    std::size_t degK() const noexcept { return field_poly.empty() ? 0 : field_poly.size() - 1; }

    bool has_coefficient(i64 n) const { return an.count(n) != 0; }

    const std::vector<BigInt>& coords(i64 n) const {
        const auto it = an.find(n);
        if (it == an.end())
            fail(ErrorKind::MissingCoefficient, label + ": a_" + std::to_string(n) + " is not in the record");
        return it->second;
    }

    /// a_n as an element of K_f (power-basis coordinates).
    NFElement coefficient(i64 n) const {
        auto K = std::make_shared<const NumberField>(field_poly);
        const auto& c = coords(n);
        std::vector<Rational> out(degK(), Rational(0));
        if (basis.kind == HeckeBasis::Kind::Power) {
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = Rational(c[i]);
        } else {
            for (std::size_t j = 0; j < c.size(); ++j)
                for (std::size_t i = 0; i < out.size(); ++i)
                    out[i] += Rational(c[j] * basis.numerators[j][i], basis.denominators[j]);
        }
        return {std::move(K), std::move(out)};
    }

    bool operator==(const ModFormRecord&) const = default;

    /// Checks the structural invariants; throws InvariantViolation.
    void validate() const {
        if (level < 1) fail(ErrorKind::InvariantViolation, label + ": level must be positive");
        if (weight < 2 || weight % 2 != 0) fail(ErrorKind::InvariantViolation, label + ": weight must be even and >= 2");
        if (degK() < 1 || field_poly.back() != 1) fail(ErrorKind::InvariantViolation, label + ": field polynomial must be monic of degree >= 1");
        if (basis.kind == HeckeBasis::Kind::Explicit &&
            (basis.numerators.size() != degK() || basis.denominators.size() != degK()))
            fail(ErrorKind::InvariantViolation, label + ": explicit basis has the wrong size");
        for (const auto& [n, c] : an)
            if (c.size() != degK())
                fail(ErrorKind::InvariantViolation, label + ": a_" + std::to_string(n) + " has the wrong number of coordinates");
        if (!has_coefficient(1)) fail(ErrorKind::InvariantViolation, label + ": a_1 missing");
        const auto a1 = coefficient(1);
        if (!(a1 == NFElement::from_int(a1.field(), 1)))
            fail(ErrorKind::InvariantViolation, label + ": a_1 must equal 1 for a normalised eigenform");
    }
};

inline bool check_P0(i64 N, i64 p) {
    if (N < 1) fail(ErrorKind::PreconditionViolated, "level must be positive");
    if (!is_prime(p)) fail(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    return N % p != 0;
}

/// a_p == 0 exactly, by coordinates.
inline bool check_P1(const ModFormRecord& rec, i64 p) {
    for (const auto& c : rec.coords(p))
        if (c != 0) return false;
    return true;
}

struct P3Result {
    bool holds;
    bool footnote_sufficient;  // p >= 2k - 1, which implies holds
};

inline P3Result check_P3(i64 p, i64 k) {
    if (!is_prime(p)) fail(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    return {p3_condition(p, k), p >= 2 * k - 1};
}

enum class P2Evidence { ProvenRibetCriterion, HeuristicRationalField, Unknown };

inline std::string to_string(P2Evidence e) {
    switch (e) {
    case P2Evidence::ProvenRibetCriterion: return "ProvenRibetCriterion";
    case P2Evidence::HeuristicRationalField: return "HeuristicRationalField";
    case P2Evidence::Unknown: return "Unknown";
    }
    return "Unknown";
}

/// Ribet's sufficient condition for weight 2 and prime level: p does not
/// divide 6(N-1), K_f unramified at p (p does not divide disc), O_f generated
/// by the a_n (index 1). For K_f = Q and a_p = 0 the large-image conditions
/// are automatic up to finitely many p; reported as heuristic only.
inline P2Evidence check_P2_evidence(const ModFormRecord& rec, i64 p) {
    if (rec.weight == 2 && is_prime(rec.level) && (6 * (rec.level - 1)) % p != 0 && rec.field_disc &&
        *rec.field_disc % p != 0 && rec.hecke_ring_index && *rec.hecke_ring_index == 1)
        return P2Evidence::ProvenRibetCriterion;
    if (rec.degK() == 1 && rec.has_coefficient(p) && check_P1(rec, p)) return P2Evidence::HeuristicRationalField;
    return P2Evidence::Unknown;
}

struct AssumptionReport {
    std::string label;
    i64 p;
    i64 k;
    bool P0;
    bool P1;
    bool P3;
    P2Evidence P2_evidence;
    bool eligible;  // P0 and P1 and P3
    bool overall;   // eligible and P2 evidence is not Unknown
};

inline AssumptionReport assess(const ModFormRecord& rec, i64 p) {
    AssumptionReport r{rec.label, p, rec.weight, check_P0(rec.level, p), check_P1(rec, p),
                       check_P3(p, rec.weight).holds, check_P2_evidence(rec, p), false, false};
    r.eligible = r.P0 && r.P1 && r.P3;
    r.overall = r.eligible && r.P2_evidence != P2Evidence::Unknown;
    return r;
}

/// Throws MissingCoefficient naming every prime p <= p_max without a_p.
inline void require_prime_coefficients(const ModFormRecord& rec, i64 p_max) {
    std::vector<i64> missing;
    for (i64 p : primes_up_to(p_max))
        if (!rec.has_coefficient(p)) missing.push_back(p);
    if (!missing.empty()) {
        std::string list;
        for (i64 p : missing) list += (list.empty() ? "" : ",") + std::to_string(p);
        fail(ErrorKind::MissingCoefficient, rec.label + ": no a_p for p in {" + list + "}");
    }
}

/// One report per prime p <= p_max with a_p = 0, ascending in p.
inline std::vector<AssumptionReport> scan(const ModFormRecord& rec, i64 p_max) {
    require_prime_coefficients(rec, p_max);
    std::vector<AssumptionReport> out;
    for (i64 p : primes_up_to(p_max))
        if (check_P1(rec, p)) out.push_back(assess(rec, p));
    return out;
}

inline nlohmann::ordered_json to_json(const AssumptionReport& r) {
    nlohmann::ordered_json j;
    j["label"] = r.label;
    j["p"] = r.p;
    j["k"] = r.k;
    j["P0"] = r.P0;
    j["P1"] = r.P1;
    j["P3"] = r.P3;
    j["P2_evidence"] = to_string(r.P2_evidence);
    j["eligible"] = r.eligible;
    j["overall"] = r.overall;
    return j;
}

inline std::string reports_table(const std::vector<AssumptionReport>& reports) {
    std::ostringstream os;
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << std::left << std::setw(14) << "label" << std::right << std::setw(6) << "p" << std::setw(4) << "k"
       << std::setw(5) << "P0" << std::setw(5) << "P1" << std::setw(5) << "P3" << "  " << std::left << std::setw(24)
       << "P2 evidence" << std::setw(9) << "eligible" << "overall" << '\n';
    for (const auto& r : reports)
        os << std::left << std::setw(14) << r.label << std::right << std::setw(6) << r.p << std::setw(4) << r.k
           << std::setw(5) << yn(r.P0) << std::setw(5) << yn(r.P1) << std::setw(5) << yn(r.P3) << "  " << std::left
           << std::setw(24) << to_string(r.P2_evidence) << std::setw(9) << yn(r.eligible) << yn(r.overall) << '\n';
    return os.str();
}

}  // namespace bogo

#endif  // BOGO_MODFORMS_HPP
