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

#ifndef BOGO_RAMIFICATION_HPP
#define BOGO_RAMIFICATION_HPP

// Closed-form ramification data for the abelian extensions Q_q(p^n)/Q_q
// (q = p^2) cut out by a supersingular weight-k representation, the
// cyclotomic tower Q(zeta_{p^n}), the constants C1, C2 feeding the height
// bound, and the exact characteristic polynomials of Frobenius / crystalline
// phi.

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bogo/error.hpp"
#include "bogo/number_field.hpp"
#include "bogo/numeric.hpp"
#include "bogo/weights.hpp"

namespace bogo {

/// Range of lower-numbering indices i on which G_i is constant.
struct JumpRange {
    i64 i_lo;
    i64 i_hi;
    i64 j;           // G_i = Gal(L_n / L_j) on [i_lo, i_hi]
    i64 group_order; // |G_i|

    bool operator==(const JumpRange&) const = default;
};

struct RamProfile {
    i64 p, k, q, d, delta, n;
    i64 e_n;  // ramification index = degree, delta q^{n-1}
    i64 i_n;  // index of the last nontrivial G_i
    std::vector<JumpRange> jumps;
    std::vector<i64> group;       // cyclic invariant factors of Gal(Q_q(p^n)/Q_q)
    std::vector<i64> last_group;  // invariants of G_{i_n}
    bool p3_holds;                // the last_group statement assumes (P3)
};

namespace detail {

// Jump table of a tower with degrees d_1 = (q - 1)/d, d_j = d_1 q^{j-1}:
// G_i = Gal(L_n/L_j) for q^{j-1} <= d i <= q^j - 1, j = 1..n-1.
inline std::vector<JumpRange> lubin_tate_jumps(i64 q, i64 d, i64 n) {
    std::vector<JumpRange> out;
    i64 qj1 = 1;  // q^{j-1}
    for (i64 j = 1; j < n; ++j) {
        const i64 qj = checked_mul(qj1, q);
        const i64 lo = (qj1 + d - 1) / d;  // ceil(q^{j-1}/d)
        const i64 hi = (qj - 1) / d;       // floor((q^j - 1)/d)
        out.push_back({lo, hi, j, checked_pow(q, static_cast<unsigned>(n - j))});
        qj1 = qj;
    }
    return out;
}

inline void check_weight_inputs(i64 p, i64 k, i64 n) {
    if (!is_prime(p) || p < 3) fail(ErrorKind::NonPrimeP, "needs an odd prime, got " + std::to_string(p));
    if (k % 2 != 0) fail(ErrorKind::OddWeight, "weight " + std::to_string(k) + " is odd");
    if (k < 2) fail(ErrorKind::PreconditionViolated, "weight must be >= 2");
    if (n < 1) fail(ErrorKind::PreconditionViolated, "level n must be >= 1");
}

}  // namespace detail

/// (P3): p >= 5, p does not divide k-1, (p+1)/2 does not divide k-1.
inline bool p3_condition(i64 p, i64 k) {
    return p >= 5 && (k - 1) % p != 0 && (k - 1) % ((p + 1) / 2) != 0;
}

inline RamProfile ram_profile(i64 p, i64 k, i64 n) {
    detail::check_weight_inputs(p, k, n);
    RamProfile r{};
    r.p = p;
    r.k = k;
    r.n = n;
    r.q = checked_mul(p, p);
    r.d = std::gcd(r.q - 1, k - 1);
    r.delta = delta(p, k);
    const i64 qn1 = checked_pow(r.q, static_cast<unsigned>(n - 1));
    r.e_n = checked_mul(r.delta, qn1);
    if ((qn1 - 1) % r.d != 0) fail(ErrorKind::InvariantViolation, "i_n is not an integer");
    r.i_n = (qn1 - 1) / r.d;
    r.jumps = detail::lubin_tate_jumps(r.q, r.d, n);
    const i64 pn1 = checked_pow(p, static_cast<unsigned>(n - 1));
    r.group = {r.delta};
    if (n >= 2) {
        r.group.push_back(pn1);
        r.group.push_back(pn1);
        r.last_group = {p, p};
    } else {
        r.last_group = {r.delta};
    }
    r.p3_holds = p3_condition(p, k);
    return r;
}

inline std::vector<JumpRange> ram_jumps(i64 p, i64 k, i64 n) { return ram_profile(p, k, n).jumps; }

/// Stable key order: p, k, q, d, delta, n, e_n, i_n, jumps, group, last_group.
inline nlohmann::ordered_json to_json(const RamProfile& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["q"] = r.q;
    j["d"] = r.d;
    j["delta"] = r.delta;
    j["n"] = r.n;
    j["e_n"] = r.e_n;
    j["i_n"] = r.i_n;
    j["jumps"] = nlohmann::ordered_json::array();
    for (const auto& jr : r.jumps) j["jumps"].push_back({jr.i_lo, jr.i_hi, jr.j});
    j["group"] = r.group;
    j["last_group"] = r.last_group;
    return j;
}

/// e_n / (i_n + 1) <= q - 1, compared exactly.
inline bool ratio_bound_check(i64 p, i64 k, i64 n) {
    const auto r = ram_profile(p, k, n);
    return static_cast<__int128>(r.e_n) <= static_cast<__int128>(r.q - 1) * (r.i_n + 1);
}

/// Transition function for the subextension cut out by the (k-1)-th power:
/// (1/d)(r + 1 + (d - 1)) - 1, which is r/d.
inline Rational herbrand_eta(i64 r, i64 d) {
    if (r < 0 || d < 1) fail(ErrorKind::PreconditionViolated, "herbrand_eta needs r >= 0, d >= 1");
    // one identity element contributes r + 1, the d - 1 others contribute 1
    return Rational(r + 1 + (d - 1), d) - 1;
}

// --- cyclotomic tower ------------------------------------------------------

struct CycloProfile {
    i64 p, n;
    i64 e_n;  // (p-1) p^{n-1}
    i64 i_n;  // p^{n-1} - 1
    std::vector<JumpRange> jumps;
    i64 last_group_order;
};

/// Q(zeta_{p^n})/Q at p: G_i = Gal(Q(zeta_{p^n})/Q(zeta_{p^j})) for
/// p^{j-1} <= i <= p^j - 1.
inline CycloProfile cyclo_profile(i64 p, i64 n) {
    if (!is_prime(p)) fail(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    if (n < 1) fail(ErrorKind::PreconditionViolated, "level n must be >= 1");
    CycloProfile c{p, n, 0, 0, {}, 0};
    const i64 pn1 = checked_pow(p, static_cast<unsigned>(n - 1));
    c.e_n = checked_mul(p - 1, pn1);
    c.i_n = pn1 - 1;
    i64 pj1 = 1;
    for (i64 j = 1; j < n; ++j) {
        c.jumps.push_back({pj1, pj1 * p - 1, j, checked_pow(p, static_cast<unsigned>(n - j))});
        pj1 *= p;
    }
    c.last_group_order = n >= 2 ? p : p - 1;
    return c;
}

// --- H2 constants ----------------------------------------------------------

enum class BoundKind { Cyclotomic, Modular };

struct H2Constants {
    BigInt C1;
    BigInt C2;
    BoundKind kind;
    unsigned degK;
};

/// Cyclotomic tower: C1 = C2 = p. Modular tower: C1 = p^2, C2 = p^{4 [K:Q]}.
inline H2Constants h2_constants(BoundKind kind, i64 p, unsigned degK = 1) {
    if (!is_prime(p)) fail(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    if (kind == BoundKind::Cyclotomic) return {BigInt(p), BigInt(p), kind, degK};
    if (p < 5) fail(ErrorKind::PreconditionViolated, "the modular constants need p >= 5");
    if (degK < 1) fail(ErrorKind::PreconditionViolated, "[K:Q] must be >= 1");
    return {boost::multiprecision::pow(BigInt(p), 2), boost::multiprecision::pow(BigInt(p), 4 * degK), kind, degK};
}

/// The centralised inertia element acts on p-power roots of unity by
/// M^2 omega; raising to the (p-1)-th power kills omega. Returns M^{2(p-1)}.
inline BigInt h1_witness(i64 p, i64 M = 2) {
    if (!is_prime(p) || p < 5) fail(ErrorKind::PreconditionViolated, "needs a prime p >= 5");
    if (M < 2 || M % p == 0) fail(ErrorKind::PreconditionViolated, "M must be >= 2 and prime to p");
    return boost::multiprecision::pow(BigInt(M), static_cast<unsigned>(2 * (p - 1)));
}

// --- characteristic polynomials -------------------------------------------

/// Monic X^2 + linear X + constant.
template <class Scalar>
struct MonicQuadratic {
    Scalar linear;
    Scalar constant;
};

template <class Scalar>
using Matrix2 = std::array<Scalar, 4>;  // row-major

template <class Scalar>
Matrix2<Scalar> mat2_mul(const Matrix2<Scalar>& x, const Matrix2<Scalar>& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

/// Cayley-Hamilton residue M^2 + linear M + constant I.
template <class Scalar>
bool annihilates(const Matrix2<Scalar>& m, const MonicQuadratic<Scalar>& f) {
    const auto sq = mat2_mul(m, m);
    for (int i = 0; i < 4; ++i) {
        Scalar v = sq[i] + f.linear * m[i];
        if (i == 0 || i == 3) v = v + f.constant;
        if (!scalar_is_zero(v)) return false;
    }
    return true;
}

template <class Scalar>
struct CrystallineCharpoly {
    MonicQuadratic<Scalar> stated;  // X^2 - a X + chi^2 p^{k'-1}
    Matrix2<Scalar> phi;            // columns phi(e1), phi(e2)
    MonicQuadratic<Scalar> phi_charpoly;
    bool verified;        // trace/det of phi agree with phi_charpoly and it annihilates phi
    bool matches_stated;  // phi_charpoly == stated; holds when chi = 1 or a = 0
};

/// phi(e1) = p^{k'-1} chi^2 e2, phi(e2) = -e1 + a chi e2 with chi = chi(p^{-1}) = +-1.
template <class Scalar>
CrystallineCharpoly<Scalar> crystalline_charpoly(i64 k_prime, const Scalar& a, int chi, i64 p) {
    if (k_prime < 2) fail(ErrorKind::PreconditionViolated, "k' must be >= 2");
    if (chi != 1 && chi != -1) fail(ErrorKind::PreconditionViolated, "chi(p^-1) must be +-1");
    const BigInt pk = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k_prime - 1));
    const Scalar P = scalar_like(a, pk * chi * chi);
    const Scalar c = scalar_like(a, chi);
    const Scalar zero = scalar_like(a, 0);
    const Scalar one = scalar_like(a, 1);

    CrystallineCharpoly<Scalar> out{{-a, P}, {zero, zero - one, P, a * c}, {zero, zero}, false, false};
    const auto& m = out.phi;
    const Scalar tr = m[0] + m[3];
    const Scalar det = m[0] * m[3] - m[1] * m[2];
    out.phi_charpoly = {-tr, det};
    out.verified = det == P && tr == a * c && annihilates(m, out.phi_charpoly);
    out.matches_stated = out.phi_charpoly.linear == out.stated.linear && out.phi_charpoly.constant == out.stated.constant;
    return out;
}

template <class Scalar>
struct FrobeniusCharpoly {
    MonicQuadratic<Scalar> poly;  // X^2 - a_ell X + ell^{k-1}
    bool det_is_cyclotomic;       // constant term == ell^{k-1} = eps_p^{k-1}(Frob_ell)
};

template <class Scalar>
FrobeniusCharpoly<Scalar> frobenius_charpoly(i64 ell, const Scalar& a_ell, i64 k) {
    if (!is_prime(ell)) fail(ErrorKind::NonPrimeP, std::to_string(ell) + " is not prime");
    const BigInt c = boost::multiprecision::pow(BigInt(ell), static_cast<unsigned>(k - 1));
    FrobeniusCharpoly<Scalar> out{{-a_ell, scalar_like(a_ell, c)}, false};
    // eps_p(Frob_ell) = ell, so det rho(Frob_ell) must be ell^{k-1}
    BigInt cyclo = 1;
    for (i64 i = 0; i < k - 1; ++i) cyclo *= ell;
    out.det_is_cyclotomic = out.poly.constant == scalar_like(a_ell, cyclo);
    return out;
}

/// rho(Frob_p)^2 = -p^{k-1} when its characteristic polynomial is X^2 + p^{k-1}:
/// squares the companion matrix and checks it is that scalar.
inline BigInt frobp_square_scalar(i64 p, i64 k) {
    if (!is_prime(p)) fail(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    const BigInt pk = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k - 1));
    const Matrix2<BigInt> companion{0, -pk, 1, 0};
    const auto sq = mat2_mul(companion, companion);
    if (sq[1] != 0 || sq[2] != 0 || sq[0] != sq[3] || sq[0] != -pk)
        fail(ErrorKind::InvariantViolation, "companion square is not the expected scalar");
    return sq[0];
}

}  // namespace bogo

#endif  // BOGO_RAMIFICATION_HPP
