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

#ifndef BOGO_HEIGHTS_HPP
#define BOGO_HEIGHTS_HPP

// Absolute logarithmic Weil heights through the Mahler measure of the
// minimal polynomial, torsion detection, and the explicit constant c of the
// height lower bound h >= c.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bogo/error.hpp"
#include "bogo/number_field.hpp"
#include "bogo/numeric.hpp"
#include "bogo/ramification.hpp"

namespace bogo {

/// Integer polynomial, constant term first.
using IntPoly = std::vector<BigInt>;

namespace poly {

inline void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline BigInt content(const IntPoly& f) {
    BigInt g = 0;
    for (const auto& c : f) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline IntPoly reverse(IntPoly f) {
    trim(f);
    std::reverse(f.begin(), f.end());
    trim(f);
    return f;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// Exact division a / b over Z; nullopt when b does not divide a.
inline std::optional<IntPoly> divide_exact(IntPoly a, const IntPoly& b) {
    trim(a);
    if (b.empty()) return std::nullopt;
    if (a.size() < b.size()) return a.empty() ? std::optional<IntPoly>(IntPoly{}) : std::nullopt;
    IntPoly q(a.size() - b.size() + 1, BigInt(0));
    for (std::size_t t = a.size(); t-- >= b.size();) {
        if (a[t] % b.back() != 0) return std::nullopt;
        const BigInt c = a[t] / b.back();
        q[t - (b.size() - 1)] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[t - (b.size() - 1) + i] -= c * b[i];
        if (t == b.size() - 1) break;
    }
    trim(a);
    if (!a.empty()) return std::nullopt;
    return q;
}

inline IntPoly from_ints(std::initializer_list<long long> cs) {
    IntPoly f;
    for (long long c : cs) f.emplace_back(c);
    trim(f);
    return f;
}

inline std::string to_string(const IntPoly& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    return os.str();
}

/// Cyclotomic polynomial Phi_m.
inline IntPoly cyclotomic(unsigned m) {
    IntPoly f(m + 1, BigInt(0));
    f[0] = -1;
    f[m] = 1;
    for (unsigned e = 1; e < m; ++e) {
        if (m % e != 0) continue;
        f = *divide_exact(f, cyclotomic(e));
    }
    return f;
}

}  // namespace poly

inline unsigned euler_phi(unsigned m) {
    unsigned r = m;
    for (unsigned q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            while (m % q == 0) m /= q;
            r -= r / q;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

/// Root approximations with inclusion radii: each disc |z - center| <= radius
/// contains exactly one root (discs are checked pairwise disjoint).
struct RootEnclosure {
    std::complex<long double> center;
    long double radius;
};

namespace detail {

using cld = std::complex<long double>;

inline std::vector<long double> to_ld(const IntPoly& f) {
    std::vector<long double> out;
    for (const auto& c : f) out.push_back(c.convert_to<long double>());
    return out;
}

inline void horner(const std::vector<long double>& a, cld z, cld& val, cld& der, long double& bound) {
    val = 0;
    der = 0;
    bound = 0;
    const long double az = std::abs(z);
    for (std::size_t i = a.size(); i-- > 0;) {
        der = der * z + val;
        val = val * z + a[i];
        bound = bound * az + std::fabs(a[i]);
    }
}

}  // namespace detail

/// Aberth-Ehrlich iteration in long double followed by enclosure checks.
inline std::vector<RootEnclosure> enclose_roots(const IntPoly& f) {
    using detail::cld;
    const auto a = detail::to_ld(f);
    const std::size_t n = a.size() - 1;
    if (n == 0) return {};
    std::vector<cld> z(n);
    // Cauchy-type bound for the initial circle
    long double R = 0;
    for (std::size_t i = 0; i < n; ++i) R = std::max(R, std::pow(std::fabs(a[i] / a[n]), 1.0L / static_cast<long double>(n - i)));
    R = std::max(2 * R, 1.0L);
    for (std::size_t i = 0; i < n; ++i) {
        const long double th = 2 * M_PIl * static_cast<long double>(i) / static_cast<long double>(n) + 0.4L;
        z[i] = std::polar(R * 0.5L, th);
    }
    for (int iter = 0; iter < 500; ++iter) {
        long double maxstep = 0;
        for (std::size_t i = 0; i < n; ++i) {
            cld v, d;
            long double b;
            detail::horner(a, z[i], v, d, b);
            if (v == cld(0)) continue;
            const cld ratio = v / d;
            cld s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            const cld w = ratio / (1.0L - ratio * s);
            z[i] -= w;
            maxstep = std::max(maxstep, std::abs(w) / std::max(1.0L, std::abs(z[i])));
        }
        if (maxstep < 1e-30L) break;
    }
    // two Newton polishing steps, then the inclusion radius n |f| / |f'|,
    // inflated by the rounding error of evaluating f
    const long double eps = std::numeric_limits<long double>::epsilon();
    std::vector<RootEnclosure> out;
    for (auto zi : z) {
        cld v, d;
        long double b;
        for (int k = 0; k < 2; ++k) {
            detail::horner(a, zi, v, d, b);
            if (std::abs(d) > 0) zi -= v / d;
        }
        detail::horner(a, zi, v, d, b);
        if (std::abs(d) == 0) fail(ErrorKind::RootIsolationFailure, "vanishing derivative at a root approximation");
        const long double err = std::abs(v) + 4 * static_cast<long double>(n + 1) * eps * b;
        out.push_back({zi, static_cast<long double>(n) * err / std::abs(d)});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(out[i].center - out[j].center) <= out[i].radius + out[j].radius)
                fail(ErrorKind::RootIsolationFailure, "root enclosures overlap (repeated root?)");
    return out;
}

/// An algebraic number given by its (primitive) minimal polynomial.
struct AlgebraicNumber {
    IntPoly min_poly;               // primitive, positive leading coefficient
    unsigned degree;
    std::optional<bool> irreducible;  // checked for degree <= 8

    std::string to_string() const { return poly::to_string(min_poly); }
};

namespace detail {

/// Searches for a factor among products of root subsets (degree <= n/2), each
/// candidate confirmed by exact division.
inline bool is_irreducible_small(const IntPoly& f) {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return true;
    const auto roots = enclose_roots(f);
    std::vector<BigInt> lead_divisors;
    const BigInt lead = abs(f.back());
    for (BigInt b = 1; b * b <= lead; ++b)
        if (lead % b == 0) {
            lead_divisors.push_back(b);
            if (b * b != lead) lead_divisors.push_back(lead / b);
        }
    for (std::size_t r = 1; r <= n / 2; ++r) {
        std::vector<std::size_t> idx(r);
        for (std::size_t i = 0; i < r; ++i) idx[i] = i;
        while (true) {
            std::vector<cld> g{1};
            for (auto i : idx) {
                std::vector<cld> h(g.size() + 1, 0);
                for (std::size_t t = 0; t < g.size(); ++t) {
                    h[t + 1] += g[t];
                    h[t] -= g[t] * roots[i].center;
                }
                g = std::move(h);
            }
            for (const auto& b : lead_divisors) {
                const long double bl = b.convert_to<long double>();
                IntPoly cand;
                bool integral = true;
                for (const auto& c : g) {
                    const cld v = c * bl;
                    const long double rr = std::round(v.real());
                    if (std::fabs(v.imag()) > 1e-6L || std::fabs(v.real() - rr) > 1e-6L * std::max(1.0L, std::fabs(rr))) {
                        integral = false;
                        break;
                    }
                    cand.emplace_back(static_cast<long long>(rr));
                }
                if (integral && poly::divide_exact(f, cand)) return false;
            }
            // next combination
            std::size_t k = r;
            while (k > 0 && idx[k - 1] == n - r + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t t = k; t < r; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    return true;
}

}  // namespace detail

/// Normalises f to a primitive polynomial with positive leading coefficient.
inline AlgebraicNumber make_algebraic(IntPoly f) {
    poly::trim(f);
    if (f.empty()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial defines no algebraic number");
    if (f.size() == 1) fail(ErrorKind::PreconditionViolated, "a nonzero constant has no roots");
    const BigInt g = poly::content(f);
    for (auto& c : f) c /= g;
    if (f.back() < 0)
        for (auto& c : f) c = -c;
    AlgebraicNumber a{f, static_cast<unsigned>(f.size() - 1), std::nullopt};
    if (a.degree <= 8) a.irreducible = detail::is_irreducible_small(a.min_poly);
    return a;
}

struct HeightValue {
    double value;
    double abs_error;
};

inline constexpr double kHeightTolerance = 1e-9;

/// h = (log|lead| + sum log+ |alpha_i|) / d.
inline bool is_root_of_unity(const AlgebraicNumber& a);

inline HeightValue weil_height(const AlgebraicNumber& a) {
    // torsion and zero have height exactly 0
    if (a.min_poly.back() == 1 && ((a.degree == 1 && a.min_poly[0] == 0) || is_root_of_unity(a)))
        return {0.0, 0.0};
    const auto roots = enclose_roots(a.min_poly);
    long double sum = std::log(abs(a.min_poly.back()).convert_to<long double>());
    long double err = 0;
    for (const auto& r : roots) {
        const long double m = std::abs(r.center);
        if (m + r.radius <= 1) continue;
        if (m - r.radius >= 1) {
            sum += std::log(m);
            err += r.radius / (m - r.radius);
        } else {
            // disc meets the unit circle: log+ lies in [0, log(m + radius)]
            sum += std::max(0.0L, std::log(m));
            err += std::log(m + r.radius);
        }
    }
    const long double d = static_cast<long double>(a.degree);
    HeightValue h{static_cast<double>(sum / d), static_cast<double>(err / d + 8 * std::numeric_limits<double>::epsilon())};
    if (h.value < 0 && h.value > -h.abs_error) h.value = 0;
    if (h.abs_error > kHeightTolerance)
        fail(ErrorKind::RootIsolationFailure, "height error bound " + std::to_string(h.abs_error) + " exceeds 1e-9");
    return h;
}

inline HeightValue weil_height(const IntPoly& f) { return weil_height(make_algebraic(f)); }

/// f divides x^m - 1 for some m, i.e. f is a product of distinct cyclotomic
/// polynomials. Each factor Phi_k has phi(k) <= deg f, which forces k <= 2 deg(f)^2.
inline bool is_root_of_unity(const AlgebraicNumber& a) {
    if (a.min_poly.back() != 1) return false;
    IntPoly rest = a.min_poly;
    const unsigned bound = std::max(2u, 2 * a.degree * a.degree);
    for (unsigned k = 1; k <= bound && rest.size() > 1; ++k) {
        if (euler_phi(k) > rest.size() - 1) continue;
        if (auto q = poly::divide_exact(rest, poly::cyclotomic(k))) rest = std::move(*q);
    }
    return rest == IntPoly{1};
}

inline bool is_root_of_unity(const IntPoly& f) { return is_root_of_unity(make_algebraic(f)); }

// --- the explicit constant -------------------------------------------------

/// Default acceleration policy: from |g^p - h^p| <= |g - h| max(p^-1, |g - h|)
/// each p-th power step improves the exponent a to min(2a, a + 1).
struct UltrametricAcceleration {
    static constexpr const char* name = "ultrametric-doubling";

    Rational step(const Rational& a) const {
        Rational dbl = a * 2, inc = a + 1;
        return dbl < inc ? dbl : inc;
    }

    /// Once a >= 1 the recurrence is a -> a + 1.
    std::optional<BigInt> remaining_linear(const Rational& a, const BigInt& target) const {
        if (a < 1) return std::nullopt;
        const Rational gap = Rational(target) - a;
        if (gap <= 0) return BigInt(0);
        BigInt q = boost::multiprecision::numerator(gap) / boost::multiprecision::denominator(gap);
        if (Rational(q) < gap) q += 1;
        return q;
    }
};

/// Least lambda with a_lambda >= C2, starting from a_0 = 1/C1.
template <class Policy = UltrametricAcceleration>
BigInt acceleration_lambda(i64 p, const BigInt& C1, const BigInt& C2, const Policy& policy = {}) {
    if (!is_prime(p) || p < 3) fail(ErrorKind::PreconditionViolated, "acceleration needs an odd prime p");
    if (C1 < 1 || C2 < 1) fail(ErrorKind::PreconditionViolated, "C1 and C2 must be >= 1");
    Rational a(BigInt(1), C1);
    BigInt lambda = 0;
    while (a < Rational(C2)) {
        if constexpr (requires { policy.remaining_linear(a, C2); }) {
            if (auto rest = policy.remaining_linear(a, C2)) return lambda + *rest;
        }
        a = policy.step(a);
        ++lambda;
    }
    return lambda;
}

struct BoundParams {
    i64 p;
    BigInt C1;
    BigInt C2;
    BigInt lambda;
    std::string expression;  // c = log(p/2) / (2 p^lambda)
    long double log_c;       // natural log of c
    long double log10_c;
    double c;                // 0 when c underflows a double
    std::string c_scientific;
};

inline std::string scientific_from_log10(long double l10, int digits = 4) {
    long double e = std::floor(l10);
    long double mant = std::pow(10.0L, l10 - e);
    // rounding may push the mantissa to 10.000
    std::ostringstream probe;
    probe.setf(std::ios::fixed);
    probe.precision(digits - 1);
    probe << mant;
    if (probe.str().rfind("10.", 0) == 0) {
        mant /= 10;
        e += 1;
    }
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits - 1);
    os << mant << "e" << (e < 0 ? "-" : "+") << std::llabs(static_cast<long long>(e));
    return os.str();
}

/// c = log(p/2) / (2 p^lambda), computed in log space.
inline BoundParams bound_constant(i64 p, const BigInt& lambda) {
    if (p <= 2) fail(ErrorKind::NonpositiveConstant, "log(p/2) <= 0 for p <= 2");
    if (lambda < 0) fail(ErrorKind::PreconditionViolated, "lambda must be >= 0");
    BoundParams b{};
    b.p = p;
    b.lambda = lambda;
    const long double lp2 = std::log(static_cast<long double>(p) / 2.0L);
    const long double lam = lambda.convert_to<long double>();
    b.log_c = std::log(lp2) - std::log(2.0L) - lam * std::log(static_cast<long double>(p));
    b.log10_c = b.log_c / std::log(10.0L);
    const double direct = static_cast<double>(lp2 / (2.0L * std::pow(static_cast<long double>(p), lam)));
    b.c = std::isfinite(direct) && direct > 0 ? direct : 0.0;
    b.c_scientific = scientific_from_log10(b.log10_c);
    b.expression = "log(" + std::to_string(p) + "/2)/(2*" + std::to_string(p) + "^" + lambda.str() + ")";
    return b;
}

/// h2_constants -> acceleration_lambda -> bound_constant.
inline BoundParams bogomolov_bound(i64 p, BoundKind kind, unsigned degK = 1) {
    if (!is_prime(p) || p < 5) fail(ErrorKind::PreconditionViolated, "the bound pipeline needs a prime p >= 5");
    const auto k = h2_constants(kind, p, degK);
    auto b = bound_constant(p, acceleration_lambda(p, k.C1, k.C2));
    b.C1 = k.C1;
    b.C2 = k.C2;
    return b;
}

struct BoundCheckEntry {
    std::string poly;
    bool torsion;
    std::optional<HeightValue> height;
    bool ok;
};

struct BoundCheckReport {
    std::vector<BoundCheckEntry> entries;
    std::size_t violations = 0;
};

/// Each alpha is either torsion (or zero) or has h(alpha) >= c.
inline BoundCheckReport empirical_bound_check(const std::vector<AlgebraicNumber>& sample, double c) {
    BoundCheckReport rep;
    for (const auto& a : sample) {
        BoundCheckEntry e{a.to_string(), false, std::nullopt, true};
        const bool zero = a.degree == 1 && a.min_poly[0] == 0;
        if (zero || is_root_of_unity(a)) {
            e.torsion = true;
        } else {
            e.height = weil_height(a);
            e.ok = e.height->value >= c;
            if (!e.ok) ++rep.violations;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace bogo

#endif  // BOGO_HEIGHTS_HPP
