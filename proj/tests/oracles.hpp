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

#ifndef BOGO_TESTS_ORACLES_HPP
#define BOGO_TESTS_ORACLES_HPP

// Reference computations that share no code with the library paths they check.

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "bogo/heights.hpp"

namespace bogo::oracle {

/// Mahler-measure height from the eigenvalues of the companion matrix.
inline double eigen_height(const IntPoly& f) {
    const std::size_t n = f.size() - 1;
    BigInt content = 0;
    for (const auto& c : f) content = gcd(content, BigInt(abs(c)));
    const double lead = BigInt(f.back() / content).convert_to<double>();
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 1; i < n; ++i) C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1;
    for (std::size_t i = 0; i < n; ++i)
        C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -BigInt(f[i] / content).convert_to<double>() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    double s = std::log(std::fabs(lead));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) s += std::max(0.0, std::log(std::abs(es.eigenvalues()[i])));
    return s / static_cast<double>(n);
}

using RPoly = std::vector<Rational>;

inline RPoly to_rational(const IntPoly& f) { return RPoly(f.begin(), f.end()); }

inline void rtrim(RPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline RPoly rrem(RPoly a, const RPoly& b) {
    rtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        rtrim(a);
    }
    return a;
}

// Squarefree test by a rational Euclid on f and f'.
inline bool squarefree(const IntPoly& f) {
    RPoly a = to_rational(f), b;
    for (std::size_t i = 1; i < f.size(); ++i) b.push_back(Rational(f[i]) * static_cast<long long>(i));
    rtrim(b);
    while (!b.empty()) {
        auto r = rrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

// Res_y(f(y), x - y^m) up to sign: the polynomial whose roots are the m-th
// powers of the roots of f, built from power sums by Newton's identities.
inline IntPoly power_poly(const IntPoly& f, unsigned m) {
    const std::size_t d = f.size() - 1;
    // elementary symmetric e_i of the roots: f = lead * sum (-1)^i e_i x^{d-i}
    std::vector<Rational> e(d + 1);
    for (std::size_t i = 0; i <= d; ++i) e[i] = Rational(f[d - i]) / Rational(f[d]) * ((i % 2) ? -1 : 1);
    const std::size_t N = d * m;
    std::vector<Rational> s(N + 1, Rational(0));  // power sums of the roots
    for (std::size_t k = 1; k <= N; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i < k && i <= d; ++i) acc += ((i % 2) ? 1 : -1) * e[i] * s[k - i];
        if (k <= d) acc += ((k % 2) ? 1 : -1) * Rational(static_cast<long long>(k)) * e[k];
        s[k] = acc;
    }
    // power sums t_j of the m-th powers, then back to elementary symmetric E
    std::vector<Rational> E(d + 1, Rational(0));
    E[0] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += ((i % 2) ? 1 : -1) * E[k - i] * s[i * m];
        E[k] = acc / static_cast<long long>(k);
    }
    IntPoly g(d + 1);
    BigInt scale = boost::multiprecision::pow(f[d], m);
    if (scale < 0) scale = -scale;
    for (std::size_t i = 0; i <= d; ++i) {
        const Rational c = E[d - i] * ((((d - i) % 2) != 0U) ? -1 : 1) * Rational(scale);
        if (denominator(c) != 1) throw std::logic_error("power polynomial is not integral");
        g[i] = numerator(c);
    }
    return g;
}

/// Squarefree integer polynomials of degree 1..7 with nonzero constant term.
inline std::vector<IntPoly> random_corpus(std::size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> c(-6, 6);
    std::vector<IntPoly> out;
    while (out.size() < count) {
        const std::size_t deg = 1 + rng() % 7;
        IntPoly f(deg + 1);
        for (auto& x : f) x = c(rng);
        if (f.back() == 0 || f.front() == 0 || !squarefree(f)) continue;
        out.push_back(f);
    }
    return out;
}

}  // namespace bogo::oracle

#endif  // BOGO_TESTS_ORACLES_HPP
