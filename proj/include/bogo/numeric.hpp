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

#ifndef BOGO_NUMERIC_HPP
#define BOGO_NUMERIC_HPP

// Small-integer number theory shared by the algebra, group and ramification
// headers. Everything here works on 64-bit machine integers; callers that
// can exceed that range use the checked helpers and get ErrorKind::Overflow.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bogo/error.hpp"

namespace bogo {

using i64 = std::int64_t;
using u64 = std::uint64_t;

constexpr bool is_prime(i64 n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

constexpr i64 mod(i64 a, i64 m) noexcept {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr i64 mulmod(i64 a, i64 b, i64 m) noexcept {
    return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

constexpr i64 powmod(i64 base, u64 e, i64 m) noexcept {
    i64 r = 1 % m;
    base = mod(base, m);
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
constexpr i64 invmod(i64 a, i64 m) noexcept {
    i64 t = 0, nt = 1, r = m, nr = mod(a, m);
    while (nr != 0) {
        i64 q = r / nr;
        i64 tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) return 0;
    return mod(t, m);
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorKind::Overflow, "integer overflow in " + std::to_string(a) + "*" + std::to_string(b));
    return r;
}

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        fail(ErrorKind::Overflow, "integer overflow in addition");
    return r;
}

inline i64 checked_pow(i64 base, unsigned e) {
    i64 r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

/// Distinct prime factors of n > 0, ascending.
inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Smallest generator of (Z/p)^x.
inline i64 primitive_root(i64 p) {
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (i64 q : factors)
            if (powmod(g, static_cast<u64>((p - 1) / q), p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    return 1;
}

inline std::vector<i64> primes_up_to(i64 n) {
    std::vector<i64> out;
    for (i64 k = 2; k <= n; ++k)
        if (is_prime(k)) out.push_back(k);
    return out;
}

}  // namespace bogo

#endif  // BOGO_NUMERIC_HPP
