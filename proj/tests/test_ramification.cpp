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

#include <random>

#include "bogo/fixture.hpp"
#include "bogo/ramification.hpp"
#include "bogo/weights.hpp"

namespace {

using namespace bogo;

TEST(Delta, Examples) {
    // q = p^2 in the lubin-tate setting
    const auto r = ram_profile(5, 2, 1);
    EXPECT_EQ(r.delta, 24);
    EXPECT_EQ(ram_profile(5, 4, 1).delta, 8);
    EXPECT_EQ(ram_profile(59, 2, 1).delta, 3480);
    try {
        ram_profile(5, 3, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddWeight);
    }
}

TEST(Delta, NeverOne) {
    for (i64 p : primes_up_to(200)) {
        if (p < 3) continue;
        for (i64 k = 2; k <= 60; k += 2) EXPECT_GT(ram_profile(p, k, 1).delta, 1) << p << " " << k;
    }
}

TEST(RamProfile, Examples) {
    auto r = ram_profile(5, 2, 1);
    EXPECT_EQ(r.e_n, 24);
    EXPECT_EQ(r.i_n, 0);
    EXPECT_EQ(r.group, (std::vector<i64>{24}));
    EXPECT_EQ(r.last_group, (std::vector<i64>{24}));
    EXPECT_TRUE(r.jumps.empty());

    r = ram_profile(5, 2, 2);
    EXPECT_EQ(r.e_n, 600);
    EXPECT_EQ(r.i_n, 24);
    EXPECT_EQ(r.group, (std::vector<i64>{24, 5, 5}));
    EXPECT_EQ(r.last_group, (std::vector<i64>{5, 5}));

    r = ram_profile(59, 2, 1);
    EXPECT_EQ(r.e_n, 3480);
    EXPECT_EQ(r.i_n, 0);

    r = ram_profile(5, 4, 2);
    EXPECT_EQ(r.d, 3);
    EXPECT_EQ(r.i_n, 8);
    EXPECT_FALSE(r.p3_holds);  // (5+1)/2 divides 3
}

TEST(RamProfile, JsonKeyOrder) {
    const auto j = to_json(ram_profile(5, 2, 3));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"p", "k", "q", "d", "delta", "n", "e_n", "i_n", "jumps", "group",
                                              "last_group"}));
    EXPECT_EQ(j["jumps"].dump(), "[[1,24,1],[25,624,2]]");
}

TEST(Jumps, Examples) {
    EXPECT_EQ(ram_jumps(5, 2, 2), (std::vector<JumpRange>{{1, 24, 1, 25}}));
    EXPECT_EQ(ram_jumps(5, 2, 3), (std::vector<JumpRange>{{1, 24, 1, 625}, {25, 624, 2, 25}}));
    EXPECT_EQ(ram_jumps(5, 4, 2), (std::vector<JumpRange>{{1, 8, 1, 25}}));
}

// Oracle: classify each i by the defining inequality q^{j-1} <= d i <= q^j - 1.
TEST(Jumps, MatchDefiningInequality) {
    for (i64 p : {3, 5, 7, 11, 13})
        for (i64 k = 2; k <= 20; k += 2)
            for (i64 n = 1; n <= 4; ++n) {
                const auto r = ram_profile(p, k, n);
                if (r.i_n > 200000) continue;
                const i64 q = p * p;
                std::vector<i64> level(static_cast<std::size_t>(r.i_n) + 1, 0);
                for (i64 i = 1; i <= r.i_n; ++i) {
                    i64 qj1 = 1;
                    for (i64 j = 1; j < n; ++j, qj1 *= q)
                        if (qj1 <= r.d * i && r.d * i <= qj1 * q - 1) level[i] = j;
                    ASSERT_NE(level[i], 0) << p << " " << k << " " << n << " i=" << i;
                }
                i64 expected_lo = 1;
                i64 prev_order = r.e_n;
                for (const auto& jr : r.jumps) {
                    EXPECT_EQ(jr.i_lo, expected_lo);
                    EXPECT_LE(jr.i_lo, jr.i_hi);
                    for (i64 i = jr.i_lo; i <= jr.i_hi; ++i) ASSERT_EQ(level[i], jr.j);
                    EXPECT_LE(jr.group_order, prev_order);
                    EXPECT_EQ(r.e_n % jr.group_order, 0);
                    prev_order = jr.group_order;
                    expected_lo = jr.i_hi + 1;
                }
                EXPECT_EQ(expected_lo, r.i_n + 1);
                if (n >= 2) EXPECT_EQ(r.jumps.back().group_order, q);  // |(Z/p)^2|
            }
}

TEST(RatioBound, Examples) {
    EXPECT_TRUE(ratio_bound_check(5, 2, 2));
    EXPECT_TRUE(ratio_bound_check(5, 2, 1));
    EXPECT_TRUE(ratio_bound_check(7, 4, 3));
    const auto r = ram_profile(5, 2, 2);
    EXPECT_EQ(r.e_n, 24 * (r.i_n + 1));  // equality case
}

TEST(RatioBound, Range) {
    for (i64 p : primes_up_to(50)) {
        if (p < 3) continue;
        for (i64 k = 2; k <= 20; k += 2)
            for (i64 n = 1; n <= 4; ++n) {
                const auto r = ram_profile(p, k, n);
                const Rational ratio(BigInt(r.e_n), BigInt(r.i_n + 1));
                EXPECT_EQ(ratio_bound_check(p, k, n), ratio <= Rational(r.q - 1));
                EXPECT_TRUE(ratio_bound_check(p, k, n));
                EXPECT_LE(ratio, Rational(p * p));
            }
    }
}

TEST(Herbrand, Examples) {
    EXPECT_EQ(herbrand_eta(0, 7), Rational(0));
    EXPECT_EQ(herbrand_eta(24, 3), Rational(8));
    EXPECT_EQ(herbrand_eta(5, 1), Rational(5));
    EXPECT_EQ(herbrand_eta(1, 2), Rational(1, 2));
}

// Oracle: eta(r) = (1/|G_0|) sum_{s in G_0} min(i(s), r + 1) - 1 over a group
// of order d where the identity has i = infinity and the others have i = 1.
TEST(Herbrand, MatchesSumDefinition) {
    for (i64 d = 1; d <= 30; ++d)
        for (i64 r = 0; r <= 60; ++r) {
            Rational sum = Rational(r + 1);
            for (i64 s = 1; s < d; ++s) sum += std::min<i64>(1, r + 1);
            EXPECT_EQ(herbrand_eta(r, d), sum / d - 1);
            EXPECT_EQ(herbrand_eta(d * r, d), Rational(r));
        }
}

TEST(Cyclotomic, Profile) {
    const auto c = cyclo_profile(5, 3);
    EXPECT_EQ(c.e_n, 100);
    EXPECT_EQ(c.i_n, 24);
    EXPECT_EQ(c.jumps, (std::vector<JumpRange>{{1, 4, 1, 25}, {5, 24, 2, 5}}));
    EXPECT_LE(c.last_group_order, 5);
    for (i64 p : primes_up_to(50))
        for (i64 n = 1; n <= 5; ++n) {
            const auto cp = cyclo_profile(p, n);
            EXPECT_LE(cp.e_n, p * (cp.i_n + 1));
            // the lubin-tate table with (q, d) -> (p, 1)
            EXPECT_EQ(cp.jumps, detail::lubin_tate_jumps(p, 1, n));
        }
}

TEST(H2, Constants) {
    auto h = h2_constants(BoundKind::Cyclotomic, 5);
    EXPECT_EQ(h.C1, 5);
    EXPECT_EQ(h.C2, 5);
    h = h2_constants(BoundKind::Modular, 5, 1);
    EXPECT_EQ(h.C1, 25);
    EXPECT_EQ(h.C2, 625);
    h = h2_constants(BoundKind::Modular, 11, 2);
    EXPECT_EQ(h.C1, 121);
    EXPECT_EQ(h.C2, BigInt(214358881));
}

TEST(H1, Witness) {
    EXPECT_EQ(h1_witness(5), 256);
    EXPECT_EQ(h1_witness(7), 4096);
    for (i64 p : primes_up_to(100))
        if (p >= 5) {
            const auto g = h1_witness(p);
            EXPECT_GT(g, 1);
            EXPECT_EQ(powmod(4, static_cast<u64>(p - 1), p), 1);  // 4 omega -> 4^{p-1} == 1 mod p
            EXPECT_EQ(g, boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(p - 1)));
        }
}

TEST(Crystalline, ZeroTrace) {
    const auto c = crystalline_charpoly<BigInt>(2, 0, 1, 5);
    EXPECT_EQ(c.stated.linear, 0);
    EXPECT_EQ(c.stated.constant, 5);
    EXPECT_TRUE(c.verified);
    EXPECT_TRUE(c.matches_stated);
    const Matrix2<BigInt> companion{0, -5, 1, 0};
    const auto sq = mat2_mul(companion, companion);
    EXPECT_EQ(sq, (Matrix2<BigInt>{-5, 0, 0, -5}));
    for (i64 k : {2, 4, 6, 8}) {
        const auto ck = crystalline_charpoly<BigInt>(k, 0, 1, 7);
        EXPECT_EQ(ck.stated.constant, boost::multiprecision::pow(BigInt(7), static_cast<unsigned>(k - 1)));
        EXPECT_TRUE(ck.verified && ck.matches_stated);
    }
}

TEST(Crystalline, RandomTracesNeverFailVerification) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> da(-50, 50);
    for (int t = 0; t < 2000; ++t) {
        const BigInt a = da(rng);
        const int chi = (rng() & 1) ? 1 : -1;
        const i64 p = primes_up_to(60)[rng() % 17];
        const i64 k = 2 + 2 * static_cast<i64>(rng() % 5);
        const auto c = crystalline_charpoly<BigInt>(k, a, chi, p);
        ASSERT_TRUE(c.verified);
        EXPECT_EQ(c.stated.linear, -a);
        EXPECT_EQ(c.matches_stated, chi == 1 || a == 0);
    }
}

TEST(Crystalline, NumberFieldScalars) {
    const auto rec = load_fixture(std::string(BOGO_CORPUS_DIR) + "/73.2.a.c.json");
    for (i64 n : {2, 3, 5, 7, 59}) {
        const auto a = rec.coefficient(n);
        for (int chi : {1, -1}) {
            const auto c = crystalline_charpoly(2, a, chi, 5);
            EXPECT_TRUE(c.verified);
            EXPECT_EQ(c.matches_stated, chi == 1 || a.is_zero());
        }
    }
}

TEST(Frobenius, Charpoly) {
    const auto f = frobenius_charpoly<BigInt>(3, 0, 4);
    EXPECT_EQ(f.poly.linear, 0);
    EXPECT_EQ(f.poly.constant, 27);
    EXPECT_TRUE(f.det_is_cyclotomic);

    const auto rec = load_fixture(std::string(BOGO_CORPUS_DIR) + "/73.2.a.c.json");
    const auto a2 = rec.coefficient(2);
    const auto g = frobenius_charpoly(2, a2, 2);
    EXPECT_EQ(g.poly.constant, NFElement::from_int(a2.field(), 2));
    EXPECT_EQ(g.poly.linear, -a2);
    EXPECT_TRUE(g.det_is_cyclotomic);
    // the crystalline polynomial with k' = 2, chi = 1 specialises to it
    const auto c = crystalline_charpoly(2, a2, 1, 2);
    EXPECT_EQ(c.stated.linear, g.poly.linear);
    EXPECT_EQ(c.stated.constant, g.poly.constant);
}

TEST(Frobenius, SquareScalar) {
    EXPECT_EQ(frobp_square_scalar(5, 2), -5);
    EXPECT_EQ(frobp_square_scalar(59, 2), -59);
    EXPECT_EQ(frobp_square_scalar(7, 6), -16807);
}

TEST(P3, Condition) {
    EXPECT_TRUE(p3_condition(59, 2));
    EXPECT_FALSE(p3_condition(5, 6));
    EXPECT_TRUE(p3_condition(7, 6));
    EXPECT_FALSE(p3_condition(3, 2));
}

}  // namespace
