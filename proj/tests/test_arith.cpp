/* Copyright 2026 The periodpoly Authors.

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

#include "periodpoly/arith.hpp"

namespace pp = periodpoly;
namespace ar = periodpoly::arith;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST(Arith, IsPrimeMatchesTrialDivision) {
    for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(ar::is_prime(n), trial_division_prime(n)) << n;
    EXPECT_TRUE(ar::is_prime(2305843009213693951ULL));  // 2^61 - 1
    EXPECT_FALSE(ar::is_prime(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
}

TEST(Arith, FactorizeRebuildsTheNumber) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = (rng() >> 20) + 2;
        std::uint64_t prod = 1;
        std::uint64_t last = 0;
        for (auto [prime, mult] : ar::factorize(n)) {
            EXPECT_TRUE(ar::is_prime(prime));
            EXPECT_GT(prime, last);
            last = prime;
            for (int k = 0; k < mult; ++k) prod *= prime;
        }
        EXPECT_EQ(prod, n);
    }
    const std::vector<std::pair<std::uint64_t, int>> expected{{2, 6}, {5, 1}, {17, 1}, {41, 1}, {193, 1}};
    EXPECT_EQ(ar::factorize(43046720), expected);  // 3^16 - 1
}

TEST(Arith, SqrtModAgainstExhaustiveSearch) {
    int cases = 0;
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 41ULL, 73ULL, 97ULL, 113ULL, 257ULL, 65537ULL}) {
        for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 300); ++a) {
            bool residue = false;
            for (std::uint64_t x = 1; x < p && !residue; ++x) residue = x * x % p == a;
            ASSERT_EQ(ar::jacobi(static_cast<std::int64_t>(a), p) == 1, residue);
            if (!residue) {
                EXPECT_THROW(ar::sqrt_mod(a, p), pp::DomainError);
                continue;
            }
            const std::uint64_t r = ar::sqrt_mod(a, p);
            EXPECT_EQ(r * r % p, a);
            EXPECT_LE(r, p / 2);
            ++cases;
        }
    }
    EXPECT_GT(cases, 50);
}

TEST(Arith, JacobiIsMultiplicative) {
    for (std::uint64_t n : {15ULL, 21ULL, 45ULL, 97ULL})
        for (std::int64_t a = -20; a < 20; ++a)
            for (std::int64_t b = 1; b < 10; ++b)
                EXPECT_EQ(ar::jacobi(a * b, n), ar::jacobi(a, n) * ar::jacobi(b, n));
}

TEST(Arith, ModularHelpers) {
    EXPECT_EQ(ar::powmod(3, 16, 1000007), 43046721ULL % 1000007);
    EXPECT_EQ(ar::invmod(3, 7), 5U);
    EXPECT_EQ(ar::ord2(48), 4);
    EXPECT_EQ(ar::checked_pow(5, 16), 152587890625ULL);
    EXPECT_THROW(ar::checked_pow(3, 40), pp::DomainError);
}

TEST(Arith, BigHelpers) {
    pp::BigInt root;
    EXPECT_TRUE(pp::is_perfect_square(pp::big_pow(3, 40), &root));
    EXPECT_EQ(root, pp::big_pow(3, 20));
    EXPECT_FALSE(pp::is_perfect_square(pp::big_pow(3, 41)));
    EXPECT_FALSE(pp::is_perfect_square(-4));
    EXPECT_EQ(pp::big_mod(-7, 5), 3);
    EXPECT_EQ(pp::to_string(pp::big_pow(5, 16)), "152587890625");
}

TEST(Arith, FnvIsStable) {
    EXPECT_EQ(pp::hex64(pp::fnv1a("")), "cbf29ce484222325");
    EXPECT_EQ(pp::hex64(pp::fnv1a("a")), "af63dc4c8601ec8c");
}
