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

#ifndef PERIODPOLY_ARITH_HPP
#define PERIODPOLY_ARITH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace periodpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Base of everything this library throws.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller passed parameters outside an operation's hypotheses.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// An exact identity the mathematics guarantees did not hold. Always a bug.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

/// An enumeration would exceed the configured element budget.
class BudgetError : public Error {
  public:
    using Error::Error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp > 0) b *= b;
    }
    return result;
}

/// Mathematical modulus: result in [0, m).
inline BigInt big_mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Exact integer square root test; returns true and sets root when n is a perfect square.
inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root != nullptr) *root = r;
    return true;
}

namespace arith {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1U) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1U;
    }
    return r;
}

/// Inverse modulo m; requires gcd(a, m) = 1.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    i128 t = 0, new_t = 1;
    i128 r = m, new_r = a % m;
    while (new_r != 0) {
        i128 quot = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
    }
    if (r != 1) throw DomainError("invmod: argument not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

// Brent's variant of Pollard rho with a deterministic sequence of increments.
inline std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization as ascending (prime, exponent) pairs.
/// Trial division to 2^16, then Miller-Rabin certified Pollard rho.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: zero");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 2; d < (1U << 16) && d * d <= n; ++d) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    detail::factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t prime : primes) {
        if (!out.empty() && out.back().first == prime)
            ++out.back().second;
        else
            out.emplace_back(prime, 1);
    }
    return out;
}

/// Largest k with 2^k | n (n > 0).
inline int ord2(std::uint64_t n) {
    if (n == 0) throw DomainError("ord2: zero");
    int k = 0;
    while ((n & 1U) == 0) {
        n >>= 1U;
        ++k;
    }
    return k;
}

/// p^s, throwing when the result does not fit in 63 bits.
inline std::uint64_t checked_pow(std::uint64_t p, unsigned s) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < s; ++i) {
        if (r > (std::uint64_t{1} << 62) / p) throw DomainError("field order p^s exceeds 2^62");
        r *= p;
    }
    return r;
}

/// Jacobi symbol (a/n) for odd n > 0.
inline int jacobi(std::int64_t a, std::uint64_t n) {
    std::uint64_t x = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
                                                 static_cast<std::int64_t>(n));
    int sign = 1;
    while (x != 0) {
        while ((x & 1U) == 0) {
            x >>= 1U;
            if (n % 8 == 3 || n % 8 == 5) sign = -sign;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) sign = -sign;
        x %= n;
    }
    return n == 1 ? sign : 0;
}

/// Tonelli-Shanks square root of a modulo an odd prime p, using the smallest
/// quadratic non-residue. Returns the root in [0, p/2].
inline std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (jacobi(static_cast<std::int64_t>(a), p) != 1) throw DomainError("sqrt_mod: not a quadratic residue");
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1U) == 0) {
        q >>= 1U;
        ++s;
    }
    std::uint64_t z = 2;
    while (jacobi(static_cast<std::int64_t>(z), p) != -1) ++z;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t x = powmod(a, (q + 1) / 2, p);
    std::uint64_t t = powmod(a, q, p);
    int m = s;
    while (t != 1) {
        int i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
        x = mulmod(x, b, p);
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        m = i;
    }
    return std::min(x, p - x);
}

}  // namespace arith

/// 64-bit FNV-1a; used for stable content fingerprints, not for security.
inline std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 14695981039346656037ULL) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xFU];
        v >>= 4U;
    }
    return out;
}

}  // namespace periodpoly

#endif  // PERIODPOLY_ARITH_HPP
