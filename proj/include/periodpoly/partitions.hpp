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

#ifndef PERIODPOLY_PARTITIONS_HPP
#define PERIODPOLY_PARTITIONS_HPP

// Quadratic partitions p^k = A^2 + 2B^2 (p = 3 mod 8) and p^k = C^2 + D^2
// (p = 5 mod 8), normalized by a congruence on the first coordinate and a
// congruence in F_q, involving the fixed generator gamma, on the second.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "field.hpp"

namespace periodpoly {

enum class PartitionKind { A, C };

inline const char* to_string(PartitionKind k) { return k == PartitionKind::A ? "A" : "C"; }

struct PartitionRecord {
    PartitionKind kind = PartitionKind::A;
    unsigned r = 0;
    unsigned exponent = 0;  ///< k with first^2 + d*second^2 = p^k
    BigInt first;           ///< A_r or C_r
    BigInt second;          ///< B_r or D_r
    BigInt pk;
    std::string gamma_fingerprint;

    [[nodiscard]] unsigned d() const { return kind == PartitionKind::A ? 2 : 1; }
    friend bool operator==(const PartitionRecord&, const PartitionRecord&) = default;
};

/// a^2 + d*b^2 = p with a, b > 0 (d = 1: a odd). Seeded by the Tonelli-Shanks
/// root of -d mod p, then Euclid's remainder sequence until r^2 < p.
inline std::pair<BigInt, BigInt> cornacchia(std::uint64_t p, unsigned d) {
    if (!arith::is_prime(p) || p == 2) throw DomainError("cornacchia: p must be an odd prime");
    if (d == 2 && p % 8 != 1 && p % 8 != 3) throw DomainError("cornacchia: p = a^2 + 2b^2 needs p = 1 or 3 mod 8");
    if (d == 1 && p % 4 != 1) throw DomainError("cornacchia: p = a^2 + b^2 needs p = 1 mod 4");
    if (d != 1 && d != 2) throw DomainError("cornacchia: d must be 1 or 2");
    std::uint64_t a = p;
    std::uint64_t b = arith::sqrt_mod(p - d, p);
    if (2 * b < p) b = p - b;
    while (b * b >= p) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    const std::uint64_t rest = p - b * b;
    BigInt y;
    if (rest % d != 0 || !is_perfect_square(BigInt(rest / d), &y)) throw ConsistencyError("cornacchia: no representation");
    BigInt x = b;
    if (d == 1 && x % 2 == 0) std::swap(x, y);
    return {x, y};
}

/// (a + b sqrt(-d))^k for the prime representation (a, b); signs unnormalized.
inline std::pair<BigInt, BigInt> power_representation(std::uint64_t p, unsigned d, unsigned k) {
    auto [a, b] = cornacchia(p, d);
    BigInt x = 1, y = 0;
    for (unsigned i = 0; i < k; ++i) {
        BigInt nx = x * a - BigInt(d) * y * b;
        BigInt ny = x * b + y * a;
        x = std::move(nx);
        y = std::move(ny);
    }
    return {x, y};
}

/// Every (a, b) with a^2 + d*b^2 = n, all signs; exhaustive search over b.
inline std::vector<std::pair<BigInt, BigInt>> enumerate_representations(const BigInt& n, unsigned d) {
    std::vector<std::pair<BigInt, BigInt>> out;
    for (BigInt b = 0; BigInt(d) * b * b <= n; ++b) {
        BigInt a;
        if (!is_perfect_square(n - BigInt(d) * b * b, &a)) continue;
        for (int sa : {1, -1})
            for (int sb : {1, -1}) {
                if ((sa < 0 && a == 0) || (sb < 0 && b == 0)) continue;
                out.emplace_back(sa * a, sb * b);
            }
    }
    return out;
}

namespace partition_detail {

inline std::int64_t mod_p(const BigInt& v, std::uint32_t p) { return static_cast<std::int64_t>(big_mod(v, p)); }

/// Checks every defining condition of an A- or C-type pair.
inline bool satisfies(PartitionKind kind, const BigInt& first, const BigInt& second, const BigInt& pk, std::uint32_t p,
                      std::uint32_t field_value) {
    const unsigned d = kind == PartitionKind::A ? 2 : 1;
    if (first * first + BigInt(d) * second * second != pk) return false;
    if (mod_p(first, p) == 0) return false;
    if (kind == PartitionKind::A) {
        if (big_mod(first, 4) != 3) return false;
        // 2B = A u (mod p)
        return mod_p(2 * second - first * field_value, p) == 0;
    }
    if (big_mod(first, 4) != 1) return false;
    // D w = C (mod p)
    return mod_p(second * field_value - first, p) == 0;
}

/// The unique sign pattern of (a, b) meeting all conditions; any other count is a bug.
inline std::pair<BigInt, BigInt> normalize(PartitionKind kind, const BigInt& a, const BigInt& b, const BigInt& pk,
                                           std::uint32_t p, std::uint32_t field_value) {
    std::vector<std::pair<BigInt, BigInt>> hits;
    for (int sa : {1, -1})
        for (int sb : {1, -1})
            if (satisfies(kind, sa * a, sb * b, pk, p, field_value)) hits.emplace_back(sa * a, sb * b);
    if (hits.size() != 1) throw ConsistencyError("quadratic partition sign normalization is not unique");
    return hits.front();
}

}  // namespace partition_detail

/// A_r, B_r: p^{s/2^{r-2}} = A^2 + 2B^2, A = -1 mod 4, p !| A,
/// 2B = A (gamma^{(q-1)/8} + gamma^{3(q-1)/8}) mod p.
inline PartitionRecord partition_A(const FieldCtx& ctx, unsigned m, unsigned r) {
    const std::uint32_t p = ctx.p();
    const unsigned s = ctx.s();
    if (p % 8 != 3) throw DomainError("A-type partitions need p = 3 mod 8");
    if (r < 3 || r > m) throw DomainError("A-type partitions need 3 <= r <= m");
    if (r - 2 >= 32 || s % (1U << (r - 2)) != 0) throw DomainError("A-type partition needs 2^{r-2} | s");
    if ((ctx.q() - 1) % 8 != 0) throw DomainError("A-type partition needs 8 | q - 1");

    const std::uint64_t eighth = (ctx.q() - 1) / 8;
    const FieldElem u_elem = ctx.add(ctx.pow(ctx.gamma(), eighth), ctx.pow(ctx.gamma(), 3 * eighth));
    const auto u = ctx.as_prime_field(u_elem);
    if (!u) throw ConsistencyError("gamma^{(q-1)/8} + gamma^{3(q-1)/8} is not in the prime field");

    const unsigned k = s >> (r - 2);
    auto [a, b] = power_representation(p, 2, k);
    PartitionRecord rec;
    rec.kind = PartitionKind::A;
    rec.r = r;
    rec.exponent = k;
    rec.pk = big_pow(BigInt(p), k);
    std::tie(rec.first, rec.second) = partition_detail::normalize(PartitionKind::A, a, b, rec.pk, p, *u);
    rec.gamma_fingerprint = gamma_fingerprint(ctx);
    return rec;
}

/// C_r, D_r: p^{s/2^{r-1}} = C^2 + D^2, C = 1 mod 4, p !| C, D gamma^{(q-1)/4} = C mod p.
inline PartitionRecord partition_C(const FieldCtx& ctx, unsigned m, unsigned r) {
    const std::uint32_t p = ctx.p();
    const unsigned s = ctx.s();
    if (p % 8 != 5) throw DomainError("C-type partitions need p = 5 mod 8");
    if (r < 2 || r > m) throw DomainError("C-type partitions need 2 <= r <= m");
    if (r - 1 >= 32 || s % (1U << (r - 1)) != 0) throw DomainError("C-type partition needs 2^{r-1} | s");

    const FieldElem w_elem = ctx.pow(ctx.gamma(), (ctx.q() - 1) / 4);
    const auto w = ctx.as_prime_field(w_elem);
    if (!w) throw ConsistencyError("gamma^{(q-1)/4} is not in the prime field");

    const unsigned k = s >> (r - 1);
    auto [x, y] = power_representation(p, 1, k);
    if (x % 2 == 0) std::swap(x, y);  // the odd coordinate is C
    PartitionRecord rec;
    rec.kind = PartitionKind::C;
    rec.r = r;
    rec.exponent = k;
    rec.pk = big_pow(BigInt(p), k);
    std::tie(rec.first, rec.second) = partition_detail::normalize(PartitionKind::C, x, y, rec.pk, p, *w);
    rec.gamma_fingerprint = gamma_fingerprint(ctx);
    return rec;
}

/// All partitions the closed forms may use for a given m, keyed by r.
struct PartitionSet {
    PartitionKind kind = PartitionKind::A;
    std::map<unsigned, PartitionRecord> by_r;

    [[nodiscard]] const PartitionRecord& at(unsigned r) const {
        auto it = by_r.find(r);
        if (it == by_r.end())
            throw DomainError(std::string("missing partition ") + to_string(kind) + "_" + std::to_string(r));
        return it->second;
    }
    [[nodiscard]] const BigInt& first(unsigned r) const { return at(r).first; }
    [[nodiscard]] const BigInt& second(unsigned r) const { return at(r).second; }
};

/// Partitions for every r at which they are defined: A_r for 3 <= r <= m
/// (p = 3 mod 8), C_r for 2 <= r <= m with 2^{r-1} | s (p = 5 mod 8).
inline PartitionSet collect_partitions(const FieldCtx& ctx, unsigned m) {
    PartitionSet set;
    const unsigned s = ctx.s();
    if (ctx.p() % 8 == 3) {
        set.kind = PartitionKind::A;
        for (unsigned r = 3; r <= m && r - 2 < 32; ++r)
            if (s % (1U << (r - 2)) == 0 && (ctx.q() - 1) % 8 == 0) set.by_r.emplace(r, partition_A(ctx, m, r));
    } else if (ctx.p() % 8 == 5) {
        set.kind = PartitionKind::C;
        for (unsigned r = 2; r <= m && r - 1 < 32; ++r)
            if (s % (1U << (r - 1)) == 0) set.by_r.emplace(r, partition_C(ctx, m, r));
    } else {
        throw DomainError("quadratic partitions need p = 3 or 5 mod 8");
    }
    return set;
}

}  // namespace periodpoly

#endif  // PERIODPOLY_PARTITIONS_HPP
