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

#include <numeric>

#include "periodpoly/character_sums.hpp"

namespace pp = periodpoly;
using pp::BigInt;
using pp::CycElem;
using pp::FieldCtx;

namespace {

struct Inst {
    std::uint32_t p;
    unsigned s;
};

/// Direct sum over x = g^a in F_{p^d}^*, g = N(gamma), with the relative trace taken as sum of Frobenius conjugates.
CycElem naive_gauss(const FieldCtx& ctx, unsigned d, std::uint64_t order, std::int64_t j) {
    const std::uint64_t group = pp::arith::checked_pow(ctx.p(), d) - 1;
    const std::uint64_t n = std::lcm(order, std::uint64_t{ctx.p()});
    const auto g = ctx.subfield_norm(ctx.gamma(), d);
    std::vector<BigInt> c(n, 0);
    auto x = ctx.one();
    for (std::uint64_t a = 0; a < group; ++a) {
        auto tr = ctx.zero();
        auto conj = x;
        for (unsigned i = 0; i < d; ++i) {
            tr = ctx.add(tr, conj);
            conj = ctx.frobenius(conj);
        }
        const std::uint32_t t = ctx.as_prime_field(tr).value();
        const auto ord = static_cast<std::int64_t>(order);
        const auto chi = static_cast<std::uint64_t>((((j % ord) * static_cast<std::int64_t>(a % order)) % ord + ord) % ord);
        c[(chi * (n / order) + t * (n / ctx.p())) % n] += 1;
        x = ctx.mul(x, g);
    }
    return CycElem(n, c);
}

CycElem naive_jacobi(const FieldCtx& ctx, std::uint64_t order, std::int64_t j) {
    const std::uint64_t group = ctx.q() - 1;
    std::vector<std::uint64_t> log(ctx.q(), 0);
    auto x = ctx.one();
    for (std::uint64_t a = 0; a < group; ++a) {
        log[ctx.encode(x)] = a;
        x = ctx.mul(x, ctx.gamma());
    }
    std::vector<BigInt> c(order, 0);
    const auto ord = static_cast<std::int64_t>(order);
    for (std::uint64_t v = 0; v < ctx.q(); ++v) {
        const auto y = ctx.decode(v);
        const auto z = ctx.sub(ctx.one(), y);
        if (ctx.is_zero(y) || ctx.is_zero(z)) continue;
        const auto u = static_cast<std::int64_t>((log[v] + log[ctx.encode(z)]) % order);
        c[static_cast<std::size_t>(((j % ord) * u % ord + ord) % ord)] += 1;
    }
    return CycElem(order, c);
}

// Character orders 2, 4, ... dividing n, up to cap (conductors 2^a p).
std::vector<std::uint64_t> two_power_orders(std::uint64_t n, std::uint64_t cap) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= std::min(n, cap); d *= 2)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

TEST(CharacterSums, GaussSumsMatchDirectSum) {
    int cases = 0;
    for (const Inst& inst : std::vector<Inst>{{3, 2}, {3, 4}, {5, 2}, {7, 2}, {13, 2}, {3, 3}, {5, 3}, {11, 2}}) {
        const FieldCtx ctx = FieldCtx::build(inst.p, inst.s);
        for (unsigned d = 1; d <= inst.s; ++d) {
            if (inst.s % d != 0) continue;
            const std::uint64_t group = pp::arith::checked_pow(inst.p, d) - 1;
            for (std::uint64_t order : two_power_orders(group, 16)) {
                const pp::GaussTable table(ctx, d, order);
                for (std::int64_t j = -1; j < static_cast<std::int64_t>(order); ++j) {
                    ASSERT_EQ(table(j), naive_gauss(ctx, d, order, j)) << inst.p << "^" << inst.s << " d=" << d << " order=" << order;
                    ++cases;
                }
            }
        }
    }
    EXPECT_GE(cases, 100);
}

TEST(CharacterSums, GaussSumAbsoluteValue) {
    for (const Inst& inst : std::vector<Inst>{{3, 4}, {5, 4}, {7, 2}, {13, 2}, {3, 6}, {5, 2}}) {
        const FieldCtx ctx = FieldCtx::build(inst.p, inst.s);
        for (std::uint64_t order : two_power_orders(ctx.q() - 1, 16)) {
            const pp::GaussTable table(ctx, ctx.s(), order);
            for (std::int64_t j = 1; j < static_cast<std::int64_t>(order); ++j) {
                const CycElem g = table(j);
                ASSERT_EQ((g * g.conjugate()).as_integer(), BigInt(ctx.q()));
            }
            EXPECT_EQ(table(0).as_integer(), BigInt(-1));
        }
    }
}

TEST(CharacterSums, FreeFunctionsAndExamples) {
    const FieldCtx f9 = FieldCtx::build(3, 2);
    // Quadratic character on F_9: G = (-1)^{s-1} i^s sqrt(q) = 3.
    EXPECT_EQ(pp::gauss_sum(f9, {2, 2, 1}).as_integer(), BigInt(3));
    // F_3: quadratic Gauss sum is i sqrt(3) = 2 zeta_3 + 1.
    const CycElem g3 = pp::gauss_sum(FieldCtx::build(3, 1), {1, 2, 1});
    EXPECT_EQ(g3, BigInt(2) * CycElem::zeta(3, 1) + CycElem::integer(3, 1));
    EXPECT_EQ(g3.embed(12), BigInt(2) * CycElem::zeta(12, 4) + CycElem::integer(12, 1));
    EXPECT_EQ((g3 * g3).as_integer(), BigInt(-3));
    EXPECT_EQ(pp::gauss_sum(f9, {0, 4, 1}), pp::GaussTable(f9, 2, 4)(1));
    EXPECT_EQ(pp::gauss_sum(f9, {2, 4, 2}).as_integer(), BigInt(3));
    EXPECT_THROW(pp::gauss_sum(f9, {2, 1, 0}), pp::DomainError);
    EXPECT_THROW(pp::gauss_sum(f9, {2, 3, 1}), pp::DomainError);
    EXPECT_THROW(pp::jacobi_sum(f9, {2, 1, 0}), pp::DomainError);
    // Quadratic Jacobi sum on F_p is -rho(-1).
    const FieldCtx f13 = FieldCtx::build(13, 1);
    EXPECT_EQ(pp::jacobi_sum(f13, {1, 2, 1}).as_integer(), BigInt(-1));
    EXPECT_EQ(pp::sqrt_p_power(3, 2).pow(2).as_integer(), BigInt(9));
    EXPECT_EQ(pp::sqrt_p_power(3, 1).pow(2).as_integer(), BigInt(3));
    EXPECT_EQ(pp::sqrt_p_power(5, 3).pow(2).as_integer(), BigInt(125));
    EXPECT_EQ(pp::q_power_cyc(3, 4, 1, 2).as_integer(), BigInt(9));
    EXPECT_THROW(pp::q_power_cyc(3, 1, 1, 4), pp::DomainError);
}

TEST(CharacterSums, JacobiSumsMatchDirectSum) {
    for (const Inst& inst : std::vector<Inst>{{3, 2}, {3, 4}, {5, 2}, {7, 2}, {13, 2}, {5, 4}}) {
        const FieldCtx ctx = FieldCtx::build(inst.p, inst.s);
        for (std::uint64_t order : two_power_orders(ctx.q() - 1, 16)) {
            const pp::JacobiTable table(ctx, inst.s, order);
            for (std::int64_t j = 0; j < static_cast<std::int64_t>(order); ++j)
                ASSERT_EQ(table(j), naive_jacobi(ctx, order, j)) << inst.p << "^" << inst.s << " order=" << order;
        }
    }
    EXPECT_THROW(pp::JacobiTable(FieldCtx::build(5, 8), 8, 4, pp::SweepOptions{1, 1000}), pp::BudgetError);
}

TEST(CharacterSums, CharacterExponent) {
    const FieldCtx ctx = FieldCtx::build(5, 4);
    EXPECT_EQ(pp::character_exponent(ctx, 4, 16, ctx.gamma()), 1U);
    EXPECT_EQ(pp::character_exponent(ctx, 4, 16, ctx.one()), 0U);
    EXPECT_EQ(pp::character_exponent(ctx, 2, 8, ctx.subfield_norm(ctx.gamma(), 2)), 1U);
    EXPECT_THROW(pp::character_exponent(ctx, 4, 7, ctx.gamma()), pp::DomainError);
    EXPECT_THROW(pp::character_exponent(ctx, 2, 8, ctx.gamma()), pp::DomainError);
    EXPECT_THROW(pp::character_exponent(ctx, 4, 16, ctx.zero()), pp::DomainError);
}

TEST(CharacterSums, IdentitySuiteHolds) {
    int checked = 0;
    const std::vector<std::pair<Inst, unsigned>> grid{
        {{3, 2}, 2}, {{3, 2}, 3}, {{3, 4}, 3}, {{3, 4}, 4}, {{5, 2}, 2}, {{5, 2}, 3}, {{5, 4}, 2},
        {{5, 4}, 4}, {{11, 2}, 3}, {{11, 4}, 4}, {{13, 2}, 2}, {{13, 4}, 4}, {{3, 8}, 5}, {{5, 6}, 3},
        {{7, 2}, 4}, {{17, 2}, 4}, {{3, 6}, 3}, {{5, 8}, 5}};
    for (const auto& [inst, m] : grid) {
        const FieldCtx ctx = FieldCtx::build(inst.p, inst.s);
        for (const auto& rec : pp::lemma_suite(ctx, m)) {
            ASSERT_TRUE(rec.pass) << inst.p << "^" << inst.s << " m=" << m << " " << rec.lemma << " " << rec.detail;
            ++checked;
        }
    }
    EXPECT_GE(checked, 1000);
}

TEST(CharacterSums, SuiteFilter) {
    const FieldCtx ctx = FieldCtx::build(3, 4);
    const auto recs = pp::lemma_suite(ctx, 4, {"15"});
    ASSERT_FALSE(recs.empty());
    for (const auto& rec : recs) EXPECT_EQ(rec.lemma, "15");
    EXPECT_TRUE(pp::lemma_suite(ctx, 4, {"16"}).empty());
    EXPECT_THROW(pp::lemma_suite(ctx, 5), pp::DomainError);
    EXPECT_THROW(pp::lemma_suite(ctx, 1), pp::DomainError);
}

TEST(CharacterSums, LiftMatchesDirect) {
    const std::vector<std::pair<Inst, unsigned>> grid{{{3, 4}, 4}, {{3, 8}, 5}, {{5, 4}, 4}, {{5, 8}, 4}, {{5, 8}, 5}, {{13, 4}, 4}, {{11, 4}, 4}};
    for (const auto& [inst, m] : grid) {
        const FieldCtx ctx = FieldCtx::build(inst.p, inst.s);
        const auto direct = pp::gauss_powers_direct(ctx, m);
        for (unsigned d = 1; d <= inst.s; ++d) {
            if (inst.s % d != 0 || pp::arith::powmod(inst.p, d, std::uint64_t{1} << m) != 1) continue;
            const auto lifted = pp::gauss_powers_lifted(ctx, m, d);
            for (unsigned r = 1; r <= m; ++r) {
                ASSERT_EQ(lifted.lam[r], direct.lam[r]) << inst.p << "^" << inst.s << " d=" << d << " r=" << r;
                ASSERT_EQ(lifted.lam_bar[r], direct.lam_bar[r]);
            }
        }
    }
    EXPECT_EQ(pp::lift_base_degree(3, 8, 4), 4U);
    EXPECT_EQ(pp::lift_base_degree(5, 16, 4), 4U);
    EXPECT_EQ(pp::lift_base_degree(13, 4, 3), 2U);
    EXPECT_FALSE(pp::lift_base_degree(3, 2, 4).has_value());
    EXPECT_THROW(pp::davenport_hasse_lift(CycElem::integer(1, 1), 0), pp::DomainError);
}

TEST(CharacterSums, PeriodsFromGaussSums) {
    const std::vector<std::pair<Inst, unsigned>> grid{{{3, 2}, 3}, {{3, 4}, 4}, {{3, 8}, 5}, {{5, 2}, 2}, {{5, 2}, 3},
                                                      {{5, 4}, 4}, {{11, 4}, 4}, {{13, 4}, 4}, {{5, 8}, 5}, {{3, 4}, 3}};
    for (const auto& [inst, m] : grid) {
        const FieldCtx ctx = FieldCtx::build(inst.p, inst.s);
        const pp::GaussTable table(ctx, inst.s, std::uint64_t{1} << m);
        const auto brute = pp::reduced_periods(table.spectrum());
        const auto via_gauss = pp::eta_via_gauss(inst.p, inst.s, m, pp::gauss_powers_from(std::cref(table), m));
        const auto fourier = pp::eta_via_fourier(table);
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
            ASSERT_EQ(via_gauss.eta_star[k], brute.eta_star[k]) << inst.p << "^" << inst.s << " m=" << m << " k=" << k;
            ASSERT_EQ(fourier.eta_star[k], brute.eta_star[k]);
        }
    }
    EXPECT_THROW(pp::eta_via_gauss(7, 2, 3, {}), pp::DomainError);
}

TEST(CharacterSums, PartitionIdentitiesPerIndex) {
    const FieldCtx ctx = FieldCtx::build(3, 8);
    for (unsigned r = 3; r <= 4; ++r)
        for (const auto& rec : pp::lemma15_16_check(ctx, 5, r)) EXPECT_TRUE(rec.pass) << r << " " << rec.detail;
    EXPECT_THROW(pp::lemma15_16_check(ctx, 5, 2), pp::DomainError);
    EXPECT_THROW(pp::lemma15_16_check(ctx, 5, 5), pp::DomainError);
    const FieldCtx c5 = FieldCtx::build(5, 4);
    for (unsigned r = 2; r <= 3; ++r)
        for (const auto& rec : pp::lemma15_16_check(c5, 4, r)) EXPECT_TRUE(rec.pass) << r << " " << rec.detail;
}
