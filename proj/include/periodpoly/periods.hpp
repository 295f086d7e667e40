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

#ifndef PERIODPOLY_PERIODS_HPP
#define PERIODPOLY_PERIODS_HPP

// Brute-force ground truth for reduced cyclotomic periods.
//
// One multiplicative sweep over a cyclic group <g> visits g^0, g^1, ...
// (one matrix-vector product per step) and buckets each element by
// (exponent mod e, trace). The resulting count matrix determines every
// period of order e and every Gauss sum of a character of order e on <g>.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "cyclotomic.hpp"
#include "field.hpp"

namespace periodpoly {

struct SweepOptions {
    unsigned threads = 0;                        ///< 0 means hardware concurrency
    std::uint64_t max_elements = 100'000'000;   ///< refuse larger enumerations
};

/// counts[k][t] = #{a in [0, order) : a = k mod e, Tr(g^a) = t}.
struct TraceSpectrum {
    std::uint64_t e = 0;
    std::uint32_t p = 0;
    std::vector<std::uint64_t> counts;  ///< row-major e x p

    [[nodiscard]] std::uint64_t count(std::uint64_t k, std::uint32_t t) const { return counts[k * p + t]; }
    [[nodiscard]] std::uint64_t row_sum(std::uint64_t k) const {
        std::uint64_t acc = 0;
        for (std::uint32_t t = 0; t < p; ++t) acc += count(k, t);
        return acc;
    }
    [[nodiscard]] std::uint64_t column_sum(std::uint32_t t) const {
        std::uint64_t acc = 0;
        for (std::uint64_t k = 0; k < e; ++k) acc += count(k, t);
        return acc;
    }
    friend bool operator==(const TraceSpectrum&, const TraceSpectrum&) = default;
};

namespace sweep_detail {

inline void sweep_range(const FieldCtx& ctx, const std::vector<std::uint32_t>& step_flat, const std::vector<std::uint32_t>& trace_row,
                        const FieldElem& start, std::uint64_t lo, std::uint64_t hi, std::uint64_t e,
                        std::vector<std::uint64_t>& counts) {
    const unsigned s = ctx.s();
    const std::uint64_t p = ctx.p();
    const bool lazy_mod = (p - 1) * (p - 1) <= (std::uint64_t{1} << 62) / s;
    std::vector<std::uint64_t> cur(start.coords.begin(), start.coords.end());
    std::vector<std::uint64_t> next(s);
    std::uint64_t k = lo % e;
    for (std::uint64_t a = lo; a < hi; ++a) {
        std::uint64_t tr = 0;
        if (lazy_mod) {
            for (unsigned i = 0; i < s; ++i) tr += trace_row[i] * cur[i];
            tr %= p;
        } else {
            for (unsigned i = 0; i < s; ++i) tr = (tr + trace_row[i] * cur[i] % p) % p;
        }
        ++counts[k * p + tr];
        if (++k == e) k = 0;
        const std::uint32_t* row = step_flat.data();
        for (unsigned r = 0; r < s; ++r, row += s) {
            std::uint64_t acc = 0;
            if (lazy_mod) {
                for (unsigned i = 0; i < s; ++i) acc += row[i] * cur[i];
                next[r] = acc % p;
            } else {
                for (unsigned i = 0; i < s; ++i) acc = (acc + row[i] * cur[i] % p) % p;
                next[r] = acc;
            }
        }
        cur.swap(next);
    }
}

}  // namespace sweep_detail

/// Buckets g^a for a in [0, order) by (a mod e, trace_row . g^a). The work is
/// split into contiguous exponent ranges, each seeded by g^{lo}; per-worker
/// count matrices are merged by addition, so the result does not depend on
/// the number of workers.
inline TraceSpectrum sweep_spectrum(const FieldCtx& ctx, const FieldElem& g, std::uint64_t order,
                                    const std::vector<std::uint32_t>& trace_row, std::uint64_t e,
                                    const SweepOptions& opts = {}) {
    if (e == 0 || order % e != 0) throw DomainError("e must divide the group order");
    if (order > opts.max_elements)
        throw BudgetError("enumeration of " + std::to_string(order) + " elements exceeds budget " +
                          std::to_string(opts.max_elements));
    const FpMatrix step = ctx.multiplication_matrix(g);
    std::vector<std::uint32_t> flat;
    flat.reserve(std::size_t{ctx.s()} * ctx.s());
    for (const auto& row : step) flat.insert(flat.end(), row.begin(), row.end());

    unsigned workers = opts.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opts.threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, order / 4096)));

    TraceSpectrum spec{e, ctx.p(), std::vector<std::uint64_t>(e * ctx.p(), 0)};
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(e * ctx.p(), 0));
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = order * w / workers;
        const std::uint64_t hi = order * (w + 1) / workers;
        auto body = [&, w, lo, hi] {
            sweep_detail::sweep_range(ctx, flat, trace_row, ctx.pow(g, lo), lo, hi, e, partial[w]);
        };
        if (workers == 1)
            body();
        else
            pool.emplace_back(body);
    }
    pool.clear();
    for (const auto& part : partial)
        for (std::size_t i = 0; i < part.size(); ++i) spec.counts[i] += part[i];
    return spec;
}

/// Spectrum of F_q^* under the fixed generator: rows are the cosets gamma^k H.
inline TraceSpectrum trace_spectrum(const FieldCtx& ctx, std::uint64_t e, const SweepOptions& opts = {}) {
    if (e == 0 || (ctx.q() - 1) % e != 0) throw DomainError("e must divide q - 1");
    return sweep_spectrum(ctx, ctx.gamma(), ctx.q() - 1, ctx.subfield_trace_row(ctx.s()), e, opts);
}

/// Spectrum of the subfield F_{p^d}^* generated by N(gamma), with the relative trace to F_p.
inline TraceSpectrum subfield_spectrum(const FieldCtx& ctx, unsigned d, std::uint64_t e, const SweepOptions& opts = {}) {
    const std::uint64_t order = arith::checked_pow(ctx.p(), d) - 1;
    return sweep_spectrum(ctx, ctx.subfield_norm(ctx.gamma(), d), order, ctx.subfield_trace_row(d), e, opts);
}

/// The reduced periods eta_k* = 1 + e * eta_k, k = 0..e-1, as exact cyclotomic integers.
struct PeriodVector {
    std::uint64_t e = 0;
    std::vector<CycElem> eta_star;

    /// eta*_k with k taken mod e.
    [[nodiscard]] const CycElem& at(std::int64_t k) const {
        const auto ee = static_cast<std::int64_t>(e);
        return eta_star[static_cast<std::size_t>(((k % ee) + ee) % ee)];
    }
};

inline PeriodVector reduced_periods(const TraceSpectrum& spec) {
    PeriodVector out{spec.e, {}};
    out.eta_star.reserve(spec.e);
    for (std::uint64_t k = 0; k < spec.e; ++k) {
        std::vector<BigInt> c(spec.p, 0);
        for (std::uint32_t t = 0; t < spec.p; ++t) c[t] = BigInt(spec.count(k, t)) * spec.e;
        c[0] += 1;
        out.eta_star.push_back(CycElem(spec.p, std::move(c)).canonical());
    }
    return out;
}

/// Prod_k (X - eta*_k), with every coefficient certified to be a rational
/// integer, the result monic of degree e, and the X^{e-1} coefficient zero.
inline IntPoly period_polynomial(const PeriodVector& periods) {
    auto poly = to_int_poly(poly_from_roots(periods.eta_star));
    if (!poly) throw ConsistencyError("period polynomial has a non-integer coefficient");
    if (poly->degree() != static_cast<int>(periods.e) || !poly->is_monic())
        throw ConsistencyError("period polynomial is not monic of degree e");
    if (periods.e >= 1 && poly->coeff(periods.e - 1) != 0)
        throw ConsistencyError("reduced periods do not sum to zero");
    return *poly;
}

/// P_e* of F_q by direct enumeration.
inline IntPoly brute_force_period_polynomial(const FieldCtx& ctx, std::uint64_t e, const SweepOptions& opts = {}) {
    return period_polynomial(reduced_periods(trace_spectrum(ctx, e, opts)));
}

/// delta = gcd(e, (q-1)/(p-1)): the number of rational factors of P_e*, each of degree e/delta.
inline std::uint64_t splitting_count(std::uint64_t p, unsigned s, std::uint64_t e) {
    // (q-1)/(p-1) = 1 + p + ... + p^{s-1}, reduced mod e
    std::uint64_t acc = 0;
    std::uint64_t pk = 1 % e;
    for (unsigned i = 0; i < s; ++i) {
        acc = (acc + pk) % e;
        pk = arith::mulmod(pk, p % e, e);
    }
    return std::gcd(e, acc);
}

}  // namespace periodpoly

#endif  // PERIODPOLY_PERIODS_HPP
