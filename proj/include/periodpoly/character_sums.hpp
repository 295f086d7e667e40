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

#ifndef PERIODPOLY_CHARACTER_SUMS_HPP
#define PERIODPOLY_CHARACTER_SUMS_HPP

// Exact Gauss and Jacobi sums of multiplicative characters of F_{p^d}
// (d | s), taken relative to the generator N(gamma) of the subfield, so that
// a character on a subfield lifts to the character of the same index on F_q.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclotomic.hpp"
#include "field.hpp"
#include "partitions.hpp"
#include "periods.hpp"

namespace periodpoly {

/// psi on F_{p^degree} with psi(N(gamma)) = zeta_order^index, psi(0) = 0.
struct CharacterSpec {
    unsigned degree = 0;
    std::uint64_t order = 0;
    std::int64_t index = 1;
};

/// p^{a/2} in Z[zeta_n]; odd a uses sqrt(p) from the quadratic Gauss sum
/// (conductor p when p = 1 mod 4, 4p when p = 3 mod 4).
inline CycElem sqrt_p_power(std::uint64_t p, std::uint64_t twice_exponent) {
    CycElem out = CycElem::integer(1, big_pow(BigInt(p), twice_exponent / 2));
    if (twice_exponent % 2 == 0) return out;
    CycElem g = quadratic_gauss_sum_prime(p);
    if (p % 4 == 3) g = -(imag_unit(4 * p) * g);  // -i * (i sqrt p)
    return out * g;
}

/// q^{num/den} = p^{s num / den} exactly, allowing half-integral powers of p.
inline CycElem q_power_cyc(std::uint64_t p, unsigned s, std::uint64_t num, std::uint64_t den) {
    if (den == 0 || (2 * std::uint64_t{s} * num) % den != 0) throw DomainError("q_power_cyc: exponent not in (1/2)Z");
    return sqrt_p_power(p, 2 * std::uint64_t{s} * num / den);
}

/// Exponent u mod order with chi(x) = zeta_order^u, chi(N(gamma)) = zeta_order, x in F_{p^degree}^*.
inline std::uint64_t character_exponent(const FieldCtx& ctx, unsigned degree, std::uint64_t order, const FieldElem& x) {
    const std::uint64_t group = arith::checked_pow(ctx.p(), degree) - 1;
    if (order == 0 || group % order != 0) throw DomainError("character order must divide p^degree - 1");
    if (ctx.is_zero(x) || !ctx.in_subfield(x, degree)) throw DomainError("character argument must be a nonzero subfield element");
    const FieldElem root = ctx.pow(ctx.subfield_norm(ctx.gamma(), degree), group / order);
    const FieldElem target = ctx.pow(x, group / order);
    FieldElem cur = ctx.one();
    for (std::uint64_t u = 0; u < order; ++u) {
        if (cur == target) return u;
        cur = ctx.mul(cur, root);
    }
    throw ConsistencyError("character_exponent: discrete log not found");
}

/// All Gauss sums G(chi^j) for chi of a fixed order on a subfield, from one sweep.
class GaussTable {
  public:
    GaussTable(const FieldCtx& ctx, unsigned degree, std::uint64_t order, const SweepOptions& opts = {})
        : p_(ctx.p()), degree_(degree), order_(order), conductor_(std::lcm(order, std::uint64_t{ctx.p()})),
          spectrum_(subfield_spectrum(ctx, degree, order, opts)) {}

    /// Build from an existing full-field spectrum (degree = s).
    GaussTable(const FieldCtx& ctx, TraceSpectrum spectrum)
        : p_(ctx.p()), degree_(ctx.s()), order_(spectrum.e), conductor_(std::lcm(spectrum.e, std::uint64_t{ctx.p()})),
          spectrum_(std::move(spectrum)) {}

    [[nodiscard]] std::uint64_t order() const { return order_; }
    [[nodiscard]] unsigned degree() const { return degree_; }
    [[nodiscard]] std::uint64_t conductor() const { return conductor_; }
    [[nodiscard]] const TraceSpectrum& spectrum() const { return spectrum_; }

    /// G(chi^j) = sum_x chi^j(x) zeta_p^{Tr x}; j = 0 gives the trivial-character sum -1.
    [[nodiscard]] CycElem operator()(std::int64_t j) const {
        const auto ord = static_cast<std::int64_t>(order_);
        const std::uint64_t jj = static_cast<std::uint64_t>(((j % ord) + ord) % ord);
        const std::uint64_t step_e = conductor_ / order_;
        const std::uint64_t step_p = conductor_ / p_;
        std::vector<BigInt> c(conductor_, 0);
        for (std::uint64_t k = 0; k < order_; ++k) {
            const std::uint64_t char_pos = (jj * k % order_) * step_e;
            for (std::uint32_t t = 0; t < p_; ++t) {
                const std::uint64_t n = spectrum_.count(k, t);
                if (n != 0) c[(char_pos + t * step_p) % conductor_] += n;
            }
        }
        return CycElem(conductor_, std::move(c)).canonical();
    }

  private:
    std::uint32_t p_;
    unsigned degree_;
    std::uint64_t order_;
    std::uint64_t conductor_;
    TraceSpectrum spectrum_;
};

inline CycElem gauss_sum(const FieldCtx& ctx, const CharacterSpec& spec, const SweepOptions& opts = {}) {
    if (spec.order <= 1) throw DomainError("gauss_sum: character order must exceed 1");
    return GaussTable(ctx, spec.degree == 0 ? ctx.s() : spec.degree, spec.order, opts)(spec.index);
}

/// All Jacobi sums J(chi^j) = sum_x chi^j(x) chi^j(1 - x) for chi of a fixed order on a subfield.
class JacobiTable {
  public:
    static constexpr std::uint64_t kMaxLogTable = std::uint64_t{1} << 24;

    JacobiTable(const FieldCtx& ctx, unsigned degree, std::uint64_t order, const SweepOptions& opts = {})
        : order_(order), counts_(order, 0) {
        const std::uint64_t group = arith::checked_pow(ctx.p(), degree) - 1;
        if (order == 0 || group % order != 0) throw DomainError("character order must divide p^degree - 1");
        if (group > std::min(opts.max_elements, kMaxLogTable)) throw BudgetError("Jacobi sum log table exceeds budget");
        const FieldElem g = ctx.subfield_norm(ctx.gamma(), degree);
        std::unordered_map<std::uint64_t, std::uint64_t> log;
        log.reserve(group);
        std::vector<FieldElem> powers;
        powers.reserve(group);
        FieldElem cur = ctx.one();
        for (std::uint64_t a = 0; a < group; ++a) {
            log.emplace(ctx.encode(cur), a);
            powers.push_back(cur);
            cur = ctx.mul(cur, g);
        }
        const FieldElem one = ctx.one();
        for (std::uint64_t a = 1; a < group; ++a) {
            const FieldElem y = ctx.sub(one, powers[a]);
            const auto it = log.find(ctx.encode(y));
            if (it == log.end()) throw ConsistencyError("JacobiTable: 1 - x escaped the subfield");
            ++counts_[(a + it->second) % order_];
        }
    }

    [[nodiscard]] CycElem operator()(std::int64_t j) const {
        const auto ord = static_cast<std::int64_t>(order_);
        const std::uint64_t jj = static_cast<std::uint64_t>(((j % ord) + ord) % ord);
        std::vector<BigInt> c(order_, 0);
        for (std::uint64_t u = 0; u < order_; ++u) c[jj * u % order_] += counts_[u];
        return CycElem(order_, std::move(c)).canonical();
    }

  private:
    std::uint64_t order_;
    std::vector<std::uint64_t> counts_;
};

inline CycElem jacobi_sum(const FieldCtx& ctx, const CharacterSpec& spec, const SweepOptions& opts = {}) {
    if (spec.order <= 1) throw DomainError("jacobi_sum: character order must exceed 1");
    return JacobiTable(ctx, spec.degree == 0 ? ctx.s() : spec.degree, spec.order, opts)(spec.index);
}

/// Gauss sum of the lift of a character to the degree-r extension: (-1)^{r-1} G^r.
inline CycElem davenport_hasse_lift(const CycElem& base, unsigned r) {
    if (r == 0) throw DomainError("lift degree must be positive");
    CycElem out = base.pow(r);
    return r % 2 == 1 ? out : -out;
}

/// G(lambda^{2^{m-r}}) and G(conj(lambda)^{2^{m-r}}) for r = 1..m, lambda(gamma) = zeta_{2^m}.
/// Entry 0 is unused; entry 1 is the quadratic character (both columns equal).
struct GaussPowers {
    unsigned m = 0;
    std::vector<CycElem> lam;
    std::vector<CycElem> lam_bar;
};

inline GaussPowers gauss_powers_from(const std::function<CycElem(std::int64_t)>& table, unsigned m) {
    GaussPowers gp{m, std::vector<CycElem>(m + 1), std::vector<CycElem>(m + 1)};
    for (unsigned r = 1; r <= m; ++r) {
        const std::int64_t j = std::int64_t{1} << (m - r);
        gp.lam[r] = table(j);
        gp.lam_bar[r] = table(-j);
    }
    return gp;
}

/// Gauss powers by enumerating F_q itself.
inline GaussPowers gauss_powers_direct(const FieldCtx& ctx, unsigned m, const SweepOptions& opts = {}) {
    GaussTable table(ctx, ctx.s(), std::uint64_t{1} << m, opts);
    return gauss_powers_from(std::cref(table), m);
}

/// Smallest d | s with 2^m | p^d - 1.
inline std::optional<unsigned> lift_base_degree(std::uint64_t p, unsigned s, unsigned m) {
    const std::uint64_t e = std::uint64_t{1} << m;
    for (unsigned d = 1; d <= s; ++d) {
        if (s % d != 0) continue;
        if (arith::powmod(p, d, e) == 1 % e) return d;
    }
    return std::nullopt;
}

/// Gauss powers for F_q from the subfield of degree base_degree, lifted by
/// Davenport-Hasse one prime degree at a time (e.g. 4 -> 8 -> 16).
inline GaussPowers gauss_powers_lifted(const FieldCtx& ctx, unsigned m, unsigned base_degree, const SweepOptions& opts = {}) {
    if (base_degree == 0 || ctx.s() % base_degree != 0) throw DomainError("lift base degree must divide s");
    GaussTable base(ctx, base_degree, std::uint64_t{1} << m, opts);
    GaussPowers gp = gauss_powers_from(std::cref(base), m);
    for (auto [ell, mult] : arith::factorize(ctx.s() / base_degree)) {
        for (int i = 0; i < mult; ++i) {
            for (unsigned r = 1; r <= m; ++r) {
                gp.lam[r] = davenport_hasse_lift(gp.lam[r], static_cast<unsigned>(ell));
                gp.lam_bar[r] = davenport_hasse_lift(gp.lam_bar[r], static_cast<unsigned>(ell));
            }
        }
    }
    return gp;
}

/// All 2^m reduced periods from the m Gauss-sum pairs: closed expansions for
/// k = 0, 2^{m-1}, +-2^t (0 <= t <= m-2); the remaining indices follow from
/// eta*_{kp} = eta*_k since +-p^v covers the odd residues mod 2^{m-t}.
inline PeriodVector eta_via_gauss(std::uint64_t p, unsigned s, unsigned m, const GaussPowers& g) {
    if (p % 8 != 3 && p % 8 != 5) throw DomainError("eta_via_gauss needs p = 3 or 5 mod 8");
    if (m < 2 || g.m != m || g.lam.size() != m + 1 || g.lam_bar.size() != m + 1)
        throw DomainError("eta_via_gauss: incomplete Gauss table");
    if (static_cast<unsigned>(arith::ord2(s)) + 2 < m) throw DomainError("eta_via_gauss needs 2^{m-2} | s");
    const bool three = p % 8 == 3;
    const std::uint64_t e = std::uint64_t{1} << m;
    const std::uint64_t n = e * p;
    auto S = [&](unsigned r) { return (g.lam[r] + g.lam_bar[r]).embed(n); };
    auto D = [&](unsigned r) { return (g.lam[r] - g.lam_bar[r]).embed(n); };
    auto pow2 = [](unsigned k) { return BigInt(1) << k; };
    const CycElem g_rho = g.lam[1].embed(n);
    const CycElem i = imag_unit(n);
    const CycElem isq2 = three && m >= 3 ? i_sqrt2(n) : CycElem(n);  // only used when t + 3 <= m

    std::vector<std::optional<CycElem>> eta(e);
    CycElem partial(n);  // sum_{r=2}^{m-1} 2^{r-2} S_r
    for (unsigned r = 2; r + 1 <= m; ++r) partial = partial + pow2(r - 2) * S(r);
    eta[0] = g_rho + partial + pow2(m - 2) * S(m);
    eta[e / 2] = g_rho + partial - pow2(m - 2) * S(m);

    for (unsigned t = 0; t + 2 <= m; ++t) {
        CycElem base(n);
        for (unsigned r = 2; r <= t; ++r) base = base + pow2(r - 2) * S(r);
        base = t == 0 ? base - g_rho : base + g_rho - pow2(t - 1) * S(t + 1);
        CycElem corr(n);
        if (!three) corr = corr + pow2(t) * (i * D(t + 2));
        if (three && t + 3 <= m) corr = corr + pow2(t) * (isq2 * D(t + 3));
        eta[std::uint64_t{1} << t] = (base - corr).canonical();
        eta[e - (std::uint64_t{1} << t)] = (base + corr).canonical();
    }

    PeriodVector out{e, {}};
    for (std::uint64_t k = 0; k < e; ++k) {
        if (!eta[k]) {
            const int t = arith::ord2(k);
            const std::uint64_t mod = e >> t;
            const std::uint64_t odd = k >> t;
            std::optional<std::uint64_t> source;
            std::uint64_t pv = 1;
            for (std::uint64_t v = 0; v < mod && !source; ++v) {
                if (pv == odd) source = (std::uint64_t{1} << t);
                if ((mod - pv) % mod == odd) source = e - (std::uint64_t{1} << t);
                pv = pv * (p % mod) % mod;
            }
            if (!source) throw ConsistencyError("eta_via_gauss: index not reached by +-p^v");
            eta[k] = eta[*source];
        }
        out.eta_star.push_back(*eta[k]);
    }
    return out;
}

/// eta*_k = sum_{j=1}^{e-1} G(lambda^j) zeta_e^{-jk} for any e | q - 1.
inline PeriodVector eta_via_fourier(const GaussTable& table) {
    const std::uint64_t e = table.order();
    const std::uint64_t n = table.conductor();
    std::vector<CycElem> g(e, CycElem(n));
    for (std::uint64_t j = 1; j < e; ++j) g[j] = table(static_cast<std::int64_t>(j));
    PeriodVector out{e, {}};
    for (std::uint64_t k = 0; k < e; ++k) {
        CycElem acc(n);
        for (std::uint64_t j = 1; j < e; ++j)
            acc = acc + g[j] * CycElem::zeta(e, -static_cast<std::int64_t>(j * k % e)).embed(n);
        out.eta_star.push_back(acc.canonical());
    }
    return out;
}

/// One evaluated identity. Failures always indicate a bug.
struct LemmaRecord {
    std::string lemma;
    std::optional<int> r;
    std::string detail;
    CycElem lhs;
    CycElem rhs;
    bool pass = false;
};

inline LemmaRecord make_record(std::string lemma, std::optional<int> r, std::string detail, CycElem lhs, CycElem rhs) {
    LemmaRecord rec{std::move(lemma), r, std::move(detail), lhs.canonical(), rhs.canonical(), false};
    rec.pass = rec.lhs == rec.rhs;
    return rec;
}

/// Sum and difference of G(lambda^{2^{m-r}}) and its conjugate character
/// against the normalized partition (A-type for p = 3 mod 8, C-type for 5).
inline std::vector<LemmaRecord> lemma15_16_check(const FieldCtx& ctx, unsigned m, unsigned r, const GaussTable& table) {
    const std::uint64_t p = ctx.p();
    const unsigned s = ctx.s();
    if (table.order() != (std::uint64_t{1} << m) || table.degree() != s) throw DomainError("Gauss table does not match m");
    const std::int64_t j = std::int64_t{1} << (m - r);
    const CycElem sum = table(j) + table(-j);
    const CycElem diff = table(j) - table(-j);
    std::vector<LemmaRecord> out;
    if (p % 8 == 3) {
        if (r < 3 || r > m || s % (1U << (r - 1)) != 0) throw DomainError("A-type Gauss sum identity needs 3 <= r <= m and 2^{r-1} | s");
        const auto rec = partition_A(ctx, m, r);
        const CycElem qp = q_power_cyc(p, s, (1U << (r - 2)) - 1, 1U << (r - 1));
        out.push_back(make_record("15", static_cast<int>(r), "sum", sum, BigInt(2 * rec.first) * qp));
        out.push_back(make_record("15", static_cast<int>(r), "diff", diff, BigInt(2 * rec.second) * (qp * i_sqrt2(8))));
    } else if (p % 8 == 5) {
        if (r < 2 || r > m || s % (1U << (r - 1)) != 0) throw DomainError("C-type Gauss sum identity needs 2 <= r <= m and 2^{r-1} | s");
        const auto rec = partition_C(ctx, m, r);
        const CycElem qp = q_power_cyc(p, s, (1U << (r - 1)) - 1, 1U << r);
        const bool full = s % (1U << r) == 0;
        const int sign_sum = full ? -1 : (r % 2 == 0 ? 1 : -1);
        const int sign_diff = full ? 1 : ((r - 1) % 2 == 0 ? 1 : -1);
        const std::string branch = full ? "2^r|s" : "2^{r-1}||s";
        out.push_back(make_record("16", static_cast<int>(r), "sum " + branch, sum, BigInt(sign_sum * 2 * rec.first) * qp));
        out.push_back(make_record("16", static_cast<int>(r), "diff " + branch, diff,
                                  BigInt(sign_diff * 2 * rec.second) * (qp * imag_unit(4))));
    } else {
        throw DomainError("partition identities need p = 3 or 5 mod 8");
    }
    return out;
}

inline std::vector<LemmaRecord> lemma15_16_check(const FieldCtx& ctx, unsigned m, unsigned r, const SweepOptions& opts = {}) {
    return lemma15_16_check(ctx, m, r, GaussTable(ctx, ctx.s(), std::uint64_t{1} << m, opts));
}

/// Evaluates the Gauss/Jacobi-sum identity suite for characters of 2-power
/// order dividing 2^m on F_q. `only` restricts to the named identities ("2a",
/// "2b", "2c", "1", "3", "4", "5", "7", "8", "9", "10", "11", "12", "14",
/// "15", "16"); empty means all that apply.
inline std::vector<LemmaRecord> lemma_suite(const FieldCtx& ctx, unsigned m, const std::set<std::string>& only = {},
                                            const SweepOptions& opts = {}) {
    const std::uint64_t p = ctx.p();
    const unsigned s = ctx.s();
    const std::uint64_t q = ctx.q();
    const std::uint64_t e = std::uint64_t{1} << m;
    if (m < 2 || (q - 1) % e != 0) throw DomainError("lemma suite needs m >= 2 and 2^m | q - 1");
    const bool cls35 = p % 8 == 3 || p % 8 == 5;
    auto want = [&](const char* name) { return only.empty() || only.count(name) > 0; };

    GaussTable table(ctx, ctx.s(), e, opts);
    const std::int64_t half = static_cast<std::int64_t>(e / 2);
    auto zeta_e = [&](std::int64_t k) { return CycElem::zeta(e, k); };
    const std::uint64_t log_minus_one = character_exponent(ctx, s, e, ctx.constant(-1));
    const std::uint64_t log_four = character_exponent(ctx, s, e, ctx.constant(4));
    const CycElem q_int = CycElem::integer(1, BigInt(q));
    std::vector<LemmaRecord> out;

    std::vector<CycElem> g(e);
    for (std::uint64_t j = 0; j < e; ++j) g[j] = table(static_cast<std::int64_t>(j));
    auto G = [&](std::int64_t j) -> const CycElem& {
        const auto ee = static_cast<std::int64_t>(e);
        return g[static_cast<std::size_t>(((j % ee) + ee) % ee)];
    };

    for (std::int64_t j = 1; j < static_cast<std::int64_t>(e); ++j) {
        const std::string tag = "j=" + std::to_string(j);
        if (j != half) {
            if (want("2a"))
                out.push_back(make_record("2a", std::nullopt, tag, G(j) * G(-j),
                                          zeta_e(j * static_cast<std::int64_t>(log_minus_one)) * q_int));
            if (want("2c"))
                out.push_back(make_record("2c", std::nullopt, tag, G(j) * G(j + half),
                                          zeta_e(-j * static_cast<std::int64_t>(log_four)) * G(2 * j) * G(half)));
        }
        if (want("2b")) out.push_back(make_record("2b", std::nullopt, tag, G(j), G(j * static_cast<std::int64_t>(p % e))));
    }

    if (want("3")) {
        CycElem expected = q_power_cyc(p, s, 1, 2);
        if (p % 4 == 3) expected = imag_unit(4).pow(s % 4) * expected;
        if (s % 2 == 0) expected = -expected;
        out.push_back(make_record("3", std::nullopt, "quadratic", G(half), expected));
    }

    if (want("4") && p % 8 == 3 && s % 2 == 0) {
        for (std::int64_t u : {1, 3})
            out.push_back(make_record("4", std::nullopt, "j=" + std::to_string(u * half / 2), G(u * half / 2),
                                      -q_power_cyc(p, s, 1, 2)));
    }

    if (want("5")) {
        if (q - 1 <= std::min(opts.max_elements, JacobiTable::kMaxLogTable)) {
            JacobiTable jac(ctx, s, e, opts);
            for (std::int64_t j = 1; j < static_cast<std::int64_t>(e); ++j) {
                if (j == half) continue;
                out.push_back(make_record("5", std::nullopt, "j=" + std::to_string(j), G(j) * G(j), G(2 * j) * jac(j)));
            }
        }
    }

    if (want("7")) {
        for (unsigned d = 1; d < s; ++d) {
            if (s % d != 0) continue;
            const std::uint64_t sub_group = arith::checked_pow(p, d) - 1;
            std::uint64_t sub_order = 1;
            while (sub_order * 2 <= e && sub_group % (sub_order * 2) == 0) sub_order *= 2;
            if (sub_order < 2) continue;
            GaussTable sub(ctx, d, sub_order, opts);
            const unsigned lift = s / d;
            for (std::int64_t j = 1; j < static_cast<std::int64_t>(sub_order); ++j) {
                out.push_back(make_record("7", std::nullopt, "d=" + std::to_string(d) + " j=" + std::to_string(j),
                                          G(j * static_cast<std::int64_t>(e / sub_order)), davenport_hasse_lift(sub(j), lift)));
            }
        }
    }

    if (want("8") && cls35) {
        const unsigned r_min = p % 8 == 3 ? 4 : 3;
        for (unsigned r = r_min; r <= m; ++r) {
            const std::int64_t j = std::int64_t{1} << (m - r);
            out.push_back(make_record("8", static_cast<int>(r), "", G(j), G(j + half)));
        }
    }

    if (want("9") && cls35) {
        for (unsigned r = 3; r <= m; ++r) {
            const std::int64_t j = std::int64_t{1} << (m - r);
            const int expected = p % 8 == 3 ? 1 : (((s >> (r - 2)) % 2 == 0) ? 1 : -1);
            out.push_back(make_record("9", static_cast<int>(r), "psi(4)", zeta_e(j * static_cast<std::int64_t>(log_four)),
                                      CycElem::integer(1, expected)));
        }
    }

    if (want("10") && cls35) {
        for (unsigned r = 3; r <= std::max(m, 6U); ++r)
            for (unsigned nn = 1; nn <= r; ++nn)
                out.push_back(make_record("10", static_cast<int>(r), "n=" + std::to_string(nn), zeta_power_sum(p, nn, r),
                                          power_sum_table(p, nn, r)));
    }

    if (want("11") && cls35) {
        const unsigned n0 = p % 8 == 3 ? 3 : 2;
        for (unsigned r = n0; r <= m; ++r) {
            if (s % (1U << (r - 1)) != 0) continue;
            const unsigned sub_degree = s >> (r - n0 + 1);
            const std::uint64_t sub_group = arith::checked_pow(p, sub_degree) - 1;
            if (sub_group > std::min(opts.max_elements, JacobiTable::kMaxLogTable)) continue;
            const CycElem jchi = JacobiTable(ctx, sub_degree, std::uint64_t{1} << n0, opts)(1);
            int sign = 1;
            if (p % 8 == 5) {
                const std::uint64_t num = std::uint64_t{s} * (r - 1);
                if (num % (1U << (r - 1)) != 0) throw ConsistencyError("subfield Jacobi sum sign exponent is not an integer");
                sign = (num >> (r - 1)) % 2 == 0 ? 1 : -1;
            }
            const CycElem qp = q_power_cyc(p, s, (1U << (r - n0 + 1)) - 1, 1U << (r - n0 + 2));
            out.push_back(make_record("11", static_cast<int>(r), "subfield degree " + std::to_string(sub_degree),
                                      G(std::int64_t{1} << (m - r)), BigInt(sign) * (qp * jchi)));
        }
    }

    const bool need_periods = want("1") || want("12") || want("14");
    if (need_periods) {
        const PeriodVector brute = reduced_periods(table.spectrum());
        if (want("1")) {
            const PeriodVector fourier = eta_via_fourier(table);
            for (std::uint64_t k = 0; k < e; ++k)
                out.push_back(make_record("1", std::nullopt, "k=" + std::to_string(k), fourier.eta_star[k], brute.eta_star[k]));
        }
        if (want("12")) {
            for (std::uint64_t k = 0; k < e; ++k)
                out.push_back(make_record("12", std::nullopt, "k=" + std::to_string(k),
                                          brute.at(static_cast<std::int64_t>(k * p)), brute.eta_star[k]));
        }
        if (want("14") && cls35) {
            const PeriodVector lem = eta_via_gauss(p, s, m, gauss_powers_from(std::cref(table), m));
            for (std::uint64_t k = 0; k < e; ++k)
                out.push_back(make_record("14", std::nullopt, "k=" + std::to_string(k), lem.eta_star[k], brute.eta_star[k]));
        }
    }

    if ((want("15") && p % 8 == 3) || (want("16") && p % 8 == 5)) {
        for (unsigned r = (p % 8 == 3 ? 3 : 2); r <= m; ++r) {
            if (s % (1U << (r - 1)) != 0) continue;
            for (auto& rec : lemma15_16_check(ctx, m, r, table)) out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace periodpoly

#endif  // PERIODPOLY_CHARACTER_SUMS_HPP
