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

#ifndef PERIODPOLY_CLOSED_FORM_HPP
#define PERIODPOLY_CLOSED_FORM_HPP

// Explicit factorizations of the reduced period polynomial P*_{2^m}(X) for
// p = 3, 5 mod 8 in terms of the quadratic partitions A_r, B_r / C_r, D_r.
// Every coefficient is an exact integer; q^{a/b} is only ever formed when
// b divides s*a.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "field.hpp"
#include "partitions.hpp"
#include "periods.hpp"

namespace periodpoly {

enum class TheoremCase { T1a, T1b, T1c, T2a, T2b, T2c, SMALL_M2, SMALL_M3, PROP20 };

inline const char* to_string(TheoremCase c) {
    switch (c) {
        case TheoremCase::T1a: return "T1a";
        case TheoremCase::T1b: return "T1b";
        case TheoremCase::T1c: return "T1c";
        case TheoremCase::T2a: return "T2a";
        case TheoremCase::T2b: return "T2b";
        case TheoremCase::T2c: return "T2c";
        case TheoremCase::SMALL_M2: return "SMALL_M2";
        case TheoremCase::SMALL_M3: return "SMALL_M3";
        case TheoremCase::PROP20: return "PROP20";
    }
    return "?";
}

struct CaseTag {
    unsigned p_class = 0;  ///< p mod 8
    TheoremCase theorem_case = TheoremCase::T1a;
    unsigned m = 0;
    unsigned s2 = 0;  ///< ord_2(s)
    friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

inline std::string p_class_name(unsigned p_class) { return std::to_string(p_class) + "-mod-8"; }

struct Factor {
    IntPoly poly;
    unsigned mult = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
    CaseTag tag;
    std::vector<Factor> factors;
    std::vector<PartitionRecord> provenance;
    BigInt q;
    /// Set when P* is known to be irreducible but no closed form is given.
    bool irreducible_no_closed_form = false;

    [[nodiscard]] unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& f : factors) d += static_cast<unsigned>(f.poly.degree()) * f.mult;
        return d;
    }
};

/// Exact p^{s*num/den}; a fractional exponent means a case condition was violated.
inline BigInt q_power(std::uint64_t p, unsigned s, std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw DomainError("q_power: zero denominator");
    const std::uint64_t top = std::uint64_t{s} * num;
    if (top % den != 0)
        throw DomainError("q_power: fractional exponent " + std::to_string(top) + "/" + std::to_string(den) + " of p");
    return big_pow(BigInt(p), static_cast<unsigned>(top / den));
}

/// ord_2(p^s - 1) for odd p.
inline unsigned ord2_q_minus_1(std::uint64_t p, unsigned s) {
    if (s % 2 == 1) return static_cast<unsigned>(arith::ord2(p - 1));
    return static_cast<unsigned>(arith::ord2(p * p - 1) + arith::ord2(s) - 1);
}

inline CaseTag classify(std::uint64_t p, unsigned s, unsigned m) {
    if (!arith::is_prime(p) || p == 2) throw DomainError("p must be an odd prime");
    if (p % 8 != 3 && p % 8 != 5) throw DomainError("p mod 8 = " + std::to_string(p % 8) + " unsupported");
    if (s == 0) throw DomainError("s must be positive");
    if (m < 2) throw DomainError("m must be at least 2");
    if (m > ord2_q_minus_1(p, s))
        throw DomainError(s % 2 == 0 ? "2^{m-2} \u2224 s, so 2^m does not divide q - 1"
                                     : "2^m does not divide q - 1 (s is odd)");
    CaseTag tag{static_cast<unsigned>(p % 8), TheoremCase::T1a, m, static_cast<unsigned>(arith::ord2(s))};
    if (m == 2) {
        tag.theorem_case = TheoremCase::SMALL_M2;
    } else if (m == 3) {
        tag.theorem_case = TheoremCase::SMALL_M3;
    } else if (p % 8 == 3) {
        if (tag.s2 >= m - 1)
            tag.theorem_case = TheoremCase::T1a;
        else
            tag.theorem_case = m == 4 ? TheoremCase::T1c : TheoremCase::T1b;
    } else {
        if (tag.s2 >= m)
            tag.theorem_case = TheoremCase::T2a;
        else if (tag.s2 == m - 1)
            tag.theorem_case = TheoremCase::T2b;
        else
            tag.theorem_case = TheoremCase::T2c;
    }
    return tag;
}

namespace closed_detail {

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

/// Shared state for one factorization: q-powers, partition lookups (recorded
/// as provenance) and the factor list.
class Builder {
  public:
    Builder(std::uint64_t p, unsigned s, const PartitionSet* parts, CaseTag tag) : p_(p), s_(s), parts_(parts) {
        out_.tag = tag;
        out_.q = big_pow(BigInt(p), s);
    }

    [[nodiscard]] BigInt qp(std::uint64_t num, std::uint64_t den) const { return q_power(p_, s_, num, den); }
    [[nodiscard]] BigInt h() const { return qp(1, 2); }
    [[nodiscard]] const BigInt& q() const { return out_.q; }

    const BigInt& first(unsigned r) { return record(r).first; }
    const BigInt& second(unsigned r) { return record(r).second; }

    /// q^{(2^{r-2}-1)/2^{r-1}}, the weight of A_r and B_r.
    [[nodiscard]] BigInt wA(unsigned r) const { return qp(pow2_u(r - 2) - 1, pow2_u(r - 1)); }
    /// q^{(2^{r-1}-1)/2^r}, the weight of C_r and D_r.
    [[nodiscard]] BigInt wC(unsigned r) const { return qp(pow2_u(r - 1) - 1, pow2_u(r)); }

    /// sum_{r=3}^t 2^{r-1} A_r q^{(2^{r-2}-1)/2^{r-1}}; empty for t < 3.
    BigInt SA(unsigned t) {
        BigInt acc = 0;
        for (unsigned r = 3; r <= t; ++r) acc += pow2(r - 1) * first(r) * wA(r);
        return acc;
    }
    /// sum_{r=2}^t 2^{r-1} C_r q^{(2^{r-1}-1)/2^r}; empty for t < 2.
    BigInt SC(unsigned t) {
        BigInt acc = 0;
        for (unsigned r = 2; r <= t; ++r) acc += pow2(r - 1) * first(r) * wC(r);
        return acc;
    }

    void add(IntPoly f, unsigned mult) {
        if (mult > 0) out_.factors.push_back({std::move(f), mult});
    }
    void add_linear(const BigInt& c, unsigned mult) { add(IntPoly::linear(c), mult); }
    /// (X + c)^2 + k
    void add_shifted_square(const BigInt& c, const BigInt& k, unsigned mult) {
        const IntPoly l = IntPoly::linear(c);
        add(l * l + IntPoly::constant(k), mult);
    }

    Factorization finish();

  private:
    static std::uint64_t pow2_u(unsigned k) { return std::uint64_t{1} << k; }

    const PartitionRecord& record(unsigned r) {
        if (parts_ == nullptr) throw DomainError("closed form needs quadratic partitions");
        const PartitionRecord& rec = parts_->at(r);
        used_.insert(r);
        return rec;
    }

    std::uint64_t p_;
    unsigned s_;
    const PartitionSet* parts_;
    std::set<unsigned> used_;
    Factorization out_;
};

/// Merge equal factors and sort by degree, then coefficients.
inline void canonicalize(std::vector<Factor>& factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    std::vector<Factor> merged;
    for (auto& f : factors) {
        if (!merged.empty() && merged.back().poly == f.poly)
            merged.back().mult += f.mult;
        else
            merged.push_back(std::move(f));
    }
    factors = std::move(merged);
}

inline Factorization Builder::finish() {
    canonicalize(out_.factors);
    for (unsigned r : used_) out_.provenance.push_back(parts_->at(r));
    return std::move(out_);
}

inline void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

}  // namespace closed_detail

/// p = 3 mod 8, m >= 4: cases T1a, T1b, T1c from the A-type partitions.
inline Factorization theorem1(std::uint64_t p, unsigned s, unsigned m, const PartitionSet& A) {
    using closed_detail::pow2;
    const CaseTag tag = classify(p, s, m);
    closed_detail::require(tag.theorem_case == TheoremCase::T1a || tag.theorem_case == TheoremCase::T1b ||
                               tag.theorem_case == TheoremCase::T1c,
                           "theorem1: parameters are not in cases T1a/T1b/T1c");
    closed_detail::require(A.kind == PartitionKind::A, "theorem1 needs A-type partitions");
    closed_detail::Builder b(p, s, &A, tag);
    const BigInt h = b.h();
    const BigInt h3 = 3 * h;

    if (tag.theorem_case == TheoremCase::T1c) {
        const BigInt q14 = b.qp(1, 4);
        const BigInt q34 = b.qp(3, 4);
        b.add_linear(h3 + 4 * b.first(3) * q14, 2);
        b.add_linear(-h + 4 * b.second(3) * q14, 4);
        b.add_linear(-h - 4 * b.second(3) * q14, 4);
        b.add_shifted_square(h3 - 4 * b.first(3) * q14, 64 * b.first(4) * b.first(4) * q34, 1);
        b.add_shifted_square(-h, 64 * b.second(4) * b.second(4) * q34, 2);
        return b.finish();
    }

    // Linear factors from B_3 and B_4, shared by (a) and (b).
    for (int sign : {1, -1}) {
        b.add_linear(-h + sign * 4 * b.second(3) * b.wA(3), 1U << (m - 2));
        b.add_linear(-h + sign * 8 * b.second(4) * b.wA(4), 1U << (m - 3));
    }
    b.add_linear(h3 - b.SA(m - 2) + pow2(m - 2) * b.first(m - 1) * b.wA(m - 1), 2);

    // Q_t(X) = (X + 3h - SA(t) + 2^t A_{t+1} w + 2^{t+2} B_{t+3} w')(... - ...).
    auto add_Q = [&](unsigned t) {
        const BigInt base = h3 - b.SA(t) + pow2(t) * b.first(t + 1) * b.wA(t + 1);
        const BigInt off = pow2(t + 2) * b.second(t + 3) * b.wA(t + 3);
        b.add_linear(base + off, 1U << (m - t - 2));
        b.add_linear(base - off, 1U << (m - t - 2));
    };

    if (tag.theorem_case == TheoremCase::T1a) {
        b.add_linear(h3 - b.SA(m - 1) + pow2(m - 1) * b.first(m) * b.wA(m), 1);
        b.add_linear(h3 - b.SA(m), 1);
        for (unsigned t = 2; t + 3 <= m; ++t) add_Q(t);
    } else {
        const BigInt w = b.qp((1U << (m - 2)) - 1, 1U << (m - 2));
        b.add_shifted_square(h3 - b.SA(m - 1), pow2(2 * (m - 1)) * b.first(m) * b.first(m) * w, 1);
        b.add_shifted_square(h3 - b.SA(m - 3) + pow2(m - 3) * b.first(m - 2) * b.wA(m - 2),
                             pow2(2 * (m - 1)) * b.second(m) * b.second(m) * w, 2);
        for (unsigned t = 2; t + 4 <= m; ++t) add_Q(t);
    }
    return b.finish();
}

/// p = 5 mod 8, m >= 4: cases T2a, T2b, T2c from the C-type partitions.
inline Factorization theorem2(std::uint64_t p, unsigned s, unsigned m, const PartitionSet& C) {
    using closed_detail::pow2;
    const CaseTag tag = classify(p, s, m);
    closed_detail::require(tag.theorem_case == TheoremCase::T2a || tag.theorem_case == TheoremCase::T2b ||
                               tag.theorem_case == TheoremCase::T2c,
                           "theorem2: parameters are not in cases T2a/T2b/T2c");
    closed_detail::require(C.kind == PartitionKind::C, "theorem2 needs C-type partitions");
    closed_detail::Builder b(p, s, &C, tag);
    const BigInt h = b.h();

    for (int sign : {1, -1}) b.add_linear(-h + sign * 2 * b.second(2) * b.wC(2), 1U << (m - 2));

    // R_t(X) = (X + h + SC(t) - 2^t C_{t+1} w + 2^{t+1} D_{t+2} w')(... - ...).
    auto add_R = [&](unsigned t) {
        const BigInt base = h + b.SC(t) - pow2(t) * b.first(t + 1) * b.wC(t + 1);
        const BigInt off = pow2(t + 1) * b.second(t + 2) * b.wC(t + 2);
        b.add_linear(base + off, 1U << (m - t - 2));
        b.add_linear(base - off, 1U << (m - t - 2));
    };

    switch (tag.theorem_case) {
        case TheoremCase::T2a:
            b.add_linear(h + b.SC(m - 1) - pow2(m - 1) * b.first(m) * b.wC(m), 1);
            b.add_linear(h + b.SC(m), 1);
            for (unsigned t = 1; t + 2 <= m; ++t) add_R(t);
            break;
        case TheoremCase::T2b: {
            const BigInt w = b.qp((1U << (m - 1)) - 1, 1U << (m - 1));
            b.add_shifted_square(h + b.SC(m - 1), -pow2(2 * (m - 1)) * b.first(m) * b.first(m) * w, 1);
            b.add_shifted_square(h + b.SC(m - 2) - pow2(m - 2) * b.first(m - 1) * b.wC(m - 1),
                                 -pow2(2 * (m - 1)) * b.second(m) * b.second(m) * w, 1);
            for (unsigned t = 1; t + 3 <= m; ++t) add_R(t);
            break;
        }
        default: {
            const BigInt w = b.qp((1U << (m - 2)) - 1, 1U << (m - 2));
            b.add_shifted_square(h + b.SC(m - 3) - pow2(m - 3) * b.first(m - 2) * b.wC(m - 2),
                                 -pow2(2 * (m - 2)) * b.second(m - 1) * b.second(m - 1) * w, 2);
            // One irreducible quartic:
            // ((X + h + SC)^2 + 2^{2(m-2)} C^2 w + 2^{2m-3} q)^2 - 2^{2(m-1)} C^2 w (X + (2^{m-2}+1) h + SC)^2.
            const BigInt sc = b.SC(m - 2);
            const BigInt c2w = b.first(m - 1) * b.first(m - 1) * w;
            const IntPoly inner = IntPoly::linear(h + sc);
            const IntPoly outer = inner * inner + IntPoly::constant(pow2(2 * (m - 2)) * c2w + pow2(2 * m - 3) * b.q());
            const IntPoly tail = IntPoly::linear((pow2(m - 2) + 1) * h + sc);
            b.add(outer * outer - (pow2(2 * (m - 1)) * c2w) * (tail * tail), 1);
            for (unsigned t = 1; t + 4 <= m; ++t) add_R(t);
            break;
        }
    }
    return b.finish();
}

/// m = 2, 3: the classical quartic and octic period polynomials.
/// p = 3 mod 8 with m = 2 has -1 as a power of p mod 4 and is left to prop20.
inline Factorization small_m(std::uint64_t p, unsigned s, unsigned m, const PartitionSet& parts) {
    const CaseTag tag = classify(p, s, m);
    closed_detail::require(m == 2 || m == 3, "small_m needs m = 2 or 3");
    closed_detail::Builder b(p, s, &parts, tag);
    const bool four = s % 4 == 0;

    if (p % 8 == 3) {
        if (m == 2) throw DomainError("no small-m closed form for p = 3 mod 8, m = 2; use prop20 (e = 4, l = 1)");
        closed_detail::require(parts.kind == PartitionKind::A, "p = 3 mod 8 needs A-type partitions");
        const BigInt h = b.h();
        if (four) {
            const BigInt q14 = b.qp(1, 4);
            b.add_linear(-h, 2);
            b.add_linear(-h + 4 * b.second(3) * q14, 2);
            b.add_linear(-h - 4 * b.second(3) * q14, 2);
            b.add_linear(3 * h + 4 * b.first(3) * q14, 1);
            b.add_linear(3 * h - 4 * b.first(3) * q14, 1);
        } else {
            b.add_linear(-3 * h, 2);
            b.add_shifted_square(h, 16 * b.first(3) * b.first(3) * h, 1);
            b.add_shifted_square(h, 16 * b.second(3) * b.second(3) * h, 2);
        }
        return b.finish();
    }

    closed_detail::require(parts.kind == PartitionKind::C, "p = 5 mod 8 needs C-type partitions");
    if (m == 2 && s % 2 == 1) {
        Factorization out = b.finish();
        out.irreducible_no_closed_form = true;
        return out;
    }
    const BigInt h = b.h();
    if (m == 2) {
        if (four) {
            const BigInt q14 = b.qp(1, 4);
            b.add_linear(h + 2 * b.first(2) * q14, 1);
            b.add_linear(h - 2 * b.first(2) * q14, 1);
            b.add_linear(-h + 2 * b.second(2) * q14, 1);
            b.add_linear(-h - 2 * b.second(2) * q14, 1);
        } else {
            b.add_shifted_square(h, -4 * b.first(2) * b.first(2) * h, 1);
            b.add_shifted_square(-h, -4 * b.second(2) * b.second(2) * h, 1);
        }
        return b.finish();
    }
    if (s % 8 == 0) {
        const BigInt q14 = b.qp(1, 4);
        const BigInt q38 = b.qp(3, 8);
        b.add_linear(-h + 2 * b.second(2) * q14, 2);
        b.add_linear(-h - 2 * b.second(2) * q14, 2);
        b.add_linear(h + 2 * b.first(2) * q14 + 4 * b.first(3) * q38, 1);
        b.add_linear(h + 2 * b.first(2) * q14 - 4 * b.first(3) * q38, 1);
        b.add_linear(h - 2 * b.first(2) * q14 + 4 * b.second(3) * q38, 1);
        b.add_linear(h - 2 * b.first(2) * q14 - 4 * b.second(3) * q38, 1);
    } else if (four) {
        const BigInt q14 = b.qp(1, 4);
        const BigInt q34 = b.qp(3, 4);
        b.add_linear(-h + 2 * b.second(2) * q14, 2);
        b.add_linear(-h - 2 * b.second(2) * q14, 2);
        b.add_shifted_square(h + 2 * b.first(2) * q14, -16 * b.first(3) * b.first(3) * q34, 1);
        b.add_shifted_square(h - 2 * b.first(2) * q14, -16 * b.second(3) * b.second(3) * q34, 1);
    } else {
        b.add_shifted_square(-h, -4 * b.second(2) * b.second(2) * h, 2);
        const BigInt c2h = b.first(2) * b.first(2) * h;
        const IntPoly inner = IntPoly::linear(h);
        const IntPoly outer = inner * inner + IntPoly::constant(4 * c2h + 8 * b.q());
        const IntPoly tail = IntPoly::linear(3 * h);
        b.add(outer * outer - (16 * c2h) * (tail * tail), 1);
    }
    return b.finish();
}

/// Smallest l with e | p^l + 1, if any.
inline std::optional<unsigned> minimal_ell(std::uint64_t p, std::uint64_t e) {
    if (e < 2) return std::nullopt;
    std::uint64_t pw = 1 % e;
    for (unsigned l = 1; l <= e; ++l) {
        pw = static_cast<std::uint64_t>((static_cast<arith::u128>(pw) * (p % e)) % e);
        if ((pw + 1) % e == 0) return l;
    }
    return std::nullopt;
}

/// P*_e = (X + (-1)^{s/2l} (e-1) q^{1/2}) (X - (-1)^{s/2l} q^{1/2})^{e-1} when e | p^l + 1.
inline Factorization prop20(std::uint64_t p, unsigned s, std::uint64_t e) {
    if (!arith::is_prime(p) || p == 2) throw DomainError("p must be an odd prime");
    if (e <= 2) throw DomainError("prop20 needs e > 2");
    const auto ell = minimal_ell(p, e);
    if (!ell) throw DomainError("prop20 needs e | p^l + 1 for some l");
    if (s % (2 * *ell) != 0) throw DomainError("prop20 needs 2l | s");
    Factorization out;
    out.tag = CaseTag{static_cast<unsigned>(p % 8), TheoremCase::PROP20, 0, static_cast<unsigned>(arith::ord2(s))};
    if ((e & (e - 1)) == 0) out.tag.m = static_cast<unsigned>(arith::ord2(e));
    out.q = big_pow(BigInt(p), s);
    const BigInt h = q_power(p, s, 1, 2);
    const int sign = (s / (2 * *ell)) % 2 == 0 ? 1 : -1;
    out.factors.push_back({IntPoly::linear(sign * BigInt(e - 1) * h), 1});
    out.factors.push_back({IntPoly::linear(-sign * h), static_cast<unsigned>(e - 1)});
    closed_detail::canonicalize(out.factors);
    return out;
}

/// Dispatch on classify(p, s, m).
inline Factorization closed_form(std::uint64_t p, unsigned s, unsigned m, const PartitionSet& parts) {
    switch (classify(p, s, m).theorem_case) {
        case TheoremCase::T1a:
        case TheoremCase::T1b:
        case TheoremCase::T1c: return theorem1(p, s, m, parts);
        case TheoremCase::T2a:
        case TheoremCase::T2b:
        case TheoremCase::T2c: return theorem2(p, s, m, parts);
        default: return small_m(p, s, m, parts);
    }
}

inline Factorization closed_form(const FieldCtx& ctx, unsigned m) {
    classify(ctx.p(), ctx.s(), m);
    return closed_form(ctx.p(), ctx.s(), m, collect_partitions(ctx, m));
}
inline Factorization theorem1(const FieldCtx& ctx, unsigned m) {
    return theorem1(ctx.p(), ctx.s(), m, collect_partitions(ctx, m));
}
inline Factorization theorem2(const FieldCtx& ctx, unsigned m) {
    return theorem2(ctx.p(), ctx.s(), m, collect_partitions(ctx, m));
}
inline Factorization small_m(const FieldCtx& ctx, unsigned m) {
    return small_m(ctx.p(), ctx.s(), m, collect_partitions(ctx, m));
}

inline IntPoly expand(const Factorization& f) {
    IntPoly out = IntPoly::constant(1);
    for (const auto& [poly, mult] : f.factors) out = out * poly.pow(mult);
    return out;
}

/// Roots with multiplicity of the linear part, sorted ascending.
inline std::vector<BigInt> linear_roots(const Factorization& f) {
    std::vector<BigInt> roots;
    for (const auto& [poly, mult] : f.factors)
        if (poly.degree() == 1)
            for (unsigned i = 0; i < mult; ++i) roots.push_back(-poly.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace periodpoly

#endif  // PERIODPOLY_CLOSED_FORM_HPP
