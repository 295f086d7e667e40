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

#ifndef PERIODPOLY_FIELD_HPP
#define PERIODPOLY_FIELD_HPP

// Finite fields F_{p^s} in a polynomial basis over F_p.
//
// A FieldCtx is built once (modulus search, q-1 factorization, generator
// search, Frobenius and trace tables) and is immutable afterwards; elements
// are plain coordinate vectors and every operation is a pure function of the
// context and its arguments.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace periodpoly {

/// Coefficients of an element in the basis 1, x, ..., x^{s-1}.
struct FieldElem {
    std::vector<std::uint32_t> coords;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

struct FieldParams {
    std::uint32_t p = 0;
    unsigned s = 0;
    std::vector<std::uint32_t> modulus;  ///< monic, little-endian, length s + 1

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// Dense polynomials over F_p, little-endian, used for modulus search.
namespace fp_poly {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    const std::size_t deg = f.size() - 1;
    for (std::size_t i = prod.size(); i-- > deg;) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) prod[i - deg + j] = (prod[i - deg + j] + (p - c) * f[j]) % p;
    }
    Poly out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(std::min(prod.size(), deg)));
    trim(out);
    return out;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r{1};
    while (e > 0) {
        if (e & 1U) r = mulmod(r, base, f, p);
        e >>= 1U;
        if (e > 0) base = mulmod(base, base, f, p);
    }
    return r;
}

inline Poly sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Poly rem(Poly a, const Poly& b, std::uint32_t p) {
    const std::uint64_t inv_lead = arith::invmod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
        trim(a);
    }
    return a;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// x^{p^k} mod f.
inline Poly x_pow_pk(unsigned k, const Poly& f, std::uint32_t p) {
    Poly h = f.size() > 2 ? Poly{0, 1} : rem(Poly{0, 1}, f, p);
    for (unsigned i = 0; i < k; ++i) h = powmod(h, p, f, p);
    return h;
}

/// Rabin's test: f monic of degree s is irreducible iff x^{p^s} = x mod f and
/// gcd(x^{p^{s/l}} - x, f) = 1 for every prime l | s.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    if (f.size() < 2 || f.back() != 1) return false;
    const unsigned s = static_cast<unsigned>(f.size() - 1);
    if (s == 1) return true;
    const Poly x = Poly{0, 1};
    if (sub(x_pow_pk(s, f, p), x, p) != Poly{}) return false;
    for (auto [ell, mult] : arith::factorize(s)) {
        (void)mult;
        Poly g = gcd(f, sub(x_pow_pk(static_cast<unsigned>(s / ell), f, p), x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

/// First irreducible monic of degree s in the search order: binomials
/// x^s + c, then trinomials x^s + a x^k + c (k ascending, then a, then c),
/// then every monic polynomial by little-endian base-p counting.
/// Degree 1 always yields x.
inline Poly find_irreducible(std::uint32_t p, unsigned s) {
    if (s == 1) return Poly{0, 1};
    Poly f(s + 1, 0);
    f[s] = 1;
    for (std::uint32_t c = 1; c < p; ++c) {
        f[0] = c;
        if (is_irreducible(f, p)) return f;
    }
    for (unsigned k = 1; k < s; ++k) {
        for (std::uint32_t a = 1; a < p; ++a) {
            for (std::uint32_t c = 1; c < p; ++c) {
                Poly g(s + 1, 0);
                g[s] = 1;
                g[k] = a;
                g[0] = c;
                if (is_irreducible(g, p)) return g;
            }
        }
    }
    Poly g(s + 1, 0);
    g[s] = 1;
    for (;;) {
        unsigned i = 0;
        while (i < s && ++g[i] == p) g[i++] = 0;
        if (i == s) break;
        if (g[0] != 0 && is_irreducible(g, p)) return g;
    }
    throw ConsistencyError("no irreducible polynomial found");
}

}  // namespace fp_poly

/// Row-major s x s matrix over F_p acting on coordinate vectors.
using FpMatrix = std::vector<std::vector<std::uint32_t>>;

class FieldCtx {
  public:
    /// Field of size p^s with the first modulus and generator in search order.
    static FieldCtx build(std::uint32_t p, unsigned s) {
        validate_ps(p, s);
        return with_modulus(p, s, fp_poly::find_irreducible(p, s));
    }

    /// Field for an explicit modulus; the generator is searched.
    static FieldCtx with_modulus(std::uint32_t p, unsigned s, std::vector<std::uint32_t> modulus) {
        validate_ps(p, s);
        if (modulus.size() != s + 1 || modulus.back() != 1) throw DomainError("modulus must be monic of degree s");
        for (auto c : modulus)
            if (c >= p) throw DomainError("modulus coefficient out of range");
        if (!fp_poly::is_irreducible(modulus, p)) throw DomainError("modulus is not irreducible over F_p");
        FieldCtx ctx;
        ctx.params_ = FieldParams{p, s, std::move(modulus)};
        ctx.q_ = arith::checked_pow(p, s);
        ctx.factorization_ = arith::factorize(ctx.q_ - 1);
        ctx.build_tables();
        ctx.gamma_ = ctx.find_generator();
        return ctx;
    }

    /// The same field with a different primitive element as the fixed generator.
    [[nodiscard]] FieldCtx with_generator(const FieldElem& g) const {
        check(g);
        if (!is_generator(g)) throw DomainError("element is not a generator of the multiplicative group");
        FieldCtx ctx = *this;
        ctx.gamma_ = g;
        return ctx;
    }

    [[nodiscard]] const FieldParams& params() const { return params_; }
    [[nodiscard]] std::uint32_t p() const { return params_.p; }
    [[nodiscard]] unsigned s() const { return params_.s; }
    [[nodiscard]] std::uint64_t q() const { return q_; }
    [[nodiscard]] const FieldElem& gamma() const { return gamma_; }
    [[nodiscard]] const std::vector<std::pair<std::uint64_t, int>>& q_minus_1_factorization() const {
        return factorization_;
    }

    [[nodiscard]] FieldElem zero() const { return FieldElem{std::vector<std::uint32_t>(params_.s, 0)}; }
    [[nodiscard]] FieldElem one() const { return constant(1); }
    [[nodiscard]] FieldElem constant(std::int64_t c) const {
        FieldElem e = zero();
        const auto p = static_cast<std::int64_t>(params_.p);
        e.coords[0] = static_cast<std::uint32_t>(((c % p) + p) % p);
        return e;
    }
    /// The class of x; equals the constant 0 when s = 1 and the modulus is x.
    [[nodiscard]] FieldElem x() const {
        if (params_.s == 1) return constant(static_cast<std::int64_t>(params_.p - params_.modulus[0]) % params_.p);
        FieldElem e = zero();
        e.coords[1] = 1;
        return e;
    }

    [[nodiscard]] FieldElem add(const FieldElem& a, const FieldElem& b) const {
        check(a);
        check(b);
        FieldElem r = a;
        for (unsigned i = 0; i < params_.s; ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % params_.p;
        return r;
    }
    [[nodiscard]] FieldElem neg(const FieldElem& a) const {
        check(a);
        FieldElem r = a;
        for (auto& c : r.coords) c = (params_.p - c) % params_.p;
        return r;
    }
    [[nodiscard]] FieldElem sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

    [[nodiscard]] FieldElem mul(const FieldElem& a, const FieldElem& b) const {
        check(a);
        check(b);
        return mul_unchecked(a, b);
    }

    /// Square-and-multiply; pow(x, 0) = 1 including x = 0.
    [[nodiscard]] FieldElem pow(const FieldElem& a, std::uint64_t e) const {
        check(a);
        FieldElem result = one();
        FieldElem base = a;
        while (e > 0) {
            if (e & 1U) result = mul_unchecked(result, base);
            e >>= 1U;
            if (e > 0) base = mul_unchecked(base, base);
        }
        return result;
    }

    [[nodiscard]] FieldElem inverse(const FieldElem& a) const {
        if (is_zero(a)) throw DomainError("inverse of zero");
        return pow(a, q_ - 2);
    }

    [[nodiscard]] bool is_zero(const FieldElem& a) const {
        check(a);
        for (auto c : a.coords)
            if (c != 0) return false;
        return true;
    }

    /// x^p via the precomputed Frobenius matrix.
    [[nodiscard]] FieldElem frobenius(const FieldElem& a) const {
        check(a);
        return apply(frobenius_, a);
    }

    /// Absolute trace to F_p as a dot product with Tr(1), Tr(x), ..., Tr(x^{s-1}).
    [[nodiscard]] std::uint32_t trace(const FieldElem& a) const {
        check(a);
        return dot(trace_row_, a);
    }

    /// Linear functional w with Tr_{F_{p^d}/F_p}(y) = w . y for every y in the
    /// subfield of degree d. For d = s this is the absolute trace.
    [[nodiscard]] std::vector<std::uint32_t> subfield_trace_row(unsigned d) const {
        require_divisor(d);
        const unsigned s = params_.s;
        FpMatrix acc(s, std::vector<std::uint32_t>(s, 0));
        FpMatrix power = identity();
        for (unsigned k = 0; k < d; ++k) {
            for (unsigned r = 0; r < s; ++r)
                for (unsigned c = 0; c < s; ++c) acc[r][c] = (acc[r][c] + power[r][c]) % params_.p;
            power = compose(frobenius_, power);
        }
        return acc[0];
    }

    /// N_{F_q / F_{p^d}}(a) = a^{(q-1)/(p^d-1)}.
    [[nodiscard]] FieldElem subfield_norm(const FieldElem& a, unsigned d) const {
        require_divisor(d);
        return pow(a, (q_ - 1) / (arith::checked_pow(params_.p, d) - 1));
    }

    /// True when a lies in the subfield of degree d (a^{p^d} = a).
    [[nodiscard]] bool in_subfield(const FieldElem& a, unsigned d) const {
        require_divisor(d);
        FieldElem b = a;
        for (unsigned i = 0; i < d; ++i) b = frobenius(b);
        return b == a;
    }

    /// The residue c when a is the constant c, otherwise nullopt.
    [[nodiscard]] std::optional<std::uint32_t> as_prime_field(const FieldElem& a) const {
        check(a);
        for (unsigned i = 1; i < params_.s; ++i)
            if (a.coords[i] != 0) return std::nullopt;
        return a.coords[0];
    }

    [[nodiscard]] bool is_generator(const FieldElem& g) const {
        if (is_zero(g)) return false;
        if (pow(g, q_ - 1) != one()) return false;
        for (auto [ell, mult] : factorization_) {
            (void)mult;
            if (pow(g, (q_ - 1) / ell) == one()) return false;
        }
        return true;
    }

    /// Multiplicative order of a nonzero element.
    [[nodiscard]] std::uint64_t order(const FieldElem& a) const {
        if (is_zero(a)) throw DomainError("order of zero");
        std::uint64_t ord = q_ - 1;
        for (auto [ell, mult] : factorization_) {
            for (int i = 0; i < mult && ord % ell == 0; ++i) {
                if (pow(a, ord / ell) == one())
                    ord /= ell;
                else
                    break;
            }
        }
        return ord;
    }

    /// Enumeration index sum c_i p^i; bijective onto [0, q).
    [[nodiscard]] std::uint64_t encode(const FieldElem& a) const {
        check(a);
        std::uint64_t v = 0;
        for (unsigned i = params_.s; i-- > 0;) v = v * params_.p + a.coords[i];
        return v;
    }
    [[nodiscard]] FieldElem decode(std::uint64_t v) const {
        if (v >= q_) throw DomainError("decode: index out of range");
        FieldElem e = zero();
        for (unsigned i = 0; i < params_.s; ++i) {
            e.coords[i] = static_cast<std::uint32_t>(v % params_.p);
            v /= params_.p;
        }
        return e;
    }

    /// Matrix of y -> g*y; column i holds g * x^i.
    [[nodiscard]] FpMatrix multiplication_matrix(const FieldElem& g) const {
        check(g);
        const unsigned s = params_.s;
        FpMatrix m(s, std::vector<std::uint32_t>(s, 0));
        FieldElem basis = one();
        for (unsigned c = 0; c < s; ++c) {
            FieldElem col = mul_unchecked(g, basis);
            for (unsigned r = 0; r < s; ++r) m[r][c] = col.coords[r];
            if (s > 1) basis = mul_unchecked(basis, x());
        }
        return m;
    }

    [[nodiscard]] FieldElem apply(const FpMatrix& m, const FieldElem& a) const {
        FieldElem r = zero();
        for (unsigned i = 0; i < params_.s; ++i) r.coords[i] = dot(m[i], a);
        return r;
    }

    [[nodiscard]] std::uint32_t dot(const std::vector<std::uint32_t>& row, const FieldElem& a) const {
        std::uint64_t acc = 0;
        for (unsigned i = 0; i < params_.s; ++i) acc += std::uint64_t{row[i]} * a.coords[i] % params_.p;
        return static_cast<std::uint32_t>(acc % params_.p);
    }

    void check(const FieldElem& a) const {
        if (a.coords.size() != params_.s) throw DomainError("field element does not belong to this context");
        for (auto c : a.coords)
            if (c >= params_.p) throw DomainError("field element coordinate out of range");
    }

  private:
    FieldCtx() = default;

    static void validate_ps(std::uint32_t p, unsigned s) {
        if (p < 3 || !arith::is_prime(p)) throw DomainError("p must be an odd prime");
        if (s == 0) throw DomainError("s must be positive");
        if (p >= (1U << 30)) throw DomainError("p too large");
    }

    void require_divisor(unsigned d) const {
        if (d == 0 || params_.s % d != 0) throw DomainError("subfield degree must divide s");
    }

    [[nodiscard]] FieldElem mul_unchecked(const FieldElem& a, const FieldElem& b) const {
        const unsigned s = params_.s;
        const std::uint64_t p = params_.p;
        std::vector<std::uint64_t> prod(2 * s - 1, 0);
        for (unsigned i = 0; i < s; ++i) {
            if (a.coords[i] == 0) continue;
            for (unsigned j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.coords[i]} * b.coords[j]) % p;
        }
        const auto& f = params_.modulus;
        for (std::size_t i = prod.size(); i-- > s;) {
            const std::uint64_t c = prod[i];
            if (c == 0) continue;
            for (unsigned j = 0; j < s; ++j) prod[i - s + j] = (prod[i - s + j] + (p - c) * f[j]) % p;
        }
        FieldElem r = zero();
        for (unsigned i = 0; i < s; ++i) r.coords[i] = static_cast<std::uint32_t>(prod[i]);
        return r;
    }

    [[nodiscard]] FpMatrix identity() const {
        FpMatrix m(params_.s, std::vector<std::uint32_t>(params_.s, 0));
        for (unsigned i = 0; i < params_.s; ++i) m[i][i] = 1;
        return m;
    }

    [[nodiscard]] FpMatrix compose(const FpMatrix& a, const FpMatrix& b) const {
        const unsigned s = params_.s;
        FpMatrix c(s, std::vector<std::uint32_t>(s, 0));
        for (unsigned i = 0; i < s; ++i)
            for (unsigned k = 0; k < s; ++k) {
                if (a[i][k] == 0) continue;
                for (unsigned j = 0; j < s; ++j)
                    c[i][j] = static_cast<std::uint32_t>((c[i][j] + std::uint64_t{a[i][k]} * b[k][j]) % params_.p);
            }
        return c;
    }

    void build_tables() {
        const unsigned s = params_.s;
        frobenius_.assign(s, std::vector<std::uint32_t>(s, 0));
        FieldElem basis = one();
        for (unsigned c = 0; c < s; ++c) {
            FieldElem acc = one();
            FieldElem b = basis;
            for (std::uint64_t e = params_.p; e > 0; e >>= 1U) {
                if (e & 1U) acc = mul_unchecked(acc, b);
                if (e > 1) b = mul_unchecked(b, b);
            }
            for (unsigned r = 0; r < s; ++r) frobenius_[r][c] = acc.coords[r];
            if (s > 1) basis = mul_unchecked(basis, x());
        }
        trace_row_ = subfield_trace_row(s);
    }

    /// First element, in encode() order starting at 1, of order q - 1.
    [[nodiscard]] FieldElem find_generator() const {
        for (std::uint64_t v = 1; v < q_; ++v) {
            FieldElem g = decode(v);
            if (is_generator(g)) return g;
        }
        throw ConsistencyError("multiplicative group has no generator");
    }

    FieldParams params_;
    std::uint64_t q_ = 0;
    std::vector<std::pair<std::uint64_t, int>> factorization_;
    FieldElem gamma_;
    FpMatrix frobenius_;
    std::vector<std::uint32_t> trace_row_;
};

/// Convenience spelling of FieldCtx::build.
inline FieldCtx build_field(std::uint32_t p, unsigned s) { return FieldCtx::build(p, s); }

/// Stable fingerprint of (params, gamma) used to tag sign-normalized data.
inline std::string gamma_fingerprint(const FieldCtx& ctx) {
    std::string bytes = std::to_string(ctx.p()) + ":" + std::to_string(ctx.s()) + ":";
    for (auto c : ctx.params().modulus) bytes += std::to_string(c) + ",";
    bytes += ":";
    for (auto c : ctx.gamma().coords) bytes += std::to_string(c) + ",";
    return hex64(fnv1a(bytes));
}

}  // namespace periodpoly

#endif  // PERIODPOLY_FIELD_HPP
