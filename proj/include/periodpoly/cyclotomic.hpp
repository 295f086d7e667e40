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

#ifndef PERIODPOLY_CYCLOTOMIC_HPP
#define PERIODPOLY_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace periodpoly {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored little-endian with no trailing zeros. The zero polynomial is empty.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
    static IntPoly X() { return IntPoly(std::vector<BigInt>{0, 1}); }
    /// X + c.
    static IntPoly linear(const BigInt& c) { return IntPoly(std::vector<BigInt>{c, 1}); }

    [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a) {
        std::vector<BigInt> c = a.coeffs_;
        for (auto& v : c) v = -v;
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const BigInt& k, const IntPoly& a) { return IntPoly::constant(k) * a; }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    [[nodiscard]] IntPoly pow(unsigned e) const {
        IntPoly r = IntPoly::constant(1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    [[nodiscard]] BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Human-readable form in the variable X, highest degree first.
    [[nodiscard]] std::string to_string(const std::string& var = "X") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (i == 0 || mag != 1) out += mag.str();
            if (i > 0) {
                if (mag != 1) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    /// Lexicographic order on coefficient lists (constant term first), shorter first.
    friend bool operator<(const IntPoly& a, const IntPoly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
        return a.coeffs_ < b.coeffs_;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;
};

/// Product of factors raised to multiplicities; the empty product is 1.
inline IntPoly poly_expand(const std::vector<std::pair<IntPoly, unsigned>>& factors) {
    IntPoly acc = IntPoly::constant(1);
    for (const auto& [f, mult] : factors) acc = acc * f.pow(mult);
    return acc;
}

namespace cyc_detail {

struct ConductorShape {
    unsigned two_exp = 0;       // a in n = 2^a * odd
    std::uint64_t odd = 1;      // 1 or an odd prime
};

inline ConductorShape conductor_shape(std::uint64_t n) {
    if (n == 0) throw DomainError("conductor must be positive");
    ConductorShape shape;
    while (n % 2 == 0) {
        n /= 2;
        ++shape.two_exp;
    }
    if (n != 1 && !arith::is_prime(n)) throw DomainError("unsupported conductor: odd part must be 1 or a prime");
    shape.odd = n;
    return shape;
}

}  // namespace cyc_detail

/// Phi_n for n in {p, 2^a, 2^a p}: Phi_{2^a}(x) = x^{2^{a-1}} + 1,
/// Phi_{2^a p}(x) = Phi_p(-x^{2^{a-1}}); Phi_1 = x - 1.
inline IntPoly cyclotomic_polynomial(std::uint64_t n) {
    const auto shape = cyc_detail::conductor_shape(n);
    if (shape.odd == 1) {
        if (shape.two_exp == 0) return IntPoly(std::vector<BigInt>{-1, 1});
        std::vector<BigInt> c((std::size_t{1} << (shape.two_exp - 1)) + 1, 0);
        c.front() = 1;
        c.back() = 1;
        return IntPoly(std::move(c));
    }
    const std::uint64_t p = shape.odd;
    if (shape.two_exp == 0) return IntPoly(std::vector<BigInt>(p, 1));
    const std::uint64_t stride = std::uint64_t{1} << (shape.two_exp - 1);
    std::vector<BigInt> c((p - 1) * stride + 1, 0);
    for (std::uint64_t i = 0; i < p; ++i) c[i * stride] = (i % 2 == 0) ? 1 : -1;
    return IntPoly(std::move(c));
}

/// Euler phi restricted to supported conductors.
inline std::uint64_t cyclotomic_degree(std::uint64_t n) {
    const auto shape = cyc_detail::conductor_shape(n);
    std::uint64_t two_part = shape.two_exp == 0 ? 1 : (std::uint64_t{1} << (shape.two_exp - 1));
    return two_part * (shape.odd == 1 ? 1 : shape.odd - 1);
}

/// An element of Z[zeta_n] as a vector in the group ring Z[x]/(x^n - 1).
/// The representation is not unique; equality and integrality are always
/// decided on the canonical form (remainder mod Phi_n, degree < phi(n)).
class CycElem {
  public:
    explicit CycElem(std::uint64_t n = 1) : n_(n), coeffs_(n, 0) { cyc_detail::conductor_shape(n); }
    CycElem(std::uint64_t n, std::vector<BigInt> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
        cyc_detail::conductor_shape(n);
        if (coeffs_.size() != n) throw DomainError("CycElem: coefficient vector must have length n");
    }

    static CycElem integer(std::uint64_t n, const BigInt& c) {
        CycElem e(n);
        e.coeffs_[0] = c;
        return e;
    }
    /// zeta_n^k for any integer k.
    static CycElem zeta(std::uint64_t n, std::int64_t k) {
        CycElem e(n);
        const auto nn = static_cast<std::int64_t>(n);
        e.coeffs_[static_cast<std::size_t>(((k % nn) + nn) % nn)] = 1;
        return e;
    }

    [[nodiscard]] std::uint64_t conductor() const { return n_; }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Image under zeta_n -> zeta_N^{N/n}; requires n | N.
    [[nodiscard]] CycElem embed(std::uint64_t big_n) const {
        if (big_n % n_ != 0) throw DomainError("embed: conductor must divide the target");
        if (big_n == n_) return *this;
        CycElem e(big_n);
        const std::uint64_t step = big_n / n_;
        for (std::uint64_t k = 0; k < n_; ++k) e.coeffs_[k * step] = coeffs_[k];
        return e;
    }

    /// Coefficients of the remainder mod Phi_n, length phi(n).
    [[nodiscard]] std::vector<BigInt> canonical_coeffs() const {
        const std::uint64_t deg = cyclotomic_degree(n_);
        const IntPoly phi = cyclotomic_polynomial(n_);
        std::vector<std::pair<std::uint64_t, int>> terms;  // nonzero lower terms of Phi_n
        for (std::uint64_t j = 0; j < deg; ++j) {
            const BigInt& c = phi.coeffs()[j];
            if (c != 0) terms.emplace_back(j, static_cast<int>(c));
        }
        std::vector<BigInt> a = coeffs_;
        for (std::uint64_t i = n_; i-- > deg;) {
            if (a[i] == 0) continue;
            const BigInt c = a[i];
            a[i] = 0;
            for (auto [j, sign] : terms) {
                if (sign > 0)
                    a[i - deg + j] -= c;
                else
                    a[i - deg + j] += c;
            }
        }
        a.resize(deg);
        return a;
    }

    /// Canonical representative (group-ring vector with zeros above phi(n)).
    [[nodiscard]] CycElem canonical() const {
        std::vector<BigInt> c = canonical_coeffs();
        c.resize(n_, 0);
        return CycElem(n_, std::move(c));
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : canonical_coeffs())
            if (c != 0) return false;
        return true;
    }

    /// The rational integer this element equals, or nullopt when it is not in Z.
    [[nodiscard]] std::optional<BigInt> as_integer() const {
        auto c = canonical_coeffs();
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return std::nullopt;
        return c[0];
    }

    /// zeta_n -> zeta_n^{-1}.
    [[nodiscard]] CycElem conjugate() const {
        CycElem e(n_);
        for (std::uint64_t k = 0; k < n_; ++k) e.coeffs_[(n_ - k) % n_] = coeffs_[k];
        return e;
    }

    /// zeta_n -> zeta_n^u for u coprime to n.
    [[nodiscard]] CycElem galois(std::int64_t u) const {
        const auto nn = static_cast<std::int64_t>(n_);
        if (std::gcd(((u % nn) + nn) % nn, nn) != 1) throw DomainError("galois: exponent not coprime to conductor");
        CycElem e(n_);
        for (std::uint64_t k = 0; k < n_; ++k) {
            const auto idx = static_cast<std::uint64_t>(((static_cast<std::int64_t>(k) * u) % nn + nn) % nn);
            e.coeffs_[idx] += coeffs_[k];
        }
        return e;
    }

    /// Diagnostic value in C at zeta_n = exp(2 pi i / n). Never used for decisions.
    [[nodiscard]] std::complex<double> evaluate() const {
        std::complex<double> acc = 0;
        for (std::uint64_t k = 0; k < n_; ++k) {
            if (coeffs_[k] == 0) continue;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_);
            acc += coeffs_[k].convert_to<double>() * std::polar(1.0, angle);
        }
        return acc;
    }

    friend CycElem operator+(const CycElem& a, const CycElem& b) {
        auto [x, y] = common(a, b);
        for (std::uint64_t k = 0; k < x.n_; ++k) x.coeffs_[k] += y.coeffs_[k];
        return x;
    }
    friend CycElem operator-(const CycElem& a) {
        CycElem e = a;
        for (auto& c : e.coeffs_) c = -c;
        return e;
    }
    friend CycElem operator-(const CycElem& a, const CycElem& b) { return a + (-b); }

    /// Cyclic convolution followed by reduction to canonical form.
    friend CycElem operator*(const CycElem& a, const CycElem& b) {
        auto [x, y] = common(a, b);
        const std::uint64_t n = x.n_;
        std::vector<std::uint64_t> nz_y;
        for (std::uint64_t j = 0; j < n; ++j)
            if (y.coeffs_[j] != 0) nz_y.push_back(j);
        CycElem prod(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::uint64_t j : nz_y) {
                std::uint64_t k = i + j;
                if (k >= n) k -= n;
                prod.coeffs_[k] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        return prod.canonical();
    }
    friend CycElem operator*(const BigInt& k, const CycElem& a) {
        CycElem e = a;
        for (auto& c : e.coeffs_) c *= k;
        return e;
    }

    [[nodiscard]] CycElem pow(unsigned e) const {
        CycElem r = CycElem::integer(n_, 1);
        CycElem b = *this;
        while (e > 0) {
            if (e & 1U) r = r * b;
            e >>= 1U;
            if (e > 0) b = b * b;
        }
        return r;
    }

    friend bool operator==(const CycElem& a, const CycElem& b) {
        auto [x, y] = common(a, b);
        return x.canonical_coeffs() == y.canonical_coeffs();
    }

  private:
    static std::pair<CycElem, CycElem> common(const CycElem& a, const CycElem& b) {
        if (a.n_ == b.n_) return {a, b};
        const std::uint64_t l = std::lcm(a.n_, b.n_);
        return {a.embed(l), b.embed(l)};
    }

    std::uint64_t n_;
    std::vector<BigInt> coeffs_;
};

/// Canonical representative; idempotent.
inline CycElem reduce_canonical(const CycElem& e) { return e.canonical(); }

/// i = zeta_4 embedded in conductor n (4 | n).
inline CycElem imag_unit(std::uint64_t n) { return CycElem::zeta(4, 1).embed(n); }

/// i*sqrt(2) = zeta_8 + zeta_8^3 embedded in conductor n (8 | n).
inline CycElem i_sqrt2(std::uint64_t n) { return (CycElem::zeta(8, 1) + CycElem::zeta(8, 3)).embed(n); }

/// Quadratic Gauss sum over F_p: sqrt(p) when p = 1 mod 4, i*sqrt(p) when p = 3 mod 4.
inline CycElem quadratic_gauss_sum_prime(std::uint64_t p) {
    std::vector<BigInt> c(p, 0);
    for (std::uint64_t x = 1; x < p; ++x) c[x] = arith::jacobi(static_cast<std::int64_t>(x), p);
    return CycElem(p, std::move(c));
}

/// Direct sum over v in [0, 2^{r-2}) of zeta_{2^n}^{p^v}, conductor 2^n.
inline CycElem zeta_power_sum(std::uint64_t p, unsigned n, unsigned r) {
    if (r < 2 || n == 0 || n > 40) throw DomainError("zeta_power_sum: bad parameters");
    const std::uint64_t mod = std::uint64_t{1} << n;
    CycElem acc(mod);
    std::uint64_t e = 1 % mod;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << (r - 2)); ++v) {
        acc = acc + CycElem::zeta(mod, static_cast<std::int64_t>(e));
        e = e * (p % mod) % mod;
    }
    return acc;
}

/// Closed value of the 2-power root-of-unity sum for p = 3, 5 mod 8:
/// -2^{r-2} if n = 1; 2^{r-2} i if n = 2 and p = 5 mod 8;
/// 2^{r-3} i sqrt(2) if n = 3 and p = 3 mod 8; 0 otherwise.
inline CycElem power_sum_table(std::uint64_t p, unsigned n, unsigned r) {
    if (p % 8 != 3 && p % 8 != 5) throw DomainError("power sum table requires p = 3 or 5 mod 8");
    if (n < 1 || r < 3 || r < n) throw DomainError("power sum table requires n >= 1, r >= 3, r >= n");
    const std::uint64_t cond = std::uint64_t{1} << std::max(n, 3U);
    if (n == 1) return CycElem::integer(cond, -(BigInt(1) << (r - 2)));
    if (n == 2 && p % 8 == 5) return BigInt(BigInt(1) << (r - 2)) * imag_unit(cond);
    if (n == 3 && p % 8 == 3) return BigInt(BigInt(1) << (r - 3)) * i_sqrt2(cond);
    return CycElem(cond);
}

/// Sum over v in [0, 2^{r-2}) of zeta_{2^n}^{p^v}, computed directly and
/// cross-checked against the closed table before returning.
inline CycElem power_sum_lemma10(std::uint64_t p, unsigned n, unsigned r) {
    CycElem direct = zeta_power_sum(p, n, r);
    CycElem table = power_sum_table(p, n, r);
    if (!(direct == table)) throw ConsistencyError("root-of-unity power sum disagrees with its closed form");
    return direct.canonical();
}

/// Polynomial in X with coefficients in Z[zeta_n], little-endian.
using CycPoly = std::vector<CycElem>;

inline CycPoly cyc_poly_mul(const CycPoly& a, const CycPoly& b) {
    if (a.empty() || b.empty()) return {};
    const std::uint64_t n = a.front().conductor();
    CycPoly c(a.size() + b.size() - 1, CycElem(n));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

/// Product of polynomials over Z[zeta_n]; the empty product is 1 (conductor n).
inline CycPoly poly_mul_cyc(const std::vector<CycPoly>& polys, std::uint64_t n = 1) {
    CycPoly acc{CycElem::integer(n, 1)};
    for (const auto& f : polys) acc = cyc_poly_mul(acc, f);
    return acc;
}

/// Prod_k (X - roots[k]) over Z[zeta_n].
inline CycPoly poly_from_roots(const std::vector<CycElem>& roots) {
    std::vector<CycPoly> linear;
    linear.reserve(roots.size());
    std::uint64_t n = 1;
    for (const auto& r : roots) {
        n = std::lcm(n, r.conductor());
    }
    for (const auto& r : roots) linear.push_back(CycPoly{-r.embed(n), CycElem::integer(n, 1)});
    return poly_mul_cyc(linear, n);
}

/// Converts a polynomial over Z[zeta_n] to Z[X]; nullopt if any coefficient is irrational.
inline std::optional<IntPoly> to_int_poly(const CycPoly& f) {
    std::vector<BigInt> out;
    out.reserve(f.size());
    for (const auto& c : f) {
        auto v = c.as_integer();
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    return IntPoly(std::move(out));
}

}  // namespace periodpoly

#endif  // PERIODPOLY_CYCLOTOMIC_HPP
