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

// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.
//
// Exit status is nonzero when any criterion fails, except criteria listed in
// kKnownUnattainable, whose documented expected value disagrees with the
// exact oracle. Those still print FAIL; if one ever starts passing, the run
// fails so the list gets revisited.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "periodpoly.hpp"

namespace pp = periodpoly;
using pp::BigInt;
using pp::FieldCtx;
using pp::IntPoly;

namespace {

const std::set<int> kKnownUnattainable{1};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

IntPoly L(long c) { return IntPoly::linear(BigInt(c)); }
IntPoly K(long c) { return IntPoly::constant(BigInt(c)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Closed form against full enumeration of F_q; returns the oracle polynomial.
IntPoly check_against_brute(Outcome& out, std::uint32_t p, unsigned s, unsigned m, unsigned threads = 0) {
    const FieldCtx ctx = FieldCtx::build(p, s);
    const auto closed = pp::closed_form(ctx, m);
    const IntPoly oracle = pp::brute_force_period_polynomial(ctx, std::uint64_t{1} << m, pp::SweepOptions{threads, 100'000'000});
    std::ostringstream tag;
    tag << p << "^" << s << " m=" << m << " (" << pp::to_string(closed.tag.theorem_case) << ")";
    out.require(pp::expand(closed) == oracle, "closed form != oracle for " + tag.str());
    return oracle;
}

void check_time(Outcome& out, double elapsed, double limit) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << "runtime " << elapsed << " s exceeds " << limit << " s";
    out.require(elapsed < limit, os.str());
}

Outcome criterion1() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const IntPoly oracle = check_against_brute(out, 3, 4, 4);
    check_time(out, seconds_since(t0), 1.0);
    const IntPoly listed = L(15).pow(2) * L(3).pow(4) * L(-21).pow(4) * (L(39).pow(2) + K(1728)) * (L(-9).pow(2) + K(1728)).pow(2);
    out.require(listed == oracle, "listed multiset (X+15)^2(X+3)^4(X-21)^4((X+39)^2+1728)((X-9)^2+1728)^2 != oracle; oracle factors as " +
                                      std::string("(X+15)^6(X-33)^4((X+39)^2+1728)((X-9)^2+1728)^2"));
    out.require(pp::expand(pp::closed_form(FieldCtx::build(3, 4), 4)) ==
                    L(15).pow(6) * L(-33).pow(4) * (L(39).pow(2) + K(1728)) * (L(-9).pow(2) + K(1728)).pow(2),
                "closed form differs from the oracle factorization");
    return out;
}

Outcome criterion2() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const IntPoly oracle = check_against_brute(out, 3, 8, 4);
    check_time(out, seconds_since(t0), 1.0);
    const IntPoly listed = L(63).pow(4) * L(-225).pow(5) * L(351).pow(2) * L(-513).pow(2) * L(495).pow(2) * L(207);
    out.require(listed == oracle, "listed factor multiset != oracle");
    return out;
}

Outcome criterion3() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    check_against_brute(out, 3, 8, 5);
    check_time(out, seconds_since(t0), 1.0);
    return out;
}

Outcome criterion4() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const IntPoly oracle = check_against_brute(out, 5, 4, 4);
    check_time(out, seconds_since(t0), 1.0);
    const IntPoly quartic = (L(-5).pow(2) + K(22000)).pow(2) - K(8000) * L(95).pow(2);
    const IntPoly listed = L(15).pow(4) * L(-65).pow(4) * (L(55).pow(2) - K(8000)).pow(2) * quartic;
    out.require(listed == oracle, "listed factor multiset != oracle");
    return out;
}

Outcome criterion5() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    check_against_brute(out, 5, 8, 4, 1);
    check_time(out, seconds_since(t0), 10.0);
    return out;
}

Outcome criterion6() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const FieldCtx ctx = FieldCtx::build(5, 16);
    const auto base = pp::lift_base_degree(5, 16, 4);
    out.require(base == 4U, "lift base degree is not 4");
    // Budget far below 5^16: any attempt to enumerate F_q would throw.
    const auto gp = pp::gauss_powers_lifted(ctx, 4, base.value_or(4), pp::SweepOptions{0, 1'000'000});
    const IntPoly lifted = pp::period_polynomial(pp::eta_via_gauss(5, 16, 4, gp));
    const auto closed = pp::closed_form(ctx, 4);
    out.require(closed.tag.theorem_case == pp::TheoremCase::T2a, "case is not T2a");
    out.require(pp::expand(closed) == lifted, "lifted periods != closed form");
    check_time(out, seconds_since(t0), 5.0);
    return out;
}

Outcome criterion7() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    check_against_brute(out, 3, 16, 5);
    check_time(out, seconds_since(t0), 120.0);
    return out;
}

Outcome criterion8() {
    Outcome out;
    for (auto [p, s] : {std::pair<std::uint32_t, unsigned>{11, 4}, {13, 4}}) {
        const auto t0 = std::chrono::steady_clock::now();
        check_against_brute(out, p, s, 4);
        check_time(out, seconds_since(t0), 30.0);
    }
    return out;
}

Outcome criterion9() {
    Outcome out;
    for (auto [p, s, m] : {std::tuple<std::uint32_t, unsigned, unsigned>{3, 4, 3}, {5, 2, 2}, {5, 2, 3}, {5, 4, 3}}) {
        const FieldCtx ctx = FieldCtx::build(p, s);
        const IntPoly oracle = pp::brute_force_period_polynomial(ctx, std::uint64_t{1} << m);
        out.require(pp::expand(pp::small_m(ctx, m)) == oracle,
                    "small-m form != oracle for " + std::to_string(p) + "^" + std::to_string(s) + " m=" + std::to_string(m));
    }
    return out;
}

/// Property suites, each run over at least 50 cases.
Outcome criterion10() {
    Outcome out;
    struct Inst {
        std::uint32_t p;
        unsigned s;
    };
    const std::vector<Inst> fields{{3, 2},   {3, 3},   {3, 4},   {3, 6},   {3, 8},   {3, 12},  {5, 2},   {5, 3},
                                   {5, 4},   {5, 6},   {5, 8},   {7, 2},   {11, 2},  {11, 4},  {13, 2},  {13, 4},
                                   {17, 2},  {19, 2},  {19, 4},  {29, 2},  {29, 4},  {37, 2},  {37, 4},  {43, 2},
                                   {53, 2},  {59, 2},  {61, 2},  {67, 2},  {83, 2},  {101, 2}, {107, 2}, {109, 2},
                                   {131, 2}, {139, 2}, {149, 2}, {157, 2}, {163, 2}, {173, 2}, {179, 2}, {181, 2}};
    std::map<std::string, int> cases;
    auto count = [&](const char* suite, bool ok, const std::string& what) {
        ++cases[suite];
        out.require(ok, std::string(suite) + ": " + what);
    };

    for (const Inst& f : fields) {
        const FieldCtx ctx = FieldCtx::build(f.p, f.s);
        const std::string name = std::to_string(f.p) + "^" + std::to_string(f.s);
        for (std::uint64_t e = 2; e <= 32; ++e) {
            if ((ctx.q() - 1) % e != 0 || ctx.q() > 200'000) continue;
            const auto pv = pp::reduced_periods(pp::trace_spectrum(ctx, e));
            pp::CycElem sum(f.p);
            for (const auto& x : pv.eta_star) sum = sum + x;
            count("sum", sum.is_zero(), name + " e=" + std::to_string(e));
            bool stable = true;
            for (std::uint64_t k = 0; k < e; ++k) stable = stable && pv.at(static_cast<std::int64_t>(k * f.p)) == pv.eta_star[k];
            count("frobenius", stable, name + " e=" + std::to_string(e));
            const IntPoly poly = pp::period_polynomial(pv);
            for (std::uint64_t u : {5ULL, 7ULL, 11ULL, 13ULL}) {
                if (std::gcd(u, ctx.q() - 1) != 1) continue;
                const FieldCtx other = ctx.with_generator(ctx.pow(ctx.gamma(), u));
                count("generator", pp::brute_force_period_polynomial(other, e) == poly, name + " e=" + std::to_string(e));
            }
        }

        const unsigned top = f.p % 8 == 3 || f.p % 8 == 5 ? pp::ord2_q_minus_1(f.p, f.s) : 0;
        for (unsigned m = 2; m <= std::min(top, 5U); ++m) {
            const std::uint64_t e = std::uint64_t{1} << m;
            const std::string tag = name + " m=" + std::to_string(m);
            for (const auto& rec : pp::lemma_suite(ctx, m)) {
                static const std::set<std::string> listed{"2a", "2b", "2c", "4", "5", "7", "8", "9", "10", "11", "15", "16"};
                if (listed.count(rec.lemma) != 0) count("identities", rec.pass, tag + " " + rec.lemma + " " + rec.detail);
            }
            if (f.p % 8 == 3 && m == 2) continue;
            const pp::PartitionSet parts = pp::collect_partitions(ctx, m);
            for (const auto& [r, rec] : parts.by_r) {
                std::uint32_t fv = 0;
                if (rec.kind == pp::PartitionKind::A) {
                    const std::uint64_t eighth = (ctx.q() - 1) / 8;
                    fv = *ctx.as_prime_field(ctx.add(ctx.pow(ctx.gamma(), eighth), ctx.pow(ctx.gamma(), 3 * eighth)));
                } else {
                    fv = *ctx.as_prime_field(ctx.pow(ctx.gamma(), (ctx.q() - 1) / 4));
                }
                int hits = 0;
                bool same = false;
                for (const auto& [a, b] : pp::enumerate_representations(rec.pk, rec.d()))
                    if (pp::partition_detail::satisfies(rec.kind, a, b, rec.pk, f.p, fv)) {
                        ++hits;
                        same = a == rec.first && b == rec.second;
                    }
                count("partitions", hits == 1 && same, tag + " r=" + std::to_string(r));
            }
            const auto closed = pp::closed_form(f.p, f.s, m, parts);
            const std::uint64_t delta = pp::splitting_count(f.p, f.s, e);
            const std::uint64_t gcd = std::gcd(e, (ctx.q() - 1) / (f.p - 1));
            bool shape = delta == gcd;
            if (!closed.irreducible_no_closed_form) {
                for (const auto& [poly, mult] : closed.factors) {
                    const auto deg = static_cast<std::uint64_t>(poly.degree());
                    shape = shape && (e / delta) % deg == 0 && deg * mult % (e / delta) == 0;
                }
            } else {
                shape = shape && delta == 1;
            }
            count("splitting", shape, tag);
            pp::PartitionSet flipped = parts;
            for (auto& [r, rec] : flipped.by_r) rec.second = -rec.second;
            count("sign-flip", pp::expand(pp::closed_form(f.p, f.s, m, flipped)) == pp::expand(closed), tag);
        }
    }
    for (const auto& [suite, n] : cases) out.require(n >= 50, suite + " ran only " + std::to_string(n) + " cases");
    std::ostringstream os;
    for (const auto& [suite, n] : cases) os << (os.tellp() == 0 ? "" : ", ") << suite << " " << n;
    if (out.pass) out.detail = os.str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    bool stretch = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--stretch") == 0) {
            stretch = true;
        } else {
            std::cerr << "usage: acceptance [--stretch]\n";
            return 64;
        }
    }

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"T1c p=3 s=4 m=4 vs oracle, listed multiset, < 1 s", criterion1},
        {"T1a p=3 s=8 m=4 vs oracle, listed multiset, < 1 s", criterion2},
        {"T1b p=3 s=8 m=5 vs oracle, < 1 s", criterion3},
        {"T2c p=5 s=4 m=4 vs oracle, listed multiset, < 1 s", criterion4},
        {"T2b p=5 s=8 m=4 vs oracle, single thread, < 10 s", criterion5},
        {"T2a p=5 s=16 m=4 via lifted Gauss sums, < 5 s", criterion6},
        {"T1a p=3 s=16 m=5 full enumeration, < 120 s", criterion7},
        {"p=11 and p=13, s=4, m=4 vs oracle, < 30 s each", criterion8},
        {"small m forms vs oracle", criterion9},
        {"property suites, >= 50 cases each", criterion10},
    };

    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        const auto& [title, run] = criteria[i];
        if (id == 7 && !stretch) {
            std::cout << "criterion " << id << ": SKIP  " << title << " (pass --stretch)\n";
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& err) {
            out.pass = false;
            out.detail = std::string("exception: ") + err.what();
        }
        const double elapsed = seconds_since(t0);
        const bool known = kKnownUnattainable.count(id) != 0;
        std::cout << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << title << "  [" << std::fixed
                  << std::setprecision(2) << elapsed << " s]";
        if (!out.pass && known) std::cout << " (known: listed expectation disagrees with the exact oracle)";
        if (!out.detail.empty()) std::cout << "\n    " << out.detail;
        std::cout << std::endl;
        if (out.pass == known) {
            ++unexpected;
            if (known) std::cout << "    criterion " << id << " is listed as unattainable but passed\n";
        }
    }
    std::cout << (unexpected == 0 ? "acceptance: no unexpected results" : "acceptance: unexpected results") << "\n";
    return unexpected == 0 ? 0 : 1;
}
