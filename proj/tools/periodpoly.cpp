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

// periodpoly: command-line front end.
//
//   periodpoly factor    --p 3 --s 8 --m 4 [--format json]
//   periodpoly verify    --p 5 --s 16 --m 4 --oracle lift
//   periodpoly periods   --p 5 --s 2 --e 4
//   periodpoly partition --p 3 --s 8 --type A --r 3
//   periodpoly lemmas    --p 5 --s 4 --m 4 [--only lemma2,lemma15]
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification mismatch,
// 3 budget exceeded (or no oracle available).

#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "periodpoly.hpp"

namespace {

using namespace periodpoly;

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kBudget = 3 };

struct Common {
    std::string format = "text";
    unsigned threads = 0;
    std::uint64_t max_q = 100'000'000;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--threads", c.threads, "sweep workers (0 = available parallelism)");
    cmd->add_option("--max-q", c.max_q, "largest enumeration the oracles may perform");
}

SweepOptions sweep(const Common& c) { return SweepOptions{c.threads, c.max_q}; }

int run_factor(unsigned p, unsigned s, unsigned m, std::uint64_t e, bool use_prop20, const Common& c) {
    Factorization f;
    if (use_prop20) {
        if (e == 0) throw DomainError("--prop20 needs --e");
        f = prop20(p, s, e);
    } else {
        if (m == 0) throw DomainError("factor needs --m");
        classify(p, s, m);
        f = closed_form(FieldCtx::build(p, s), m);
    }
    if (c.format == "json")
        std::cout << to_json(f).dump() << "\n";
    else
        std::cout << to_text(f);
    return kOk;
}

int run_verify(unsigned p, unsigned s, unsigned m, const std::string& oracle, const std::optional<std::string>& cache,
               const Common& c) {
    VerifyOptions opts{parse_oracle(oracle), c.max_q, c.threads, cache};
    const VerificationRecord rec = verify(p, s, m, opts);
    if (c.format == "json") {
        std::cout << to_json(rec).dump() << "\n";
    } else {
        std::cout << rec.status << " (" << to_string(rec.tag.theorem_case) << ", oracle " << rec.oracle
                  << (rec.cache_hit ? ", cached" : "") << ") digest " << rec.digest << "\n";
        if (!rec.note.empty()) std::cout << rec.note << "\n";
    }
    if (rec.status == "verified") return kOk;
    return rec.status == "failed" ? kMismatch : kBudget;
}

int run_periods(unsigned p, unsigned s, std::uint64_t e, const Common& c) {
    const FieldCtx ctx = FieldCtx::build(p, s);
    if (e == 0 || (ctx.q() - 1) % e != 0) throw DomainError("e must divide q - 1");
    const PeriodVector pv = reduced_periods(trace_spectrum(ctx, e, sweep(c)));
    const IntPoly poly = period_polynomial(pv);
    if (c.format == "json") {
        std::cout << to_json(pv, poly).dump() << "\n";
        return kOk;
    }
    for (std::uint64_t k = 0; k < e; ++k) std::cout << "eta*_" << k << " = " << to_text(pv.eta_star[k]) << "\n";
    std::cout << "P*(X) = " << poly.to_string("X") << "\n";
    return kOk;
}

int run_partition(unsigned p, unsigned s, const std::string& type, unsigned r, const Common& c) {
    const FieldCtx ctx = FieldCtx::build(p, s);
    const PartitionRecord rec = type == "A" ? partition_A(ctx, r, r) : partition_C(ctx, r, r);
    if (c.format == "json") {
        std::cout << to_json(rec).dump() << "\n";
    } else {
        const bool a = rec.kind == PartitionKind::A;
        std::cout << to_string(rec.pk) << " = " << to_string(rec.first) << "^2 + " << (a ? "2*" : "") << "("
                  << to_string(rec.second) << ")^2\n";
    }
    return kOk;
}

std::set<std::string> parse_only(const std::string& only) {
    std::set<std::string> out;
    std::stringstream ss(only);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item.rfind("lemma", 0) == 0) item = item.substr(5);
        if (item == "2") {
            out.insert({"2a", "2b", "2c"});
        } else {
            out.insert(item);
        }
    }
    return out;
}

int run_lemmas(unsigned p, unsigned s, unsigned m, const std::string& only, const Common& c) {
    const FieldCtx ctx = FieldCtx::build(p, s);
    const auto records = lemma_suite(ctx, m, parse_only(only), sweep(c));
    std::size_t failed = 0;
    for (const auto& r : records) {
        if (!r.pass) ++failed;
        if (c.format == "json") {
            std::cout << to_json(r).dump() << "\n";
        } else {
            std::cout << (r.pass ? "pass" : "FAIL") << "  lemma " << r.lemma;
            if (r.r) std::cout << " r=" << *r.r;
            if (!r.detail.empty()) std::cout << " " << r.detail;
            if (!r.pass) std::cout << "\n    lhs " << to_text(r.lhs) << "\n    rhs " << to_text(r.rhs);
            std::cout << "\n";
        }
    }
    if (c.format == "text") std::cout << records.size() - failed << "/" << records.size() << " identities hold\n";
    return failed == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduced period polynomials of degree 2^m for finite fields"};
    app.require_subcommand(1);

    Common common;
    unsigned p = 0;
    unsigned s = 0;
    unsigned m = 0;
    unsigned r = 0;
    std::uint64_t e = 0;
    bool use_prop20 = false;
    std::string type;
    std::string oracle = "auto";
    std::string only;
    std::optional<std::string> cache;

    auto field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "odd prime")->required();
        cmd->add_option("--s", s, "extension degree")->required();
        add_common(cmd, common);
    };

    auto* factor = app.add_subcommand("factor", "closed-form factorization of P*_{2^m}");
    field_opts(factor);
    factor->add_option("--m", m, "e = 2^m");
    factor->add_option("--e", e, "period count (with --prop20)");
    factor->add_flag("--prop20", use_prop20, "use the -1 = p^l mod e formula");

    auto* ver = app.add_subcommand("verify", "check the closed form against an oracle");
    field_opts(ver);
    ver->add_option("--m", m, "e = 2^m")->required();
    ver->add_option("--oracle", oracle, "auto, brute or lift")->check(CLI::IsMember({"auto", "brute", "lift"}));
    ver->add_option("--cache", cache, "JSON Lines cache (PERIODPOLY_CACHE overrides)");

    auto* per = app.add_subcommand("periods", "reduced periods by enumeration");
    field_opts(per);
    per->add_option("--e", e, "number of periods")->required();
    per->add_flag_callback("--json", [&] { common.format = "json"; }, "same as --format json");

    auto* part = app.add_subcommand("partition", "normalized quadratic partition");
    field_opts(part);
    part->add_option("--type", type, "A or C")->required()->check(CLI::IsMember({"A", "C"}));
    part->add_option("--r", r, "partition index")->required();

    auto* lem = app.add_subcommand("lemmas", "Gauss and Jacobi sum identity suite");
    field_opts(lem);
    lem->add_option("--m", m, "character order 2^m")->required();
    lem->add_option("--only", only, "comma list, e.g. lemma2,lemma15");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? kOk : kUsage;
    }

    try {
        if (factor->parsed()) return run_factor(p, s, m, e, use_prop20, common);
        if (ver->parsed()) return run_verify(p, s, m, oracle, cache, common);
        if (per->parsed()) return run_periods(p, s, e, common);
        if (part->parsed()) return run_partition(p, s, type, r, common);
        if (lem->parsed()) return run_lemmas(p, s, m, only, common);
    } catch (const BudgetError& err) {
        std::cerr << "budget exceeded: " << err.what() << "\n";
        return kBudget;
    } catch (const ConsistencyError& err) {
        std::cerr << "consistency failure: " << err.what() << "\n";
        return kMismatch;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
