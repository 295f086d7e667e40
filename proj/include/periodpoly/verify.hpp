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

#ifndef PERIODPOLY_VERIFY_HPP
#define PERIODPOLY_VERIFY_HPP

// Closed form versus oracle, with an append-only JSON Lines cache. The
// digest covers the record content and excludes the timestamp, so a rerun
// on a cache hit reproduces the digest byte for byte.

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <string>

#include "character_sums.hpp"
#include "closed_form.hpp"
#include "periods.hpp"
#include "serialize.hpp"

namespace periodpoly {

enum class OracleKind { Auto, Brute, Lift };

inline OracleKind parse_oracle(const std::string& s) {
    if (s == "auto") return OracleKind::Auto;
    if (s == "brute") return OracleKind::Brute;
    if (s == "lift") return OracleKind::Lift;
    throw DomainError("unknown oracle '" + s + "' (expected auto, brute or lift)");
}

struct VerifyOptions {
    OracleKind oracle = OracleKind::Auto;
    std::uint64_t max_q = 100'000'000;
    unsigned threads = 0;
    std::optional<std::string> cache_path;
};

struct VerificationRecord {
    unsigned p = 0;
    unsigned s = 0;
    unsigned m = 0;
    CaseTag tag;
    std::string oracle;  ///< brute | lift
    std::string status;  ///< verified | failed | skipped
    std::string note;
    Factorization factorization;
    std::string digest;
    std::string timestamp;
    bool cache_hit = false;
};

inline Json record_content(const VerificationRecord& r) {
    return Json{{"p", r.p},
                {"s", r.s},
                {"m", r.m},
                {"case", to_string(r.tag.theorem_case)},
                {"oracle", r.oracle},
                {"status", r.status},
                {"note", r.note},
                {"factorization", to_json(r.factorization)}};
}

inline std::string record_digest(const VerificationRecord& r) { return hex64(fnv1a(record_content(r).dump())); }

inline Json to_json(const VerificationRecord& r) {
    Json out = record_content(r);
    out["digest"] = r.digest;
    out["timestamp"] = r.timestamp;
    out["cache_hit"] = r.cache_hit;
    return out;
}

inline std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// JSON Lines store of verification records; lines are only ever appended.
class VerificationCache {
  public:
    explicit VerificationCache(std::string path) : path_(std::move(path)) {}

    /// PERIODPOLY_CACHE wins over the command-line path.
    static std::optional<std::string> resolve_path(const std::optional<std::string>& flag) {
        if (const char* env = std::getenv("PERIODPOLY_CACHE"); env != nullptr && *env != '\0') return std::string(env);
        return flag;
    }

    /// Most recent completed record for (p, s, m, oracle).
    [[nodiscard]] std::optional<Json> lookup(unsigned p, unsigned s, unsigned m, const std::string& oracle) const {
        std::ifstream in(path_);
        std::optional<Json> hit;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Json j = Json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.is_object()) continue;
            if (j.value("p", 0U) == p && j.value("s", 0U) == s && j.value("m", 0U) == m &&
                j.value("oracle", std::string()) == oracle) {
                const auto status = j.value("status", std::string());
                if (status == "verified" || status == "failed") hit = std::move(j);
            }
        }
        return hit;
    }

    void append(const VerificationRecord& r) const {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw DomainError("cannot open cache file " + path_);
        out << to_json(r).dump() << "\n";
    }

    [[nodiscard]] const std::string& path() const { return path_; }

  private:
    std::string path_;
};

namespace verify_detail {

/// Oracle polynomial by enumerating F_q.
inline IntPoly brute_oracle(const FieldCtx& ctx, unsigned m, const VerifyOptions& opts) {
    return brute_force_period_polynomial(ctx, std::uint64_t{1} << m, SweepOptions{opts.threads, opts.max_q});
}

/// Oracle polynomial from Gauss sums on the smallest subfield carrying a
/// character of order 2^m, lifted to F_q. Empty when no proper subfield works.
inline std::optional<IntPoly> lift_oracle(const FieldCtx& ctx, unsigned m, const VerifyOptions& opts, std::string& note) {
    const auto d = lift_base_degree(ctx.p(), ctx.s(), m);
    if (!d || *d == ctx.s()) {
        note = "lift oracle unavailable: no proper subfield carries a character of order 2^m";
        return std::nullopt;
    }
    const GaussPowers gp = gauss_powers_lifted(ctx, m, *d, SweepOptions{opts.threads, opts.max_q});
    note = "Gauss sums over F_{p^" + std::to_string(*d) + "} lifted to F_q";
    return period_polynomial(eta_via_gauss(ctx.p(), ctx.s(), m, gp));
}

}  // namespace verify_detail

/// Runs the closed form and the selected oracle. Budget overruns and an
/// unavailable lift oracle yield status "skipped"; domain errors propagate.
inline VerificationRecord verify(unsigned p, unsigned s, unsigned m, const VerifyOptions& opts = {}) {
    VerificationRecord rec;
    rec.p = p;
    rec.s = s;
    rec.m = m;
    rec.tag = classify(p, s, m);
    const FieldCtx ctx = FieldCtx::build(p, s);
    rec.factorization = closed_form(ctx, m);
    const bool brute = opts.oracle == OracleKind::Brute || (opts.oracle == OracleKind::Auto && ctx.q() <= opts.max_q);
    rec.oracle = brute ? "brute" : "lift";

    std::optional<VerificationCache> cache;
    if (auto path = VerificationCache::resolve_path(opts.cache_path)) cache.emplace(*path);
    if (cache) {
        if (auto prior = cache->lookup(p, s, m, rec.oracle)) {
            VerificationRecord replay = rec;
            replay.status = prior->value("status", std::string());
            replay.note = prior->value("note", std::string());
            replay.digest = record_digest(replay);
            if (replay.digest == prior->value("digest", std::string())) {
                replay.timestamp = utc_timestamp();
                replay.cache_hit = true;
                cache->append(replay);
                return replay;
            }
        }
    }

    try {
        std::optional<IntPoly> oracle;
        if (brute) {
            oracle = verify_detail::brute_oracle(ctx, m, opts);
            rec.note = "enumerated F_q";
        } else {
            oracle = verify_detail::lift_oracle(ctx, m, opts, rec.note);
        }
        if (!oracle) {
            rec.status = "skipped";
        } else if (rec.factorization.irreducible_no_closed_form) {
            const std::uint64_t e = std::uint64_t{1} << m;
            const bool ok = splitting_count(p, s, e) == 1 && oracle->degree() == static_cast<int>(e) &&
                            oracle->coeff(e - 1) == 0;
            rec.status = ok ? "verified" : "failed";
            rec.note += "; irreducible: gcd(e, (q-1)/(p-1)) = 1";
        } else {
            rec.status = expand(rec.factorization) == *oracle ? "verified" : "failed";
        }
    } catch (const BudgetError& err) {
        rec.status = "skipped";
        rec.note = err.what();
    }
    rec.digest = record_digest(rec);
    rec.timestamp = utc_timestamp();
    if (cache) cache->append(rec);
    return rec;
}

}  // namespace periodpoly

#endif  // PERIODPOLY_VERIFY_HPP
