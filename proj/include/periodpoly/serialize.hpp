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

#ifndef PERIODPOLY_SERIALIZE_HPP
#define PERIODPOLY_SERIALIZE_HPP

// JSON and plain-text renderings. Big integers are always decimal strings
// and polynomial coefficients are little-endian.

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "character_sums.hpp"
#include "closed_form.hpp"
#include "field.hpp"
#include "partitions.hpp"
#include "periods.hpp"

namespace periodpoly {

using Json = nlohmann::ordered_json;

inline Json big_array(const std::vector<BigInt>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(to_string(c));
    return out;
}

inline Json to_json(const FieldParams& f) {
    Json mod = Json::array();
    for (auto c : f.modulus) mod.push_back(c);
    return Json{{"p", f.p}, {"s", f.s}, {"modulus", mod}};
}

inline Json to_json(const CycElem& x) { return Json{{"n", x.conductor()}, {"canonical", big_array(x.canonical_coeffs())}}; }

inline Json to_json(const IntPoly& f) { return big_array(f.coeffs()); }

inline Json to_json(const PartitionRecord& r) {
    return Json{{"kind", to_string(r.kind)},     {"r", r.r},
                {"first", to_string(r.first)},   {"second", to_string(r.second)},
                {"pk", to_string(r.pk)},         {"gamma", r.gamma_fingerprint}};
}

inline Json to_json(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& [poly, mult] : f.factors) factors.push_back(Json{{"coeffs", to_json(poly)}, {"mult", mult}});
    Json parts = Json::array();
    for (const auto& r : f.provenance) parts.push_back(to_json(r));
    Json out{{"case", to_string(f.tag.theorem_case)}, {"q", to_string(f.q)}, {"factors", factors}, {"partitions", parts}};
    if (f.irreducible_no_closed_form) out["irreducible"] = true;
    return out;
}

inline Json to_json(const PeriodVector& pv, const IntPoly& poly) {
    Json eta = Json::array();
    for (const auto& x : pv.eta_star) eta.push_back(to_json(x));
    return Json{{"e", pv.e}, {"eta_star", eta}, {"polynomial", to_json(poly)}};
}

inline Json to_json(const LemmaRecord& r) {
    Json out{{"lemma", r.lemma}};
    out["r"] = r.r ? Json(*r.r) : Json(nullptr);
    out["detail"] = r.detail;
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
    out["pass"] = r.pass;
    return out;
}

/// A cyclotomic integer as a readable sum, e.g. "3 - 2*z^5 (z = zeta_24)".
inline std::string to_text(const CycElem& x) {
    if (auto v = x.as_integer()) return to_string(*v);
    std::ostringstream os;
    const auto c = x.canonical_coeffs();
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const bool neg = c[k] < 0;
        const BigInt mag = neg ? BigInt(-c[k]) : c[k];
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) os << to_string(mag) << "*";
        os << "z";
        if (k > 1) os << "^" << k;
    }
    os << " (z = zeta_" << x.conductor() << ")";
    return os.str();
}

inline std::string to_text(const Factorization& f) {
    std::ostringstream os;
    os << "case " << to_string(f.tag.theorem_case) << " (p = " << f.tag.p_class << " mod 8";
    if (f.tag.m != 0) os << ", m = " << f.tag.m;
    os << ", ord2(s) = " << f.tag.s2 << "), q = " << to_string(f.q) << "\n";
    if (f.irreducible_no_closed_form) os << "P* is irreducible over Q (no closed form)\n";
    for (const auto& [poly, mult] : f.factors) {
        os << "(" << poly.to_string("X") << ")";
        if (mult != 1) os << "^" << mult;
        os << "\n";
    }
    for (const auto& r : f.provenance) {
        const bool a = r.kind == PartitionKind::A;
        os << (a ? "A_" : "C_") << r.r << " = " << to_string(r.first) << ", " << (a ? "B_" : "D_") << r.r << " = "
           << to_string(r.second) << "  (" << to_string(r.pk) << ")\n";
    }
    return os.str();
}

}  // namespace periodpoly

#endif  // PERIODPOLY_SERIALIZE_HPP
