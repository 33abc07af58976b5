#include "p1b/jsonio.hpp"

#include <limits>

#include "p1b/errors.hpp"

namespace p1b {

namespace {

long long to_i64(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi)
        throw Error("json: integer exceeds the 64-bit wire range");
    return v.convert_to<long long>();
}

} // namespace

Json rat_json(const Rat& q) {
    return Json::array({to_i64(rat_num(q)), to_i64(rat_den(q))});
}

Rat rat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw Error("json: rational must be a [numerator, denominator] pair");
    Rat den(j[1].get<long long>());
    if (den == 0) throw Error("json: zero denominator");
    return Rat(j[0].get<long long>()) / den;
}

Json xpoly_json(const XPoly& f) {
    Json a = Json::array();
    for (long i = 0; i <= f.degree(); ++i) a.push_back(rat_json(f.coeff(i)));
    return a;
}

Json tmat_json(const TransitionMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 2; ++j) {
            Json terms = Json::array();
            for (const auto& [e, f] : m.e[i][j].terms())
                terms.push_back(Json{{"yexp", e},
                                     {"num", xpoly_json(f.num())},
                                     {"den", xpoly_json(f.den())}});
            row.push_back(std::move(terms));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json canonical_json(const CanonicalP& p) {
    Json rows = Json::array();
    for (const auto& r : p.rows) {
        Json row = Json::array();
        for (long i = 0; i <= r.bound(); ++i) row.push_back(rat_json(r.coeff(i)));
        rows.push_back(std::move(row));
    }
    return Json{{"a", p.inv.a}, {"b", p.inv.b}, {"c", p.inv.c}, {"rows", rows}};
}

CanonicalP canonical_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") ||
        !j.contains("c") || !j.contains("rows"))
        throw Error("json: canonical datum needs a, b, c and rows");
    const long a = j.at("a").get<long>(), b = j.at("b").get<long>(),
               c = j.at("c").get<long>();
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != static_cast<size_t>(b + 1))
        throw Error("json: canonical datum needs b + 1 rows");

    BiHomogLaurent P(b);
    for (long i = 0; i <= b; ++i) {
        const Json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array()) throw Error("json: canonical row must be an array");
        LaurentPoly f;
        for (size_t k = 0; k < row.size(); ++k)
            f.set_coeff(a * i + 1 + static_cast<long>(k), rat_from_json(row[k]));
        P.set_row(i, f);
    }
    // Round-tripping through the reduction validates window and scaling.
    CanonicalP out = normalize(a, b, c, P);
    for (long i = 0; i <= b; ++i) {
        const Json& row = rows[static_cast<size_t>(i)];
        const TruncPoly& got = out.rows[static_cast<size_t>(i)];
        for (size_t k = 0; k < row.size(); ++k)
            if (got.coeff(static_cast<long>(k)) != rat_from_json(row[k]))
                throw Error("json: rows are not in canonical form");
    }
    return out;
}

Json desc_json(const BundleDesc& d) {
    switch (d.family) {
        case Family::DecFa:
        case Family::Umemura:
            return Json{{"family", family_name(d.family)},
                        {"a", d.a},
                        {"b", d.b},
                        {"c", d.c}};
        case Family::DecP2:
        case Family::Schwarz:
        case Family::HatSchwarz:
        case Family::V1:
            return Json{{"family", family_name(d.family)}, {"b", d.b}};
        case Family::Raw:
            return Json{{"family", family_name(d.family)},
                        {"canonical", canonical_json(*d.raw)}};
    }
    throw Error("desc_json: unreachable family");
}

BundleDesc desc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw InvalidDescriptor("json: descriptor needs a family");
    const std::string fam = j.at("family").get<std::string>();
    auto geta = [&j](const char* k) {
        if (!j.contains(k))
            throw InvalidDescriptor(std::string("json: descriptor needs ") + k);
        return j.at(k).get<long>();
    };
    if (fam == "DecFa") return make_dec_fa(geta("a"), geta("b"), geta("c"));
    if (fam == "DecP2") return make_dec_p2(geta("b"));
    if (fam == "Umemura") return make_umemura(geta("a"), geta("b"), geta("c"));
    if (fam == "Schwarz") return make_schwarz(geta("b"));
    if (fam == "HatSchwarz") return make_hat_schwarz(geta("b"));
    if (fam == "V1") return make_v1(geta("b"));
    if (fam == "Raw") {
        if (!j.contains("canonical"))
            throw InvalidDescriptor("json: raw descriptor needs a canonical datum");
        return make_raw(canonical_from_json(j.at("canonical")));
    }
    throw InvalidDescriptor("json: unknown family " + fam);
}

Json verdict_json(const Verdict& v) {
    return Json{{"maximal", v.maximal},
                {"stiff", v.stiff},
                {"superstiff", v.superstiff},
                {"reason", v.reason}};
}

Json step_json(const LinkStep& s) {
    Json j{{"source", desc_json(s.source)},
           {"target", desc_json(s.target)},
           {"kind", link_kind_name(s.kind)},
           {"fwd_equivariant", s.fwd_equivariant},
           {"bwd_equivariant", s.bwd_equivariant},
           {"strict", s.strict},
           {"desc", s.desc}};
    if (s.center) j["center"] = curve_name(*s.center);
    return j;
}

Json reduction_json(const ReductionResult& r) {
    Json chain = Json::array();
    for (const auto& s : r.chain) chain.push_back(step_json(s));
    return Json{{"target", desc_json(r.target)}, {"chain", chain}};
}

Json jump_report_json(const JumpReport& r) {
    Json jumps = Json::array();
    for (const auto& [l, eps] : r.jumps)
        jumps.push_back(Json{{"lambda", rat_json(l)}, {"eps", eps}});
    return Json{{"m", r.m},
                {"n", r.n},
                {"jumps", jumps},
                {"unresolved", r.unresolved},
                {"det_b", xpoly_json(r.det_b)}};
}

Json graph_json(const LinkGraph& g) {
    Json nodes = Json::array(), edges = Json::array();
    for (const auto& n : g.nodes)
        nodes.push_back(Json{{"desc", desc_json(n.desc)},
                             {"verdict", verdict_json(n.verdict)}});
    for (const auto& e : g.edges) edges.push_back(step_json(e));
    return Json{{"nodes", nodes}, {"edges", edges}};
}

} // namespace p1b
