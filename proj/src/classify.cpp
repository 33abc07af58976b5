#include "p1b/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "p1b/errors.hpp"

namespace p1b {

std::string Verdict::glyphs() const {
    std::string s;
    if (maximal) s += " M";
    if (stiff) s += " S";
    if (superstiff) s += " SS";
    return s;
}

std::optional<BundleDesc> recognize(const CanonicalP& p) {
    const long a = p.inv.a, b = p.inv.b, c = p.inv.c;

    if (is_decomposable(p)) {
        NumericalInvariants n = normalized_invariants(p.inv);
        return make_dec_fa(n.a, n.b, n.c);
    }

    // Single constant row k with c = a*k + 2: an Umemura bundle.
    if (a >= 1 && b >= 1 && c >= 2) {
        long k = -1;
        bool single = true;
        for (long i = 0; i <= b && single; ++i) {
            if (p.rows[static_cast<size_t>(i)].is_zero()) continue;
            if (k >= 0) single = false;
            k = i;
        }
        if (single && k >= 0 && c == a * k + 2 &&
            p.rows[static_cast<size_t>(k)] == TruncPoly::constant(0, Rat(1)))
            return make_umemura(a, b, c);
    }

    // Rows z^i over F_0 with c = b + 2: the Schwarzenberger pull-back.
    if (a == 0 && b >= 1 && c == b + 2) {
        bool match = true;
        for (long i = 0; i <= b && match; ++i) {
            TruncPoly want(b);
            want.set_coeff(i, Rat(1));
            match = p.rows[static_cast<size_t>(i)] == want;
        }
        if (match) return make_hat_schwarz(b);
    }

    return std::nullopt;
}

Verdict verdict(const BundleDesc& desc) {
    Verdict v;
    switch (desc.family) {
        case Family::DecFa: {
            const long a = desc.a, b = desc.b, c = desc.c;
            v.maximal = a != 1 && (a == 0 || (b == 0 && c == 0) || (-a < c && c < a * b));
            v.superstiff = v.maximal && (a == 0 || (b == 0 && c == 0));
            v.stiff = v.superstiff;
            if (a == 0) {
                v.reason = "a = 0: no curve is invariant, no equivariant link exists";
            } else if (a == 1) {
                v.reason = "a = 1: descends to a decomposable bundle over P^2";
            } else if (b == 0 && c == 0) {
                v.reason = "b = c = 0: no invariant curve over F_a";
            } else if (v.maximal) {
                v.reason = "-a < c < ab: maximal window; the shift chain stays "
                           "equivariant both ways, so not stiff";
            } else if (c >= a * b) {
                v.reason = "c >= ab: inverse shifts reduce to b = 0";
            } else {
                v.reason = "c <= -a: shifts raise c into the maximal window";
            }
            return v;
        }
        case Family::DecP2:
            v.maximal = v.stiff = v.superstiff = true;
            v.reason = "decomposable over P^2: no invariant curve, no link";
            return v;
        case Family::Umemura: {
            const long gap = desc.c - desc.a * desc.b;
            v.maximal = (desc.a >= 2 && gap < 2) || (desc.a == 1 && gap < 1);
            if (v.maximal) {
                v.reason = "c - ab < " + std::string(desc.a == 1 ? "1" : "2") +
                           ": maximal; the shift chain stays equivariant both "
                           "ways, so not stiff";
            } else if (gap == 2) {
                v.reason = "c = ab + 2: the inverse shifts end at U_a^{1,a+2}, "
                           "which splits";
            } else {
                v.reason = "c = b + 1 over F_1: the inverse shifts end at "
                           "U_1^{1,2}, which descends to P(T_P2)";
            }
            return v;
        }
        case Family::Schwarz:
            v.maximal = true;
            v.stiff = true;
            v.superstiff = desc.b == 1;
            v.reason = desc.b == 1
                           ? "P(T_P2): homogeneous, no invariant curve"
                           : "only the involution moves it, onto itself";
            return v;
        case Family::HatSchwarz:
            v.reason = "pull-back of S_b: descends through the double cover";
            return v;
        case Family::V1:
            v.maximal = true;
            v.reason = "maximal over the marked point; the blow-up back to "
                       "U_1^{b,2} is equivariant both ways, so not stiff";
            return v;
        case Family::Raw: {
            auto rec = recognize(*desc.raw);
            if (rec) {
                Verdict w = verdict(*rec);
                w.reason = "recognized as " + rec->str() + "; " + w.reason;
                return w;
            }
            v.reason = "orbit not identified: no reduction attempted for this datum";
            return v;
        }
    }
    throw Error("verdict: unreachable family");
}

namespace {

constexpr int kChainGuard = 4096;

} // namespace

ReductionResult maximal_model(const BundleDesc& desc) {
    BundleDesc cur = desc;
    if (cur.family == Family::Raw) {
        auto rec = recognize(*cur.raw);
        if (!rec)
            throw InvalidDescriptor(
                "maximal_model: raw datum not recognized as a named family");
        cur = *rec;
    }

    ReductionResult res;
    int guard = 0;
    while (!verdict(cur).maximal) {
        if (++guard > kChainGuard)
            throw Error("maximal_model: reduction did not terminate (bug)");
        LinkStep st;
        switch (cur.family) {
            case Family::DecFa: {
                const long a = cur.a, b = cur.b, c = cur.c;
                if (a == 1) {
                    st = link_f1_to_p2(b, c);
                } else if (c >= a * b && b >= 1) {
                    st = link_dec_down(a, b, c);
                } else if (b == 0 && c > 0) {
                    st = xswap_step(cur);
                } else {
                    st = link_dec(a, b, c);
                }
                break;
            }
            case Family::Umemura: {
                const long k = umemura_k(cur);
                if (cur.b >= 2) {
                    st = link_ume_down(cur.a, cur.b, cur.c);
                } else if (k == 1) {
                    st = link_ume_to_dec(cur.a);
                } else {
                    st = link_u1_to_v(cur.b);
                }
                break;
            }
            case Family::HatSchwarz:
                st = hat_to_schwarz(cur.b);
                break;
            default:
                throw Error("maximal_model: non-maximal terminal family (bug)");
        }
        res.chain.push_back(st);
        cur = st.target;
    }
    res.target = cur;
    return res;
}

namespace {

// Forward-equivariant steps out of a node, with targets normalized to the
// sign convention so graph nodes are honest class representatives.
std::vector<LinkStep> forward_steps(const BundleDesc& d) {
    std::vector<LinkStep> out;
    auto add = [&out](LinkStep st) {
        if (!st.fwd_equivariant) return;
        if (st.target.family == Family::DecFa &&
            (st.target.b < 0 || (st.target.b == 0 && st.target.c > 0))) {
            st.target = make_dec_fa(st.target.a, -st.target.b, -st.target.c);
            st.desc += "; stored with x0 and x1 exchanged";
        }
        out.push_back(std::move(st));
    };

    switch (d.family) {
        case Family::DecFa:
            add(link_dec(d.a, d.b, d.c));
            if (d.b >= 1) add(link_dec_down(d.a, d.b, d.c));
            if (d.a == 1) add(link_f1_to_p2(d.b, d.c));
            break;
        case Family::Umemura: {
            add(link_ume(d.a, d.b, d.c));
            if (d.b >= 2 && d.c > 2) add(link_ume_down(d.a, d.b, d.c));
            if (d.b == 1 && d.c == d.a + 2) add(link_ume_to_dec(d.a));
            if (d.a == 1 && d.c == 2) add(link_u1_to_v(d.b));
            break;
        }
        case Family::Schwarz:
            if (d.b >= 2) add(schwarz_involution(d.b));
            break;
        case Family::HatSchwarz:
            add(hat_to_schwarz(d.b));
            break;
        case Family::V1:
            add(link_v1_to_u1(d.b));
            break;
        case Family::DecP2:
            break;
        case Family::Raw:
            throw InvalidDescriptor("link_graph: raw datum not recognized");
    }
    return out;
}

} // namespace

LinkGraph link_graph(const BundleDesc& desc, long radius) {
    if (radius < 0) throw RangeViolation("link_graph: radius >= 0 required");

    BundleDesc start = desc;
    if (start.family == Family::Raw) {
        auto rec = recognize(*start.raw);
        if (!rec)
            throw InvalidDescriptor("link_graph: raw datum not recognized");
        start = *rec;
    }

    std::map<BundleDesc, long> depth;
    depth[start] = 0;
    std::vector<BundleDesc> frontier{start};
    for (long r = 1; r <= radius && !frontier.empty(); ++r) {
        std::vector<BundleDesc> next;
        for (const auto& n : frontier) {
            for (const auto& st : forward_steps(n)) {
                if (depth.count(st.target)) continue;
                depth[st.target] = r;
                next.push_back(st.target);
            }
        }
        frontier = std::move(next);
    }

    LinkGraph g;
    for (const auto& [d, r] : depth) {
        (void)r;
        g.nodes.push_back({d, verdict(d)});
    }

    std::set<std::tuple<std::string, std::string, int>> seen;
    for (const auto& node : g.nodes) {
        for (const auto& st : forward_steps(node.desc)) {
            if (!depth.count(st.target)) continue;
            auto key = std::make_tuple(st.source.str(), st.target.str(),
                                       static_cast<int>(st.kind));
            if (!seen.insert(key).second) continue;
            g.edges.push_back(st);
        }
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const LinkStep& x, const LinkStep& y) {
                  if (x.source != y.source) return x.source < y.source;
                  if (x.target != y.target) return x.target < y.target;
                  return static_cast<int>(x.kind) < static_cast<int>(y.kind);
              });
    return g;
}

std::string LinkGraph::to_dot() const {
    std::map<std::string, size_t> index;
    std::string s = "digraph links {\n  rankdir=LR;\n";
    for (size_t i = 0; i < nodes.size(); ++i) {
        index[nodes[i].desc.str()] = i;
        s += "  n" + std::to_string(i) + " [label=\"" + nodes[i].desc.str() +
             nodes[i].verdict.glyphs() + "\"];\n";
    }
    for (const auto& e : edges) {
        s += "  n" + std::to_string(index.at(e.source.str())) + " -> n" +
             std::to_string(index.at(e.target.str())) + " [label=\"" +
             link_kind_name(e.kind) + "\"];\n";
    }
    return s + "}\n";
}

std::vector<std::pair<BundleDesc, Verdict>> enumerate_bundles(long a_max, long b_max,
                                                              long c_abs_max) {
    if (a_max < 0 || b_max < 0 || c_abs_max < 0)
        throw RangeViolation("enumerate_bundles: bounds must be >= 0");

    std::vector<BundleDesc> all;
    for (long a = 0; a <= a_max; ++a)
        for (long b = 0; b <= b_max; ++b)
            for (long c = -c_abs_max; c <= c_abs_max; ++c) {
                if (b == 0 && c > 0) continue;
                all.push_back(make_dec_fa(a, b, c));
            }
    for (long b = 0; b <= b_max; ++b) all.push_back(make_dec_p2(b));
    for (long a = 1; a <= a_max; ++a)
        for (long b = 1; b <= b_max; ++b)
            for (long k = 0; k <= b; ++k) {
                long c = a * k + 2;
                if (c > c_abs_max) break;
                all.push_back(make_umemura(a, b, c));
            }
    for (long b = 1; b <= b_max; ++b) all.push_back(make_schwarz(b));
    for (long b = 2; b <= b_max; ++b) all.push_back(make_v1(b));

    std::sort(all.begin(), all.end());
    std::vector<std::pair<BundleDesc, Verdict>> out;
    out.reserve(all.size());
    for (const auto& d : all) out.emplace_back(d, verdict(d));
    return out;
}

} // namespace p1b
