#include "p1b/links.hpp"

#include "p1b/errors.hpp"

namespace p1b {

std::string curve_name(Curve c) {
    switch (c) {
        case Curve::L00: return "l00";
        case Curve::L10: return "l10";
        case Curve::CSchwarz: return "C";
        case Curve::FiberOverMarkedPoint: return "fibre over the marked point";
    }
    return "?";
}

std::set<Curve> invariant_curves(const BundleDesc& desc) {
    switch (desc.family) {
        case Family::DecFa: {
            std::set<Curve> s;
            const long a = desc.a, b = desc.b, c = desc.c;
            if (a * b > 0 || a * c < 0) s.insert(Curve::L00);
            if (a * c > 0) s.insert(Curve::L10);
            return s;
        }
        case Family::DecP2:
            return {};
        case Family::Umemura: {
            std::set<Curve> s{Curve::L00};
            if (desc.c > 2) s.insert(Curve::L10);
            return s;
        }
        case Family::Schwarz:
            return desc.b == 1 ? std::set<Curve>{} : std::set<Curve>{Curve::CSchwarz};
        case Family::HatSchwarz:
            return {Curve::CSchwarz};
        case Family::V1:
            return {Curve::FiberOverMarkedPoint};
        case Family::Raw:
            throw UnsupportedFamily("invariant_curves: raw data carries no curve table");
    }
    throw Error("invariant_curves: unreachable family");
}

std::string link_kind_name(LinkKind k) {
    switch (k) {
        case LinkKind::DecShift: return "DecShift";
        case LinkKind::UmeShift: return "UmeShift";
        case LinkKind::UmeToDec: return "UmeToDec";
        case LinkKind::F1ToP2: return "F1ToP2";
        case LinkKind::U1ToV: return "U1ToV";
        case LinkKind::SchwarzInvolution: return "SchwarzInvolution";
        case LinkKind::XSwap: return "XSwap";
        case LinkKind::SquareIso: return "SquareIso";
    }
    return "?";
}

std::string LinkStep::str() const {
    std::string s = source.str() + " -> " + target.str() + " [" +
                    link_kind_name(kind);
    if (center) s += ", center " + curve_name(*center);
    s += fwd_equivariant ? ", fwd" : "";
    s += bwd_equivariant ? ", bwd" : "";
    s += strict ? ", strict" : "";
    return s + "]";
}

LinkStep link_dec(long a, long b, long c) {
    if (a < 0 || b < 0) throw RangeViolation("link_dec: a, b >= 0 required");
    LinkStep st;
    st.source = make_dec_fa_unchecked(a, b, c);
    st.target = make_dec_fa_unchecked(a, b + 1, c + a);
    st.center = Curve::L00;
    st.kind = LinkKind::DecShift;
    st.fwd_equivariant = (a * b > 0) || (a * c < 0);
    st.bwd_equivariant = a * (c + a) > 0;
    st.desc = "blow up x0 = y0 = 0, contract the strict transform of y0 = 0";
    return st;
}

LinkStep link_dec_down(long a, long b, long c) {
    if (a < 0 || b < 1) throw RangeViolation("link_dec_down: a >= 0, b >= 1 required");
    LinkStep st;
    st.source = make_dec_fa_unchecked(a, b, c);
    st.target = make_dec_fa_unchecked(a, b - 1, c - a);
    st.center = Curve::L10;
    st.kind = LinkKind::DecShift;
    st.fwd_equivariant = a * c > 0;
    st.bwd_equivariant = (a * (b - 1) > 0) || (a * (c - a) < 0);
    st.desc = "blow up x1 = y0 = 0, contract the strict transform of y0 = 0";
    return st;
}

LinkStep link_ume(long a, long b, long c) {
    LinkStep st;
    st.source = make_umemura(a, b, c);
    st.target = make_umemura(a, b + 1, c + a);
    st.center = Curve::L00;
    st.kind = LinkKind::UmeShift;
    st.fwd_equivariant = true;
    st.bwd_equivariant = true;
    st.desc = "blow up x0 = y0 = 0, contract the strict transform of y0 = 0";
    return st;
}

LinkStep link_ume_down(long a, long b, long c) {
    BundleDesc src = make_umemura(a, b, c);
    if (b < 2 || c <= 2)
        throw InvalidUmemura("link_ume_down: needs b >= 2 and c > 2, got " + src.str());
    LinkStep st;
    st.source = src;
    st.target = make_umemura(a, b - 1, c - a);
    st.center = Curve::L10;
    st.kind = LinkKind::UmeShift;
    st.fwd_equivariant = true;
    st.bwd_equivariant = true;
    st.desc = "blow up x1 = y0 = 0, contract the strict transform of y0 = 0";
    return st;
}

LinkStep link_ume_to_dec(long a) {
    if (a < 1) throw RangeViolation("link_ume_to_dec: a >= 1 required");
    LinkStep st;
    st.source = make_umemura(a, 1, a + 2);
    st.target = make_dec_fa(a, 0, -2);
    st.center = Curve::L00;
    st.kind = LinkKind::UmeToDec;
    st.fwd_equivariant = true;
    st.bwd_equivariant = false;
    st.strict = true;
    st.desc = "blow up x0 = y0 = 0, contract the strict transform of y0 = 0; "
              "the image splits, stored with x0 and x1 exchanged";
    return st;
}

LinkStep link_f1_to_p2(long b, long c) {
    LinkStep st;
    st.source = make_dec_fa(1, b, c);
    st.target = make_dec_p2(b - c >= 0 ? b - c : c - b);
    st.kind = LinkKind::F1ToP2;
    st.fwd_equivariant = true;
    st.bwd_equivariant = false;
    st.strict = true;
    st.desc = "descend along the blow-down F_1 -> P^2 of the point [0:1:0]";
    return st;
}

LinkStep link_u1_to_v(long b) {
    if (b < 1) throw RangeViolation("link_u1_to_v: b >= 1 required");
    LinkStep st;
    st.source = make_umemura(1, b, 2);
    st.center = Curve::L00;
    st.kind = LinkKind::U1ToV;
    st.fwd_equivariant = true;
    st.desc = "contract the fibres over the exceptional curve of F_1 -> P^2";
    if (b == 1) {
        st.target = make_schwarz(1);
        st.bwd_equivariant = false;
        st.strict = true;
    } else {
        st.target = make_v1(b);
        st.bwd_equivariant = true;
    }
    return st;
}

LinkStep link_v1_to_u1(long b) {
    LinkStep st;
    st.source = make_v1(b);
    st.target = make_umemura(1, b, 2);
    st.center = Curve::FiberOverMarkedPoint;
    st.kind = LinkKind::U1ToV;
    st.fwd_equivariant = true;
    st.bwd_equivariant = true;
    st.desc = "blow up the fibre over the marked point, descend to F_1";
    return st;
}

LinkStep schwarz_involution(long b) {
    if (b < 2)
        throw RangeViolation(
            "schwarz_involution: b >= 2 required (no invariant curve for b = 1)");
    LinkStep st;
    st.source = make_schwarz(b);
    st.target = make_schwarz(b);
    st.center = Curve::CSchwarz;
    st.kind = LinkKind::SchwarzInvolution;
    st.fwd_equivariant = true;
    st.bwd_equivariant = true;
    st.desc = "birational involution exchanging the two tangents through each "
              "point off the marked conic";
    return st;
}

LinkStep xswap_step(const BundleDesc& d) {
    if (d.family != Family::DecFa)
        throw UnsupportedFamily("xswap_step: only decomposable bundles over F_a");
    LinkStep st;
    st.source = d;
    st.target = make_dec_fa_unchecked(d.a, -d.b, -d.c);
    st.kind = LinkKind::XSwap;
    st.fwd_equivariant = true;
    st.bwd_equivariant = true;
    st.desc = "exchange x0 and x1";
    return st;
}

LinkStep hat_to_schwarz(long b) {
    LinkStep st;
    st.source = make_hat_schwarz(b);
    st.target = make_schwarz(b);
    st.kind = LinkKind::SquareIso;
    st.fwd_equivariant = true;
    st.bwd_equivariant = false;
    st.strict = true;
    st.desc = "descend through the double cover P^1 x P^1 -> P^2";
    return st;
}

long v1_restrict_line(long b, bool through_marked) {
    if (b < 2) throw RangeViolation("v1_restrict_line: b >= 2 required");
    if (through_marked) return b;
    return b - 2 >= 0 ? b - 2 : 2 - b;
}

} // namespace p1b
