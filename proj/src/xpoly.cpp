#include "p1b/xpoly.hpp"

#include <algorithm>

namespace p1b {

XPoly XPoly::operator+(const XPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return XPoly(std::move(r));
}

XPoly XPoly::operator-() const {
    std::vector<Rat> r = c_;
    for (auto& v : r) v = -v;
    return XPoly(std::move(r));
}

XPoly XPoly::operator*(const XPoly& o) const {
    if (is_zero() || o.is_zero()) return XPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return XPoly(std::move(r));
}

XPoly XPoly::operator*(const Rat& s) const {
    if (s == 0) return XPoly();
    std::vector<Rat> r = c_;
    for (auto& v : r) v *= s;
    return XPoly(std::move(r));
}

std::pair<XPoly, XPoly> XPoly::divmod(const XPoly& d) const {
    if (d.is_zero()) throw Error("XPoly::divmod: division by zero");
    XPoly rem = *this;
    std::vector<Rat> q;
    long dd = d.degree();
    if (rem.degree() >= dd)
        q.assign(static_cast<size_t>(rem.degree() - dd + 1), Rat(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        long k = rem.degree() - dd;
        Rat f = rem.lead() / d.lead();
        q[static_cast<size_t>(k)] = f;
        // rem -= f * x^k * d
        std::vector<Rat> sub(static_cast<size_t>(k), Rat(0));
        for (const auto& dc : d.coeffs()) sub.push_back(dc * f);
        rem = rem - XPoly(std::move(sub));
    }
    return {XPoly(std::move(q)), rem};
}

XPoly XPoly::derivative() const {
    if (degree() < 1) return XPoly();
    std::vector<Rat> r(static_cast<size_t>(degree()), Rat(0));
    for (long i = 1; i <= degree(); ++i)
        r[static_cast<size_t>(i - 1)] = coeff(i) * Rat(i);
    return XPoly(std::move(r));
}

Rat XPoly::eval(const Rat& v) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
    return r;
}

std::string XPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Rat a = c > 0 ? c : Rat(-c);
        bool unit = (a == 1) && i != 0;
        if (!unit) s += rat_str(a);
        if (i != 0) {
            if (!unit) s += "*";
            s += var;
            if (i != 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

XPoly xpoly_gcd(XPoly f, XPoly g) {
    while (!g.is_zero()) {
        XPoly r = f.divmod(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    return f * (Rat(1) / f.lead()); // monic
}

namespace {

// Positive divisors of |n| by trial division; gives up past the cap and
// returns what it found (callers treat missing candidates as unresolved).
std::vector<Int> divisors_capped(Int n, long cap) {
    if (n < 0) n = -n;
    std::vector<Int> divs;
    if (n == 0) return divs;
    long steps = 0;
    for (Int d = 1; d * d <= n; ++d) {
        if (++steps > cap) break;
        if (n % d == 0) {
            divs.push_back(d);
            Int q = n / d;
            if (q != d) divs.push_back(q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

RationalRoots rational_roots(const XPoly& f) {
    RationalRoots out;
    out.cofactor = f;
    if (f.is_zero() || f.degree() == 0) return out;

    XPoly g = f;
    // Strip roots at 0 first.
    long mult0 = 0;
    while (!g.is_zero() && g.coeff(0) == 0) {
        g = g.divmod(XPoly::x()).first;
        ++mult0;
    }
    if (mult0 > 0) out.roots.push_back({Rat(0), mult0});

    // Primitive integer form of g for the candidate list.
    Int den_lcm(1), num_gcd(0);
    for (const auto& c : g.coeffs()) {
        if (c == 0) continue;
        den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
    }
    std::vector<Int> ic;
    for (const auto& c : g.coeffs()) {
        Rat v = c * Rat(den_lcm);
        ic.push_back(rat_num(v));
        num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(v) < 0 ? Int(-rat_num(v)) : rat_num(v));
    }
    if (num_gcd > 1)
        for (auto& v : ic) v /= num_gcd;

    constexpr long kTrialCap = 200000;
    while (g.degree() >= 1) {
        if (ic.front() == 0) { // can't happen after stripping, defensive
            break;
        }
        std::vector<Int> ps = divisors_capped(ic.front(), kTrialCap);
        std::vector<Int> qs = divisors_capped(ic.back(), kTrialCap);
        bool found = false;
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (int sign : {1, -1}) {
                    Rat cand = Rat(sign * p, q);
                    if (g.eval(cand) != 0) continue;
                    long mult = 0;
                    XPoly lin = XPoly::linear_root(cand);
                    while (true) {
                        auto [quot, rem] = g.divmod(lin);
                        if (!rem.is_zero()) break;
                        g = quot;
                        ++mult;
                    }
                    out.roots.push_back({cand, mult});
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        // refresh integer form for the deflated polynomial
        ic.clear();
        Int dl(1);
        for (const auto& c : g.coeffs())
            if (c != 0) dl = boost::multiprecision::lcm(dl, rat_den(c));
        for (const auto& c : g.coeffs()) ic.push_back(rat_num(c * Rat(dl)));
    }

    out.cofactor = g.is_zero() ? g : g * (Rat(1) / g.lead());
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& l, const auto& r) {
                  if (rat_num(l.first) != rat_num(r.first))
                      return rat_num(l.first) < rat_num(r.first);
                  return rat_den(l.first) < rat_den(r.first);
              });
    return out;
}

std::vector<std::pair<XPoly, long>> squarefree_factors(const XPoly& f) {
    std::vector<std::pair<XPoly, long>> out;
    if (f.is_zero() || f.degree() < 1) return out;
    XPoly g = f * (Rat(1) / f.lead());
    // Yun's algorithm over Q.
    XPoly d = g.derivative();
    XPoly a = xpoly_gcd(g, d);
    XPoly b = g.divmod(a).first;
    XPoly c = d.divmod(a).first;
    long i = 1;
    while (b.degree() >= 1) {
        XPoly e = c - b.derivative();
        XPoly p = xpoly_gcd(b, e);
        if (p.degree() >= 1) out.push_back({p, i});
        b = b.divmod(p).first;
        c = e.divmod(p).first;
        ++i;
    }
    return out;
}

RatFunc::RatFunc(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = XPoly::constant(Rat(1));
        return;
    }
    XPoly g = xpoly_gcd(num_, den_);
    if (g.degree() >= 1) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rat l = den_.lead();
    if (l != 1) {
        num_ = num_ * (Rat(1) / l);
        den_ = den_ * (Rat(1) / l);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

Rat RatFunc::eval(const Rat& v) const {
    Rat d = den_.eval(v);
    if (d == 0) throw Error("RatFunc::eval: pole at x = " + rat_str(v));
    return num_.eval(v) / d;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace p1b
