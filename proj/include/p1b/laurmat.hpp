#pragma once

#include <map>
#include <string>
#include <utility>

#include "p1b/errors.hpp"
#include "p1b/rational.hpp"
#include "p1b/xpoly.hpp"

namespace p1b {

inline bool field_is_zero(const Rat& v) { return v == 0; }
inline bool field_is_zero(const RatFunc& v) { return v.is_zero(); }
inline Rat field_inverse(const Rat& v) { return Rat(1) / v; }
inline RatFunc field_inverse(const RatFunc& v) { return v.inverse(); }
inline std::string field_str(const Rat& v) { return rat_str(v); }
inline std::string field_str(const RatFunc& v) { return v.str(); }

// Laurent polynomial in the fibre variable y over a coefficient field K
// (K = Q for specialized matrices, K = Q(x) for parametrized families).
template <class K>
class LPoly {
public:
    LPoly() = default;

    static LPoly term(long exp, const K& c) {
        LPoly f;
        if (!field_is_zero(c)) f.t_[exp] = c;
        return f;
    }
    static LPoly constant(const K& c) { return term(0, c); }
    static LPoly one() { return constant(K(Rat(1))); }

    bool is_zero() const { return t_.empty(); }

    K coeff(long exp) const {
        auto it = t_.find(exp);
        return it == t_.end() ? K() : it->second;
    }

    void set_coeff(long exp, const K& c) {
        if (field_is_zero(c))
            t_.erase(exp);
        else
            t_[exp] = c;
    }

    long min_exp() const {
        if (is_zero()) throw Error("LPoly::min_exp of zero");
        return t_.begin()->first;
    }
    long max_exp() const {
        if (is_zero()) throw Error("LPoly::max_exp of zero");
        return t_.rbegin()->first;
    }

    bool is_monomial() const { return t_.size() == 1; }

    const std::map<long, K>& terms() const { return t_; }

    LPoly operator+(const LPoly& o) const {
        LPoly r = *this;
        for (const auto& [e, c] : o.t_) r.set_coeff(e, r.coeff(e) + c);
        return r;
    }
    LPoly operator-() const {
        LPoly r;
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }
    LPoly operator-(const LPoly& o) const { return *this + (-o); }
    LPoly operator*(const LPoly& o) const {
        LPoly r;
        for (const auto& [e1, c1] : t_)
            for (const auto& [e2, c2] : o.t_)
                r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
        return r;
    }
    LPoly scaled(const K& s) const {
        LPoly r;
        if (field_is_zero(s)) return r;
        for (const auto& [e, c] : t_) r.t_[e] = c * s;
        return r;
    }

    bool operator==(const LPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "y") const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [e, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + field_str(c) + ")";
            if (e != 0) s += "*" + var + "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::map<long, K> t_;
};

template <class K>
struct Mat2 {
    LPoly<K> e[2][2];

    static Mat2 identity() {
        Mat2 m;
        m.e[0][0] = LPoly<K>::one();
        m.e[1][1] = LPoly<K>::one();
        return m;
    }

    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.e[i][j] = e[i][0] * o.e[0][j] + e[i][1] * o.e[1][j];
        return r;
    }

    LPoly<K> det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

    bool operator==(const Mat2& o) const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (e[i][j] != o.e[i][j]) return false;
        return true;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    std::string str(const std::string& var = "y") const {
        return "[[" + e[0][0].str(var) + ", " + e[0][1].str(var) + "], [" +
               e[1][0].str(var) + ", " + e[1][1].str(var) + "]]";
    }
};

// Inverse of a matrix whose determinant is a nonzero constant (y-degree 0);
// this is exactly the shape of the factorization factors B and C.
template <class K>
Mat2<K> mat2_inverse_unit(const Mat2<K>& m) {
    LPoly<K> d = m.det();
    if (d.is_zero()) throw NotInvertible("mat2_inverse_unit: singular matrix");
    if (!d.is_monomial() || d.min_exp() != 0)
        throw NonUnitDeterminant("mat2_inverse_unit: determinant not a constant");
    K inv = field_inverse(d.coeff(0));
    Mat2<K> r;
    r.e[0][0] = m.e[1][1].scaled(inv);
    r.e[0][1] = (-m.e[0][1]).scaled(inv);
    r.e[1][0] = (-m.e[1][0]).scaled(inv);
    r.e[1][1] = m.e[0][0].scaled(inv);
    return r;
}

inline LPoly<RatFunc> lpoly_promote(const LPoly<Rat>& f) {
    LPoly<RatFunc> r;
    for (const auto& [e, c] : f.terms()) r.set_coeff(e, RatFunc(c));
    return r;
}

inline Mat2<RatFunc> mat2_promote(const Mat2<Rat>& m) {
    Mat2<RatFunc> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = lpoly_promote(m.e[i][j]);
    return r;
}

// Specialize the base parameter; Error on a pole of any coefficient.
inline Mat2<Rat> mat2_eval_x(const Mat2<RatFunc>& m, const Rat& x) {
    Mat2<Rat> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const auto& [e, c] : m.e[i][j].terms())
                r.e[i][j].set_coeff(e, c.eval(x));
    return r;
}

// Result of the two-sided Birkhoff-style factorization
// B^{-1} * A * C = diag(y^m, y^n) with m >= n, B over K[1/y], C over K[y].
// a_norm is the input rescaled by diag(mu^{-1}, 1) so det a_norm = y^{m+n};
// the identity B * D = a_norm * C holds exactly.
template <class K>
struct SplitResult {
    Mat2<K> a_norm;
    Mat2<K> b;
    Mat2<K> c;
    long m = 0;
    long n = 0;
};

namespace detail {

template <class K>
struct SplitState {
    Mat2<K> m, b, c;

    // row_j += q * row_i, exponents of q must be <= 0 (left factor stays
    // over K[1/y]).
    void row_op(int j, int i, const LPoly<K>& q) {
        for (int col = 0; col < 2; ++col)
            m.e[j][col] = m.e[j][col] + q * m.e[i][col];
        for (int row = 0; row < 2; ++row)
            b.e[row][i] = b.e[row][i] - q * b.e[row][j];
    }

    // col_j += q * col_k, exponents of q must be >= 0.
    void col_op(int j, int k, const LPoly<K>& q) {
        for (int row = 0; row < 2; ++row) {
            m.e[row][j] = m.e[row][j] + q * m.e[row][k];
            c.e[row][j] = c.e[row][j] + q * c.e[row][k];
        }
    }

    void row_swap() {
        std::swap(m.e[0][0], m.e[1][0]);
        std::swap(m.e[0][1], m.e[1][1]);
        std::swap(b.e[0][0], b.e[0][1]);
        std::swap(b.e[1][0], b.e[1][1]);
    }

    void col_swap() {
        std::swap(m.e[0][0], m.e[0][1]);
        std::swap(m.e[1][0], m.e[1][1]);
        std::swap(c.e[0][0], c.e[0][1]);
        std::swap(c.e[1][0], c.e[1][1]);
    }

    void col_scale(int j, const K& u) {
        for (int row = 0; row < 2; ++row) {
            m.e[row][j] = m.e[row][j].scaled(u);
            c.e[row][j] = c.e[row][j].scaled(u);
        }
    }

    void row_scale(int i, const K& u) {
        for (int col = 0; col < 2; ++col)
            m.e[i][col] = m.e[i][col].scaled(u);
        K inv = field_inverse(u);
        for (int row = 0; row < 2; ++row)
            b.e[row][i] = b.e[row][i].scaled(inv);
    }

    long col_top(int j) const {
        long t = 0;
        bool any = false;
        for (int row = 0; row < 2; ++row)
            if (!m.e[row][j].is_zero()) {
                long v = m.e[row][j].max_exp();
                t = any ? std::max(t, v) : v;
                any = true;
            }
        if (!any) throw NotInvertible("split: zero column");
        return t;
    }

    long row_bottom(int i) const {
        long t = 0;
        bool any = false;
        for (int col = 0; col < 2; ++col)
            if (!m.e[i][col].is_zero()) {
                long v = m.e[i][col].min_exp();
                t = any ? std::min(t, v) : v;
                any = true;
            }
        if (!any) throw NotInvertible("split: zero row");
        return t;
    }
};

} // namespace detail

// Two-sided reduction: column moves over K[y] push the top degrees down,
// row moves over K[1/y] pull the bottom exponents up. Column tops never
// rise under row moves and row bottoms never fall under column moves,
// while each phase strictly moves its own sum towards deg_y(det), so the
// alternation terminates. The reduced matrix is either antidiagonal with
// monomial entries or a constant multiple of y^{d/2}.
template <class K>
SplitResult<K> birkhoff_split_mat(const Mat2<K>& A) {
    LPoly<K> d = A.det();
    if (d.is_zero()) throw NotInvertible("birkhoff_split: determinant is zero");
    if (!d.is_monomial())
        throw NonUnitDeterminant(
            "birkhoff_split: determinant is not a unit times a power of y");
    long degdet = d.min_exp();

    detail::SplitState<K> st;
    st.m = A;
    st.b = Mat2<K>::identity();
    st.c = Mat2<K>::identity();

    // det A = mu * y^degdet; rescale the first row so the unit is 1.
    K mu = d.coeff(degdet);
    if (!(mu == K(Rat(1)))) {
        K inv = field_inverse(mu);
        for (int col = 0; col < 2; ++col)
            st.m.e[0][col] = st.m.e[0][col].scaled(inv);
    }
    Mat2<K> a_norm = st.m;

    auto top_vec = [&](int j, long deg) {
        return std::pair<K, K>(st.m.e[0][j].coeff(deg), st.m.e[1][j].coeff(deg));
    };
    auto bottom_vec = [&](int i, long deg) {
        return std::pair<K, K>(st.m.e[i][0].coeff(deg), st.m.e[i][1].coeff(deg));
    };
    auto cross = [](const std::pair<K, K>& u, const std::pair<K, K>& v) {
        return u.first * v.second - u.second * v.first;
    };

    const int kGuard = 20000;
    int steps = 0;
    bool changed = true;
    while (changed) {
        if (++steps > kGuard) throw Error("birkhoff_split: no convergence (bug)");
        changed = false;

        // (a) columns, top direction
        while (true) {
            long d1 = st.col_top(0), d2 = st.col_top(1);
            auto v1 = top_vec(0, d1), v2 = top_vec(1, d2);
            if (!field_is_zero(cross(v1, v2))) break;
            if (d1 >= d2) {
                K kappa = field_is_zero(v2.first)
                              ? v1.second * field_inverse(v2.second)
                              : v1.first * field_inverse(v2.first);
                st.col_op(0, 1, LPoly<K>::term(d1 - d2, -kappa));
            } else {
                K kappa = field_is_zero(v1.first)
                              ? v2.second * field_inverse(v1.second)
                              : v2.first * field_inverse(v1.first);
                st.col_op(1, 0, LPoly<K>::term(d2 - d1, -kappa));
            }
            changed = true;
            if (++steps > kGuard) throw Error("birkhoff_split: no convergence (bug)");
        }

        // (b) rows, bottom direction
        while (true) {
            long f1 = st.row_bottom(0), f2 = st.row_bottom(1);
            auto w1 = bottom_vec(0, f1), w2 = bottom_vec(1, f2);
            if (!field_is_zero(cross(w1, w2))) break;
            if (f1 <= f2) {
                K kappa = field_is_zero(w2.first)
                              ? w1.second * field_inverse(w2.second)
                              : w1.first * field_inverse(w2.first);
                st.row_op(0, 1, LPoly<K>::term(f1 - f2, -kappa));
            } else {
                K kappa = field_is_zero(w1.first)
                              ? w2.second * field_inverse(w1.second)
                              : w2.first * field_inverse(w1.first);
                st.row_op(1, 0, LPoly<K>::term(f2 - f1, -kappa));
            }
            changed = true;
            if (++steps > kGuard) throw Error("birkhoff_split: no convergence (bug)");
        }
    }

    // Sort: top degrees descending across columns, bottoms ascending down
    // the rows.
    if (st.col_top(0) < st.col_top(1)) st.col_swap();
    if (st.row_bottom(0) > st.row_bottom(1)) st.row_swap();

    long d2 = st.col_top(1), f2 = st.row_bottom(1);
    if (f2 > d2) {
        // Entry (2,2) has an empty exponent window, so the matrix is
        // antidiagonal with monomial entries (the determinant is a single
        // monomial). Entry (1,1) is cleared two-sidedly: exponents >= e12
        // by a column move, the rest by a row move (legal since e21 > e12).
        if (!st.m.e[1][1].is_zero())
            throw Error("birkhoff_split: expected zero corner (bug)");
        const LPoly<K>& a12 = st.m.e[0][1];
        const LPoly<K>& a21 = st.m.e[1][0];
        if (!a12.is_monomial() || !a21.is_monomial())
            throw Error("birkhoff_split: expected monomial antidiagonal (bug)");
        long e12 = a12.min_exp(), e21 = a21.min_exp();
        K beta = a12.coeff(e12), gamma = a21.coeff(e21);
        if (!st.m.e[0][0].is_zero()) {
            LPoly<K> hi, lo;
            K binv = field_inverse(beta), ginv = field_inverse(gamma);
            for (const auto& [exp, coef] : st.m.e[0][0].terms()) {
                if (exp >= e12)
                    hi.set_coeff(exp - e12, -(coef * binv));
                else
                    lo.set_coeff(exp - e21, -(coef * ginv));
            }
            if (!hi.is_zero()) st.col_op(0, 1, hi);
            if (!lo.is_zero()) st.row_op(0, 1, lo);
            if (!st.m.e[0][0].is_zero())
                throw Error("birkhoff_split: corner clearing failed (bug)");
        }
        st.col_swap();
        st.col_scale(0, field_inverse(st.m.e[0][0].coeff(e12)));
        st.col_scale(1, field_inverse(st.m.e[1][1].coeff(e21)));
    } else {
        // All four window bounds coincide at degdet/2: the matrix is a
        // constant invertible M0 times y^{degdet/2}.
        if (degdet % 2 != 0)
            throw Error("birkhoff_split: odd degree in constant case (bug)");
        long h = degdet / 2;
        Mat2<K> m0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const LPoly<K>& entry = st.m.e[i][j];
                if (entry.is_zero()) continue;
                if (!entry.is_monomial() || entry.min_exp() != h)
                    throw Error("birkhoff_split: expected y^h * const (bug)");
                m0.e[i][j] = LPoly<K>::constant(entry.coeff(h));
            }
        K det0 = (m0.e[0][0] * m0.e[1][1] - m0.e[0][1] * m0.e[1][0]).coeff(0);
        Mat2<K> g;
        K dinv = field_inverse(det0);
        g.e[0][0] = LPoly<K>::constant(m0.e[1][1].coeff(0) * dinv);
        g.e[0][1] = LPoly<K>::constant(-(m0.e[0][1].coeff(0) * dinv));
        g.e[1][0] = LPoly<K>::constant(-(m0.e[1][0].coeff(0) * dinv));
        g.e[1][1] = LPoly<K>::constant(m0.e[0][0].coeff(0) * dinv);
        st.m = st.m * g;
        st.c = st.c * g;
    }

    // Read off the exponents and enforce m >= n.
    auto diag_exp = [&](int i) {
        const LPoly<K>& entry = st.m.e[i][i];
        if (entry.is_zero() || !entry.is_monomial() || !(entry.coeff(entry.min_exp()) == K(Rat(1))))
            throw Error("birkhoff_split: diagonal not monic monomial (bug)");
        return entry.min_exp();
    };
    long m_exp = diag_exp(0), n_exp = diag_exp(1);
    if (m_exp < n_exp) {
        st.row_swap();
        st.col_swap();
        std::swap(m_exp, n_exp);
    }
    if (!st.m.e[0][1].is_zero() || !st.m.e[1][0].is_zero())
        throw Error("birkhoff_split: not diagonal at the end (bug)");
    if (m_exp + n_exp != degdet)
        throw Error("birkhoff_split: exponent sum mismatch (bug)");

    SplitResult<K> out;
    out.a_norm = a_norm;
    out.b = st.b;
    out.c = st.c;
    out.m = m_exp;
    out.n = n_exp;
    return out;
}

template <class K>
Mat2<K> diag_mat(long m, long n) {
    Mat2<K> d;
    d.e[0][0] = LPoly<K>::term(m, K(Rat(1)));
    d.e[1][1] = LPoly<K>::term(n, K(Rat(1)));
    return d;
}

} // namespace p1b
