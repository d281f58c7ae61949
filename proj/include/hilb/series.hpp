#pragma once

#include <hilb/rational.hpp>
#include <hilb/tpoly.hpp>
#include <hilb/upoly.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hilb::exact {

using QPoly = UPoly<TRat>;       // polynomials in q over Q(t1,t2)
using QRat = RatFunc<TRat>;      // the quantum-parameter function field
using T1Poly = UPoly<Rational>;  // Q[t1]
using T1Rat = RatFunc<Rational>; // Q(t1)

inline QRat qrat_q() { return QRat::x(); }

// (-q)^k as a polynomial in q.
inline QPoly minus_q_pow(int k) {
    return QPoly::monomial(TRat((k % 2 == 0) ? 1 : -1), k);
}

// Truncated Taylor series in q with TRat coefficients, exponents 0..order.
struct QSeries {
    int order = 0;
    std::vector<TRat> c;  // size order+1

    QSeries() : order(0), c(1, TRat(0)) {}
    explicit QSeries(int ord) : order(ord), c(ord + 1, TRat(0)) {}
    QSeries(int ord, std::vector<TRat> cs) : order(ord), c(std::move(cs)) {
        if (static_cast<int>(c.size()) != order + 1)
            throw std::invalid_argument("QSeries: coefficient count mismatch");
    }

    const TRat& coeff(int d) const {
        if (d < 0 || d > order) throw std::out_of_range("QSeries: index");
        return c[d];
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        int ord = std::min(a.order, b.order);
        QSeries r(ord);
        for (int i = 0; i <= ord; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        int ord = std::min(a.order, b.order);
        QSeries r(ord);
        for (int i = 0; i <= ord; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        int ord = std::min(a.order, b.order);
        QSeries r(ord);
        for (int i = 0; i <= ord; ++i)
            for (int j = 0; i + j <= ord && j <= b.order; ++j)
                if (i <= a.order) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        return r;
    }
    friend QSeries operator*(const QSeries& a, const TRat& k) {
        QSeries r = a;
        for (auto& x : r.c) x = x * k;
        return r;
    }
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order == b.order && a.c == b.c;
    }
};

// Taylor expansion of f at q = 0.  Requires den(0) != 0.
inline QSeries series_expand(const QRat& f, int order) {
    TRat d0 = f.den.coeff(0);
    if (d0.is_zero()) throw std::domain_error("series_expand: pole at q = 0");
    QSeries r(order);
    TRat inv = d0.inverse();
    for (int d = 0; d <= order; ++d) {
        TRat acc = f.num.coeff(d);
        for (int j = 1; j <= d; ++j) acc = acc - f.den.coeff(j) * r.c[d - j];
        r.c[d] = acc * inv;
    }
    return r;
}

// Laurent expansion in s = t1 + t2 with Q(t1) coefficients.  Represents
// sum_{j=-laurent_offset}^{order} c[j+laurent_offset] * s^j.
struct SExpansion {
    int order = 0;
    int laurent_offset = 0;
    std::vector<T1Rat> c;

    const T1Rat& coeff(int j) const {
        static const T1Rat zero;
        int idx = j + laurent_offset;
        if (j > order) throw std::out_of_range("SExpansion: index");
        if (idx < 0) return zero;
        return c[idx];
    }
};

namespace detail {

// Substitute t2 = s - t1 and collect as a polynomial in s over Q(t1).
inline UPoly<T1Rat> subst_s(const TPoly& p) {
    UPoly<T1Rat> r;
    for (const auto& [e, coef] : p.terms) {
        // coef * t1^a * (s - t1)^b
        for (int j = 0; j <= e.b; ++j) {
            Rational bin = binomial(e.b, j);
            int pw = e.b - j;
            Rational sign = (pw % 2 == 0) ? Rational(1) : Rational(-1);
            T1Poly mono = T1Poly::monomial(coef * bin * sign, e.a + pw);
            r = r + UPoly<T1Rat>::monomial(T1Rat(mono), j);
        }
    }
    return r;
}

}  // namespace detail

inline SExpansion s_expand(const TRat& f, int order) {
    SExpansion out;
    out.order = order;
    if (f.is_zero()) {
        out.laurent_offset = 0;
        out.c.assign(order + 1, T1Rat());
        return out;
    }
    UPoly<T1Rat> num = detail::subst_s(f.num);
    UPoly<T1Rat> den = detail::subst_s(f.den);
    int vn = 0, vd = 0;
    while (num.coeff(vn).is_zero()) ++vn;
    while (den.coeff(vd).is_zero()) ++vd;
    int w = vn - vd;  // valuation of f at s = 0
    out.laurent_offset = std::max(0, -w);
    int len = order + out.laurent_offset + 1;
    out.c.assign(len, T1Rat());
    int need = order - w;  // top index of the regular part N/D
    if (need < 0) return out;
    // regular division: N has nonzero constant term after shifting
    std::vector<T1Rat> reg(need + 1, T1Rat());
    T1Rat inv = T1Rat(1) / den.coeff(vd);
    for (int d = 0; d <= need; ++d) {
        T1Rat acc = num.coeff(vn + d);
        for (int j = 1; j <= d; ++j) acc = acc - den.coeff(vd + j) * reg[d - j];
        reg[d] = acc * inv;
    }
    for (int j = std::max(w, -out.laurent_offset); j <= order; ++j)
        out.c[j + out.laurent_offset] = reg[j - w];
    return out;
}

inline std::vector<SExpansion> s_expand(const QSeries& f, int order) {
    std::vector<SExpansion> out;
    out.reserve(f.order + 1);
    for (const auto& coef : f.c) out.push_back(s_expand(coef, order));
    return out;
}

// For tests: substitute s = t1 + t2 back.
inline TRat s_resubstitute(const SExpansion& e) {
    TRat s = TRat::t1() + TRat::t2();
    TRat acc(0);
    for (int idx = 0; idx < static_cast<int>(e.c.size()); ++idx) {
        int j = idx - e.laurent_offset;
        const T1Rat& cf = e.c[idx];
        TPoly num, den;
        for (int i = 0; i <= cf.num.deg(); ++i)
            num = num + TPoly::monomial(cf.num.coeff(i), i, 0);
        for (int i = 0; i <= cf.den.deg(); ++i)
            den = den + TPoly::monomial(cf.den.coeff(i), i, 0);
        if (num.is_zero()) continue;
        acc = acc + TRat(num, den) * s.pow(j);
    }
    return acc;
}

// Truncated Laurent series in v = iu with TRat coefficients;
// sum_{j=min_exp}^{order} c[j-min_exp] * v^j.
struct LaurentU {
    int min_exp = 0;
    int order = -1;
    std::vector<TRat> c;

    static LaurentU zero(int ord) {
        LaurentU r;
        r.min_exp = 0;
        r.order = ord;
        r.c.assign(ord + 1, TRat(0));
        return r;
    }

    TRat coeff(int j) const {
        if (j < min_exp || j > order) return TRat(0);
        return c[j - min_exp];
    }

    friend LaurentU operator*(const LaurentU& a, const LaurentU& b) {
        LaurentU r;
        r.min_exp = a.min_exp + b.min_exp;
        r.order = std::min(a.order + b.min_exp, b.order + a.min_exp);
        r.c.assign(r.order - r.min_exp + 1, TRat(0));
        for (int i = a.min_exp; i <= a.order; ++i)
            for (int j = b.min_exp; j <= b.order && i + j <= r.order; ++j)
                r.c[i + j - r.min_exp] = r.c[i + j - r.min_exp] + a.coeff(i) * b.coeff(j);
        return r;
    }
};

namespace detail {

inline std::vector<TRat> vec_mul(const std::vector<TRat>& a, const std::vector<TRat>& b,
                                 int len) {
    std::vector<TRat> r(len, TRat(0));
    for (int i = 0; i < static_cast<int>(a.size()) && i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(b.size()) && i + j < len; ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

inline std::vector<TRat> vec_inv(const std::vector<TRat>& a, int len) {
    if (a.empty() || a[0].is_zero())
        throw std::domain_error("series inverse: zero constant term");
    std::vector<TRat> r(len, TRat(0));
    TRat inv = a[0].inverse();
    r[0] = inv;
    for (int d = 1; d < len; ++d) {
        TRat acc(0);
        for (int j = 1; j <= d && j < static_cast<int>(a.size()); ++j)
            acc = acc + a[j] * r[d - j];
        r[d] = -(acc * inv);
    }
    return r;
}

inline std::vector<TRat> vec_pow(std::vector<TRat> base, int e, int len) {
    if (e < 0) return vec_pow(vec_inv(base, len), -e, len);
    std::vector<TRat> acc(len, TRat(0));
    acc[0] = TRat(1);
    while (e > 0) {
        if (e & 1) acc = vec_mul(acc, base, len);
        base = vec_mul(base, base, len);
        e >>= 1;
    }
    return acc;
}

// P(-e^w) as a power series in w.
inline std::vector<TRat> subst_minus_exp(const QPoly& p, int len) {
    std::vector<TRat> r(len, TRat(0));
    for (int j = 0; j <= p.deg(); ++j) {
        TRat a = p.coeff(j);
        if (a.is_zero()) continue;
        if (j % 2 == 1) a = -a;
        Rational jp(1), fact(1);
        for (int k = 0; k < len; ++k) {
            if (k > 0) {
                jp *= j;
                fact *= k;
            }
            r[k] = r[k] + a * TRat(jp / fact);
        }
    }
    return r;
}

}  // namespace detail

// Substitute q = -e^v and expand as a Laurent series in v around v = 0,
// keeping exponents up to `order`.
inline LaurentU laurent_u_substitute(const QRat& f, int order) {
    if (f.is_zero()) return LaurentU::zero(order);
    // multiplicity of the root q = -1; the fraction is reduced, so at most
    // one of num, den is divisible by (q+1)
    QPoly qp1;
    qp1.c = {TRat(1), TRat(1)};
    auto strip = [&](QPoly p, int& mult) {
        while (!p.is_zero()) {
            auto [quo, rem] = divmod(p, qp1);
            if (!rem.is_zero()) break;
            p = quo;
            ++mult;
        }
        return p;
    };
    int mn = 0, md = 0;
    QPoly n1 = strip(f.num, mn);
    QPoly d1 = strip(f.den, md);
    int m = mn - md;  // valuation of f at q = -1
    LaurentU out;
    out.min_exp = m;
    out.order = order;
    if (m > order) {
        out.min_exp = 0;
        out.c.assign(order + 1, TRat(0));
        return out;
    }
    int len = order - m + 1;
    // q + 1 = 1 - e^w = -w * E(w),  E(w) = (e^w - 1)/w
    std::vector<TRat> E(len, TRat(0));
    {
        Rational fact(1);
        for (int k = 0; k < len; ++k) {
            fact *= (k + 1);
            E[k] = TRat(Rational(1) / fact);
        }
    }
    std::vector<TRat> Em = detail::vec_pow(E, m, len);
    std::vector<TRat> Nh = detail::subst_minus_exp(n1, len);
    std::vector<TRat> Dh = detail::subst_minus_exp(d1, len);
    std::vector<TRat> reg = detail::vec_mul(detail::vec_mul(Nh, detail::vec_inv(Dh, len), len), Em, len);
    out.c.assign(len, TRat(0));
    for (int k = 0; k < len; ++k) {
        TRat v = reg[k];
        if (m % 2 != 0) v = -v;  // (q+1)^m contributes (-1)^m w^m E^m
        out.c[k] = v;
    }
    return out;
}

}  // namespace hilb::exact
