#pragma once

#include <hilb/rational.hpp>
#include <hilb/upoly.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilb::exact {

// Exponent pair for t1^a t2^b, ordered by total degree then lex.
struct Exp2 {
    int a = 0, b = 0;
    friend bool operator==(const Exp2& x, const Exp2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const Exp2& x, const Exp2& y) {
        int dx = x.a + x.b, dy = y.a + y.b;
        if (dx != dy) return dx < dy;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

// Sparse polynomial in t1, t2 over Q.  No zero coefficients are stored;
// map order is the canonical term order (total degree, then lex).
class TPoly {
public:
    std::map<Exp2, Rational> terms;

    TPoly() = default;
    explicit TPoly(Rational r) {
        if (!exact::is_zero(r)) terms[{0, 0}] = std::move(r);
    }
    TPoly(int v) : TPoly(Rational(v)) {}  // NOLINT: implicit by design

    static TPoly t1() { return monomial(Rational(1), 1, 0); }
    static TPoly t2() { return monomial(Rational(1), 0, 1); }
    static TPoly monomial(Rational c, int a, int b) {
        TPoly p;
        if (!exact::is_zero(c)) p.terms[{a, b}] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == Exp2{0, 0});
    }
    Rational constant_value() const {
        if (terms.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("TPoly: not a constant");
        return terms.begin()->second;
    }
    int total_degree() const {
        if (terms.empty()) return -1;
        auto it = std::prev(terms.end());
        return it->first.a + it->first.b;
    }
    // Leading term in the canonical order.
    std::pair<Exp2, Rational> lt() const {
        if (terms.empty()) throw std::domain_error("TPoly: lt of zero");
        auto it = std::prev(terms.end());
        return {it->first, it->second};
    }

    void add_term(const Exp2& e, const Rational& c) {
        if (exact::is_zero(c)) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (exact::is_zero(it->second)) terms.erase(it);
        }
    }

    friend TPoly operator+(const TPoly& x, const TPoly& y) {
        TPoly r = x;
        for (const auto& [e, c] : y.terms) r.add_term(e, c);
        return r;
    }
    friend TPoly operator-(const TPoly& x, const TPoly& y) {
        TPoly r = x;
        for (const auto& [e, c] : y.terms) r.add_term(e, -c);
        return r;
    }
    TPoly operator-() const {
        TPoly r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    friend TPoly operator*(const TPoly& x, const TPoly& y) {
        TPoly r;
        for (const auto& [ex, cx] : x.terms)
            for (const auto& [ey, cy] : y.terms)
                r.add_term({ex.a + ey.a, ex.b + ey.b}, cx * cy);
        return r;
    }
    friend TPoly operator*(const TPoly& x, const Rational& k) {
        TPoly r;
        if (exact::is_zero(k)) return r;
        for (const auto& [e, c] : x.terms) r.terms[e] = c * k;
        return r;
    }
    friend bool operator==(const TPoly& x, const TPoly& y) { return x.terms == y.terms; }
    friend bool operator!=(const TPoly& x, const TPoly& y) { return !(x == y); }

    TPoly pow(int e) const {
        if (e < 0) throw std::domain_error("TPoly: negative power");
        TPoly acc(1), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    TPoly swap_t() const {
        TPoly r;
        for (const auto& [e, c] : terms) r.terms[{e.b, e.a}] = c;
        return r;
    }

    Rational eval(const Rational& v1, const Rational& v2) const {
        Rational acc(0);
        for (const auto& [e, c] : terms) acc += c * rat_pow(v1, e.a) * rat_pow(v2, e.b);
        return acc;
    }

    template <class V>
    V eval_generic(const V& v1, const V& v2) const {
        V acc(0);
        for (const auto& [e, c] : terms) {
            V m(c);
            for (int i = 0; i < e.a; ++i) m = m * v1;
            for (int i = 0; i < e.b; ++i) m = m * v2;
            acc = acc + m;
        }
        return acc;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            Rational c = it->second;
            bool neg = c < 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            Rational mag = neg ? Rational(-c) : c;
            const Exp2& e = it->first;
            bool has_var = e.a > 0 || e.b > 0;
            if (!has_var || mag != 1) {
                os << to_string(mag);
                if (has_var) os << "*";
            }
            if (e.a > 0) {
                os << "t1";
                if (e.a > 1) os << "^" << e.a;
                if (e.b > 0) os << "*";
            }
            if (e.b > 0) {
                os << "t2";
                if (e.b > 1) os << "^" << e.b;
            }
            first = false;
        }
        return os.str();
    }
};

// Exact division; nullopt when b does not divide a.
inline std::optional<TPoly> tpoly_divide_exact(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::domain_error("TPoly: division by zero");
    TPoly r = a, q;
    auto [eb, cb] = b.lt();
    while (!r.is_zero()) {
        auto [er, cr] = r.lt();
        if (er.a < eb.a || er.b < eb.b) return std::nullopt;
        Exp2 e{er.a - eb.a, er.b - eb.b};
        Rational c = cr / cb;
        TPoly t = TPoly::monomial(c, e.a, e.b);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

inline TPoly operator/(const TPoly& a, const TPoly& b) {
    auto q = tpoly_divide_exact(a, b);
    if (!q) throw std::domain_error("TPoly: inexact division");
    return *q;
}

namespace detail {

using UQ = UPoly<Rational>;   // Q[t1]
using RPoly = UPoly<UQ>;      // Q[t1][t2]

inline RPoly to_recursive(const TPoly& p) {
    int dt2 = 0;
    for (const auto& [e, c] : p.terms) dt2 = std::max(dt2, e.b);
    std::vector<UQ> cs(p.is_zero() ? 0 : dt2 + 1, UQ());
    for (const auto& [e, c] : p.terms) cs[e.b] = cs[e.b] + UQ::monomial(c, e.a);
    RPoly r;
    r.c = std::move(cs);
    r.trim();
    return r;
}

inline TPoly from_recursive(const RPoly& r) {
    TPoly p;
    for (int j = 0; j <= r.deg(); ++j)
        for (int i = 0; i <= r.c[j].deg(); ++i)
            p.add_term({i, j}, r.c[j].coeff(i));
    return p;
}

inline UQ content_t1(const RPoly& r) {
    UQ g;
    for (const auto& c : r.c) g = gcd_monic(g, c);
    return g;
}

inline RPoly divide_coeffs(const RPoly& r, const UQ& d) {
    RPoly out;
    out.c.reserve(r.c.size());
    for (const auto& c : r.c) out.c.push_back(c / d);
    out.trim();
    return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
inline RPoly prem(const RPoly& a, const RPoly& b) {
    RPoly r = a;
    const UQ& d = b.lc();
    int e = r.deg() - b.deg() + 1;
    while (!r.is_zero() && r.deg() >= b.deg()) {
        UQ s = r.lc();
        RPoly sb = (b * s).shifted(r.deg() - b.deg());
        r = r * d - sb;
        --e;
    }
    for (; e > 0; --e) r = r * d;
    return r;
}

// Subresultant polynomial remainder sequence for primitive inputs.
inline RPoly subresultant_prs(RPoly a, RPoly b) {
    if (a.deg() < b.deg()) std::swap(a, b);
    UQ g = UQ::one(), h = UQ::one();
    while (true) {
        int delta = a.deg() - b.deg();
        RPoly r = prem(a, b);
        if (r.is_zero()) return b;
        UQ divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        a = std::move(b);
        b = divide_coeffs(r, divisor);
        g = a.lc();
        if (delta >= 1) {
            UQ num = g;
            for (int i = 1; i < delta; ++i) num = num * g;
            for (int i = 1; i < delta; ++i) num = num / h;
            h = num;
        }
        if (b.deg() == 0) return b;
    }
}

}  // namespace detail

// Positive rational c such that p/c has coprime integer coefficients.
inline Rational tpoly_rational_content(const TPoly& p) {
    if (p.is_zero()) return Rational(1);
    Int gnum(0), lden(1);
    for (const auto& [e, c] : p.terms) {
        Int n = boost::multiprecision::abs(numerator(c));
        Int d = denominator(c);
        gnum = boost::multiprecision::gcd(gnum, n);
        lden = lden / boost::multiprecision::gcd(lden, d) * d;
    }
    return Rational(gnum, lden);
}

// Canonical normalization: integer coprime coefficients, positive leading
// coefficient in the canonical term order.
inline TPoly tpoly_canonical(const TPoly& p) {
    if (p.is_zero()) return p;
    Rational c = tpoly_rational_content(p);
    if (p.lt().second < 0) c = -c;
    return p * (Rational(1) / c);
}

// gcd via subresultant PRS on the recursive univariate representation.
inline TPoly tpoly_gcd(const TPoly& a, const TPoly& b) {
    if (a.is_zero()) return tpoly_canonical(b);
    if (b.is_zero()) return tpoly_canonical(a);

    // Monomial content first: cheap and very common here.
    int ma1 = INT32_MAX, mb1 = INT32_MAX, ma2 = INT32_MAX, mb2 = INT32_MAX;
    for (const auto& [e, c] : a.terms) ma1 = std::min(ma1, e.a), ma2 = std::min(ma2, e.b);
    for (const auto& [e, c] : b.terms) mb1 = std::min(mb1, e.a), mb2 = std::min(mb2, e.b);
    int g1 = std::min(ma1, mb1), g2 = std::min(ma2, mb2);
    TPoly as = a, bs = b;
    auto strip = [](const TPoly& p, int s1, int s2) {
        TPoly r;
        for (const auto& [e, c] : p.terms) r.terms[{e.a - s1, e.b - s2}] = c;
        return r;
    };
    as = strip(a, ma1, ma2);
    bs = strip(b, mb1, mb2);
    TPoly mono = TPoly::monomial(Rational(1), g1, g2);

    if (as.is_constant() || bs.is_constant()) return tpoly_canonical(mono);

    detail::RPoly ra = detail::to_recursive(as), rb = detail::to_recursive(bs);
    TPoly core;
    if (ra.deg() == 0 && rb.deg() == 0) {
        detail::UQ g = gcd_monic(ra.c[0], rb.c[0]);
        detail::RPoly rg;
        rg.c = {g};
        core = detail::from_recursive(rg);
    } else {
        detail::UQ ca = detail::content_t1(ra), cb = detail::content_t1(rb);
        detail::RPoly pa = detail::divide_coeffs(ra, ca), pb = detail::divide_coeffs(rb, cb);
        detail::UQ cg = gcd_monic(ca, cb);
        detail::RPoly pg;
        if (pa.deg() == 0 || pb.deg() == 0) {
            pg = detail::RPoly::one();
        } else {
            detail::RPoly r = detail::subresultant_prs(pa, pb);
            if (r.deg() == 0) {
                pg = detail::RPoly::one();
            } else {
                detail::UQ cr = detail::content_t1(r);
                pg = detail::divide_coeffs(r, cr);
            }
        }
        detail::RPoly cgp;
        cgp.c = {cg};
        core = detail::from_recursive(pg * cgp);
    }
    return tpoly_canonical(core * mono);
}

// Rational function in t1, t2; reduced, denominator canonical (integer
// coprime coefficients, positive leading coefficient).
class TRat {
public:
    TPoly num, den;

    TRat() : num(), den(1) {}
    TRat(int v) : num(v), den(1) {}  // NOLINT: implicit by design
    explicit TRat(Rational r) : num(std::move(r)), den(1) {}
    explicit TRat(TPoly p) : num(std::move(p)), den(1) {}
    TRat(TPoly n, TPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static TRat t1() { return TRat(TPoly::t1()); }
    static TRat t2() { return TRat(TPoly::t2()); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("TRat: zero denominator");
        if (num.is_zero()) {
            den = TPoly(1);
            return;
        }
        if (!den.is_constant()) {
            TPoly g = tpoly_gcd(num, den);
            if (!g.is_constant() || g.lt().second != 1) {
                num = num / g;
                den = den / g;
            }
        }
        Rational c = tpoly_rational_content(den);
        if (den.lt().second < 0) c = -c;
        if (c != 1) {
            Rational inv = Rational(1) / c;
            num = num * inv;
            den = den * inv;
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.is_constant() && den.is_constant(); }
    Rational constant_value() const { return num.constant_value() / den.constant_value(); }
    bool is_polynomial() const { return den.is_constant(); }

    friend TRat operator+(const TRat& x, const TRat& y) {
        return TRat(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    friend TRat operator-(const TRat& x, const TRat& y) {
        return TRat(x.num * y.den - y.num * x.den, x.den * y.den);
    }
    TRat operator-() const {
        TRat r = *this;
        r.num = -r.num;
        return r;
    }
    friend TRat operator*(const TRat& x, const TRat& y) {
        return TRat(x.num * y.num, x.den * y.den);
    }
    friend TRat operator/(const TRat& x, const TRat& y) {
        if (y.is_zero()) throw std::domain_error("TRat: division by zero");
        return TRat(x.num * y.den, x.den * y.num);
    }
    friend bool operator==(const TRat& x, const TRat& y) {
        return x.num == y.num && x.den == y.den;  // canonical forms
    }
    friend bool operator!=(const TRat& x, const TRat& y) { return !(x == y); }

    TRat inverse() const {
        if (is_zero()) throw std::domain_error("TRat: inverse of zero");
        return TRat(den, num);
    }

    TRat pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        TRat acc(1), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    TRat swap_t() const { return TRat(num.swap_t(), den.swap_t()); }

    Rational eval(const Rational& v1, const Rational& v2) const {
        Rational d = den.eval(v1, v2);
        if (exact::is_zero(d)) throw std::domain_error("TRat: pole at evaluation point");
        return num.eval(v1, v2) / d;
    }

    std::string str() const {
        if (num.is_zero()) return "0";
        if (den.is_constant() && den.constant_value() == 1) return num.str();
        std::string ns = num.str();
        if (num.terms.size() > 1) ns = "(" + ns + ")";
        std::string ds = den.str();
        if (den.terms.size() > 1 || ds.find('*') != std::string::npos ||
            ds.find('^') != std::string::npos)
            ds = "(" + ds + ")";
        return ns + "/" + ds;
    }
};

inline bool is_zero(const TRat& r) { return r.is_zero(); }

}  // namespace hilb::exact
