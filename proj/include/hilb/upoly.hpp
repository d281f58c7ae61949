#pragma once

#include <hilb/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilb::exact {

// Dense univariate polynomial over a commutative coefficient type K.
// K needs K(int), +, -, *, == ; division is required only by the
// operations that document it (divmod, gcd, RatFunc).
template <class K>
struct UPoly {
    std::vector<K> c;  // c[i] is the coefficient of x^i; no trailing zeros

    UPoly() = default;
    explicit UPoly(K k) {
        if (!(k == K(0))) c.push_back(std::move(k));
    }
    explicit UPoly(std::vector<K> cs) : c(std::move(cs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(K(1)); }
    static UPoly x() {
        UPoly p;
        p.c = {K(0), K(1)};
        return p;
    }
    // c * x^e
    static UPoly monomial(K coef, int e) {
        UPoly p;
        if (coef == K(0)) return p;
        p.c.assign(e + 1, K(0));
        p.c[e] = std::move(coef);
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }

    int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    const K& lc() const {
        if (c.empty()) throw std::domain_error("UPoly: lc of zero");
        return c.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return K(0);
        return c[i];
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    UPoly operator-() const {
        UPoly r = *this;
        for (auto& k : r.c) k = K(0) - k;
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == K(0)) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend UPoly operator*(const UPoly& a, const K& k) {
        UPoly r = a;
        for (auto& ci : r.c) ci = ci * k;
        r.trim();
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly shifted(int e) const {  // * x^e
        if (is_zero()) return UPoly();
        UPoly r;
        r.c.assign(c.size() + e, K(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i + e] = c[i];
        return r;
    }

    UPoly derivative() const {
        UPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * K(static_cast<int>(i));
        r.trim();
        return r;
    }

    template <class V>
    V eval(const V& x0) const {
        V acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0 + V(*it);
        return acc;
    }

    UPoly pow(int e) const {
        if (e < 0) throw std::domain_error("UPoly: negative power");
        UPoly acc = one(), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }
};

// Quotient and remainder; K must be a field for general divisors.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
    UPoly<K> q, r = a;
    if (r.deg() < b.deg()) return {q, r};
    q.c.assign(r.deg() - b.deg() + 1, K(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        K f = r.lc() / b.lc();
        int sh = r.deg() - b.deg();
        q.c[sh] = f;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + sh] = r.c[i + sh] - f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
UPoly<K> operator/(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
    return q;
}

// Monic gcd over a field.
template <class K>
UPoly<K> gcd_monic(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    K inv = K(1) / a.lc();
    return a * inv;
}

// Reduced fraction of univariate polynomials over the field K; den monic.
template <class K>
struct RatFunc {
    UPoly<K> num, den;

    RatFunc() : num(), den(UPoly<K>::one()) {}
    RatFunc(int v) : num(K(v)), den(UPoly<K>::one()) {}  // NOLINT: implicit by design
    explicit RatFunc(K k) : num(std::move(k)), den(UPoly<K>::one()) {}
    explicit RatFunc(UPoly<K> n) : num(std::move(n)), den(UPoly<K>::one()) {}
    RatFunc(UPoly<K> n, UPoly<K> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static RatFunc x() { return RatFunc(UPoly<K>::x()); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num.is_zero()) {
            den = UPoly<K>::one();
            return;
        }
        UPoly<K> g = gcd_monic(num, den);
        if (g.deg() > 0) {
            num = num / g;
            den = den / g;
        }
        K inv = K(1) / den.lc();
        if (!(inv == K(1))) {
            num = num * inv;
            den = den * inv;
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return den == UPoly<K>::one() && num == UPoly<K>::one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num = -r.num;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;  // both canonical
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        return RatFunc(num.derivative() * den - num * den.derivative(), den * den);
    }

    template <class V>
    V eval(const V& x0) const {
        V d = den.template eval<V>(x0);
        if (d == V(0)) throw std::domain_error("RatFunc: pole at evaluation point");
        return num.template eval<V>(x0) / d;
    }

    RatFunc pow(int e) const {
        if (e < 0) return RatFunc(1) / pow(-e);
        RatFunc acc(1), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }
};

}  // namespace hilb::exact
