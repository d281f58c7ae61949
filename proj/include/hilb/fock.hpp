#pragma once

#include <hilb/partitions.hpp>
#include <hilb/series.hpp>
#include <hilb/tpoly.hpp>

#include <map>
#include <stdexcept>

namespace hilb::fock {

using exact::QRat;
using exact::Rational;
using exact::TPoly;
using exact::TRat;
using partitions::Partition;

// Finite linear combination of partitions of a fixed n.  K is the
// coefficient field: TRat classically, QRat in quantum contexts.
template <class K>
struct FockVector {
    int n = 0;
    std::map<Partition, K> c;

    FockVector() = default;
    explicit FockVector(int energy) : n(energy) {}

    static FockVector vacuum() { return basis(Partition()); }
    static FockVector basis(const Partition& mu) {
        FockVector v(mu.size());
        v.c.emplace(mu, K(1));
        return v;
    }
    // |1^n>, the unit of H_T^*(Hilb_n)
    static FockVector unit(int n) {
        return basis(Partition(std::vector<int>(n, 1)));
    }

    bool is_zero() const { return c.empty(); }

    K coeff(const Partition& mu) const {
        auto it = c.find(mu);
        return it == c.end() ? K(0) : it->second;
    }

    void add_term(const Partition& mu, const K& k) {
        if (k == K(0)) return;
        auto it = c.find(mu);
        if (it == c.end()) {
            c.emplace(mu, k);
        } else {
            it->second = it->second + k;
            if (it->second == K(0)) c.erase(it);
        }
    }

    friend FockVector operator+(const FockVector& a, const FockVector& b) {
        if (a.n != b.n) throw std::invalid_argument("FockVector: energy mismatch");
        FockVector r = a;
        for (const auto& [mu, k] : b.c) r.add_term(mu, k);
        return r;
    }
    friend FockVector operator-(const FockVector& a, const FockVector& b) {
        if (a.n != b.n) throw std::invalid_argument("FockVector: energy mismatch");
        FockVector r = a;
        for (const auto& [mu, k] : b.c) r.add_term(mu, K(0) - k);
        return r;
    }
    FockVector operator-() const {
        FockVector r = *this;
        for (auto& [mu, k] : r.c) k = K(0) - k;
        return r;
    }
    friend FockVector operator*(const FockVector& a, const K& s) {
        FockVector r(a.n);
        if (s == K(0)) return r;
        for (const auto& [mu, k] : a.c) r.c.emplace(mu, k * s);
        return r;
    }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.n == b.n && a.c == b.c;
    }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }
};

inline FockVector<QRat> to_quantum(const FockVector<TRat>& v) {
    FockVector<QRat> r(v.n);
    for (const auto& [mu, k] : v.c) r.c.emplace(mu, QRat(k));
    return r;
}

// alpha_k action in the normalized basis (basis):
//   k > 0 removes one part k (coefficient 1, zero if absent),
//   k < 0 adjoins a part |k| with factor |k| * (mult+1).
// Energy changes by -k.
template <class K>
FockVector<K> alpha_apply(int k, const FockVector<K>& v) {
    if (k == 0) throw std::invalid_argument("alpha_apply: k must be nonzero");
    FockVector<K> r(v.n - k);
    if (k > 0) {
        for (const auto& [mu, coef] : v.c) {
            if (mu.mult(k) == 0) continue;
            r.add_term(mu.without_part(k), coef);
        }
    } else {
        int kk = -k;
        for (const auto& [mu, coef] : v.c) {
            int factor = kk * (mu.mult(kk) + 1);
            r.add_term(mu.with_part(kk), coef * K(factor));
        }
    }
    return r;
}

// <mu|mu> = (-1)^(|mu|-l(mu)) / ((t1 t2)^l(mu) z(mu))
inline TRat gram_norm(const Partition& mu) {
    int sign = ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
    TPoly den = TPoly::monomial(Rational(partitions::zmu(mu)), mu.length(), mu.length());
    return TRat(TPoly(sign), den);
}

template <class K>
K gram_pair(const FockVector<K>& a, const FockVector<K>& b) {
    if (a.n != b.n) throw std::invalid_argument("gram_pair: energy mismatch");
    K acc(0);
    for (const auto& [mu, ka] : a.c) {
        auto it = b.c.find(mu);
        if (it == b.c.end()) continue;
        acc = acc + ka * it->second * K(gram_norm(mu));
    }
    return acc;
}

// Variant for specialized coefficient fields: embed maps TRat into K.
template <class K, class Embed>
K gram_pair(const FockVector<K>& a, const FockVector<K>& b, Embed&& embed) {
    if (a.n != b.n) throw std::invalid_argument("gram_pair: energy mismatch");
    K acc(0);
    for (const auto& [mu, ka] : a.c) {
        auto it = b.c.find(mu);
        if (it == b.c.end()) continue;
        acc = acc + ka * it->second * embed(gram_norm(mu));
    }
    return acc;
}

// D = -|2,1^(n-2)> for n >= 2, zero for n in {0,1}.
inline FockVector<TRat> divisor_class(int n) {
    if (n < 0) throw std::invalid_argument("divisor_class: n must be >= 0");
    if (n < 2) return FockVector<TRat>(n);
    std::vector<int> p{2};
    p.insert(p.end(), n - 2, 1);
    return FockVector<TRat>::basis(Partition(std::move(p))) * TRat(-1);
}

// |mu([0])> = (t1 t2)^l(mu) |mu>
inline FockVector<TRat> nakajima_at_origin(const Partition& mu) {
    TRat s = TRat(TPoly::monomial(Rational(1), mu.length(), mu.length()));
    return FockVector<TRat>::basis(mu) * s;
}

}  // namespace hilb::fock
