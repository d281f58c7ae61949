#pragma once

#include <hilb/fock.hpp>
#include <hilb/linalg.hpp>
#include <hilb/partitions.hpp>
#include <hilb/series.hpp>

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

namespace hilb::operators {

using exact::QPoly;
using exact::QRat;
using exact::QSeries;
using exact::Rational;
using exact::TPoly;
using exact::TRat;
using fock::FockVector;
using linalg::Matrix;
using partitions::Partition;

// Square matrix indexed by P(n), column convention: column mu holds the
// image of |mu>.
struct OperatorMatrix {
    int n = 0;
    std::vector<Partition> basis;
    std::map<Partition, int> index;
    Matrix<QRat> m;

    explicit OperatorMatrix(int n_) : n(n_), basis(partitions::enumerate(n_)) {
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[basis[i]] = i;
        m = Matrix<QRat>(dim(), dim());
    }

    int dim() const { return static_cast<int>(basis.size()); }

    const QRat& at(const Partition& row, const Partition& col) const {
        return m.at(index.at(row), index.at(col));
    }

    FockVector<QRat> apply(const FockVector<QRat>& v) const {
        if (v.n != n) throw std::invalid_argument("OperatorMatrix: energy mismatch");
        FockVector<QRat> r(n);
        for (const auto& [mu, coef] : v.c) {
            int j = index.at(mu);
            for (int i = 0; i < dim(); ++i) {
                const QRat& e = m.at(i, j);
                if (e.is_zero()) continue;
                r.add_term(basis[i], e * coef);
            }
        }
        return r;
    }

    OperatorMatrix specialize_q0() const {
        OperatorMatrix r(n);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) {
                const QRat& e = m.at(i, j);
                if (e.is_zero()) continue;
                TRat d0 = e.den.coeff(0);
                if (d0.is_zero()) throw std::domain_error("specialize_q0: pole at q=0");
                r.m.at(i, j) = QRat(e.num.coeff(0) / d0);
            }
        return r;
    }
};

// g_k(q) = ((-q)^k + 1) / ((-q)^k - 1)
inline QRat g_factor(int k) {
    QPoly num = exact::minus_q_pow(k) + QPoly::one();
    QPoly den = exact::minus_q_pow(k) - QPoly::one();
    return QRat(num, den);
}

// Diagonal entry of M on |mu>: (t1+t2) * sum_k (k^2 m_k / 2) g_k(q).
inline QRat m_diagonal(const Partition& mu) {
    TRat s = TRat::t1() + TRat::t2();
    QRat acc(0);
    int prev = -1;
    for (int p : mu.parts) {
        if (p == prev) continue;  // handled through mult below
        prev = p;
        int mk = mu.mult(p);
        Rational coef = Rational(static_cast<long long>(p) * p * mk, 2);
        acc = acc + g_factor(p) * QRat(TRat(coef));
    }
    return acc * QRat(s);
}

namespace detail {

// Splitting and joining terms applied to |mu>; q-free, off-diagonal.
inline FockVector<TRat> cubic_terms(const Partition& mu, int n) {
    FockVector<TRat> acc(n);
    FockVector<TRat> v = FockVector<TRat>::basis(mu);
    TRat t1t2 = TRat::t1() * TRat::t2();
    TRat half(exact::rat(1, 2));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; k + l <= n; ++l) {
            // splitting: (1/2) t1 t2 alpha_{k+l} alpha_{-k} alpha_{-l}
            if (mu.mult(k + l) > 0) {
                auto w = fock::alpha_apply(k + l, fock::alpha_apply(-k, fock::alpha_apply(-l, v)));
                acc = acc + w * (half * t1t2);
            }
            // joining: -(1/2) alpha_{-k-l} alpha_k alpha_l
            if (mu.mult(l) > 0) {
                auto w1 = fock::alpha_apply(l, v);
                if (w1.is_zero()) continue;
                auto w = fock::alpha_apply(-k - l, fock::alpha_apply(k, w1));
                acc = acc - w * half;
            }
        }
    return acc;
}

struct OperatorCache {
    std::mutex mtx;
    std::map<int, OperatorMatrix> m_cache, md_cache;
};

inline OperatorCache& op_cache() {
    static OperatorCache c;
    return c;
}

}  // namespace detail

// The operator M of (t1+t2)-weighted diagonal plus splitting/joining terms,
// restricted to the energy-n block.
inline const OperatorMatrix& build_M(int n) {
    if (n < 0) throw std::invalid_argument("build_M: n must be >= 0");
    auto& cache = detail::op_cache();
    {
        std::lock_guard<std::mutex> lk(cache.mtx);
        auto it = cache.m_cache.find(n);
        if (it != cache.m_cache.end()) return it->second;
    }
    OperatorMatrix op(n);
    for (int j = 0; j < op.dim(); ++j) {
        const Partition& mu = op.basis[j];
        op.m.at(j, j) = m_diagonal(mu);
        FockVector<TRat> off = detail::cubic_terms(mu, n);
        for (const auto& [nu, coef] : off.c) op.m.at(op.index.at(nu), j) = QRat(coef);
    }
    std::lock_guard<std::mutex> lk(cache.mtx);
    return cache.m_cache.emplace(n, std::move(op)).first->second;
}

// M_D = M - (t1+t2)/2 * ((-q)+1)/((-q)-1) * n on the energy-n block:
// small quantum multiplication by the divisor.
inline const OperatorMatrix& build_MD(int n) {
    if (n < 0) throw std::invalid_argument("build_MD: n must be >= 0");
    auto& cache = detail::op_cache();
    {
        std::lock_guard<std::mutex> lk(cache.mtx);
        auto it = cache.md_cache.find(n);
        if (it != cache.md_cache.end()) return it->second;
    }
    OperatorMatrix op = build_M(n);
    TRat s = TRat::t1() + TRat::t2();
    QRat scalar = g_factor(1) * QRat(s * TRat(exact::rat(n, 2)));
    for (int i = 0; i < op.dim(); ++i) op.m.at(i, i) = op.m.at(i, i) - scalar;
    std::lock_guard<std::mutex> lk(cache.mtx);
    return cache.md_cache.emplace(n, std::move(op)).first->second;
}

// M_D(0) with entries in Z[t1,t2].
inline Matrix<TPoly> md0_tpoly(int n) {
    OperatorMatrix md = build_MD(n).specialize_q0();
    Matrix<TPoly> r(md.dim(), md.dim());
    for (int i = 0; i < md.dim(); ++i)
        for (int j = 0; j < md.dim(); ++j) {
            const QRat& e = md.m.at(i, j);
            if (e.is_zero()) continue;
            TRat v = e.num.coeff(0) / e.den.coeff(0);
            if (!v.is_polynomial()) throw std::logic_error("md0: entry not polynomial");
            r.at(i, j) = v.num * (Rational(1) / v.den.constant_value());
        }
    return r;
}

// Calogero-Sutherland Fock-space operator at theta = -t2/t1, as a matrix
// over Q(t1,t2) on the energy-n block.
inline Matrix<TRat> build_cs(int n) {
    auto basis = partitions::enumerate(n);
    std::map<Partition, int> index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) index[basis[i]] = i;
    TRat theta = -(TRat::t2() / TRat::t1());
    TRat half(exact::rat(1, 2));
    Matrix<TRat> m(basis.size(), basis.size());
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
        const Partition& mu = basis[j];
        // (1-theta)/2 * sum_k k alpha_{-k} alpha_k : eigenvalue sum_i mu_i^2
        long long s2 = 0;
        for (int p : mu.parts) s2 += static_cast<long long>(p) * p;
        m.at(j, j) = (TRat(1) - theta) * half * TRat(Rational(s2));
        FockVector<TRat> v = FockVector<TRat>::basis(mu);
        for (int k = 1; k <= n; ++k)
            for (int l = 1; k + l <= n; ++l) {
                // (1/2) [ alpha_{-k-l} alpha_k alpha_l + theta alpha_{k+l} alpha_{-k} alpha_{-l} ]
                if (mu.mult(l) > 0) {
                    auto w = fock::alpha_apply(-k - l, fock::alpha_apply(k, fock::alpha_apply(l, v)));
                    for (const auto& [nu, c] : w.c) {
                        int i = index.at(nu);
                        m.at(i, j) = m.at(i, j) + half * c;
                    }
                }
                if (mu.mult(k + l) > 0) {
                    auto w = fock::alpha_apply(k + l, fock::alpha_apply(-k, fock::alpha_apply(-l, v)));
                    for (const auto& [nu, c] : w.c) {
                        int i = index.at(nu);
                        m.at(i, j) = m.at(i, j) + half * theta * c;
                    }
                }
            }
    }
    return m;
}

struct CsCheckResult {
    bool ok = false;
    Matrix<TRat> witness;  // difference matrix when not ok
};

// Verifies M(0) = -t1^(l(.)+1) Delta_CS|_{theta=-t2/t1} t1^(-l(.))
// as an exact matrix identity on the energy-n block.
inline CsCheckResult cs_check(int n) {
    auto basis = partitions::enumerate(n);
    Matrix<TRat> cs = build_cs(n);
    OperatorMatrix m0 = build_M(n).specialize_q0();
    int p = static_cast<int>(basis.size());
    Matrix<TRat> conj(p, p);
    TRat t1 = TRat::t1();
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            int li = basis[i].length(), lj = basis[j].length();
            conj.at(i, j) = -(t1.pow(li + 1) * cs.at(i, j) * t1.pow(-lj));
        }
    CsCheckResult res;
    res.witness = Matrix<TRat>(p, p);
    res.ok = true;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            TRat lhs = m0.m.at(i, j).is_zero()
                           ? TRat(0)
                           : m0.m.at(i, j).num.coeff(0) / m0.m.at(i, j).den.coeff(0);
            TRat diff = lhs - conj.at(i, j);
            if (!diff.is_zero()) {
                res.ok = false;
                res.witness.at(i, j) = diff;
            }
        }
    return res;
}

// lim_{t->inf} (1/t) M_D(q, t, 1/t): diagonal, t-free, with eigenvalue on
// |mu> equal to sum_i mu_i [ (mu_i/2) g_{mu_i}(q) - (1/2) g_1(q) ].
inline OperatorMatrix limiting_operator(int n) {
    if (n < 1) throw std::invalid_argument("limiting_operator: n must be >= 1");
    OperatorMatrix op(n);
    for (int j = 0; j < op.dim(); ++j) {
        const Partition& mu = op.basis[j];
        QRat acc(0);
        for (int p : mu.parts) {
            QRat term = g_factor(p) * QRat(TRat(exact::rat(p, 2))) -
                        g_factor(1) * QRat(TRat(exact::rat(1, 2)));
            acc = acc + term * QRat(TRat(p));
        }
        op.m.at(j, j) = acc;
    }
    return op;
}

struct IntegralityResult {
    bool ok = true;
    Partition row, col;
    int q_power = 0;
    std::string violation;  // first offending monomial, if any
};

// Every q-coefficient of every matrix element of M_D lies in Z[t1,t2].
inline IntegralityResult integrality_check(int n, int order) {
    const OperatorMatrix& md = build_MD(n);
    IntegralityResult res;
    for (int i = 0; i < md.dim(); ++i)
        for (int j = 0; j < md.dim(); ++j) {
            const QRat& e = md.m.at(i, j);
            if (e.is_zero()) continue;
            QSeries s = exact::series_expand(e, order);
            for (int d = 0; d <= order; ++d) {
                const TRat& c = s.c[d];
                if (c.is_zero()) continue;
                bool bad = !c.is_polynomial();
                if (!bad) {
                    Rational dc = c.den.constant_value();
                    for (const auto& [ex, co] : c.num.terms) {
                        if (denominator(co / dc) != 1) {
                            bad = true;
                            res.violation = TPoly::monomial(co / dc, ex.a, ex.b).str();
                            break;
                        }
                    }
                } else {
                    res.violation = c.str();
                }
                if (bad) {
                    res.ok = false;
                    res.row = md.basis[i];
                    res.col = md.basis[j];
                    res.q_power = d;
                    return res;
                }
            }
        }
    return res;
}

// q^d coefficient of M_D as a matrix over Q(t1,t2); d >= 1 is diagonal.
inline Matrix<TRat> md_qcoeff(int n, int d) {
    const OperatorMatrix& md = build_MD(n);
    Matrix<TRat> r(md.dim(), md.dim());
    for (int i = 0; i < md.dim(); ++i)
        for (int j = 0; j < md.dim(); ++j) {
            const QRat& e = md.m.at(i, j);
            if (e.is_zero()) continue;
            if (d > 0 && i != j) continue;  // off-diagonal entries are q-free
            r.at(i, j) = exact::series_expand(e, d).c[d];
        }
    return r;
}

}  // namespace hilb::operators
