#pragma once

#include <hilb/tpoly.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb::linalg {

template <class K>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<K> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    K& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const K& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows, x.cols);
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows, x.cols);
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (x.at(i, k) == K(0)) continue;
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const Matrix& x, const K& s) {
        Matrix r = x;
        for (auto& v : r.a) v = v * s;
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("Matrix: apply shape");
        std::vector<K> r(rows, K(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!(at(i, j) == K(0))) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a)
            if (!(v == K(0))) return false;
        return true;
    }
};

struct SingularSystem : std::domain_error {
    int pivot_column;
    explicit SingularSystem(int col)
        : std::domain_error("singular linear system at pivot column " + std::to_string(col)),
          pivot_column(col) {}
};

// Gaussian elimination over a field; solves A x = b.
template <class K>
std::vector<K> gauss_solve(Matrix<K> A, std::vector<K> b) {
    int n = A.rows;
    if (A.cols != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("gauss_solve: shape");
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!(A.at(i, col) == K(0))) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularSystem(col);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            std::swap(b[piv], b[col]);
        }
        K inv = K(1) / A.at(col, col);
        for (int j = col; j < n; ++j) A.at(col, j) = A.at(col, j) * inv;
        b[col] = b[col] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            K f = A.at(i, col);
            if (f == K(0)) continue;
            for (int j = col; j < n; ++j) A.at(i, j) = A.at(i, j) - f * A.at(col, j);
            b[i] = b[i] - f * b[col];
        }
    }
    return b;
}

template <class K>
Matrix<K> gauss_inverse(const Matrix<K>& A) {
    int n = A.rows;
    Matrix<K> inv(n, n);
    for (int k = 0; k < n; ++k) {
        std::vector<K> e(n, K(0));
        e[k] = K(1);
        std::vector<K> x = gauss_solve(A, e);
        for (int i = 0; i < n; ++i) inv.at(i, k) = x[i];
    }
    return inv;
}

using exact::TPoly;
using exact::TRat;

// One-step fraction-free (Bareiss) echelon form.  Returns pivot positions;
// the matrix is modified in place.
inline std::vector<std::pair<int, int>> bareiss_echelon(Matrix<TPoly>& M, int& sign) {
    sign = 1;
    std::vector<std::pair<int, int>> pivots;
    TPoly prev(1);
    int r = 0;
    for (int col = 0; col < M.cols && r < M.rows; ++col) {
        int piv = -1;
        for (int i = r; i < M.rows; ++i)
            if (!M.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
            sign = -sign;
        }
        for (int i = r + 1; i < M.rows; ++i) {
            for (int j = col + 1; j < M.cols; ++j)
                M.at(i, j) = (M.at(r, col) * M.at(i, j) - M.at(i, col) * M.at(r, j)) / prev;
            M.at(i, col) = TPoly(0);
        }
        prev = M.at(r, col);
        pivots.emplace_back(r, col);
        ++r;
    }
    return pivots;
}

inline TPoly bareiss_det(Matrix<TPoly> M) {
    if (M.rows != M.cols) throw std::invalid_argument("bareiss_det: square only");
    if (M.rows == 0) return TPoly(1);
    int sign = 0;
    auto pivots = bareiss_echelon(M, sign);
    if (static_cast<int>(pivots.size()) < M.rows) return TPoly(0);
    TPoly d = M.at(pivots.back().first, pivots.back().second);
    return sign < 0 ? -d : d;
}

// One-dimensional kernel of a square matrix over Q(t1,t2), computed
// fraction-free; throws if the kernel dimension is not exactly one.
inline std::vector<TRat> kernel_1d(Matrix<TPoly> M) {
    int n = M.rows;
    int sign = 0;
    auto pivots = bareiss_echelon(M, sign);
    int rank = static_cast<int>(pivots.size());
    if (rank != n - 1)
        throw std::domain_error("kernel_1d: kernel dimension is " + std::to_string(n - rank));
    std::vector<bool> is_pivot(n, false);
    for (auto [r, c] : pivots) is_pivot[c] = true;
    int free_col = -1;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_col = j;
    std::vector<TRat> x(n, TRat(0));
    x[free_col] = TRat(1);
    for (int k = rank - 1; k >= 0; --k) {
        auto [r, c] = pivots[k];
        TRat acc(0);
        for (int j = c + 1; j < n; ++j)
            if (!x[j].is_zero()) acc = acc + TRat(M.at(r, j)) * x[j];
        x[c] = -(acc / TRat(M.at(r, c)));
    }
    return x;
}

// Characteristic polynomial coefficients [c_0, ..., c_n] with
// det(xI - A) = sum c_k x^k, via the Faddeev-LeVerrier recursion.
// K must support division by small integers through K(int).
template <class K>
std::vector<K> charpoly(const Matrix<K>& A) {
    int n = A.rows;
    std::vector<K> c(n + 1, K(0));
    c[n] = K(1);
    Matrix<K> M = Matrix<K>::identity(n);
    for (int k = 1; k <= n; ++k) {
        Matrix<K> AM = A * M;
        K tr(0);
        for (int i = 0; i < n; ++i) tr = tr + AM.at(i, i);
        K ck = K(0) - tr / K(k);
        c[n - k] = ck;
        M = AM;
        for (int i = 0; i < n; ++i) M.at(i, i) = M.at(i, i) + ck;
    }
    return c;
}

}  // namespace hilb::linalg
