#ifndef EVOALG_MATRIX_HPP
#define EVOALG_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace evoalg {

/// Dense matrix over a field context F (Rationals or PrimeField).
template <class F>
class Matrix {
public:
    using Elem = typename F::Element;

    Matrix(const F& field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    static Matrix identity(const F& field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& at(int r, int c) { return a_[r * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[r * cols_ + c]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix z(x.field_, x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x.field_.is_zero(x.at(i, k))) continue;
                for (int j = 0; j < y.cols_; ++j)
                    z.at(i, j) = x.field_.add(z.at(i, j), x.field_.mul(x.at(i, k), y.at(k, j)));
            }
        return z;
    }

private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

/// Determinant over the rationals by fraction-free Bareiss elimination.
inline Rational determinant(const Matrix<Rationals>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const int n = m.rows();
    if (n == 0) return Rational(1);
    // scale to an integer matrix, run Bareiss, divide the scale back out
    BigInt scale = 1;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const BigInt& d = m.at(r, c).den();
            scale = scale / boost::multiprecision::gcd(scale, d) * d;
        }
    std::vector<BigInt> a(n * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a[r * n + c] = m.at(r, c).num() * (scale / m.at(r, c).den());
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k * n + k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r * n + k] != 0) { pivot = r; break; }
            if (pivot < 0) return Rational(0);
            for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[pivot * n + c]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
        prev = a[k * n + k];
    }
    BigInt det = a[(n - 1) * n + (n - 1)];
    if (sign < 0) det = -det;
    BigInt denom = 1;
    for (int i = 0; i < n; ++i) denom *= scale;
    return Rational(det, denom);
}

/// Determinant over GF(p) by Gaussian elimination.
inline PrimeField::Element determinant(const Matrix<PrimeField>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const PrimeField& f = m.field();
    const int n = m.rows();
    Matrix<PrimeField> a = m;
    PrimeField::Element det = f.one();
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!f.is_zero(a.at(r, k))) { pivot = r; break; }
        if (pivot < 0) return f.zero();
        if (pivot != k) {
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
            det = f.neg(det);
        }
        det = f.mul(det, a.at(k, k));
        PrimeField::Element ipiv = f.inv(a.at(k, k));
        for (int r = k + 1; r < n; ++r) {
            if (f.is_zero(a.at(r, k))) continue;
            PrimeField::Element factor = f.mul(a.at(r, k), ipiv);
            for (int c = k; c < n; ++c)
                a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(k, c)));
        }
    }
    return det;
}

/// Rank by Gaussian elimination; exact for both field kinds.
template <class F>
int rank(const Matrix<F>& m) {
    const F& f = m.field();
    Matrix<F> a = m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!f.is_zero(a.at(i, c))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pivot, j));
        auto ipiv = f.inv(a.at(r, c));
        for (int i = r + 1; i < a.rows(); ++i) {
            if (f.is_zero(a.at(i, c))) continue;
            auto factor = f.mul(a.at(i, c), ipiv);
            for (int j = c; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        ++r;
    }
    return r;
}

} // namespace evoalg

#endif
