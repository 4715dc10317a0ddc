#include "spdmean/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "spdmean/errors.hpp"

namespace spdmean {

Matrix::Matrix(int dim, std::vector<double> data) : dim_(dim), data_(std::move(data)) {
    if (dim_ < 1 || data_.size() != static_cast<size_t>(dim_) * dim_) {
        throw ValidationError("matrix data size does not match dimension");
    }
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

double Matrix::frobenius() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

void multiply_into(const Matrix& a, const Matrix& b, Matrix& out) {
    const int n = a.dim();
    if (out.dim() != n) out = Matrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out(i, j) = 0.0;
        for (int k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix out(a.dim());
    multiply_into(a, b, out);
    return out;
}

Matrix sandwich(const Matrix& a, const Matrix& b) {
    Matrix tmp = multiply(a, b);
    return multiply(tmp, a);
}

void symmetrize_in_place(Matrix& m) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = v;
            m(j, i) = v;
        }
    }
}

double max_asymmetry(const Matrix& m) {
    const int n = m.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
    return worst;
}

LuResult lu_decompose(Matrix a, double pivot_threshold) {
    const int n = a.dim();
    double det = 1.0;
    double min_pivot = std::abs(a(0, 0));
    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > best) {
                best = std::abs(a(r, col));
                pivot_row = r;
            }
        }
        if (best < pivot_threshold) {
            return {false, 0.0, best};
        }
        if (pivot_row != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
            det = -det;
        }
        const double pivot = a(col, col);
        min_pivot = std::min(min_pivot, std::abs(pivot));
        det *= pivot;
        for (int r = col + 1; r < n; ++r) {
            const double factor = a(r, col) / pivot;
            if (factor == 0.0) continue;
            for (int j = col + 1; j < n; ++j) a(r, j) -= factor * a(col, j);
        }
    }
    return {true, det, min_pivot};
}

}  // namespace spdmean
