#pragma once

#include <cstddef>
#include <vector>

namespace spdmean {

// Dense square matrix of doubles, row-major.  The whole library works on
// small/medium dimensions (targets dim <= ~200), so everything is dense and
// unblocked.
class Matrix {
public:
    Matrix() : dim_(0) {}
    explicit Matrix(int dim) : dim_(dim), data_(static_cast<size_t>(dim) * dim, 0.0) {}
    Matrix(int dim, std::vector<double> data);

    static Matrix identity(int dim);

    int dim() const { return dim_; }

    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * dim_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    Matrix transposed() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double s);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(double s, Matrix m) { return m *= s; }

    double frobenius() const;
    double max_abs() const;
    double trace() const;

private:
    int dim_;
    std::vector<double> data_;
};

// out = a * b; out must not alias a or b.
void multiply_into(const Matrix& a, const Matrix& b, Matrix& out);
Matrix multiply(const Matrix& a, const Matrix& b);

// a * b * a for symmetric sandwiching; one temporary.
Matrix sandwich(const Matrix& a, const Matrix& b);

// (m + m^T) / 2, in place.
void symmetrize_in_place(Matrix& m);

// Largest |m(i,j) - m(j,i)|.
double max_asymmetry(const Matrix& m);

struct LuResult {
    bool invertible;       // false iff some pivot magnitude fell below the threshold
    double determinant;    // valid only when invertible
    double min_abs_pivot;
};

// LU with partial pivoting; used for the invertibility check and determinants
// of general (non-symmetric) matrices.
LuResult lu_decompose(Matrix a, double pivot_threshold = 1e-300);

}  // namespace spdmean
