#include "spdmean/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spdmean/errors.hpp"

namespace spdmean {

namespace {

constexpr double kRelativeOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 30;

double off_diagonal_frobenius_sq(const Matrix& a) {
    const int n = a.dim();
    double sum = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) sum += 2.0 * a(p, q) * a(p, q);
    return sum;
}

// One two-sided rotation annihilating a(p,q).  Updates a symmetrically and
// accumulates the rotation into the columns of v when v is non-null.
void rotate(Matrix& a, int p, int q, Matrix* v) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double app = a(p, p);
    const double aqq = a(q, q);

    const double theta = 0.5 * (aqq - app) / apq;
    // Smaller-magnitude root of t^2 + 2*theta*t - 1 = 0, the stable choice.
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    const int n = a.dim();
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a(k, p);
        const double akq = a(k, q);
        const double newp = akp - s * (akq + tau * akp);
        const double newq = akq + s * (akp - tau * akq);
        a(k, p) = newp;
        a(p, k) = newp;
        a(k, q) = newq;
        a(q, k) = newq;
    }
    if (v) {
        for (int k = 0; k < n; ++k) {
            const double vkp = (*v)(k, p);
            const double vkq = (*v)(k, q);
            (*v)(k, p) = vkp - s * (vkq + tau * vkp);
            (*v)(k, q) = vkq + s * (vkp - tau * vkq);
        }
    }
}

// Core iteration shared by both entry points.  `v` may be null.
void jacobi_core(Matrix& a, Matrix* v) {
    const int n = a.dim();
    if (n == 1) return;

    const double total_fro = a.frobenius();
    const double stop = kRelativeOffDiagonalTol * total_fro;
    const double stop_sq = stop * stop;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_frobenius_sq(a) <= stop_sq) return;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) rotate(a, p, q, v);
    }
    if (off_diagonal_frobenius_sq(a) <= stop_sq) return;
    throw ConvergenceError("Jacobi eigensolver did not converge within the sweep cap",
                           std::sqrt(off_diagonal_frobenius_sq(a)), kMaxSweeps);
}

}  // namespace

Spectrum jacobi_eigen(const Matrix& input) {
    const int n = input.dim();
    Matrix a = input;
    Matrix v = Matrix::identity(n);
    jacobi_core(a, &v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i) < a(j, j); });

    Spectrum spec;
    spec.values.resize(n);
    spec.vectors = Matrix(n);
    for (int j = 0; j < n; ++j) {
        spec.values[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) spec.vectors(i, j) = v(i, order[j]);
    }
    return spec;
}

std::vector<double> jacobi_eigenvalues(const Matrix& input) {
    Matrix a = input;
    jacobi_core(a, nullptr);
    std::vector<double> values(a.dim());
    for (int i = 0; i < a.dim(); ++i) values[i] = a(i, i);
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace spdmean
