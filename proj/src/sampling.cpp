#include "spdmean/sampling.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace spdmean {

SymMatrix random_symmetric(Rng& rng, int dim, double scale) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            const double v = scale * rng.normal();
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return SymMatrix::symmetrized(std::move(m));
}

SpdMatrix random_spd(Rng& rng, int dim, double spread) {
    return exp_sym(random_symmetric(rng, dim, spread));
}

InvertibleMatrix random_invertible(Rng& rng, int dim) {
    for (;;) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m(i, j) = rng.normal();
        if (lu_decompose(m).invertible) return InvertibleMatrix(std::move(m));
    }
}

std::vector<double> random_weight_entries(Rng& rng, int n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& v : w) {
        v = 0.2 + rng.uniform();
        sum += v;
    }
    for (double& v : w) v /= sum;
    // Absorb the normalization rounding so the entries sum to 1 exactly.
    double acc = 0.0;
    for (int i = 0; i < n - 1; ++i) acc += w[i];
    w[n - 1] = 1.0 - acc;
    return w;
}

std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    return perm;
}

SpdMatrix psd_bump(Rng& rng, const SpdMatrix& a, double fraction, bool upward) {
    const int n = a.dim();
    Matrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
    Matrix bump = multiply(g, g.transposed());
    symmetrize_in_place(bump);
    const double top = jacobi_eigenvalues(bump).back();
    bump *= fraction * a.min_eigenvalue() / std::max(top, 1e-300);
    Matrix out = a.entries();
    if (upward) {
        out += bump;
    } else {
        out -= bump;
    }
    return SpdMatrix::unchecked(SymMatrix::symmetrized(std::move(out)));
}

}  // namespace spdmean
