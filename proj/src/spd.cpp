#include "spdmean/spd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "spdmean/errors.hpp"

namespace spdmean {

namespace {

constexpr double kAsymmetryRejectTol = 1e-12;
constexpr double kPdRelativeTol = 1e-14;
constexpr double kOrthonormalityTol = 1e-10;
constexpr double kRecompositionTol = 1e-10;

double pow_eigenvalue(double lambda, double p) {
    if (p > 0.0 && p < 1.0) return std::exp(p * std::log(lambda));
    return std::pow(lambda, p);
}

void check_same_dim(int a, int b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw ValidationError(os.str());
    }
}

}  // namespace

SymMatrix::SymMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.dim() < 1) throw ValidationError("SymMatrix: dimension must be positive");
    const double scale = entries_.max_abs();
    const double asym = max_asymmetry(entries_);
    if (asym > kAsymmetryRejectTol * std::max(scale, 1e-300)) {
        std::ostringstream os;
        os << "SymMatrix: asymmetry " << asym << " exceeds tolerance for scale " << scale;
        throw ValidationError(os.str());
    }
    symmetrize_in_place(entries_);
}

SymMatrix SymMatrix::symmetrized(Matrix entries) {
    symmetrize_in_place(entries);
    return SymMatrix(std::move(entries), exact_tag{});
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
    check_same_dim(dim(), rhs.dim(), "SymMatrix::operator+=");
    entries_ += rhs.entries_;
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& rhs) {
    check_same_dim(dim(), rhs.dim(), "SymMatrix::operator-=");
    entries_ -= rhs.entries_;
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
    entries_ *= s;
    return *this;
}

struct SpdMatrix::Cache {
    std::once_flag once;
    Spectrum spectrum;
};

SpdMatrix::SpdMatrix(SymMatrix base) : base_(std::move(base)), cache_(std::make_shared<Cache>()) {
    Spectrum spec = jacobi_eigen(base_.entries());
    const int n = base_.dim();
    const double lambda_min = spec.values.front();
    const double lambda_max = spec.values.back();

    if (!(lambda_max > 0.0) || !(lambda_min > n * kPdRelativeTol * lambda_max)) {
        std::ostringstream os;
        os << "matrix is not positive definite: eigenvalue " << lambda_min
           << " fails the threshold " << n * kPdRelativeTol * std::max(lambda_max, 0.0);
        throw NotPositiveDefiniteError(os.str(), lambda_min);
    }

    // Orthonormality of the accumulated rotations.
    Matrix vtv = multiply(spec.vectors.transposed(), spec.vectors);
    for (int i = 0; i < n; ++i) vtv(i, i) -= 1.0;
    if (vtv.max_abs() > kOrthonormalityTol) {
        throw ValidationError("SpdMatrix: eigenvectors failed the orthonormality check");
    }

    // Recomposition residual.
    Matrix rebuilt = recompose(spec, spec.values);
    rebuilt -= base_.entries();
    const double rel = rebuilt.frobenius() / std::max(base_.entries().frobenius(), 1e-300);
    if (rel > kRecompositionTol) {
        throw ValidationError("SpdMatrix: spectral recomposition residual too large");
    }

    std::call_once(cache_->once, [] {});
    cache_->spectrum = std::move(spec);
}

SpdMatrix SpdMatrix::unchecked(SymMatrix base) {
    return SpdMatrix(std::move(base), std::make_shared<Cache>());
}

SpdMatrix SpdMatrix::unchecked(SymMatrix base, Spectrum known) {
    auto cache = std::make_shared<Cache>();
    std::call_once(cache->once, [] {});
    cache->spectrum = std::move(known);
    return SpdMatrix(std::move(base), std::move(cache));
}

const Spectrum& SpdMatrix::spectrum() const {
    std::call_once(cache_->once, [this] { cache_->spectrum = jacobi_eigen(base_.entries()); });
    return cache_->spectrum;
}

InvertibleMatrix::InvertibleMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.dim() < 1) throw ValidationError("InvertibleMatrix: dimension must be positive");
    LuResult lu = lu_decompose(entries_);
    if (!lu.invertible) {
        throw ValidationError("InvertibleMatrix: matrix is numerically singular");
    }
    determinant_ = lu.determinant;
}

Spectrum spectral_decompose(const SymMatrix& a) { return jacobi_eigen(a.entries()); }

std::vector<EigenProjection> eigenprojections(const Spectrum& spec, double rel_tol) {
    const int n = spec.vectors.dim();
    const double scale = std::max(std::abs(spec.values.front()), std::abs(spec.values.back()));
    const double tol = rel_tol * std::max(scale, 1e-300);

    std::vector<EigenProjection> projections;
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && spec.values[end] - spec.values[start] <= tol) ++end;
        Matrix proj(n);
        double mean_value = 0.0;
        for (int k = start; k < end; ++k) {
            mean_value += spec.values[k];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    proj(i, j) += spec.vectors(i, k) * spec.vectors(j, k);
        }
        projections.push_back({mean_value / (end - start), std::move(proj)});
        start = end;
    }
    return projections;
}

Matrix recompose(const Spectrum& spec, const std::vector<double>& mapped) {
    const int n = spec.vectors.dim();
    Matrix out(n);
    for (int k = 0; k < n; ++k) {
        const double lk = mapped[k];
        for (int i = 0; i < n; ++i) {
            const double vik = lk * spec.vectors(i, k);
            if (vik == 0.0) continue;
            for (int j = 0; j < n; ++j) out(i, j) += vik * spec.vectors(j, k);
        }
    }
    return out;
}

Matrix power_from_spectrum(const Spectrum& spec, double p) {
    std::vector<double> mapped(spec.values.size());
    for (size_t i = 0; i < mapped.size(); ++i) mapped[i] = pow_eigenvalue(spec.values[i], p);
    return recompose(spec, mapped);
}

SpdMatrix pow_spd(const SpdMatrix& a, double p) {
    const Spectrum& spec = a.spectrum();
    const int n = a.dim();
    std::vector<double> mapped(spec.values.size());
    for (size_t i = 0; i < mapped.size(); ++i) mapped[i] = pow_eigenvalue(spec.values[i], p);
    Matrix entries = recompose(spec, mapped);

    // Negative exponents reverse the eigenvalue order; keep the cache sorted.
    Spectrum out;
    out.values = mapped;
    out.vectors = spec.vectors;
    if (p < 0.0) {
        std::reverse(out.values.begin(), out.values.end());
        Matrix reversed(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) reversed(i, j) = spec.vectors(i, n - 1 - j);
        out.vectors = std::move(reversed);
    }
    return SpdMatrix::unchecked(SymMatrix::symmetrized(std::move(entries)), std::move(out));
}

SpdMatrix sqrt_spd(const SpdMatrix& a) { return pow_spd(a, 0.5); }

SpdMatrix inverse(const SpdMatrix& a) { return pow_spd(a, -1.0); }

SymMatrix log_spd(const SpdMatrix& a) {
    const Spectrum& spec = a.spectrum();
    std::vector<double> mapped(spec.values.size());
    for (size_t i = 0; i < mapped.size(); ++i) mapped[i] = std::log(spec.values[i]);
    return SymMatrix::symmetrized(recompose(spec, mapped));
}

SpdMatrix exp_sym(const SymMatrix& a) {
    Spectrum spec = jacobi_eigen(a.entries());
    std::vector<double> mapped(spec.values.size());
    for (size_t i = 0; i < mapped.size(); ++i) mapped[i] = std::exp(spec.values[i]);
    Matrix entries = recompose(spec, mapped);
    Spectrum out;
    out.values = std::move(mapped);
    out.vectors = std::move(spec.vectors);
    return SpdMatrix::unchecked(SymMatrix::symmetrized(std::move(entries)), std::move(out));
}

bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double slack) {
    check_same_dim(a.dim(), b.dim(), "loewner_leq");
    Matrix diff = b.entries();
    diff -= a.entries();
    std::vector<double> eig = jacobi_eigenvalues(diff);
    const double op_norm = std::max(std::abs(eig.front()), std::abs(eig.back()));
    return eig.front() >= -slack * std::max(1.0, op_norm);
}

double loewner_violation(const SymMatrix& a, const SymMatrix& b) {
    check_same_dim(a.dim(), b.dim(), "loewner_violation");
    Matrix diff = b.entries();
    diff -= a.entries();
    std::vector<double> eig = jacobi_eigenvalues(diff);
    return std::max(0.0, -eig.front());
}

SpdMatrix congruence(const Matrix& m, const SpdMatrix& a) {
    check_same_dim(m.dim(), a.dim(), "congruence");
    Matrix tmp = multiply(m, a.entries());
    Matrix out = multiply(tmp, m.transposed());
    return SpdMatrix::unchecked(SymMatrix::symmetrized(std::move(out)));
}

SpdMatrix congruence(const InvertibleMatrix& m, const SpdMatrix& a) {
    return congruence(m.entries(), a);
}

double frobenius_norm(const SymMatrix& a) { return a.entries().frobenius(); }

double trace(const SymMatrix& a) { return a.entries().trace(); }

double determinant(const SpdMatrix& a) {
    double det = 1.0;
    for (double v : a.spectrum().values) det *= v;
    return det;
}

double log_determinant(const SpdMatrix& a) {
    double sum = 0.0;
    for (double v : a.spectrum().values) sum += std::log(v);
    return sum;
}

}  // namespace spdmean
