#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "spdmean/eigensolver.hpp"
#include "spdmean/matrix.hpp"

namespace spdmean {

// Real symmetric matrix.  Construction symmetrizes (A + A^T)/2 and rejects
// inputs whose asymmetry exceeds 1e-12 relative to the largest entry.
class SymMatrix {
public:
    explicit SymMatrix(Matrix entries);

    // Wraps a matrix that is symmetric by construction (sums, congruences,
    // spectral recompositions).  Applies (A + A^T)/2 to scrub rounding
    // asymmetry but never rejects.
    static SymMatrix symmetrized(Matrix entries);

    int dim() const { return entries_.dim(); }
    double operator()(int i, int j) const { return entries_(i, j); }
    const Matrix& entries() const { return entries_; }

    SymMatrix& operator+=(const SymMatrix& rhs);
    SymMatrix& operator-=(const SymMatrix& rhs);
    SymMatrix& operator*=(double s);
    friend SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
    friend SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs) { return lhs -= rhs; }
    friend SymMatrix operator*(double s, SymMatrix m) { return m *= s; }

private:
    struct exact_tag {};
    SymMatrix(Matrix entries, exact_tag) : entries_(std::move(entries)) {}

    Matrix entries_;
};

// Symmetric positive definite matrix with a write-once cached spectral
// decomposition.  Immutable after construction; copies share the cache.
//
// The validating constructor decomposes eagerly and checks
//   - min eigenvalue > dim * 1e-14 * max eigenvalue,
//   - eigenvector orthonormality to 1e-10,
//   - spectral recomposition of the entries to relative 1e-10.
// `unchecked` is for results that are positive definite by construction
// (congruences, spectral calculus, convex combinations); it defers the
// decomposition until first use.
class SpdMatrix {
public:
    explicit SpdMatrix(SymMatrix base);

    static SpdMatrix unchecked(SymMatrix base);
    // Variant that seeds the cache when the decomposition is already known,
    // e.g. matrix functions that reuse the eigenbasis.
    static SpdMatrix unchecked(SymMatrix base, Spectrum known);

    int dim() const { return base_.dim(); }
    const SymMatrix& sym() const { return base_; }
    const Matrix& entries() const { return base_.entries(); }
    double operator()(int i, int j) const { return base_(i, j); }

    // Lazily computed, cached, thread-safe.
    const Spectrum& spectrum() const;

    double min_eigenvalue() const { return spectrum().values.front(); }
    double max_eigenvalue() const { return spectrum().values.back(); }

private:
    struct Cache;
    SpdMatrix(SymMatrix base, std::shared_ptr<Cache> cache)
        : base_(std::move(base)), cache_(std::move(cache)) {}

    SymMatrix base_;
    std::shared_ptr<Cache> cache_;
};

// Square invertible matrix (congruence factor).  Invertibility is checked by
// LU with partial pivoting and pivot threshold 1e-300.
class InvertibleMatrix {
public:
    explicit InvertibleMatrix(Matrix entries);

    int dim() const { return entries_.dim(); }
    const Matrix& entries() const { return entries_; }
    double determinant() const { return determinant_; }

private:
    Matrix entries_;
    double determinant_;
};

// ---- linalg operations ------------------------------------------------

// Full eigendecomposition, ascending eigenvalues, orthonormal eigenvectors.
Spectrum spectral_decompose(const SymMatrix& a);

// Distinct-eigenvalue projections E_i with A = sum lambda_i E_i; eigenvalues
// within 1e-10 relative are clustered.  Reporting aid only; matrix functions
// act eigenvector-wise and never cluster.
struct EigenProjection {
    double eigenvalue;
    Matrix projector;
};
std::vector<EigenProjection> eigenprojections(const Spectrum& spec, double rel_tol = 1e-10);

// V f(diag) V^T for an eigenvalue map f given as sampled values.
Matrix recompose(const Spectrum& spec, const std::vector<double>& mapped_values);

// A^p through the spectrum.  Exponents in (0,1) use exp(p*log(lambda)) so
// they share the rounding behaviour of the log/exp pair.
SpdMatrix pow_spd(const SpdMatrix& a, double p);
SpdMatrix sqrt_spd(const SpdMatrix& a);
SpdMatrix inverse(const SpdMatrix& a);
SymMatrix log_spd(const SpdMatrix& a);
SpdMatrix exp_sym(const SymMatrix& a);

// A^p as a raw matrix straight from a known spectrum; the workhorse behind
// geodesics where wrapping intermediate results would waste decompositions.
Matrix power_from_spectrum(const Spectrum& spec, double p);

// True iff B - A is positive semidefinite up to
// slack * max(1, ||B - A||_op).
bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double slack = 1e-9);

// Signed violation of A <= B: max(0, -lambda_min(B - A)).  Zero when the
// order holds exactly.
double loewner_violation(const SymMatrix& a, const SymMatrix& b);

// M A M^T.
SpdMatrix congruence(const InvertibleMatrix& m, const SpdMatrix& a);
SpdMatrix congruence(const Matrix& m, const SpdMatrix& a);

double frobenius_norm(const SymMatrix& a);
double trace(const SymMatrix& a);
double determinant(const SpdMatrix& a);      // product of eigenvalues
double log_determinant(const SpdMatrix& a);  // sum of eigenvalue logs

}  // namespace spdmean
