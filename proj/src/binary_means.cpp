#include "spdmean/binary_means.hpp"

#include <cmath>

#include "spdmean/errors.hpp"

namespace spdmean {

SpdMatrix geometric_mean(const SpdMatrix& a, const SpdMatrix& b) {
    return weighted_geometric(a, b, 0.5);
}

SpdMatrix arithmetic_mean(const SpdMatrix& a, const SpdMatrix& b) {
    if (a.dim() != b.dim()) throw ValidationError("arithmetic_mean: dimension mismatch");
    Matrix sum = a.entries();
    sum += b.entries();
    sum *= 0.5;
    return SpdMatrix::unchecked(SymMatrix::symmetrized(std::move(sum)));
}

SpdMatrix harmonic_mean(const SpdMatrix& a, const SpdMatrix& b) {
    if (a.dim() != b.dim()) throw ValidationError("harmonic_mean: dimension mismatch");
    Matrix sum = power_from_spectrum(a.spectrum(), -1.0);
    sum += power_from_spectrum(b.spectrum(), -1.0);
    SpdMatrix inv_sum(SymMatrix::symmetrized(std::move(sum)));
    Matrix out = power_from_spectrum(inv_sum.spectrum(), -1.0);
    out *= 2.0;
    return SpdMatrix::unchecked(SymMatrix::symmetrized(std::move(out)));
}

double riccati_residual(const SpdMatrix& a, const SpdMatrix& b, const SpdMatrix& x) {
    Matrix inv_a = power_from_spectrum(a.spectrum(), -1.0);
    Matrix residual = sandwich(x.entries(), inv_a);
    residual -= b.entries();
    return residual.frobenius();
}

std::vector<PropertyCheck> check_basic_properties(const SpdMatrix& a, const SpdMatrix& b,
                                                  const InvertibleMatrix& m, double tol) {
    std::vector<PropertyCheck> report;
    SpdMatrix gab = geometric_mean(a, b);

    // (i) commutativity
    {
        SpdMatrix gba = geometric_mean(b, a);
        Matrix diff = gab.entries();
        diff -= gba.entries();
        const double residual = diff.frobenius() / std::max(gab.entries().frobenius(), 1e-300);
        report.push_back({"commutativity", residual, residual <= tol});
    }
    // (ii) congruence invariance
    {
        SpdMatrix lhs = congruence(m, gab);
        SpdMatrix rhs = geometric_mean(congruence(m, a), congruence(m, b));
        const double residual = delta(lhs, rhs);
        report.push_back({"congruence_invariance", residual, residual <= tol});
    }
    // (iii) inversion invariance
    {
        SpdMatrix lhs = inverse(gab);
        SpdMatrix rhs = geometric_mean(inverse(a), inverse(b));
        const double residual = delta(lhs, rhs);
        report.push_back({"inversion_invariance", residual, residual <= tol});
    }
    // (iv) monotonicity on the deterministic dominated pair (0.9A, 0.8B)
    {
        Matrix ca = a.entries();
        ca *= 0.9;
        Matrix db = b.entries();
        db *= 0.8;
        SpdMatrix c = SpdMatrix::unchecked(SymMatrix::symmetrized(std::move(ca)));
        SpdMatrix d = SpdMatrix::unchecked(SymMatrix::symmetrized(std::move(db)));
        SpdMatrix gcd = geometric_mean(c, d);
        const double violation = loewner_violation(gcd.sym(), gab.sym());
        report.push_back({"monotonicity", violation, violation <= tol});
    }
    // (v) commuting case: A # I = A^{1/2} and A # A^2 = A^{3/2}
    {
        SpdMatrix eye(SymMatrix::symmetrized(Matrix::identity(a.dim())));
        const double r1 = delta(geometric_mean(a, eye), pow_spd(a, 0.5));
        SpdMatrix a2 = SpdMatrix::unchecked(
            SymMatrix::symmetrized(multiply(a.entries(), a.entries())));
        const double r2 = delta(geometric_mean(a, a2), pow_spd(a, 1.5));
        const double residual = std::max(r1, r2);
        report.push_back({"commuting_formula", residual, residual <= tol});
    }
    // (vi) AGM chain H <= # <= A
    {
        SpdMatrix h = harmonic_mean(a, b);
        SpdMatrix ar = arithmetic_mean(a, b);
        const double v1 = loewner_violation(h.sym(), gab.sym());
        const double v2 = loewner_violation(gab.sym(), ar.sym());
        const double violation = std::max(v1, v2);
        report.push_back({"agm_inequality", violation, violation <= tol});
    }
    return report;
}

}  // namespace spdmean
