#include "spdmean/metrics.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "spdmean/errors.hpp"

namespace spdmean {

namespace {

// Eigenvalues of A^{-1/2} B A^{-1/2}, formed explicitly through spectral
// calculus.  The similar product B A^{-1} has the same eigenvalues but is not
// symmetric, which would force a general eigensolver.
std::vector<double> quotient_eigenvalues(const SpdMatrix& a, const SpdMatrix& b) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << "metric: dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw ValidationError(os.str());
    }
    Matrix inv_sqrt = power_from_spectrum(a.spectrum(), -0.5);
    Matrix quotient = sandwich(inv_sqrt, b.entries());
    symmetrize_in_place(quotient);
    return jacobi_eigenvalues(quotient);
}

}  // namespace

double delta(const SpdMatrix& a, const SpdMatrix& b) {
    double sum = 0.0;
    for (double lambda : quotient_eigenvalues(a, b)) {
        const double l = std::log(lambda);
        sum += l * l;
    }
    return std::sqrt(sum);
}

double thompson(const SpdMatrix& a, const SpdMatrix& b) {
    double worst = 0.0;
    for (double lambda : quotient_eigenvalues(a, b)) {
        worst = std::max(worst, std::abs(std::log(lambda)));
    }
    return worst;
}

double dist(const SpdMatrix& a, const SpdMatrix& b, MetricTag metric) {
    return metric == MetricTag::riemannian ? delta(a, b) : thompson(a, b);
}

SpdMatrix weighted_geometric(const SpdMatrix& a, const SpdMatrix& b, double t) {
    if (a.dim() != b.dim()) {
        throw ValidationError("weighted_geometric: dimension mismatch");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        std::ostringstream os;
        os << "weighted_geometric: t = " << t << " outside [0,1]";
        throw ValidationError(os.str());
    }
    if (t == 0.0) return a;
    if (t == 1.0) return b;

    const Spectrum& sa = a.spectrum();
    Matrix sqrt_a = power_from_spectrum(sa, 0.5);
    Matrix inv_sqrt_a = power_from_spectrum(sa, -0.5);

    Matrix quotient = sandwich(inv_sqrt_a, b.entries());
    symmetrize_in_place(quotient);
    Spectrum sq = jacobi_eigen(quotient);
    Matrix powered = power_from_spectrum(sq, t);

    Matrix result = sandwich(sqrt_a, powered);
    return SpdMatrix::unchecked(SymMatrix::symmetrized(std::move(result)));
}

NpcReport npc_check(const SpdMatrix& x1, const SpdMatrix& x2, const SpdMatrix& x,
                    double slack) {
    SpdMatrix m = weighted_geometric(x1, x2, 0.5);
    const double d12 = delta(x1, x2);
    const double dxm = delta(x, m);
    const double dx1 = delta(x, x1);
    const double dx2 = delta(x, x2);
    NpcReport report;
    report.lhs = d12 * d12 + 4.0 * dxm * dxm;
    report.rhs = 2.0 * dx1 * dx1 + 2.0 * dx2 * dx2;
    report.holds = report.lhs <= report.rhs + slack;
    return report;
}

}  // namespace spdmean
