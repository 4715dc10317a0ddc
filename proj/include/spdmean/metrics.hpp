#pragma once

#include "spdmean/spd.hpp"

namespace spdmean {

enum class MetricTag { riemannian, thompson };

// Riemannian metric: Frobenius norm of log(A^{-1/2} B A^{-1/2}), i.e.
// sqrt(sum of squared log-eigenvalues) of the symmetrized quotient.
double delta(const SpdMatrix& a, const SpdMatrix& b);

// Thompson metric: max |log eigenvalue| of A^{-1/2} B A^{-1/2}.
double thompson(const SpdMatrix& a, const SpdMatrix& b);

double dist(const SpdMatrix& a, const SpdMatrix& b, MetricTag metric);

// Geodesic point A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2} for
// t in [0,1].  Endpoints return the inputs unchanged.
SpdMatrix weighted_geometric(const SpdMatrix& a, const SpdMatrix& b, double t);

// Semiparallelogram law at the midpoint m = x1 # x2:
//   delta^2(x1,x2) + 4 delta^2(x,m) <= 2 delta^2(x,x1) + 2 delta^2(x,x2).
struct NpcReport {
    double lhs;
    double rhs;
    bool holds;
};
NpcReport npc_check(const SpdMatrix& x1, const SpdMatrix& x2, const SpdMatrix& x,
                    double slack = 1e-9);

}  // namespace spdmean
