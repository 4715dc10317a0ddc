#pragma once

#include <string>
#include <vector>

#include "spdmean/metrics.hpp"
#include "spdmean/spd.hpp"

namespace spdmean {

// Two-variable geometric mean A # B, the metric midpoint.  Delegates to the
// geodesic at t = 1/2 so there is a single implementation of the formula.
SpdMatrix geometric_mean(const SpdMatrix& a, const SpdMatrix& b);

SpdMatrix arithmetic_mean(const SpdMatrix& a, const SpdMatrix& b);

// 2 (A^{-1} + B^{-1})^{-1}.
SpdMatrix harmonic_mean(const SpdMatrix& a, const SpdMatrix& b);

// Frobenius norm of X A^{-1} X - B.  Zero (up to eigensolver error) exactly
// when X solves the Riccati equation, i.e. X = A # B.
double riccati_residual(const SpdMatrix& a, const SpdMatrix& b, const SpdMatrix& x);

struct PropertyCheck {
    std::string name;
    double residual;
    bool pass;
};

// Numerical check of the six basic properties of # on the pair (A, B) with
// congruence factor M: commutativity, congruence invariance, inversion
// invariance, monotonicity, the commuting-case formula, and the AGM chain.
// Metric residuals pass at `tol`; order checks use Loewner slack `tol`.
std::vector<PropertyCheck> check_basic_properties(const SpdMatrix& a, const SpdMatrix& b,
                                                  const InvertibleMatrix& m,
                                                  double tol = 1e-8);

}  // namespace spdmean
