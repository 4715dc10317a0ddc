#pragma once

#include <vector>

#include "spdmean/rng.hpp"
#include "spdmean/spd.hpp"

namespace spdmean {

// Seeded generators for test ensembles and the CLI `gen` subcommand.

// Symmetric matrix with independent N(0, scale^2) entries on and above the
// diagonal.
SymMatrix random_symmetric(Rng& rng, int dim, double scale = 1.0);

// exp(spread * G) for a standard normal symmetric G; spread controls the
// log-spectrum diameter.
SpdMatrix random_spd(Rng& rng, int dim, double spread = 1.0);

// Dense normal entries, redrawn in the (measure-zero) singular case.
InvertibleMatrix random_invertible(Rng& rng, int dim);

// Positive entries bounded away from zero, normalized to sum 1.
std::vector<double> random_weight_entries(Rng& rng, int n);

std::vector<int> random_permutation(Rng& rng, int n);

// A + s * G G^T with the bump scaled so its operator norm is `fraction` of
// lambda_min(A); subtracting it keeps a matrix safely positive definite.
SpdMatrix psd_bump(Rng& rng, const SpdMatrix& a, double fraction, bool upward);

}  // namespace spdmean
