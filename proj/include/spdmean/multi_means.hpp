#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spdmean/binary_means.hpp"
#include "spdmean/metrics.hpp"
#include "spdmean/spd.hpp"

namespace spdmean {

// Normalized positive weights: entries in (0,1], summing to 1 within 1e-12.
class Weight {
public:
    explicit Weight(std::vector<double> entries);
    static Weight uniform(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    double operator[](int i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }
    bool is_uniform(double tol = 1e-12) const;

    // Counts c_k with w_k = c_k / sum(c) for a common denominator dividing
    // max_denominator, each mass matched to 1e-9.  Throws when no such
    // representation exists.  Shared by the deterministic walk and measure
    // uniformization.
    std::vector<int> rational_counts(int max_denominator) const;

private:
    std::vector<double> entries_;
};

struct WeightedTuple {
    Weight weight;
    std::vector<SpdMatrix> points;

    WeightedTuple(Weight w, std::vector<SpdMatrix> pts);
};

struct SolverConfig {
    double tol = 1e-10;
    int max_iter = 500;
    double damping = 1.0;                      // halved on divergence detection
    MetricTag metric = MetricTag::thompson;    // stopping metric
};

struct SolverDiagnostics {
    int iterations = 0;
    double residual = 0.0;
};

enum class MeanKind { alm, karcher };

SpdMatrix weighted_arithmetic_mean(const Weight& w, const std::vector<SpdMatrix>& points);
SpdMatrix weighted_harmonic_mean(const Weight& w, const std::vector<SpdMatrix>& points);

// Ando-Li-Mathias mean.  n = 2 is A # B; for n >= 3 the tuple is repeatedly
// replaced by the (n-1)-variable means of its facets until the pairwise
// diameter (cfg.metric) drops to cfg.tol, then the first point is returned.
// Facet sub-means are solved to a tolerance proportional to the current
// diameter.  n is capped at 8: the recursion cost grows factorially.
SpdMatrix alm_mean(const std::vector<SpdMatrix>& points, const SolverConfig& cfg = {},
                   SolverDiagnostics* diag = nullptr);

// Inductive mean: S_1 = x_1, S_k = S_{k-1} #_{t_k} x_k where t_k is the
// weight fraction w_k / (w_1 + ... + w_k); uniform weights give t_k = 1/k.
SpdMatrix inductive_mean(const Weight& w, const std::vector<SpdMatrix>& points);
SpdMatrix inductive_mean(const std::vector<SpdMatrix>& points);

// t-weighted power mean, the unique fixed point of
// X = sum_k w_k (X #_t A_k), t in (0,1].  Fixed-point iteration from the
// arithmetic mean; the returned X has dist(X, F(X)) <= cfg.tol.
SpdMatrix power_mean(double t, const Weight& w, const std::vector<SpdMatrix>& points,
                     const SolverConfig& cfg = {}, SolverDiagnostics* diag = nullptr);

// Least squares (Karcher) mean: the zero of
//   sum_k w_k log(X^{-1/2} A_k X^{-1/2}).
// Damped exponential-barycenter iteration from the arithmetic mean; steps
// that increase the residual are rejected and the damping halved.  The
// residual is the Frobenius norm of the weighted log sum.
SpdMatrix karcher_mean(const Weight& w, const std::vector<SpdMatrix>& points,
                       const SolverConfig& cfg = {}, SolverDiagnostics* diag = nullptr);

struct PowerLimitTrace {
    SpdMatrix estimate;                          // P_t at the smallest t
    std::vector<std::pair<double, double>> gaps; // (t, d_T(P_t, Karcher mean))
};

// Evaluates P_t along a strictly decreasing schedule in (0,1] and measures
// the Thompson gap to the Karcher mean at each t.
PowerLimitTrace karcher_via_power_limit(const Weight& w, const std::vector<SpdMatrix>& points,
                                        const SolverConfig& cfg,
                                        const std::vector<double>& schedule);

// Numerical check of the ten ALM axioms for the selected mean on the given
// tuple.  Auxiliary inputs (scalars, congruence factor, comparison tuple,
// convex-combination parameter, permutation) are generated from `seed`.
// Metric residuals pass at `tol`; order checks use Loewner slack `tol`.
// The ALM selector requires uniform weights.
std::vector<PropertyCheck> check_alm_axioms(const WeightedTuple& tuple, MeanKind mean,
                                            const SolverConfig& cfg, uint64_t seed,
                                            double tol = 1e-8);

struct YamazakiReport {
    bool premise_holds;      // sum_k w_k log A_k <= 0
    bool conclusion_holds;   // Karcher mean <= I
    double premise_violation;
    double conclusion_violation;
};

YamazakiReport yamazaki_check(const WeightedTuple& tuple, const SolverConfig& cfg = {},
                              double slack = 1e-9);

}  // namespace spdmean
