#pragma once

#include "cabling.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace cableops::analysis {

using Matrix = Eigen::MatrixXcd;

Matrix eval_sparse(const cabling::SparseMatrix& rm, const cyc::RootSystem& sys);
Matrix eval_columns(const std::vector<skein::SkeinVector>& cols, long m,
                    const cyc::RootSystem& sys);

std::complex<double> numeric_det(const Matrix& a);

struct PowerIteration {
    double norm = 0.0;
    long iterations = 0;
    bool converged = false;
};

// Largest singular value by power iteration on the Gram matrix A^H A,
// seeded with the normalized all-ones vector; relative tolerance 1e-10 on
// the dominant eigenvalue, at most 10000 iterations. Non-convergence is
// reported, never silently ignored.
PowerIteration operator_norm(const Matrix& a);

// Inverse of the cable operator assembled from the structured factors:
// X = D2^-1 * U^-1 * D1^-1 * R_m^-1, with only the R_m block inverted
// numerically. Requires gcd(r, q) = 1.
Matrix inverse_from_factors(const cabling::CableParams& params,
                            const cabling::SparseMatrix& rm);

// max-abs entry of RT * X - I
double inverse_residual(const Matrix& rt, const Matrix& x);

// Squared 2-norm of the image of e_color under the cable operator. For
// color 1 this is the invariant of the unknotted cable circle in the solid
// torus, which must equal 1.
double image_norm_squared(long color, const cabling::CableParams& params);

struct SweepRecord {
    long p = 0, q = 0, r = 0, m = 0;
    double det_modulus = 0, inv_norm = 0, rt_norm = 0, tv_cable = 0;
    std::string status; // ok | skipped-gcd | skipped-small-r | failed
    std::string detail;
};

struct GrowthFit {
    bool ok = false;
    std::string kind; // "log-log" or "scaled-log-linear"
    double slope = 0, intercept = 0, residual_rms = 0;
    long n_used = 0;
    std::string error;
};

struct SweepResult {
    long p = 0, q = 0, r_min = 0, r_max = 0, color = 1;
    std::vector<SweepRecord> records;
    GrowthFit fit;
};

// Walk odd r in [r_min, r_max]. Rows with gcd(r, q) > 1 or r <= q + 6 are
// skipped with an explicit status. The fit is a log-log regression of
// inv_norm against r over the upper two thirds of the admissible r-range
// (at least 5 points required).
SweepResult norm_growth_sweep(long p, long q, long r_min, long r_max);

// Same walk; tv_cable holds the squared image norm of e_color and the fit
// tracks y_r = (2*pi/r) * log(tv_cable) linearly in r.
SweepResult tv_sweep(long p, long q, long r_min, long r_max, long color);

struct SandwichVector {
    std::string label;
    double slope = 0;
    double upper_head_max = 0, upper_tail_max = 0; // ratio / r^N
    double lower_head_max = 0, lower_tail_max = 0; // 1 / (ratio * r^N)
    bool bounded = false;
};

struct SandwichResult {
    long p = 0, q = 0, r_min = 0, r_max = 0;
    unsigned long long seed = 0;
    long n_random = 0;
    long exponent = 0; // N = ceil(max |slope|)
    std::vector<long> r_values;
    std::vector<SandwichVector> vectors;
    std::vector<std::vector<double>> ratios; // [vector][r index]
    bool all_bounded = false;
};

// Track ratio_v(r) = |RT v|^2 / |v|^2 for unit test vectors v supported on
// the first few basis rows: e_1..e_K plus n_random seeded complex Gaussian
// vectors, K = min(6, m at the smallest admissible r). With N the smallest
// integer dominating every log-log slope, both ratio/r^N and 1/(ratio*r^N)
// must stay bounded: the maximum over the top third of the r-range must
// not exceed the maximum over the rest by more than 5%.
SandwichResult sandwich_check(long p, long q, long r_min, long r_max,
                              unsigned long long seed, long n_random);

} // namespace cableops::analysis
