// Polylogarithmic sums, simplex moments, kernel sums over family entry
// points, and the finite-difference harness that extracts the leading
// growth coefficient of the graded characteristic.
#pragma once

#include <vector>

#include "hyperjet/cohomology.hpp"
#include "hyperjet/rational.hpp"

namespace hyperjet {

// Complete homogeneous symmetric value h_q(1, 1/2, ..., 1/kappa) through
// the Newton recurrence q*h_q = sum_j p_j h_{q-j}.
Rat polylog_sum(long kappa, int q);
// Same value over the reciprocals of an integer window [a..b].
Rat polylog_sum_range(long a, long b, int q);
// Direct expansion over exponent multisets; small inputs only.
Rat polylog_direct(long kappa, int q);
double polylog_sum_float(long kappa, int q);
// |q! h_q / (log kappa)^q - 1|, the relative distance to the leading form.
double polylog_gap(long kappa, int q);

// Moment of x1^j1 ... xp^jp over the standard simplex x_i >= 0,
// sum x_i <= 1, normalized so that all-zero exponents give the volume.
Rat simplex_moment(const std::vector<long>& j);
Rat simplex_moment_recursive(const std::vector<long>& j);

// Sum over all semistandard tableaux of weight m (entries <= kappa,
// depth <= n) of prod_i (#columns of height i)^alpha_i; 0^0 = 1.
Int basic_numerical_sum(int n, int kappa, long m, const std::vector<int>& alpha,
                        long max_cells = 4096);

// Kernel sums over family entry points.  For n = 2 the classical
// single-sum approximation (1/kappa) sum_mu (log kappa - log mu)^alpha1
// is used; it tends to alpha1! and is exact (kappa-1)/kappa at alpha1=0.
// For n >= 3 the sum runs over nabla_points with the factorial weight
// (kappa!)^n prod_i N_i / (wmin_i ... wmax_i) and log-span factors.
double kernel_sum(int n, int kappa, const std::vector<int>& alpha);

// Exact identity pinning the factorial weights at n = 2: the weighted
// sum of degree-3 homogeneous values over the block-1 weight window
// reproduces sum_{l<=kappa} 1/l^2.
Rat kernel_weight_identity_lhs(long kappa);
Rat kernel_weight_identity_rhs(long kappa);

// Exact rational prediction for the top-degree coefficient bracket:
// sum over partitions q of n of prod_j h_{q_j}(1,...,1/kappa) times the
// integral of the monomial symmetric function in the dual Chern roots.
Rat characteristic_bracket(int n, long d, int kappa);

struct HarnessRow {
    long m = 0;
    Int chi;
    Rat estimate;   // order-D difference of chi at step h, over D! h^D
    Rat ratio;      // estimate / predicted
};
struct HarnessTable {
    int n = 0;
    long d = 0;
    int kappa = 0;
    int order = 0;    // difference order D = (kappa+1)n - 1
    long step = 0;    // lcm(1..kappa), clears the quasi-period of chi
    Rat predicted;    // bracket / ((kappa!)^n D!)
    std::vector<HarnessRow> rows;
};
// Exact chi of the graded bundle for each m in [m_lo, m_hi], with the
// empirical leading coefficient from forward differences.
HarnessTable leading_coefficient_harness(int n, long d, int kappa, long m_lo, long m_hi,
                                         long max_cells = 100000);

}  // namespace hyperjet
