#ifndef HYPERJET_COHOMOLOGY_HPP
#define HYPERJET_COHOMOLOGY_HPP

// Exact cohomology of twisted Schur bundles.
//
// Ambient space: for a shape with n+1 parts on P^{n+1} and a twist t, set
// t_i = l_i - i + |l|.  Then chi(t) is the product formula below, at most
// one h^q is nonzero, and h^q picks up (-1)^q chi(t) exactly on the window
// t_{q+1} + 1 <= t <= t_q - 1 (t_0 = +inf, t_{n+2} = -inf).
//
// Hypersurface X^n of degree d in P^{n+1}: line bundles and the exterior
// powers of the cotangent bundle admit closed dimension formulas; a general
// twisted Schur bundle gets its chi through three exact-sequence steps:
//   (1) split off the full columns: S^(l) = S^(l - l_n .. 0) (x) K_X^{l_n},
//       K_X = O_X(d - n - 2);
//   (2) resolve the cotangent Schur bundle of X by restricted ambient
//       Schur bundles: chi(X, S^(l') (x) O(t')) =
//       sum_{k} (-1)^k sum_{|delta| = k} chi(X, Om^(l'-delta)|_X (x) O(t'-kd)),
//       delta running over 0/1 vectors on the first depth(l') rows that
//       leave a partition (one box off per chosen row);
//   (3) restrict: chi(X, Om^(s)|_X) = chi(P, Om^(s)) - chi(P, Om^(s-d)).
//
// Dimension formulas use the cutoff binomial; chi formulas use the
// falling-factorial binomial.  See rational.hpp.

#include <optional>
#include <string>
#include <vector>

#include "hyperjet/partition.hpp"
#include "hyperjet/rational.hpp"

namespace hyperjet {

struct HypersurfaceContext {
    int n = 2;
    long d = 5;

    long canonical_twist() const { return d - n - 2; }   // K_X = O_X(d-n-2)
    bool general_type() const { return d >= n + 3; }
};

struct CohomologyVector {
    std::vector<Int> h;   // indices 0..top
    Int chi{0};
    std::string route;
};

// --- ambient projective space -------------------------------------------

// chi(P^{n+1}, Om^{(shape)} (x) O(t)) by the product formula; the result is
// an integer for every integer t.
Int chi_projective(int n, const Partition& shape, long t);

// Full cohomology vector on P^{n+1} (indices 0..n+1).
CohomologyVector projective_cohomology(int n, const Partition& shape, long t);

// --- hypersurface --------------------------------------------------------

CohomologyVector line_bundle_cohomology_X(const HypersurfaceContext& ctx, long t);

// Exterior power Om^r_X (x) O_X(t), 0 <= r <= n.
CohomologyVector lambda_cohomology_X(const HypersurfaceContext& ctx, int r, long t);

// chi(X, S^{(shape)} T*_X (x) O_X(t)) through the three-step pipeline.
Int chi_schur_exact(const HypersurfaceContext& ctx, const Partition& shape, long t);

// chi of the full graded jet bundle: sum_l M_l * chi(X, S^(l) T*_X).
Int chi_gr(const HypersurfaceContext& ctx, int kappa, long m, long max_cells = 4096);

// Leading homogeneous form (degree n(n+1)/2 in the shape) of chi, evaluated
// at the given shape: (-1)^n * sum over partitions nu of n of
//   int_X C_{nu^c} / prod_r (nu_r + n - r)! * det(l_c^{nu_r + n - r}).
// C_{nu^c} is the determinant det(c_{nu^c_r + c - r}) in the Chern classes
// of T_X (c_0 = 1, c_k = 0 outside 0..n).  Degenerates to 0 when the shape
// has repeated parts (equal determinant columns).
Rat giambelli_chi_leading(const HypersurfaceContext& ctx, const Partition& shape);

struct VanishingCheck {
    bool applies = false;    // d >= n+3 and l_n >= 1
    bool vanishes = false;   // l_n >= threshold
    Rat threshold{0};        // (n(d-1) + (l_1-l_n) + sum_{i<n}(l_i-l_n)) / (d-n-2)
};

VanishingCheck vanishing_threshold(const HypersurfaceContext& ctx, const Partition& shape);

struct MajorantResult {
    bool applies = false;   // |l| >= 1 + 2n^2 + (n+1)(d-n-2)
    Int bound{0};           // sum_{j=0}^{q} (-1)^j C(q,j) chi(S^(l) (x) O(3(q+1-j)|l|))
};

MajorantResult hq_majorant(const HypersurfaceContext& ctx, const Partition& shape, int q);

struct VanishingRow {
    Partition partition;
    bool vanishes = false;
    Rat threshold{0};
    Int chi{0};
};

struct H0Report {
    HypersurfaceContext ctx;
    int kappa = 1;
    long m = 1;
    Int chi_gr{0};
    std::vector<VanishingRow> vanishing;
    std::string leading_coefficient_symbolic;   // fixed symbolic string
    bool general_type = false;                  // the positivity verdict: d >= n+3
};

H0Report h0_report(const HypersurfaceContext& ctx, int kappa, long m, long max_cells = 4096);

}  // namespace hyperjet

#endif
