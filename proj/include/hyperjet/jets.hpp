#ifndef HYPERJET_JETS_HPP
#define HYPERJET_JETS_HPP

// Jet-differential combinatorics.  The graded bundle attached to the
// order-kappa, weight-m jet bundle of a rank-n cotangent space is
//   (+)_{l_1 + 2 l_2 + ... + kappa l_kappa = m} Sym^{l_1} (x) ... (x) Sym^{l_kappa},
// whose rank counts tuples (a_1,...,a_kappa) in (N^n)^kappa with
// sum i*|a_i| = m.  Three independent rank routes are kept side by side;
// their agreement is one of the standing cross-checks.

#include <map>
#include <vector>

#include "hyperjet/partition.hpp"
#include "hyperjet/rational.hpp"
#include "hyperjet/ssyt.hpp"

namespace hyperjet {

struct JetConfig {
    int n = 1;
    int kappa = 1;
    long m = 1;
};

// Weighted-composition DP route.
Int gg_rank(const JetConfig& cfg);

// All (l_1,...,l_kappa) with sum i*l_i = m, lexicographically descending.
std::vector<std::vector<int>> graded_components(int kappa, long m);

// Rank via the graded decomposition: sum over components of
// prod_i C(l_i + n - 1, n - 1).
Int gg_rank_from_components(const JetConfig& cfg);

// Rank via the Schur decomposition: sum_l M_l * schur_rank(l, n).
Int gg_rank_from_schur(const JetConfig& cfg);

// The Schur decomposition of the graded bundle (shape -> multiplicity).
std::map<Partition, Int, std::greater<Partition>>
gr_schur_decomposition(const JetConfig& cfg, long max_cells = 4096);

struct FdBTerm {
    Int coefficient;                           // lambda! / prod (tau!^mu * mu!)
    std::vector<std::pair<int, int>> orders;   // (tau_c, mu_c), tau strictly increasing
};

// Terms of the order-lambda multivariate chain rule: over e >= 1, strictly
// increasing derivative orders tau_1 < ... < tau_e with multiplicities
// mu_c >= 1 and sum mu_c tau_c = lambda.
std::vector<FdBTerm> faa_di_bruno(int lambda);

}  // namespace hyperjet

#endif
