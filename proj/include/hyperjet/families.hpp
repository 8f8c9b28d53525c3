// Column-block families of semistandard tableaux.
//
// Reading a tableau left to right, columns of equal height form a block
// (taller blocks sit to the left).  A block is summarized by its first
// and last distinct columns and the count of distinct columns between
// them; the family of a tableau is the list of these summaries.  Maximal
// families are parametrized by their block entry points (nabla_points),
// and within one block the distinct columns of a maximal family trace a
// tight lattice path counted by tight_path_count.
#pragma once

#include <vector>

#include "hyperjet/rational.hpp"
#include "hyperjet/ssyt.hpp"

namespace hyperjet {

struct BlockData {
    int height = 0;
    std::vector<int> mu;   // first distinct column, top to bottom
    std::vector<int> nu;   // last distinct column
    int tau = 0;           // distinct columns minus one
    bool operator==(const BlockData&) const = default;
    auto operator<=>(const BlockData&) const = default;
};

struct FamilyKey {
    std::vector<BlockData> blocks;   // tallest block first
    bool operator==(const FamilyKey&) const = default;
    auto operator<=>(const FamilyKey&) const = default;
};

FamilyKey classify_tableau(const Tableau& t);

// Total distinct-column count of the tableau, Sum_i (1 + tau_i).
int distinct_column_count(const FamilyKey& key);
// Upper bound e*kappa - e(e-1)/2 with e = min(n, kappa) on
// distinct_column_count; equals n*kappa - n(n-1)/2 whenever kappa >= n-1.
long distinct_column_bound(int n, int kappa);

// A family is maximal when every height 1..n occurs, the tallest block
// starts at the minimal column (1,..,n), each block ends at the entry
// column of the next shorter block extended by kappa, and each block's
// distinct columns move by unit steps only.  For kappa >= n this is
// equivalent to saturating distinct_column_bound.
bool is_maximal_family(const FamilyKey& key, int n, int kappa);

// Entry-point data of one maximal family.
struct NablaPoint {
    std::vector<std::vector<int>> mu;   // mu[i-1] = entry column of the height-i block
    std::vector<std::vector<int>> nu;   // nu[i-1] = mu[i-2] with kappa appended
    std::vector<long> wmin, wmax;       // column weights at entry and exit
    FamilyKey key() const;
};
std::vector<NablaPoint> nabla_points(int n, int kappa);

// Unit-step paths between strictly increasing columns: each step raises
// one entry by one and every intermediate column stays strictly
// increasing.  Primary count is a memoized recursion; the dfs walker and
// the factorial determinant are independent routes; the multinomial is
// an upper bound (paths without the monotonicity constraint).
Int tight_path_count(const std::vector<int>& from, const std::vector<int>& to);
Int tight_path_count_dfs(const std::vector<int>& from, const std::vector<int>& to);
Int tight_path_count_det(const std::vector<int>& from, const std::vector<int>& to);
Int tight_path_upper_bound(const std::vector<int>& from, const std::vector<int>& to);

// Weighted count of column multiplicity patterns: over all choices of
// a_s >= 1 (one per chain position s = 0..tau_i per block) with total
// column weight m, sum the product over blocks of (number of columns in
// the block)^alpha_i.  alpha[i-1] weights the height-i block.
Int family_sum(const NablaPoint& pt, long m, const std::vector<int>& alpha);
Int family_sum(const FamilyKey& key, long m, const std::vector<int>& alpha);

}  // namespace hyperjet
