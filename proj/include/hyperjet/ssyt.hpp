#ifndef HYPERJET_SSYT_HPP
#define HYPERJET_SSYT_HPP

// Semi-standard Young tableaux: entries in 1..kappa, weakly increasing
// along rows, strictly increasing down columns; the weight of a filling is
// the sum of its entries.  count_ssyt is a per-column transfer DP; the
// brute-force enumerator stays as the oracle for small shapes.

#include <functional>
#include <map>
#include <vector>

#include "hyperjet/capacity.hpp"
#include "hyperjet/partition.hpp"
#include "hyperjet/rational.hpp"

namespace hyperjet {

struct Tableau {
    Partition shape;                      // padded or not; rows below match depth
    std::vector<std::vector<int>> rows;   // rows[i] has shape[i] entries

    long weight() const
    {
        long w = 0;
        for (const auto& r : rows)
            for (int v : r) w += v;
        return w;
    }

    // Column j entries, top to bottom.
    std::vector<int> column(int j) const
    {
        std::vector<int> col;
        for (const auto& r : rows)
            if (j < static_cast<int>(r.size())) col.push_back(r[j]);
        return col;
    }
};

bool is_ssyt(const Tableau& t, int kappa);

// Number of semi-standard fillings of the given shape with entries <= kappa
// and weight exactly m.
Int count_ssyt(const Partition& shape, int kappa, long m);

// Kostka-type count: fillings with exactly content[i-1] entries equal to i.
// Enumerative; intended for small shapes.
Int count_ssyt_content(const Partition& shape, const std::vector<int>& content);

// All fillings of the shape with entries <= kappa; weight filter optional
// (m < 0 disables it).  Guarded: refuses shapes above max_cells.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int kappa, long m = -1,
                                    long max_cells = 16);

// All fillings of every shape of depth <= n with weight exactly m.
std::vector<Tableau> enumerate_ssyt_weight(int n, int kappa, long m, long max_cells = 16);

// Multiplicities M_l: shape -> number of weight-m fillings with entries
// <= kappa, over all shapes of depth <= n; zero entries omitted.  Shapes
// are padded to n and listed lexicographically descending by the map order.
std::map<Partition, Int, std::greater<Partition>>
multiplicity_table(int n, int kappa, long m, long max_cells = 4096);

struct HookData {
    std::vector<std::vector<long>> hooks;   // hooks[i][j] for cell (i,j)
    Int standard_count;                     // r! / prod hooks
};

// Hook lengths h_{i,j} = l_i - j + d_j - i + 1 (1-based formula) and the
// standard filling count.
HookData hook_data(const Partition& shape);

// Rank of the Schur functor applied to a rank-n bundle:
// prod_{1<=i<j<=n} ((l_i - l_j)/(j-i) + 1).
Int schur_rank(const Partition& shape, int n);

}  // namespace hyperjet

#endif
