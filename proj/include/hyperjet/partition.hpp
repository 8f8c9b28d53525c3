#ifndef HYPERJET_PARTITION_HPP
#define HYPERJET_PARTITION_HPP

// Partitions (weakly decreasing integer tuples).  Convention: a partition
// carried by a rank-n bundle is stored padded with zeros to length n, so
// depth and consecutive differences l_i - l_{i+1} are always well defined.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperjet {

using Partition = std::vector<int>;

inline bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) return false;
    return p.empty() || p.back() >= 0;
}

inline Partition pad(Partition p, int n)
{
    if (static_cast<int>(p.size()) > n) {
        for (std::size_t i = n; i < p.size(); ++i)
            if (p[i] != 0) throw std::invalid_argument("pad: depth exceeds rank");
        p.resize(n);
    } else {
        p.resize(n, 0);
    }
    return p;
}

// Number of nonzero parts.
inline int depth(const Partition& p)
{
    int d = 0;
    for (int v : p)
        if (v > 0) ++d;
    return d;
}

// Cell count |l| = sum of parts.
inline long cells(const Partition& p)
{
    return std::accumulate(p.begin(), p.end(), 0L);
}

// Column lengths d_j, j = 1..l_1.
inline Partition conjugate(const Partition& p)
{
    Partition q;
    if (p.empty() || p[0] == 0) return q;
    q.assign(p[0], 0);
    for (int v : p)
        for (int j = 0; j < v; ++j) ++q[j];
    return q;
}

inline std::string partition_str(const Partition& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

// Lexicographic descending order: the canonical listing order everywhere.
inline bool lex_desc(const Partition& a, const Partition& b) { return a > b; }

// All partitions with at most max_depth parts and |l| = size, padded to
// max_depth, listed lexicographically descending.
inline void partitions_exact(int max_depth, long size, std::vector<Partition>& out)
{
    Partition cur;
    auto rec = [&](auto&& self, long rest, int maxpart, int slots) -> void {
        if (rest == 0) {
            Partition p = cur;
            p.resize(max_depth, 0);
            out.push_back(std::move(p));
            return;
        }
        if (slots == 0) return;
        int hi = static_cast<int>(std::min<long>(maxpart, rest));
        for (int v = hi; v >= 1; --v) {
            cur.push_back(v);
            self(self, rest - v, v, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, size, size > 0 ? static_cast<int>(size) : 0, max_depth);
}

inline std::vector<Partition> partitions_up_to(int max_depth, long max_size)
{
    std::vector<Partition> out;
    for (long s = 0; s <= max_size; ++s) partitions_exact(max_depth, s, out);
    std::sort(out.begin(), out.end(), lex_desc);
    return out;
}

}  // namespace hyperjet

#endif
