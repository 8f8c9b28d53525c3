#include "hyperjet/ssyt.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace hyperjet {

bool is_ssyt(const Tableau& t, int kappa)
{
    const auto& rows = t.rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != (i < t.shape.size() ? t.shape[i] : 0))
            return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > kappa) return false;
            if (j > 0 && rows[i][j - 1] > v) return false;          // rows weak
            if (i > 0 && rows[i - 1][j] >= v) return false;         // columns strict
        }
    }
    return true;
}

namespace {

// Strictly increasing column contents of length h with entries in 1..kappa.
std::vector<std::vector<int>> columns_of_height(int h, int kappa)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == h) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= kappa; ++v) {
            cur.push_back(v);
            self(self, pos + 1, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 1);
    return out;
}

long column_sum(const std::vector<int>& c)
{
    return std::accumulate(c.begin(), c.end(), 0L);
}

}  // namespace

Int count_ssyt(const Partition& shape, int kappa, long m)
{
    if (!is_partition(shape)) throw std::invalid_argument("count_ssyt: not a partition");
    if (kappa < 1 || m < 0) return Int(0);
    Partition heights = conjugate(shape);
    if (heights.empty()) return Int(m == 0 ? 1 : 0);
    if (heights[0] > kappa) return Int(0);   // no strictly increasing column fits
    if (cells(shape) > m || static_cast<long>(kappa) * cells(shape) < m) return Int(0);

    // dp over columns left to right; state = column content, graded by the
    // accumulated weight.  Adjacent columns must be componentwise weakly
    // increasing on shared rows.
    auto cols = columns_of_height(heights[0], kappa);
    std::vector<std::vector<Int>> dp(cols.size());
    for (std::size_t s = 0; s < cols.size(); ++s) {
        long w = column_sum(cols[s]);
        if (w <= m) {
            dp[s].assign(m + 1, Int(0));
            dp[s][w] = 1;
        }
    }
    for (std::size_t j = 1; j < heights.size(); ++j) {
        int h = heights[j];
        auto next_cols = columns_of_height(h, kappa);
        std::vector<std::vector<Int>> nxt(next_cols.size());
        for (std::size_t t = 0; t < next_cols.size(); ++t)
            nxt[t].assign(m + 1, Int(0));
        for (std::size_t s = 0; s < cols.size(); ++s) {
            if (dp[s].empty()) continue;
            for (std::size_t t = 0; t < next_cols.size(); ++t) {
                bool ok = true;
                for (int r = 0; r < h; ++r)
                    if (next_cols[t][r] < cols[s][r]) { ok = false; break; }
                if (!ok) continue;
                long w = column_sum(next_cols[t]);
                for (long u = 0; u + w <= m; ++u)
                    if (dp[s][u] != 0) nxt[t][u + w] += dp[s][u];
            }
        }
        cols = std::move(next_cols);
        dp = std::move(nxt);
    }
    Int total(0);
    for (const auto& v : dp)
        if (!v.empty()) total += v[m];
    return total;
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int kappa, long m, long max_cells)
{
    if (!is_partition(shape)) throw std::invalid_argument("enumerate_ssyt: not a partition");
    require_capacity(cells(shape) <= max_cells, "enumerate_ssyt: shape too large");
    std::vector<Tableau> out;
    int dep = depth(shape);
    Tableau t;
    t.shape = shape;
    t.rows.assign(dep, {});
    for (int i = 0; i < dep; ++i) t.rows[i].assign(shape[i], 0);

    std::function<void(int, int, long)> rec = [&](int i, int j, long wsofar) {
        if (i == dep) {
            if (m < 0 || wsofar == m) out.push_back(t);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= shape[i]) { ni = i + 1; nj = 0; }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);
        if (i > 0) lo = std::max(lo, t.rows[i - 1][j] + 1);
        for (int v = lo; v <= kappa; ++v) {
            if (m >= 0 && wsofar + v > m) break;
            t.rows[i][j] = v;
            rec(ni, nj, wsofar + v);
        }
        t.rows[i][j] = 0;
    };
    if (dep == 0) {
        if (m <= 0) out.push_back(t);
        return out;
    }
    rec(0, 0, 0);
    return out;
}

std::vector<Tableau> enumerate_ssyt_weight(int n, int kappa, long m, long max_cells)
{
    std::vector<Tableau> out;
    for (long size = (m + kappa - 1) / kappa; size <= m; ++size) {
        std::vector<Partition> shapes;
        partitions_exact(n, size, shapes);
        for (const auto& sh : shapes) {
            if (depth(sh) > std::min(n, kappa)) continue;
            auto fills = enumerate_ssyt(sh, kappa, m, max_cells);
            out.insert(out.end(), fills.begin(), fills.end());
        }
    }
    return out;
}

Int count_ssyt_content(const Partition& shape, const std::vector<int>& content)
{
    long m = 0;
    for (std::size_t i = 0; i < content.size(); ++i)
        m += static_cast<long>(i + 1) * content[i];
    long sz = 0;
    for (int c : content) sz += c;
    if (cells(shape) != sz) return Int(0);
    auto fills = enumerate_ssyt(shape, static_cast<int>(content.size()), m);
    Int cnt(0);
    for (const auto& t : fills) {
        std::vector<int> got(content.size(), 0);
        for (const auto& r : t.rows)
            for (int v : r) ++got[v - 1];
        if (std::equal(got.begin(), got.end(), content.begin())) ++cnt;
    }
    return cnt;
}

std::map<Partition, Int, std::greater<Partition>>
multiplicity_table(int n, int kappa, long m, long max_cells)
{
    if (n < 1 || kappa < 1 || m < 1)
        throw std::invalid_argument("multiplicity_table: need n, kappa, m >= 1");
    require_capacity(m <= max_cells, "multiplicity_table: weight exceeds cell cap");
    std::map<Partition, Int, std::greater<Partition>> table;
    for (long size = (m + kappa - 1) / kappa; size <= m; ++size) {
        std::vector<Partition> shapes;
        partitions_exact(n, size, shapes);
        for (const auto& sh : shapes) {
            Int c = count_ssyt(sh, kappa, m);
            if (c != 0) table.emplace(pad(sh, n), std::move(c));
        }
    }
    return table;
}

HookData hook_data(const Partition& shape)
{
    if (depth(shape) == 0) throw std::invalid_argument("hook_data: empty shape");
    Partition cols = conjugate(shape);
    HookData out;
    long r = cells(shape);
    Int denom(1);
    out.hooks.resize(depth(shape));
    for (int i = 0; i < depth(shape); ++i) {
        out.hooks[i].resize(shape[i]);
        for (int j = 0; j < shape[i]; ++j) {
            long h = shape[i] - (j + 1) + cols[j] - (i + 1) + 1;
            out.hooks[i][j] = h;
            denom *= h;
        }
    }
    Int num = factorial(r);
    assert(num % denom == 0);
    out.standard_count = num / denom;
    return out;
}

Int schur_rank(const Partition& shape, int n)
{
    if (depth(shape) > n) throw std::invalid_argument("schur_rank: depth exceeds rank");
    Partition l = pad(shape, n);
    // prod_{i<j} (l_i - l_j + j - i) / (j - i), split as exact Int at the end
    Int num(1), den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= l[i] - l[j] + (j - i);
            den *= (j - i);
        }
    assert(num % den == 0);
    return num / den;
}

}  // namespace hyperjet
