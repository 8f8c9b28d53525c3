#include "hyperjet/families.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hyperjet {

FamilyKey classify_tableau(const Tableau& t)
{
    FamilyKey key;
    const int width = t.shape.empty() ? 0 : t.shape[0];
    int j = 0;
    while (j < width) {
        std::vector<int> first = t.column(j);
        const int h = static_cast<int>(first.size());
        BlockData block;
        block.height = h;
        block.mu = first;
        std::vector<int> last = first;
        int distinct = 1;
        ++j;
        while (j < width) {
            std::vector<int> col = t.column(j);
            if (static_cast<int>(col.size()) != h) break;
            if (col != last) {
                last = col;
                ++distinct;
            }
            ++j;
        }
        block.nu = std::move(last);
        block.tau = distinct - 1;
        key.blocks.push_back(std::move(block));
    }
    return key;
}

int distinct_column_count(const FamilyKey& key)
{
    int total = 0;
    for (const auto& b : key.blocks) total += 1 + b.tau;
    return total;
}

long distinct_column_bound(int n, int kappa)
{
    // strict columns cap the usable depth at kappa
    long e = std::min(n, kappa);
    return e * kappa - e * (e - 1) / 2;
}

bool is_maximal_family(const FamilyKey& key, int n, int kappa)
{
    if (static_cast<int>(key.blocks.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        if (key.blocks[i].height != n - i) return false;

    const BlockData& tallest = key.blocks.front();
    for (int l = 0; l < n; ++l)
        if (tallest.mu[l] != l + 1) return false;

    for (int i = 0; i < n; ++i) {
        const BlockData& b = key.blocks[i];
        const int h = b.height;
        // exit column: entry of the next shorter block, extended by kappa
        std::vector<int> want;
        if (h > 1) want = key.blocks[i + 1].mu;
        want.push_back(kappa);
        if (b.nu != want) return false;
        long span = 0;
        for (int l = 0; l < h; ++l) span += b.nu[l] - b.mu[l];
        if (b.tau != span) return false;
    }
    return true;
}

FamilyKey NablaPoint::key() const
{
    FamilyKey k;
    const int n = static_cast<int>(mu.size());
    for (int h = n; h >= 1; --h) {
        BlockData b;
        b.height = h;
        b.mu = mu[h - 1];
        b.nu = nu[h - 1];
        b.tau = static_cast<int>(wmax[h - 1] - wmin[h - 1]);
        k.blocks.push_back(std::move(b));
    }
    return k;
}

std::vector<NablaPoint> nabla_points(int n, int kappa)
{
    if (n < 1 || kappa < 1) throw std::invalid_argument("nabla_points: n, kappa >= 1");
    std::vector<NablaPoint> out;

    // choose entry columns for heights n-1 down to 1; height n is pinned
    std::vector<std::vector<int>> mu(n);
    mu[n - 1].resize(n);
    std::iota(mu[n - 1].begin(), mu[n - 1].end(), 1);
    if (kappa < n) return out;   // no strict column of height n exists

    auto emit = [&]() {
        NablaPoint pt;
        pt.mu = mu;
        pt.nu.resize(n);
        pt.wmin.resize(n);
        pt.wmax.resize(n);
        for (int i = 1; i <= n; ++i) {
            std::vector<int> exit_col = (i >= 2) ? mu[i - 2] : std::vector<int>{};
            exit_col.push_back(kappa);
            pt.nu[i - 1] = std::move(exit_col);
            pt.wmin[i - 1] = std::accumulate(mu[i - 1].begin(), mu[i - 1].end(), 0L);
            pt.wmax[i - 1] = std::accumulate(pt.nu[i - 1].begin(), pt.nu[i - 1].end(), 0L);
        }
        out.push_back(std::move(pt));
    };

    auto rec = [&](auto&& self, int i) -> void {   // i = block height being chosen
        if (i == 0) {
            emit();
            return;
        }
        std::vector<int>& cur = mu[i - 1];
        cur.assign(i, 0);
        auto fill = [&](auto&& fself, int pos, int lo) -> void {
            if (pos == i) {
                self(self, i - 1);
                return;
            }
            // strictly increasing, and at least the taller block's entry so
            // that a unit-step chain to the exit column exists
            int base = std::max(lo, mu[i][pos]);
            for (int v = base; v <= kappa - 1; ++v) {
                cur[pos] = v;
                fself(fself, pos + 1, v + 1);
            }
        };
        fill(fill, 0, 1);
    };
    if (n == 1) {
        emit();
    } else {
        rec(rec, n - 1);
    }
    return out;
}

namespace {

bool strictly_increasing(const std::vector<int>& v)
{
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

Int tight_paths_memo(std::vector<int> cur, const std::vector<int>& to,
                     std::map<std::vector<int>, Int>& memo)
{
    if (cur == to) return 1;
    auto it = memo.find(cur);
    if (it != memo.end()) return it->second;
    Int total(0);
    const int h = static_cast<int>(cur.size());
    for (int l = 0; l < h; ++l) {
        if (cur[l] >= to[l]) continue;
        ++cur[l];
        if (strictly_increasing(cur)) total += tight_paths_memo(cur, to, memo);
        --cur[l];
    }
    memo.emplace(std::move(cur), total);
    return total;
}

}  // namespace

Int tight_path_count(const std::vector<int>& from, const std::vector<int>& to)
{
    if (from.size() != to.size()) throw std::invalid_argument("tight_path_count: size mismatch");
    if (!strictly_increasing(from) || !strictly_increasing(to))
        throw std::invalid_argument("tight_path_count: columns must increase strictly");
    for (size_t l = 0; l < from.size(); ++l)
        if (from[l] > to[l]) return 0;
    std::map<std::vector<int>, Int> memo;
    return tight_paths_memo(from, to, memo);
}

Int tight_path_count_dfs(const std::vector<int>& from, const std::vector<int>& to)
{
    if (from == to) return 1;
    Int total(0);
    std::vector<int> cur = from;
    const int h = static_cast<int>(cur.size());
    for (int l = 0; l < h; ++l) {
        if (cur[l] >= to[l]) continue;
        ++cur[l];
        if (strictly_increasing(cur)) total += tight_path_count_dfs(cur, to);
        --cur[l];
    }
    return total;
}

Int tight_path_count_det(const std::vector<int>& from, const std::vector<int>& to)
{
    // columns map to partitions by lam_j = w_{h+1-j} - (h+1-j); a unit step
    // adds one cell, so paths are standard fillings of the skew shape and
    // the factorial determinant counts them.
    const int h = static_cast<int>(from.size());
    std::vector<long> lam(h), mu(h);
    for (int j = 0; j < h; ++j) {
        lam[j] = to[h - 1 - j] - (h - j);
        mu[j] = from[h - 1 - j] - (h - j);
    }
    long total = 0;
    for (int j = 0; j < h; ++j) {
        if (lam[j] < mu[j]) return 0;
        total += lam[j] - mu[j];
    }
    std::vector<std::vector<Rat>> m(h, std::vector<Rat>(h, Rat(0)));
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < h; ++c) {
            long e = lam[r] - mu[c] - r + c;
            if (e >= 0) m[r][c] = Rat(1) / Rat(factorial(e));
        }
    // expansion over permutations; h stays small
    std::vector<int> perm(h);
    for (int i = 0; i < h; ++i) perm[i] = i;
    Rat det(0);
    do {
        int inv = 0;
        for (int i = 0; i < h; ++i)
            for (int j2 = i + 1; j2 < h; ++j2)
                if (perm[i] > perm[j2]) ++inv;
        Rat prod = (inv % 2 == 0) ? Rat(1) : Rat(-1);
        for (int r = 0; r < h; ++r) prod *= m[r][perm[r]];
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rat count = Rat(factorial(total)) * det;
    assert(count.get_den() == 1);
    return count.get_num();
}

Int tight_path_upper_bound(const std::vector<int>& from, const std::vector<int>& to)
{
    long total = 0;
    Int denom(1);
    for (size_t l = 0; l < from.size(); ++l) {
        long gap = to[l] - from[l];
        if (gap < 0) return 0;
        total += gap;
        denom *= factorial(gap);
    }
    Int num = factorial(total);
    assert(num % denom == 0);
    return num / denom;
}

namespace {

Int family_sum_core(const std::vector<long>& wmin_all, const std::vector<long>& wmax_all,
                    long m, const std::vector<int>& alpha)
{
    const int n = static_cast<int>(wmin_all.size());
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("family_sum: alpha needs one exponent per height");

    // per block: weight-indexed sums of (column count)^alpha_i over all
    // a_s >= 1 choices; blocks then convolve
    std::vector<Int> acc(m + 1, Int(0));
    acc[0] = 1;
    for (int i = 1; i <= n; ++i) {
        const long wmin = wmin_all[i - 1];
        const long wmax = wmax_all[i - 1];
        const int a = alpha[i - 1];
        // dp over chain positions: weight -> column count -> ways
        std::vector<std::map<long, Int>> dp(m + 1);
        dp[0][0] = 1;
        for (long s = wmin; s <= wmax; ++s) {
            std::vector<std::map<long, Int>> next(m + 1);
            for (long w = 0; w <= m; ++w)
                for (const auto& [cnt, ways] : dp[w])
                    for (long mult = 1; w + mult * s <= m; ++mult)
                        next[w + mult * s][cnt + mult] += ways;
            dp = std::move(next);
        }
        std::vector<Int> block(m + 1, Int(0));
        for (long w = 0; w <= m; ++w)
            for (const auto& [cnt, ways] : dp[w])
                block[w] += ways * int_pow(Int(cnt), a);
        std::vector<Int> merged(m + 1, Int(0));
        for (long w1 = 0; w1 <= m; ++w1) {
            if (acc[w1] == 0) continue;
            for (long w2 = 0; w1 + w2 <= m; ++w2)
                if (block[w2] != 0) merged[w1 + w2] += acc[w1] * block[w2];
        }
        acc = std::move(merged);
    }
    return acc[m];
}

}  // namespace

Int family_sum(const NablaPoint& pt, long m, const std::vector<int>& alpha)
{
    return family_sum_core(pt.wmin, pt.wmax, m, alpha);
}

Int family_sum(const FamilyKey& key, long m, const std::vector<int>& alpha)
{
    const int n = static_cast<int>(key.blocks.size());
    std::vector<long> wmin(n), wmax(n);
    for (int i = 0; i < n; ++i) {
        const BlockData& b = key.blocks[i];
        if (b.height != n - i)
            throw std::invalid_argument("family_sum: key must carry blocks of every height");
        long lo = std::accumulate(b.mu.begin(), b.mu.end(), 0L);
        long hi = std::accumulate(b.nu.begin(), b.nu.end(), 0L);
        if (b.tau != hi - lo)
            throw std::invalid_argument("family_sum: key is not maximal (chain not tight)");
        wmin[b.height - 1] = lo;
        wmax[b.height - 1] = hi;
    }
    return family_sum_core(wmin, wmax, m, alpha);
}

}  // namespace hyperjet
