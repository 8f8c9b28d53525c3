#include "hyperjet/jets.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperjet/capacity.hpp"

namespace hyperjet {

Int gg_rank(const JetConfig& cfg)
{
    if (cfg.n < 1 || cfg.kappa < 1 || cfg.m < 0)
        throw std::invalid_argument("gg_rank: bad configuration");
    require_capacity(cfg.m <= 100000, "gg_rank: weight cap exceeded");
    // f_i[w] = number of (a_1..a_i) with sum j*|a_j| = w; a multi-index a
    // with |a| = j contributes C(j+n-1, n-1) choices.
    std::vector<Int> f(cfg.m + 1, Int(0));
    f[0] = 1;
    for (int i = 1; i <= cfg.kappa; ++i) {
        std::vector<Int> g(cfg.m + 1, Int(0));
        for (long w = 0; w <= cfg.m; ++w) {
            if (f[w] == 0 && w > 0) continue;
            for (long j = 0; w + static_cast<long>(i) * j <= cfg.m; ++j)
                g[w + i * j] += f[w] * binom_nn(j + cfg.n - 1, cfg.n - 1);
        }
        f = std::move(g);
    }
    return f[cfg.m];
}

std::vector<std::vector<int>> graded_components(int kappa, long m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(kappa, 0);
    auto rec = [&](auto&& self, int i, long rest) -> void {
        if (i == kappa) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        if (i == kappa - 1) {
            if (rest % kappa == 0) {
                cur[i] = static_cast<int>(rest / kappa);
                out.push_back(cur);
                cur[i] = 0;
            }
            return;
        }
        for (long v = rest / (i + 1); v >= 0; --v) {
            cur[i] = static_cast<int>(v);
            self(self, i + 1, rest - (i + 1) * v);
        }
        cur[i] = 0;
    };
    rec(rec, 0, m);
    return out;
}

Int gg_rank_from_components(const JetConfig& cfg)
{
    Int total(0);
    for (const auto& comp : graded_components(cfg.kappa, cfg.m)) {
        Int prod(1);
        for (int l : comp) prod *= binom_nn(long(l) + cfg.n - 1, cfg.n - 1);
        total += prod;
    }
    return total;
}

Int gg_rank_from_schur(const JetConfig& cfg)
{
    Int total(0);
    for (const auto& [shape, mult] : gr_schur_decomposition(cfg))
        total += mult * schur_rank(shape, cfg.n);
    return total;
}

std::map<Partition, Int, std::greater<Partition>>
gr_schur_decomposition(const JetConfig& cfg, long max_cells)
{
    return multiplicity_table(cfg.n, cfg.kappa, cfg.m, max_cells);
}

std::vector<FdBTerm> faa_di_bruno(int lambda)
{
    if (lambda < 1) throw std::invalid_argument("faa_di_bruno: lambda >= 1");
    // One term per multiset {tau_c with multiplicity mu_c}, i.e. per integer
    // partition of lambda grouped by distinct part.
    std::vector<FdBTerm> out;
    std::vector<std::pair<int, int>> cur;   // (tau, mu), tau increasing
    auto rec = [&](auto&& self, int min_tau, int rest) -> void {
        if (rest == 0) {
            FdBTerm t;
            t.orders = cur;
            Int den(1);
            for (auto [tau, mu] : cur) {
                den *= int_pow(factorial(tau), mu);
                den *= factorial(mu);
            }
            Int num = factorial(lambda);
            t.coefficient = num / den;
            out.push_back(std::move(t));
            return;
        }
        for (int tau = min_tau; tau <= rest; ++tau)
            for (int mu = 1; mu * tau <= rest; ++mu) {
                cur.emplace_back(tau, mu);
                self(self, tau + 1, rest - mu * tau);
                cur.pop_back();
            }
    };
    rec(rec, 1, lambda);
    std::sort(out.begin(), out.end(), [](const FdBTerm& a, const FdBTerm& b) {
        return a.orders < b.orders;
    });
    return out;
}

}  // namespace hyperjet
