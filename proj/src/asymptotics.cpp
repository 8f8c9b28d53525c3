#include "hyperjet/asymptotics.hpp"

#include <cassert>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hyperjet/capacity.hpp"
#include "hyperjet/chern.hpp"
#include "hyperjet/families.hpp"
#include "hyperjet/jets.hpp"
#include "hyperjet/partition.hpp"
#include "hyperjet/ssyt.hpp"

namespace hyperjet {

Rat polylog_sum_range(long a, long b, int q)
{
    if (a < 1 || b < a) throw std::invalid_argument("polylog_sum_range: 1 <= a <= b");
    if (q < 0) throw std::invalid_argument("polylog_sum_range: q >= 0");
    std::vector<Rat> p(q + 1, Rat(0)), h(q + 1, Rat(0));
    for (int j = 1; j <= q; ++j)
        for (long i = a; i <= b; ++i) p[j] += Rat(1) / rat_pow(Rat(i), j);
    h[0] = 1;
    for (int k = 1; k <= q; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += p[j] * h[k - j];
        h[k] = acc / Rat(k);
    }
    return h[q];
}

Rat polylog_sum(long kappa, int q)
{
    return polylog_sum_range(1, kappa, q);
}

Rat polylog_direct(long kappa, int q)
{
    // sum over 1 <= i_1 <= ... <= i_q <= kappa of prod 1/i_j
    Rat total(0);
    std::vector<long> idx;
    auto rec = [&](auto&& self, int pos, long lo, Rat prod) -> void {
        if (pos == q) {
            total += prod;
            return;
        }
        for (long i = lo; i <= kappa; ++i) self(self, pos + 1, i, prod / Rat(i));
    };
    rec(rec, 0, 1, Rat(1));
    return total;
}

double polylog_sum_float(long kappa, int q)
{
    std::vector<double> p(q + 1, 0.0), h(q + 1, 0.0);
    for (int j = 1; j <= q; ++j)
        for (long i = 1; i <= kappa; ++i) p[j] += std::pow(static_cast<double>(i), -j);
    h[0] = 1.0;
    for (int k = 1; k <= q; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += p[j] * h[k - j];
        h[k] = acc / k;
    }
    return h[q];
}

double polylog_gap(long kappa, int q)
{
    double hq = polylog_sum_float(kappa, q);
    double lead = std::pow(std::log(static_cast<double>(kappa)), q);
    double fact = 1.0;
    for (int i = 2; i <= q; ++i) fact *= i;
    return std::fabs(fact * hq / lead - 1.0);
}

Rat simplex_moment(const std::vector<long>& j)
{
    const int p = static_cast<int>(j.size());
    if (p < 2) throw std::invalid_argument("simplex_moment: needs at least two exponents");
    long total = 0;
    Int num(1);
    for (long e : j) {
        if (e < 0) throw std::invalid_argument("simplex_moment: exponents >= 0");
        num *= factorial(e);
        total += e;
    }
    return make_rat(num, factorial(total + p - 1));
}

Rat simplex_moment_recursive(const std::vector<long>& j)
{
    const int p = static_cast<int>(j.size());
    if (p < 2) throw std::invalid_argument("simplex_moment_recursive: needs at least two exponents");
    if (p == 2)
        return make_rat(factorial(j[0]) * factorial(j[1]), factorial(j[0] + j[1] + 1));
    long merged = j[0] + j[p - 1] + 1;
    Rat front = make_rat(factorial(j[0]) * factorial(j[p - 1]), factorial(merged));
    std::vector<long> rest;
    rest.push_back(merged);
    for (int i = 1; i + 1 < p; ++i) rest.push_back(j[i]);
    return front * simplex_moment_recursive(rest);
}

Int basic_numerical_sum(int n, int kappa, long m, const std::vector<int>& alpha,
                        long max_cells)
{
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("basic_numerical_sum: alpha needs n exponents");
    Int total(0);
    for (const auto& [shape, mult] : multiplicity_table(n, kappa, m, max_cells)) {
        Int mono(1);
        for (int i = 0; i < n; ++i) {
            long gap = (i + 1 < n) ? shape[i] - shape[i + 1] : shape[i];
            mono *= int_pow(Int(gap), alpha[i]);   // 0^0 = 1
        }
        total += mult * mono;
    }
    return total;
}

double kernel_sum(int n, int kappa, const std::vector<int>& alpha0)
{
    if (n < 2) throw std::invalid_argument("kernel_sum: n >= 2");
    if (kappa < n) throw std::invalid_argument("kernel_sum: kappa >= n");
    std::vector<int> alpha = alpha0;
    alpha.resize(n, 0);
    if (alpha[n - 1] != 0)
        throw std::invalid_argument("kernel_sum: top-height exponent must vanish");

    if (n == 2) {
        // classical single-sum form: Riemann approximation of
        // int_0^1 (-log x)^a dx = a!
        double acc = 0.0;
        for (long mu = 1; mu <= kappa - 1; ++mu)
            acc += std::pow(std::log(static_cast<double>(kappa)) - std::log(static_cast<double>(mu)),
                            alpha[0]);
        return acc / static_cast<double>(kappa);
    }

    double total = 0.0;
    Int kf = factorial(kappa);
    Int kfn = kf;
    for (int i = 1; i < n; ++i) kfn *= kf;
    for (const NablaPoint& pt : nabla_points(n, kappa)) {
        Rat weight(kfn);
        for (int i = 1; i <= n; ++i) {
            Int paths = tight_path_count_det(pt.mu[i - 1], pt.nu[i - 1]);
            Int window(1);
            for (long w = pt.wmin[i - 1]; w <= pt.wmax[i - 1]; ++w) window *= w;
            weight *= make_rat(paths, window);
        }
        double logs = 1.0;
        for (int i = 1; i <= n; ++i) {
            if (alpha[i - 1] == 0) continue;
            double span = std::log(static_cast<double>(pt.wmax[i - 1])) -
                          std::log(static_cast<double>(pt.wmin[i - 1]));
            logs *= std::pow(span, alpha[i - 1]);
        }
        total += weight.get_d() * logs;
    }
    return total;
}

Rat kernel_weight_identity_lhs(long kappa)
{
    Rat total(0);
    for (long l = 1; l <= kappa; ++l) total += Rat(1) / Rat(l * l);
    return total;
}

Rat kernel_weight_identity_rhs(long kappa)
{
    // weights of the two-block entry points, against the degree-3
    // homogeneous value over the height-1 weight window
    Rat total(0);
    Int kf2 = factorial(kappa) * factorial(kappa);
    for (long mu = 1; mu <= kappa - 1; ++mu) {
        Int n1 = tight_path_count({static_cast<int>(mu)}, {static_cast<int>(kappa)});
        Int n2 = tight_path_count({1, 2}, {static_cast<int>(mu), static_cast<int>(kappa)});
        Int win1(1);
        for (long w = mu; w <= kappa; ++w) win1 *= w;
        Int win2(1);
        for (long w = 3; w <= kappa + mu; ++w) win2 *= w;
        Rat weight = Rat(kf2) * make_rat(n1, win1) * make_rat(n2, win2);
        total += weight * polylog_sum_range(mu, kappa, 3);
    }
    return total;
}

Rat characteristic_bracket(int n, long d, int kappa)
{
    std::vector<Partition> lambdas;
    partitions_exact(n, n, lambdas);
    Rat total(0);
    for (const auto& lam : lambdas) {
        Rat w(1);
        for (int part : lam) {
            if (part == 0) break;
            w *= polylog_sum(kappa, part);
        }
        total += w * integrate_monomial_symmetric(n, d, lam, /*dual=*/true);
    }
    return total;
}

HarnessTable leading_coefficient_harness(int n, long d, int kappa, long m_lo, long m_hi,
                                         long max_cells)
{
    if (m_lo < 1 || m_hi < m_lo)
        throw std::invalid_argument("leading_coefficient_harness: bad m range");
    HarnessTable table;
    table.n = n;
    table.d = d;
    table.kappa = kappa;
    table.order = (kappa + 1) * n - 1;
    table.step = 1;
    for (long i = 2; i <= kappa; ++i) table.step = std::lcm(table.step, i);

    HypersurfaceContext ctx{n, d};
    const int D = table.order;
    const long h = table.step;

    Int denom = factorial(D);
    for (int i = 0; i < n; ++i) denom *= factorial(kappa);
    table.predicted = characteristic_bracket(n, d, kappa) / Rat(denom);

    require_capacity(m_hi + static_cast<long>(D) * h <= 100000,
                     "leading_coefficient_harness: m range");

    // chi values on the lattice needed by the forward differences
    std::map<long, Int> chi;
    for (long m = m_lo; m <= m_hi; ++m)
        for (int k = 0; k <= D; ++k) {
            long at = m + static_cast<long>(k) * h;
            if (!chi.count(at)) chi[at] = chi_gr(ctx, kappa, at, max_cells);
        }

    Int hpow = int_pow(Int(h), D);
    for (long m = m_lo; m <= m_hi; ++m) {
        HarnessRow row;
        row.m = m;
        row.chi = chi.at(m);
        Int diff(0);
        for (int k = 0; k <= D; ++k) {
            Int term = binom_nn(long(D), k) * chi.at(m + static_cast<long>(D - k) * h);
            diff += (k % 2 == 0) ? term : -term;
        }
        row.estimate = make_rat(diff, factorial(D) * hpow);
        row.ratio = (table.predicted == 0) ? Rat(0) : row.estimate / table.predicted;
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace hyperjet
