#include "hyperjet/delta.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace hyperjet {

std::string delta_str(const DeltaDet& det)
{
    std::string s = "D[";
    for (size_t i = 0; i < det.orders.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(det.orders[i]);
    }
    s += "]";
    return s;
}

CanonicalDet canonicalize_rows(std::vector<int> rows)
{
    CanonicalDet out;
    int sign = 1;
    // insertion sort, one transposition per swap
    for (size_t i = 1; i < rows.size(); ++i)
        for (size_t j = i; j > 0 && rows[j - 1] > rows[j]; --j) {
            std::swap(rows[j - 1], rows[j]);
            sign = -sign;
        }
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1] == rows[i]) return out;
    out.det.orders = std::move(rows);
    out.sign = sign;
    return out;
}

JetPoint random_jet_point(int n, int kappa, RatSampler& rng)
{
    JetPoint p;
    p.values.assign(n, std::vector<Rat>(kappa));
    for (auto& row : p.values)
        for (auto& v : row) v = rng.next();
    return p;
}

Rat det_expand(const std::vector<std::vector<Rat>>& m)
{
    const int k = static_cast<int>(m.size());
    if (k == 0) return Rat(1);
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    Rat total(0);
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rat prod = (inv % 2 == 0) ? Rat(1) : Rat(-1);
        for (int r = 0; r < k && prod != 0; ++r) prod *= m[r][perm[r]];
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Rat delta_eval(const DeltaDet& det, const JetPoint& p)
{
    const int k = det.size();
    if (k > p.functions()) throw std::invalid_argument("delta_eval: minor wider than point");
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
    for (int r = 0; r < k; ++r) {
        if (det.orders[r] < 1 || det.orders[r] > p.order())
            throw std::invalid_argument("delta_eval: order out of range");
        for (int c = 0; c < k; ++c) m[r][c] = p.at(c + 1, det.orders[r]);
    }
    return det_expand(m);
}

bool leq_one(const DeltaDet& a, const DeltaDet& b)
{
    if (a.size() < b.size()) return false;
    for (int u = 0; u < b.size(); ++u)
        if (a.orders[u] > b.orders[u]) return false;
    return true;
}

bool incomparable_one(const DeltaDet& a, const DeltaDet& b)
{
    return !leq_one(a, b) && !leq_one(b, a);
}

namespace {

int listing_parity(const std::vector<int>& source, const std::vector<int>& target)
{
    // parity of the permutation carrying the source listing onto the target
    const int k = static_cast<int>(source.size());
    std::vector<int> seq(k);
    for (int i = 0; i < k; ++i) {
        auto it = std::find(target.begin(), target.end(), source[i]);
        assert(it != target.end());
        seq[i] = static_cast<int>(it - target.begin());
    }
    int inv = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::pair<DeltaDet, DeltaDet> orient_factors(DeltaDet x, DeltaDet y)
{
    // deterministic factor slot: bigger minor first, lex-smaller on ties
    if (x.size() < y.size() || (x.size() == y.size() && y.orders < x.orders))
        std::swap(x, y);
    return {std::move(x), std::move(y)};
}

}  // namespace

std::vector<RelationTerm> pluecker_relation(const DeltaDet& a, const DeltaDet& b)
{
    const auto& lam = a.orders;
    const auto& mu = b.orders;
    const int i = a.size(), j = b.size();
    if (i < j) throw std::invalid_argument("pluecker_relation: orient the bigger minor first");
    if (!incomparable_one(a, b)) throw std::invalid_argument("pluecker_relation: pair is comparable");

    int t = -1;
    for (int u = 0; u < j; ++u)
        if (lam[u] > mu[u]) { t = u + 1; break; }
    assert(t >= 1);

    // exchange window: mu_1 < ... < mu_t < lam_t < ... < lam_i
    std::vector<int> window(mu.begin(), mu.begin() + t);
    window.insert(window.end(), lam.begin() + (t - 1), lam.end());
    const int w = static_cast<int>(window.size());   // i + 1
    assert(std::is_sorted(window.begin(), window.end()));

    std::map<std::pair<DeltaDet, DeltaDet>, int> acc;

    std::vector<int> pick(t);
    for (int u = 0; u < t; ++u) pick[u] = u;
    while (true) {
        std::vector<int> chosen, rest;
        for (int u = 0, p = 0; u < w; ++u) {
            if (p < t && pick[p] == u) {
                chosen.push_back(window[u]);
                ++p;
            } else {
                rest.push_back(window[u]);
            }
        }
        std::vector<int> target = chosen;
        target.insert(target.end(), rest.begin(), rest.end());
        int sgn = listing_parity(window, target);

        std::vector<int> rows1 = chosen;
        rows1.insert(rows1.end(), mu.begin() + t, mu.end());
        std::vector<int> rows2(lam.begin(), lam.begin() + (t - 1));
        rows2.insert(rows2.end(), rest.begin(), rest.end());

        CanonicalDet c1 = canonicalize_rows(std::move(rows1));
        CanonicalDet c2 = canonicalize_rows(std::move(rows2));
        if (c1.sign != 0 && c2.sign != 0) {
            auto key = orient_factors(std::move(c2.det), std::move(c1.det));
            acc[std::move(key)] += sgn * c1.sign * c2.sign;
        }

        // next t-subset of 0..w-1
        int p = t - 1;
        while (p >= 0 && pick[p] == w - t + p) --p;
        if (p < 0) break;
        ++pick[p];
        for (int u = p + 1; u < t; ++u) pick[u] = pick[u - 1] + 1;
    }

    std::vector<RelationTerm> rel;
    for (auto& [key, coeff] : acc) {
        if (coeff == 0) continue;
        rel.push_back({coeff, key.first, key.second});
    }
    return rel;
}

std::vector<std::pair<DeltaDet, DeltaDet>> incomparable_pairs(int n, int kappa)
{
    std::vector<DeltaDet> dets = canonical_dets(n, kappa);
    std::vector<std::pair<DeltaDet, DeltaDet>> out;
    for (size_t x = 0; x < dets.size(); ++x)
        for (size_t y = 0; y < dets.size(); ++y) {
            const DeltaDet& a = dets[x];
            const DeltaDet& b = dets[y];
            if (a.size() < b.size()) continue;
            if (a.size() == b.size() && !(a.orders < b.orders)) continue;
            if (incomparable_one(a, b)) out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Rat relation_eval(const std::vector<RelationTerm>& rel, const JetPoint& p)
{
    Rat total(0);
    for (const auto& term : rel)
        total += Rat(term.coeff) * delta_eval(term.left, p) * delta_eval(term.right, p);
    return total;
}

std::vector<DeltaDet> canonical_dets(int n, int kappa)
{
    std::vector<DeltaDet> vars;
    for (int depth = n; depth >= 1; --depth) {
        std::vector<int> rows(depth);
        // all strictly increasing order tuples, lexicographically
        auto rec = [&](auto&& self, int pos, int lo) -> void {
            if (pos == depth) {
                vars.push_back({rows});
                return;
            }
            for (int v = lo; v <= kappa; ++v) {
                rows[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
    }
    return vars;
}

bool monomial_less_two(const DeltaMonomial& a, const DeltaMonomial& b)
{
    assert(a.size() == b.size());
    for (int u = static_cast<int>(a.size()) - 1; u >= 0; --u)
        if (a[u] != b[u]) return a[u] > b[u];
    return false;
}

namespace {

int var_index(const DeltaDet& det, const std::vector<DeltaDet>& vars)
{
    auto it = std::find(vars.begin(), vars.end(), det);
    if (it == vars.end()) throw std::invalid_argument("minor outside the variable list");
    return static_cast<int>(it - vars.begin());
}

}  // namespace

DeltaMonomial pair_monomial(const DeltaDet& a, const DeltaDet& b,
                            const std::vector<DeltaDet>& vars)
{
    DeltaMonomial m(vars.size(), 0);
    ++m[var_index(a, vars)];
    ++m[var_index(b, vars)];
    return m;
}

DeltaMonomial tableau_monomial(const Tableau& t, const std::vector<DeltaDet>& vars)
{
    DeltaMonomial m(vars.size(), 0);
    const int width = t.shape.empty() ? 0 : t.shape[0];
    for (int j = 0; j < width; ++j) {
        DeltaDet col{t.column(j)};
        ++m[var_index(col, vars)];
    }
    return m;
}

DeltaMonomial relation_leading_monomial(const std::vector<RelationTerm>& rel,
                                        const std::vector<DeltaDet>& vars)
{
    if (rel.empty()) throw std::invalid_argument("empty relation");
    DeltaMonomial best;
    for (const auto& term : rel) {
        DeltaMonomial m = pair_monomial(term.left, term.right, vars);
        if (best.empty() || monomial_less_two(best, m)) best = std::move(m);
    }
    return best;
}

Rat monomial_eval(const DeltaMonomial& mono, const std::vector<DeltaDet>& vars,
                  const JetPoint& p)
{
    Rat total(1);
    for (size_t u = 0; u < mono.size(); ++u) {
        if (mono[u] == 0) continue;
        Rat v = delta_eval(vars[u], p);
        for (int e = 0; e < mono[u]; ++e) total *= v;
    }
    return total;
}

long matrix_rank(std::vector<std::vector<Rat>> m)
{
    const long rows = static_cast<long>(m.size());
    if (rows == 0) return 0;
    const long cols = static_cast<long>(m[0].size());
    long rank = 0;
    long lead = 0;
    for (long r = 0; r < rows && lead < cols; ++r) {
        long pivot = -1;
        while (lead < cols) {
            for (long rr = r; rr < rows; ++rr)
                if (m[rr][lead] != 0) { pivot = rr; break; }
            if (pivot >= 0) break;
            ++lead;
        }
        if (lead == cols) break;
        std::swap(m[r], m[pivot]);
        Rat inv = Rat(1) / m[r][lead];
        for (long c = lead; c < cols; ++c) m[r][c] *= inv;
        for (long rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][lead] == 0) continue;
            Rat f = m[rr][lead];
            for (long c = lead; c < cols; ++c) m[rr][c] -= f * m[r][c];
        }
        ++rank;
        ++lead;
    }
    return rank;
}

}  // namespace hyperjet
