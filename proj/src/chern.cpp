#include "hyperjet/chern.hpp"

#include <cassert>
#include <stdexcept>

namespace hyperjet {

std::vector<Poly> chern_coefficient_polys(int n)
{
    if (n < 1) throw std::invalid_argument("chern_coefficient_polys: n >= 1");
    // (1+h)^{n+2} * (1+dh)^{-1} mod h^{n+1}; coefficient of h^k is
    //   sum_{i=0}^{k} C(n+2,i) (-d)^{k-i}.
    std::vector<Poly> g(n + 1);
    for (int k = 0; k <= n; ++k) {
        Poly acc;
        for (int i = 0; i <= k; ++i) {
            Rat c(binom_nn(long(n) + 2, i));
            if ((k - i) % 2 != 0) c = -c;
            acc += Poly::monomial(c, static_cast<std::size_t>(k - i));
        }
        g[k] = acc;
    }
    return g;
}

ChernClass chern_class(int n, int k)
{
    if (k < 1 || k > n) throw std::invalid_argument("chern_class: need 1 <= k <= n");
    std::vector<Poly> g = chern_coefficient_polys(n);
    int parity = (k % 2 == 0) ? 1 : -1;
    return ChernClass{Rat(parity) * g[k], parity};
}

Poly integrate_chern_monomial(int n, const std::vector<int>& tau, bool dual)
{
    long wdeg = 0;
    for (std::size_t k = 0; k < tau.size(); ++k) {
        if (tau[k] < 0) throw std::invalid_argument("integrate_chern_monomial: negative exponent");
        wdeg += static_cast<long>(k + 1) * tau[k];
    }
    if (wdeg != n) throw std::invalid_argument("integrate_chern_monomial: weighted degree must equal n");

    std::vector<Poly> g = chern_coefficient_polys(n);
    Poly prod = Poly::constant(Rat(1));
    for (std::size_t k = 0; k < tau.size(); ++k) {
        for (int rep = 0; rep < tau[k]; ++rep) {
            Poly factor = g[k + 1];
            if (dual && (k + 1) % 2 != 0) factor = Rat(-1) * factor;
            prod = prod * factor;
        }
    }
    // prod is the h^n coefficient of the class product; the integral over X
    // multiplies by int_X h^n = d.
    Poly result = prod * Poly::monomial(Rat(1), 1);
    assert(result.coeff(0) == 0);
    return result;
}

namespace {

// Sparse polynomials in the n Chern root variables, monomial-exponent keyed.
using RootPoly = std::map<std::vector<int>, Rat>;

void add_term(RootPoly& p, const std::vector<int>& e, const Rat& c)
{
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

RootPoly mul(const RootPoly& a, const RootPoly& b)
{
    RootPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(r, e, ca * cb);
        }
    return r;
}

RootPoly elementary(int n, int k)
{
    // e_k: sum over k-subsets.
    RootPoly r;
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            std::vector<int> e(n, 0);
            for (int i : idx) e[i] = 1;
            add_term(r, e, Rat(1));
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (k == 0) {
        add_term(r, std::vector<int>(n, 0), Rat(1));
    } else {
        rec(rec, 0, 0);
    }
    return r;
}

RootPoly monomial_symmetric(int n, const Partition& lambda)
{
    // Sum of x^alpha over the distinct permutations alpha of lambda padded
    // to n entries.
    std::vector<int> base(lambda.begin(), lambda.end());
    base.resize(n, 0);
    std::sort(base.begin(), base.end());
    RootPoly r;
    do {
        add_term(r, base, Rat(1));
    } while (std::next_permutation(base.begin(), base.end()));
    return r;
}

// Exponents of the lex-leading monomial of a symmetric RootPoly, as a
// weakly decreasing tuple.
std::vector<int> leading_partition(const RootPoly& p)
{
    std::vector<int> best;
    for (const auto& [e, c] : p) {
        std::vector<int> s = e;
        std::sort(s.begin(), s.end(), std::greater<int>());
        if (best.empty() || s > best) best = s;
    }
    return best;
}

}  // namespace

std::map<std::vector<int>, Rat> monomial_to_elementary(int n, const Partition& lambda)
{
    if (depth(lambda) > n) throw std::invalid_argument("monomial_to_elementary: depth > n");
    for (int v : lambda)
        if (v > n) throw std::invalid_argument("monomial_to_elementary: part exceeds variable count");

    std::vector<RootPoly> e(n + 1);
    for (int k = 0; k <= n; ++k) e[k] = elementary(n, k);

    RootPoly rest = monomial_symmetric(n, lambda);
    std::map<std::vector<int>, Rat> out;

    // Standard reduction: the elementary product indexed by the conjugate of
    // the leading partition has the same lex-leading monomial, coefficient 1.
    while (!rest.empty()) {
        std::vector<int> lead = leading_partition(rest);
        Rat c;
        for (const auto& [ee, cc] : rest) {
            std::vector<int> s = ee;
            std::sort(s.begin(), s.end(), std::greater<int>());
            if (s == lead) { c = cc; break; }
        }
        Partition lp(lead.begin(), lead.end());
        Partition conj = conjugate(lp);
        std::vector<int> evec(n, 0);   // exponent of e_k at index k-1
        RootPoly prod;
        add_term(prod, std::vector<int>(n, 0), Rat(1));
        for (int part : conj) {
            assert(part >= 1 && part <= n);
            ++evec[part - 1];
            prod = mul(prod, e[part]);
        }
        out[evec] += c;
        for (const auto& [ee, cc] : prod) add_term(rest, ee, -c * cc);
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

Rat integrate_monomial_symmetric(int n, long d, const Partition& lambda, bool dual)
{
    if (cells(lambda) != n)
        throw std::invalid_argument("integrate_monomial_symmetric: |lambda| must equal n");
    auto e_expansion = monomial_to_elementary(n, lambda);
    std::vector<Poly> g = chern_coefficient_polys(n);
    std::vector<Rat> ck(n + 1);   // value of the h^k coefficient of c_k
    for (int k = 1; k <= n; ++k) {
        ck[k] = g[k].eval(Rat(d));
        if (dual && k % 2 != 0) ck[k] = -ck[k];
    }
    Rat total(0);
    for (const auto& [evec, coeff] : e_expansion) {
        Rat term = coeff;
        for (int k = 1; k <= n; ++k)
            for (int rep = 0; rep < evec[k - 1]; ++rep) term *= ck[k];
        total += term;
    }
    return Rat(d) * total;   // int_X h^n = d
}

}  // namespace hyperjet
