#include "hyperjet/faadibruno.hpp"

#include <stdexcept>

namespace hyperjet {

void MPoly::add(const std::vector<int>& expo, const Rat& c)
{
    if (static_cast<int>(expo.size()) != n_)
        throw std::invalid_argument("MPoly::add: exponent arity mismatch");
    if (c == 0) return;
    auto it = t_.find(expo);
    if (it == t_.end()) {
        t_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

MPoly MPoly::partial(int var) const
{
    MPoly r(n_);
    for (const auto& [e, c] : t_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        --d[var];
        r.add(d, c * Rat(e[var]));
    }
    return r;
}

Poly MPoly::compose(const std::vector<Poly>& f) const
{
    if (static_cast<int>(f.size()) != n_)
        throw std::invalid_argument("MPoly::compose: arity mismatch");
    Poly acc;
    for (const auto& [e, c] : t_) {
        Poly term = Poly::constant(c);
        for (int v = 0; v < n_; ++v)
            if (e[v] > 0) term = term * f[v].pow(e[v]);
        acc += term;
    }
    return acc;
}

Poly poly_derivative(const Poly& p)
{
    std::vector<Rat> d;
    const auto& c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(Rat(long(k)) * c[k]);
    return Poly(std::move(d));
}

namespace {

Poly nth_derivative(Poly p, int k)
{
    for (int i = 0; i < k; ++i) p = poly_derivative(p);
    return p;
}

}  // namespace

Poly faa_di_bruno_apply(const MPoly& psi, const std::vector<Poly>& f, int lambda)
{
    const int n = psi.nvars();
    // Curve derivatives up to order lambda, f_deriv[j][tau].
    std::vector<std::vector<Poly>> f_deriv(n);
    for (int j = 0; j < n; ++j) {
        f_deriv[j].resize(lambda + 1);
        f_deriv[j][0] = f[j];
        for (int tau = 1; tau <= lambda; ++tau)
            f_deriv[j][tau] = poly_derivative(f_deriv[j][tau - 1]);
    }

    Poly total;
    for (const auto& term : faa_di_bruno(lambda)) {
        int slots = 0;
        for (auto [tau, mu] : term.orders) slots += mu;
        // Each slot carries a derivative order tau_c (mu_c slots per c) and
        // receives an independent component index in 1..n.
        std::vector<int> slot_tau;
        for (auto [tau, mu] : term.orders)
            for (int b = 0; b < mu; ++b) slot_tau.push_back(tau);

        std::vector<int> idx(slots, 0);
        while (true) {
            MPoly dpsi = psi;
            for (int s = 0; s < slots; ++s) dpsi = dpsi.partial(idx[s]);
            if (!dpsi.terms().empty()) {
                Poly piece = dpsi.compose(f);
                for (int s = 0; s < slots; ++s)
                    piece = piece * f_deriv[idx[s]][slot_tau[s]];
                total += Rat(term.coefficient) * piece;
            }
            int s = slots - 1;
            while (s >= 0 && idx[s] == n - 1) idx[s--] = 0;
            if (s < 0) break;
            ++idx[s];
        }
    }
    return total;
}

Poly derivative_oracle(const MPoly& psi, const std::vector<Poly>& f, int lambda)
{
    return nth_derivative(psi.compose(f), lambda);
}

}  // namespace hyperjet
