#ifndef HYPERJET_FAADIBRUNO_HPP
#define HYPERJET_FAADIBRUNO_HPP

// Instantiation of the order-lambda chain-rule terms against a concrete
// polynomial map Psi: C^n -> C and a polynomial curve f = (f_1,...,f_n).
// The expander sums, for every term and every assignment of component
// indices to the mu_1 + ... + mu_e derivative slots, the partial derivative
// of Psi (composed with f) times the product of curve-derivative factors.
// Its output must coincide with differentiating Psi(f(z)) directly; that
// comparison is the standing oracle.

#include <map>
#include <vector>

#include "hyperjet/jets.hpp"
#include "hyperjet/poly.hpp"
#include "hyperjet/rational.hpp"

namespace hyperjet {

// Sparse multivariate polynomial, exponent-vector keyed.
class MPoly {
public:
    explicit MPoly(int nvars) : n_(nvars) {}
    int nvars() const { return n_; }

    void add(const std::vector<int>& expo, const Rat& c);
    const std::map<std::vector<int>, Rat>& terms() const { return t_; }

    MPoly partial(int var) const;

    // Substitute univariate polynomials for the variables.
    Poly compose(const std::vector<Poly>& f) const;

private:
    int n_;
    std::map<std::vector<int>, Rat> t_;
};

// d^lambda/dz^lambda of Psi(f_1(z),...,f_n(z)) assembled from the
// faa_di_bruno terms.
Poly faa_di_bruno_apply(const MPoly& psi, const std::vector<Poly>& f, int lambda);

// The same derivative computed directly: compose, then differentiate
// lambda times.
Poly derivative_oracle(const MPoly& psi, const std::vector<Poly>& f, int lambda);

Poly poly_derivative(const Poly& p);

}  // namespace hyperjet

#endif
