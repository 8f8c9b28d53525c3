#ifndef HYPERJET_CHERN_HPP
#define HYPERJET_CHERN_HPP

// Chern classes of a smooth degree-d hypersurface X^n in P^{n+1}, reduced
// to polynomials in d.  With h the hyperplane class, c_k(T_X) = g_k(d) h^k
// where the g_k come from the truncated series (1+h)^{n+2} (1+dh)^{-1}
// modulo h^{n+1}.  The dual flag switches to T*_X, i.e. multiplies by
// (-1)^k.  Integration over X multiplies the h^n coefficient by d.

#include <map>
#include <vector>

#include "hyperjet/partition.hpp"
#include "hyperjet/poly.hpp"
#include "hyperjet/rational.hpp"

namespace hyperjet {

// g_k(d) for k = 0..n: coefficient of h^k in the total Chern class of T_X,
// as an exact polynomial in d.
std::vector<Poly> chern_coefficient_polys(int n);

struct ChernClass {
    Poly magnitude;   // polynomial q_k(d) with c_k = (-1)^k h^k q_k(d)
    int parity;       // (-1)^k
};

// k-th Chern class of T_X in the sign-split form of the tangent/cotangent
// dictionary: c_k = parity * h^k * magnitude(d).
ChernClass chern_class(int n, int k);

// Integral over X of c_1^{tau_1} ... c_n^{tau_n} (dual classes when dual),
// as an exact polynomial in d.  Requires weighted degree sum k*tau_k = n.
// The constant coefficient of the result vanishes identically.
Poly integrate_chern_monomial(int n, const std::vector<int>& tau, bool dual);

// Integral over X (at a concrete degree d) of the monomial symmetric
// function m_lambda evaluated on the Chern roots of T*_X (dual = true) or
// T_X.  lambda must be a partition of n with at most n parts.
Rat integrate_monomial_symmetric(int n, long d, const Partition& lambda, bool dual);

// Expansion of the monomial symmetric function m_lambda (in n variables)
// over products of elementary symmetric functions: the returned map sends
// an exponent vector (t_1,...,t_n) for e_1^{t_1}...e_n^{t_n} to its
// rational coefficient.
std::map<std::vector<int>, Rat> monomial_to_elementary(int n, const Partition& lambda);

}  // namespace hyperjet

#endif
