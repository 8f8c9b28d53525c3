// Determinantal algebra of Wronskian-type minors in jet coordinates.
//
// A DeltaDet with orders (a_1 < ... < a_i) stands for the i x i minor
// det( f_c^(a_r) ) over the first i coordinate functions, rows indexed by
// derivative orders.  Products of these minors span the same space as
// semistandard tableau monomials (one minor per tableau column), and the
// incomparable products under the nesting order satisfy quadratic
// exchange relations produced by pluecker_relation.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperjet/rational.hpp"
#include "hyperjet/ssyt.hpp"

namespace hyperjet {

struct DeltaDet {
    std::vector<int> orders;   // strictly increasing, entries in 1..kappa
    int size() const { return static_cast<int>(orders.size()); }
    bool operator==(const DeltaDet&) const = default;
    bool operator<(const DeltaDet& o) const { return orders < o.orders; }
};

std::string delta_str(const DeltaDet& det);

// Canonical presentation of an arbitrary row list: rows sorted ascending
// with the sign of the sorting permutation.  sign == 0 marks a repeated
// row, i.e. the minor vanishes identically.
struct CanonicalDet {
    DeltaDet det;
    int sign = 0;
};
CanonicalDet canonicalize_rows(std::vector<int> rows);

// Point in jet space: values[c][j-1] is the j-th derivative of the
// (c+1)-th coordinate function.
struct JetPoint {
    std::vector<std::vector<Rat>> values;
    int functions() const { return static_cast<int>(values.size()); }
    int order() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }
    const Rat& at(int func, int ord) const { return values[func - 1][ord - 1]; }
};
JetPoint random_jet_point(int n, int kappa, RatSampler& rng);

Rat det_expand(const std::vector<std::vector<Rat>>& m);
Rat delta_eval(const DeltaDet& det, const JetPoint& p);

// Nesting order: a <= b iff a has at least as many rows and the first
// size(b) orders of a are entrywise <= those of b.
bool leq_one(const DeltaDet& a, const DeltaDet& b);
bool incomparable_one(const DeltaDet& a, const DeltaDet& b);

// Quadratic exchange relation attached to an incomparable oriented pair
// (a bigger, b smaller; equal sizes orient a lex-smaller).  The returned
// terms sum to zero as functions on jet space, and the pair product
// itself appears with coefficient +1.
struct RelationTerm {
    int coeff = 0;
    DeltaDet left;    // larger factor under the variable order
    DeltaDet right;
};
std::vector<RelationTerm> pluecker_relation(const DeltaDet& a, const DeltaDet& b);

std::vector<std::pair<DeltaDet, DeltaDet>> incomparable_pairs(int n, int kappa);

Rat relation_eval(const std::vector<RelationTerm>& rel, const JetPoint& p);

// ---- monomials over the minor alphabet ----

// Variable list: all canonical minors with size <= n and orders in
// 1..kappa, listed deepest first and lexicographically within one depth.
// List position is the ascending variable index of the term order below.
std::vector<DeltaDet> canonical_dets(int n, int kappa);

using DeltaMonomial = std::vector<int>;   // exponent per variable

// Reverse lexicographic order: scan exponents from the last variable
// down; at the first difference the monomial with the larger exponent is
// the smaller one.
bool monomial_less_two(const DeltaMonomial& a, const DeltaMonomial& b);

DeltaMonomial pair_monomial(const DeltaDet& a, const DeltaDet& b,
                            const std::vector<DeltaDet>& vars);
// One minor per tableau column.
DeltaMonomial tableau_monomial(const Tableau& t, const std::vector<DeltaDet>& vars);
DeltaMonomial relation_leading_monomial(const std::vector<RelationTerm>& rel,
                                        const std::vector<DeltaDet>& vars);

Rat monomial_eval(const DeltaMonomial& mono, const std::vector<DeltaDet>& vars,
                  const JetPoint& p);

// Exact row rank by fraction-free Gaussian elimination.
long matrix_rank(std::vector<std::vector<Rat>> m);

}  // namespace hyperjet
