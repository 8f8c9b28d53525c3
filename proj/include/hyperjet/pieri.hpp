#ifndef HYPERJET_PIERI_HPP
#define HYPERJET_PIERI_HPP

// Pieri rule: tensoring a Schur summand by a symmetric power splits into
// the shapes interlacing the old one, each with multiplicity one.

#include <functional>
#include <map>
#include <vector>

#include "hyperjet/partition.hpp"
#include "hyperjet/rational.hpp"

namespace hyperjet {

// All s with s_1 >= t_1 >= s_2 >= ... >= s_n >= t_n >= 0 and
// sum(s) = ell + sum(t), listed lexicographically descending.
std::vector<Partition> pieri(const Partition& t, int ell, int n);

// Iterated Pieri expansion of Sym^{l_1} (x) ... (x) Sym^{l_k} over a rank-n
// bundle; shape -> multiplicity.
std::map<Partition, Int, std::greater<Partition>>
sym_tensor_schur_decompose(const std::vector<int>& comp, int n);

}  // namespace hyperjet

#endif
