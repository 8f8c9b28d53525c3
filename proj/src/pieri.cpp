#include "hyperjet/pieri.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperjet {

std::vector<Partition> pieri(const Partition& t0, int ell, int n)
{
    if (ell < 0) throw std::invalid_argument("pieri: negative symmetric power");
    Partition t = pad(t0, n);
    long target = cells(t) + ell;
    std::vector<Partition> out;
    Partition s(n, 0);
    // choose s_i with t_{i-1} >= s_i >= t_i (s_1 unbounded above)
    auto rec = [&](auto&& self, int i, long sum) -> void {
        if (i == n) {
            if (sum == target) out.push_back(s);
            return;
        }
        long rest = target - sum;
        int lo = t[i];
        long hi = (i == 0) ? rest : std::min<long>(t[i - 1], rest);
        for (long v = hi; v >= lo; --v) {
            s[i] = static_cast<int>(v);
            self(self, i + 1, sum + v);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), lex_desc);
    return out;
}

std::map<Partition, Int, std::greater<Partition>>
sym_tensor_schur_decompose(const std::vector<int>& comp, int n)
{
    std::map<Partition, Int, std::greater<Partition>> acc;
    acc.emplace(Partition(n, 0), Int(1));
    for (int ell : comp) {
        if (ell == 0) continue;
        std::map<Partition, Int, std::greater<Partition>> nxt;
        for (const auto& [shape, mult] : acc)
            for (const auto& s : pieri(shape, ell, n)) nxt[s] += mult;
        acc = std::move(nxt);
    }
    return acc;
}

}  // namespace hyperjet
