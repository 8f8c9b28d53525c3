#include "hyperjet/verify.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyperjet/asymptotics.hpp"
#include "hyperjet/cohomology.hpp"
#include "hyperjet/delta.hpp"
#include "hyperjet/faadibruno.hpp"
#include "hyperjet/families.hpp"
#include "hyperjet/jets.hpp"
#include "hyperjet/partition.hpp"
#include "hyperjet/pieri.hpp"
#include "hyperjet/ssyt.hpp"

namespace hyperjet {

namespace {

SuiteResult pass(const std::string& name, const std::string& detail)
{
    return {name, true, detail};
}

SuiteResult fail(const std::string& name, const std::string& detail)
{
    return {name, false, detail};
}

SuiteResult suite_rank_consistency(long max_m)
{
    const std::string name = "rank-consistency";
    long checks = 0;
    for (int n = 1; n <= 3; ++n)
        for (int kappa = 1; kappa <= 4; ++kappa)
            for (long m = 1; m <= max_m; ++m) {
                JetConfig cfg{n, kappa, m};
                Int r1 = gg_rank(cfg);
                Int r2 = gg_rank_from_components(cfg);
                Int r3 = gg_rank_from_schur(cfg);
                if (r1 != r2 || r1 != r3) {
                    std::ostringstream os;
                    os << "n=" << n << " kappa=" << kappa << " m=" << m << ": "
                       << int_str(r1) << " / " << int_str(r2) << " / " << int_str(r3);
                    return fail(name, os.str());
                }
                ++checks;
            }
    return pass(name, std::to_string(checks) + " rank triples agree");
}

SuiteResult suite_pieri_ssyt(long max_m)
{
    const std::string name = "pieri-ssyt";
    long checks = 0;
    for (int n = 1; n <= 3; ++n)
        for (int kappa = 1; kappa <= 4; ++kappa)
            for (long m = 1; m <= max_m; ++m) {
                std::map<Partition, Int, std::greater<Partition>> aggregated;
                for (const auto& comp : graded_components(kappa, m))
                    for (const auto& [shape, mult] : sym_tensor_schur_decompose(comp, n))
                        aggregated[shape] += mult;
                for (auto it = aggregated.begin(); it != aggregated.end();)
                    it = (it->second == 0) ? aggregated.erase(it) : std::next(it);
                auto table = multiplicity_table(n, kappa, m);
                if (aggregated != table) {
                    std::ostringstream os;
                    os << "n=" << n << " kappa=" << kappa << " m=" << m
                       << ": multiset mismatch";
                    return fail(name, os.str());
                }
                ++checks;
            }
    return pass(name, std::to_string(checks) + " decompositions agree");
}

SuiteResult suite_chi_routes(long)
{
    const std::string name = "chi-routes";
    long checks = 0;
    for (long d : {5L, 6L}) {
        HypersurfaceContext ctx{2, d};
        for (long t = -5; t <= 15; ++t) {
            for (int r = 1; r <= 2; ++r) {
                Partition shape(2, 0);
                for (int i = 0; i < r; ++i) shape[i] = 1;
                Int lhs = chi_schur_exact(ctx, shape, t);
                Int rhs = lambda_cohomology_X(ctx, r, t).chi;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "d=" << d << " r=" << r << " t=" << t << ": " << int_str(lhs)
                       << " vs " << int_str(rhs);
                    return fail(name, os.str());
                }
                ++checks;
            }
            for (int c = 0; c <= 3; ++c) {
                Int lhs = chi_schur_exact(ctx, {c, c}, t);
                Int rhs = line_bundle_cohomology_X(ctx, t + c * ctx.canonical_twist()).chi;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "d=" << d << " shape=(" << c << "," << c << ") t=" << t << ": "
                       << int_str(lhs) << " vs " << int_str(rhs);
                    return fail(name, os.str());
                }
                ++checks;
            }
        }
    }
    return pass(name, std::to_string(checks) + " characteristic pairs agree");
}

SuiteResult suite_projective_cohomology(long)
{
    const std::string name = "projective-cohomology";
    long checks = 0;
    for (int n = 1; n <= 4; ++n)
        for (long t = 0; t <= 10; ++t) {
            CohomologyVector v = projective_cohomology(n, Partition(n + 1, 0), t);
            Int expect = binom_nn(t + n + 1, n + 1);
            if (v.h[0] != expect || v.chi != expect)
                return fail(name, "trivial shape n=" + std::to_string(n) +
                                      " t=" + std::to_string(t));
            ++checks;
        }

    CohomologyVector forms = projective_cohomology(1, {1, 0}, 0);
    if (forms.h[1] != 1) return fail(name, "middle cohomology of the form bundle");
    ++checks;

    RatSampler rng(20260819u, 6);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng.next_int(1, 4));
        Partition shape(n + 1, 0);
        int prev = static_cast<int>(rng.next_int(0, 5));
        for (int i = 0; i <= n; ++i) {
            shape[i] = prev;
            if (prev > 0) prev = static_cast<int>(rng.next_int(0, prev));
        }
        long floor_t = shape[0] + cells(shape);
        long t = floor_t + rng.next_int(0, 6);
        CohomologyVector v = projective_cohomology(n, shape, t);
        for (int q = 1; q <= n + 1; ++q)
            if (v.h[q] != 0)
                return fail(name, "positive-twist tail at " + partition_str(shape) +
                                      " t=" + std::to_string(t));
        ++checks;
    }
    return pass(name, std::to_string(checks) + " ambient-space checks agree");
}

SuiteResult suite_giambelli_leading(long)
{
    const std::string name = "giambelli-leading";
    HypersurfaceContext ctx{2, 5};
    Rat lead = giambelli_chi_leading(ctx, {2, 1});
    if (lead == 0) return fail(name, "leading form vanished");
    for (long N : {50L, 100L, 200L}) {
        Partition scaled{static_cast<int>(2 * N), static_cast<int>(N)};
        Int chi = chi_schur_exact(ctx, scaled, 0);
        Rat ratio = Rat(chi) / (rat_pow(Rat(N), 3) * lead);
        Rat gap = ratio - 1;
        if (gap < 0) gap = -gap;
        if (gap > Rat(5) / Rat(N)) {
            std::ostringstream os;
            os << "N=" << N << ": relative gap " << rat_str(gap);
            return fail(name, os.str());
        }
    }
    return pass(name, "scaled characteristic matches the leading form at N=50,100,200");
}

SuiteResult suite_vanishing_soundness(long)
{
    const std::string name = "vanishing-soundness";
    long vanish_checks = 0, majorant_checks = 0;
    for (long d : {5L, 6L}) {
        HypersurfaceContext ctx{2, d};
        for (int e = 0; e <= 1; ++e)
            for (int b = 1; b <= 14; ++b) {
                Partition shape{b + e, b};
                long t = static_cast<long>(b) * ctx.canonical_twist();
                CohomologyVector exact = (e == 0)
                                             ? line_bundle_cohomology_X(ctx, t)
                                             : lambda_cohomology_X(ctx, 1, t);
                VanishingCheck vc = vanishing_threshold(ctx, shape);
                if (vc.vanishes) {
                    if (exact.h[1] != 0 || exact.h[2] != 0) {
                        std::ostringstream os;
                        os << "d=" << d << " shape=" << partition_str(shape)
                           << ": higher cohomology survives the threshold";
                        return fail(name, os.str());
                    }
                    ++vanish_checks;
                }
                for (int q = 1; q <= 2; ++q) {
                    MajorantResult mr = hq_majorant(ctx, shape, q);
                    if (!mr.applies) continue;
                    if (mr.bound < exact.h[q]) {
                        std::ostringstream os;
                        os << "d=" << d << " shape=" << partition_str(shape) << " q=" << q
                           << ": bound " << int_str(mr.bound) << " below exact "
                           << int_str(exact.h[q]);
                        return fail(name, os.str());
                    }
                    ++majorant_checks;
                }
            }
    }
    std::ostringstream os;
    os << vanish_checks << " threshold vanishings exact, " << majorant_checks
       << " majorant dominations";
    return pass(name, os.str());
}

SuiteResult suite_plucker_relations(long)
{
    const std::string name = "plucker-relations";
    long rel_checks = 0;
    for (int n = 2; n <= 3; ++n)
        for (int kappa = 2; kappa <= 4; ++kappa) {
            auto pairs = incomparable_pairs(n, kappa);
            if (pairs.empty()) continue;
            RatSampler rng(977u + 31u * n + kappa, 9);
            std::vector<JetPoint> points;
            for (int i = 0; i < 100; ++i) points.push_back(random_jet_point(n, kappa, rng));
            for (const auto& [a, b] : pairs) {
                auto rel = pluecker_relation(a, b);
                bool has_pair = false;
                for (const auto& term : rel)
                    if (term.coeff == 1 && term.left == a && term.right == b) has_pair = true;
                if (!has_pair)
                    return fail(name, "relation lost its source product " + delta_str(a) +
                                          "*" + delta_str(b));
                for (const auto& p : points)
                    if (relation_eval(rel, p) != 0)
                        return fail(name, "nonvanishing relation at " + delta_str(a) + "*" +
                                              delta_str(b));
                ++rel_checks;
            }
        }

    // independence of tableau monomials, matched against multiplicities
    const int n = 2, kappa = 3;
    auto vars = canonical_dets(n, kappa);
    RatSampler rng(5309u, 9);
    for (long m = 1; m <= 6; ++m) {
        auto tabs = enumerate_ssyt_weight(n, kappa, m);
        Int mult_total(0);
        for (const auto& [shape, mult] : multiplicity_table(n, kappa, m)) mult_total += mult;
        if (Int(static_cast<long>(tabs.size())) != mult_total)
            return fail(name, "tableau count disagrees with multiplicities at m=" +
                                  std::to_string(m));
        size_t cols = tabs.size() + 8;
        std::vector<JetPoint> points;
        for (size_t i = 0; i < cols; ++i) points.push_back(random_jet_point(n, kappa, rng));
        std::vector<std::vector<Rat>> matrix;
        for (const auto& t : tabs) {
            DeltaMonomial mono = tableau_monomial(t, vars);
            std::vector<Rat> row;
            for (const auto& p : points) row.push_back(monomial_eval(mono, vars, p));
            matrix.push_back(std::move(row));
        }
        if (matrix_rank(matrix) != static_cast<long>(tabs.size()))
            return fail(name, "monomial matrix rank drop at m=" + std::to_string(m));
    }
    std::ostringstream os;
    os << rel_checks << " relations vanish on 100 random points; monomials independent";
    return pass(name, os.str());
}

SuiteResult suite_family_decomposition(long)
{
    const std::string name = "family-decomposition";
    long tableaux = 0;
    for (int n = 1; n <= 3; ++n)
        for (int kappa = 1; kappa <= 4; ++kappa)
            for (long m = 1; m <= 10; ++m) {
                std::map<FamilyKey, long> families;
                long total = 0;
                for (const auto& t : enumerate_ssyt_weight(n, kappa, m, 64)) {
                    FamilyKey key = classify_tableau(t);
                    int D = distinct_column_count(key);
                    int depth_used = key.blocks.empty() ? 0 : key.blocks.front().height;
                    if (D > distinct_column_bound(depth_used, kappa))
                        return fail(name, "column bound violated");
                    bool maximal = is_maximal_family(key, n, kappa);
                    bool saturated = (D == distinct_column_bound(n, kappa));
                    // the saturation equivalence needs the Wronskian column,
                    // hence kappa >= n; below that no family is maximal
                    if (kappa >= n ? (maximal != saturated) : maximal)
                        return fail(name, "maximality and column saturation disagree at n=" +
                                              std::to_string(n) + " kappa=" +
                                              std::to_string(kappa) + " m=" + std::to_string(m));
                    ++families[key];
                    ++total;
                }
                long grouped = 0;
                for (const auto& [key, count] : families) grouped += count;
                if (grouped != total) return fail(name, "family sizes fail to add up");
                tableaux += total;
            }

    // unit-step path counts: three routes and the bound
    std::vector<std::vector<int>> columns;
    for (int depth = 1; depth <= 3; ++depth) {
        std::vector<int> col(depth);
        auto rec = [&](auto&& self, int pos, int lo) -> void {
            if (pos == depth) {
                columns.push_back(col);
                return;
            }
            for (int v = lo; v <= 6; ++v) {
                col[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
    }
    long path_checks = 0;
    for (const auto& u : columns)
        for (const auto& v : columns) {
            if (u.size() != v.size()) continue;
            bool leq = true;
            for (size_t l = 0; l < u.size(); ++l)
                if (u[l] > v[l]) leq = false;
            if (!leq) continue;
            Int dp = tight_path_count(u, v);
            Int dfs = tight_path_count_dfs(u, v);
            Int det = tight_path_count_det(u, v);
            Int bound = tight_path_upper_bound(u, v);
            if (dp != dfs || dp != det || dp > bound)
                return fail(name, "path count routes disagree");
            ++path_checks;
        }
    std::ostringstream os;
    os << tableaux << " tableaux classified; " << path_checks << " path counts cross-checked";
    return pass(name, os.str());
}

SuiteResult suite_polylog_asymptotics(long)
{
    const std::string name = "polylog-asymptotics";
    for (int q = 1; q <= 3; ++q)
        if (!(polylog_gap(1000000L, q) < polylog_gap(1000L, q)))
            return fail(name, "gap fails to shrink at q=" + std::to_string(q));
    for (long kappa = 1; kappa <= 6; ++kappa)
        for (int q = 0; q <= 4; ++q)
            if (polylog_sum(kappa, q) != polylog_direct(kappa, q))
                return fail(name, "recurrence vs direct expansion at kappa=" +
                                      std::to_string(kappa) + " q=" + std::to_string(q));
    return pass(name, "leading-form gap shrinks; recurrence matches expansion");
}

SuiteResult suite_simplex_moments(long)
{
    const std::string name = "simplex-moments";
    long checks = 0;
    for (int p = 2; p <= 4; ++p) {
        std::vector<long> j(p, 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == p) {
                if (simplex_moment(j) != simplex_moment_recursive(j))
                    throw std::runtime_error("mismatch");
                ++checks;
                return;
            }
            for (long e = 0; e <= 3; ++e) {
                j[pos] = e;
                self(self, pos + 1);
            }
        };
        try {
            rec(rec, 0);
        } catch (const std::runtime_error&) {
            return fail(name, "closed form vs recursion");
        }
    }
    if (simplex_moment({0, 0, 0}) != Rat(1) / Rat(2)) return fail(name, "volume fixture");
    if (simplex_moment({1, 1}) != Rat(1) / Rat(6)) return fail(name, "bilinear fixture");
    if (simplex_moment({2, 0, 0}) != Rat(1) / Rat(12)) return fail(name, "quadratic fixture");
    return pass(name, std::to_string(checks) + " moment pairs agree");
}

SuiteResult suite_faa_di_bruno(long)
{
    const std::string name = "faa-di-bruno";
    for (int nvars = 1; nvars <= 2; ++nvars) {
        MPoly psi(nvars);
        if (nvars == 1) {
            psi.add({3}, Rat(1));
            psi.add({1}, Rat(-2));
            psi.add({0}, Rat(1));
        } else {
            psi.add({2, 1}, Rat(1));
            psi.add({0, 2}, Rat(3));
            psi.add({1, 0}, Rat(-1));
        }
        std::vector<Poly> f;
        f.push_back(Poly({Rat(1), Rat(2), Rat(-1), Rat(1, 3)}));
        if (nvars == 2) f.push_back(Poly({Rat(-2), Rat(1), Rat(1, 2)}));
        for (int lambda = 1; lambda <= 5; ++lambda) {
            Poly lhs = faa_di_bruno_apply(psi, f, lambda);
            Poly rhs = derivative_oracle(psi, f, lambda);
            if (!(lhs == rhs))
                return fail(name, "chain-rule expansion vs direct derivative, order " +
                                      std::to_string(lambda));
        }
    }
    return pass(name, "chain-rule expansion matches direct differentiation");
}

SuiteResult suite_h0_report_positivity(long)
{
    const std::string name = "h0-report-positivity";
    for (int n = 1; n <= 6; ++n)
        for (long d = 1; d <= 12; ++d) {
            HypersurfaceContext ctx{n, d};
            H0Report rep = h0_report(ctx, 1, 1);
            bool want = d >= n + 3;
            if (rep.general_type != want)
                return fail(name, "verdict at n=" + std::to_string(n) +
                                      " d=" + std::to_string(d));
            if (want) {
                Int lead = Int(d) * int_pow(Int(d - n - 2), n);
                if (lead <= 0)
                    return fail(name, "declared coefficient not positive at n=" +
                                          std::to_string(n) + " d=" + std::to_string(d));
            }
        }
    return pass(name, "verdict equals d >= n+3 for n <= 6, d <= 12");
}

SuiteResult suite_curve_harness(long)
{
    const std::string name = "curve-harness";
    for (long d : {4L, 5L, 6L}) {
        HarnessTable table = leading_coefficient_harness(1, d, 1, 1, 10);
        Rat want(d * (d - 3));
        if (table.predicted != want)
            return fail(name, "predicted coefficient at d=" + std::to_string(d));
        for (const auto& row : table.rows)
            if (row.estimate != want || row.ratio != 1)
                return fail(name, "difference estimate at d=" + std::to_string(d) +
                                      " m=" + std::to_string(row.m));
    }
    return pass(name, "first differences equal d(d-3) exactly for d=4,5,6");
}

}  // namespace

const std::vector<std::string>& verify_suite_names()
{
    static const std::vector<std::string> names = {
        "rank-consistency",      "pieri-ssyt",
        "chi-routes",            "projective-cohomology",
        "giambelli-leading",     "vanishing-soundness",
        "plucker-relations",     "family-decomposition",
        "polylog-asymptotics",   "simplex-moments",
        "faa-di-bruno",          "h0-report-positivity",
        "curve-harness",
    };
    return names;
}

SuiteResult run_verify_suite(const std::string& name, long max_m)
{
    if (name == "rank-consistency") return suite_rank_consistency(max_m);
    if (name == "pieri-ssyt") return suite_pieri_ssyt(max_m);
    if (name == "chi-routes") return suite_chi_routes(max_m);
    if (name == "projective-cohomology") return suite_projective_cohomology(max_m);
    if (name == "giambelli-leading") return suite_giambelli_leading(max_m);
    if (name == "vanishing-soundness") return suite_vanishing_soundness(max_m);
    if (name == "plucker-relations") return suite_plucker_relations(max_m);
    if (name == "family-decomposition") return suite_family_decomposition(max_m);
    if (name == "polylog-asymptotics") return suite_polylog_asymptotics(max_m);
    if (name == "simplex-moments") return suite_simplex_moments(max_m);
    if (name == "faa-di-bruno") return suite_faa_di_bruno(max_m);
    if (name == "h0-report-positivity") return suite_h0_report_positivity(max_m);
    if (name == "curve-harness") return suite_curve_harness(max_m);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_verify_suites(long max_m)
{
    std::vector<SuiteResult> results;
    for (const auto& name : verify_suite_names()) results.push_back(run_verify_suite(name, max_m));
    return results;
}

}  // namespace hyperjet
