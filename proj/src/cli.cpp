#include "hyperjet/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperjet/asymptotics.hpp"
#include "hyperjet/capacity.hpp"
#include "hyperjet/cohomology.hpp"
#include "hyperjet/delta.hpp"
#include "hyperjet/jets.hpp"
#include "hyperjet/partition.hpp"
#include "hyperjet/ssyt.hpp"
#include "hyperjet/verify.hpp"

namespace hyperjet {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& text)
{
    Partition p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            p.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad partition entry '" + item + "'");
        }
    }
    if (p.empty() || !is_partition(p)) throw UsageError("'" + text + "' is not a partition");
    return p;
}

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    if (v.empty()) throw UsageError(std::string("empty ") + what);
    return v;
}

std::pair<long, long> parse_range(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like A..B");
    try {
        long a = std::stol(text.substr(0, dots));
        long b = std::stol(text.substr(dots + 2));
        if (b < a) throw UsageError("empty range " + text);
        return {a, b};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("bad range '" + text + "'");
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ordered_json partition_json(const Partition& p)
{
    ordered_json arr = ordered_json::array();
    for (int v : p) arr.push_back(v);
    return arr;
}

ordered_json h_vector_json(const CohomologyVector& v)
{
    ordered_json arr = ordered_json::array();
    for (const Int& h : v.h) arr.push_back(int_str(h));
    return arr;
}

// Options shared by most subcommands; each subcommand registers only the
// ones it understands.
struct CommonOpts {
    int n = 2;
    long d = 5;
    int kappa = 1;
    long m = 0;
    std::string m_range;
    std::string partition;
    long twist = 0;
    std::string format = "json";
    std::string mode = "exact";
    long max_cells = 4096;
    std::string out;
};

void emit(const CommonOpts& opts, const std::string& body)
{
    if (opts.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + opts.out + "'");
    f << body;
}

std::string json_doc(const ordered_json& doc)
{
    return doc.dump(2) + "\n";
}

void require_format(const CommonOpts& opts, bool csv_ok)
{
    if (opts.format != "json" && opts.format != "csv")
        throw UsageError("unknown format '" + opts.format + "'");
    if (opts.format == "csv" && !csv_ok)
        throw UsageError("csv output is not available for this subcommand");
}

// ---- subcommand bodies ----

int cmd_rank(const CommonOpts& opts)
{
    require_format(opts, true);
    JetConfig cfg{opts.n, opts.kappa, opts.m};
    Int rank = gg_rank(cfg);
    if (opts.format == "csv") {
        std::ostringstream os;
        os << "n,kappa,m,rank\n"
           << opts.n << "," << opts.kappa << "," << opts.m << "," << int_str(rank) << "\n";
        emit(opts, os.str());
    } else {
        ordered_json doc;
        doc["n"] = opts.n;
        doc["kappa"] = opts.kappa;
        doc["m"] = opts.m;
        doc["rank"] = int_str(rank);
        emit(opts, json_doc(doc));
    }
    return 0;
}

int cmd_decompose(const CommonOpts& opts)
{
    require_format(opts, true);
    auto table = multiplicity_table(opts.n, opts.kappa, opts.m, opts.max_cells);
    Int rank(0);
    for (const auto& [shape, mult] : table) rank += mult * schur_rank(shape, opts.n);
    if (opts.format == "csv") {
        std::ostringstream os;
        os << "partition,mult\n";
        for (const auto& [shape, mult] : table) {
            std::string p = partition_str(shape);
            os << csv_field(p.substr(1, p.size() - 2)) << "," << int_str(mult) << "\n";
        }
        emit(opts, os.str());
    } else {
        ordered_json doc;
        doc["n"] = opts.n;
        doc["kappa"] = opts.kappa;
        doc["m"] = opts.m;
        ordered_json entries = ordered_json::array();
        for (const auto& [shape, mult] : table) {
            ordered_json e;
            e["partition"] = partition_json(shape);
            e["mult"] = int_str(mult);
            entries.push_back(std::move(e));
        }
        doc["entries"] = std::move(entries);
        doc["rank"] = int_str(rank);
        emit(opts, json_doc(doc));
    }
    return 0;
}

int cmd_chi(const CommonOpts& opts)
{
    require_format(opts, true);
    HypersurfaceContext ctx{opts.n, opts.d};
    if (!opts.partition.empty()) {
        Partition shape = parse_partition(opts.partition);
        Int chi = chi_schur_exact(ctx, shape, opts.twist);
        if (opts.format == "csv") {
            std::ostringstream os;
            std::string p = partition_str(shape);
            os << "n,d,partition,twist,chi\n"
               << opts.n << "," << opts.d << "," << csv_field(p.substr(1, p.size() - 2)) << ","
               << opts.twist << "," << int_str(chi) << "\n";
            emit(opts, os.str());
        } else {
            ordered_json doc;
            doc["n"] = opts.n;
            doc["d"] = opts.d;
            doc["partition"] = partition_json(pad(shape, opts.n));
            doc["twist"] = opts.twist;
            doc["chi"] = int_str(chi);
            emit(opts, json_doc(doc));
        }
        return 0;
    }

    long m_lo = opts.m, m_hi = opts.m;
    if (!opts.m_range.empty()) std::tie(m_lo, m_hi) = parse_range(opts.m_range);
    if (m_lo < 1) throw UsageError("chi needs --partition, or --kappa with --m/--m-range");
    if (opts.format == "csv") {
        std::ostringstream os;
        os << "n,d,kappa,m,chi_gr\n";
        for (long m = m_lo; m <= m_hi; ++m)
            os << opts.n << "," << opts.d << "," << opts.kappa << "," << m << ","
               << int_str(chi_gr(ctx, opts.kappa, m, opts.max_cells)) << "\n";
        emit(opts, os.str());
    } else {
        ordered_json doc;
        doc["n"] = opts.n;
        doc["d"] = opts.d;
        doc["kappa"] = opts.kappa;
        if (m_lo == m_hi) {
            doc["m"] = m_lo;
            doc["chi_gr"] = int_str(chi_gr(ctx, opts.kappa, m_lo, opts.max_cells));
        } else {
            ordered_json rows = ordered_json::array();
            for (long m = m_lo; m <= m_hi; ++m) {
                ordered_json row;
                row["m"] = m;
                row["chi_gr"] = int_str(chi_gr(ctx, opts.kappa, m, opts.max_cells));
                rows.push_back(std::move(row));
            }
            doc["rows"] = std::move(rows);
        }
        emit(opts, json_doc(doc));
    }
    return 0;
}

int cmd_cohomology(const CommonOpts& opts, const std::string& space, int r)
{
    require_format(opts, false);
    ordered_json doc;
    CohomologyVector v;
    if (space == "projective") {
        Partition shape(opts.n + 1, 0);
        if (!opts.partition.empty()) shape = parse_partition(opts.partition);
        v = projective_cohomology(opts.n, shape, opts.twist);
        doc["space"] = "projective";
        doc["n"] = opts.n;
        doc["partition"] = partition_json(pad(shape, opts.n + 1));
    } else if (space == "lambda") {
        HypersurfaceContext ctx{opts.n, opts.d};
        v = lambda_cohomology_X(ctx, r, opts.twist);
        doc["space"] = "lambda";
        doc["n"] = opts.n;
        doc["d"] = opts.d;
        doc["r"] = r;
    } else if (space == "line-bundle") {
        HypersurfaceContext ctx{opts.n, opts.d};
        v = line_bundle_cohomology_X(ctx, opts.twist);
        doc["space"] = "line-bundle";
        doc["n"] = opts.n;
        doc["d"] = opts.d;
    } else {
        throw UsageError("unknown --space '" + space + "'");
    }
    doc["twist"] = opts.twist;
    doc["h"] = h_vector_json(v);
    doc["chi"] = int_str(v.chi);
    doc["route"] = v.route;
    emit(opts, json_doc(doc));
    return 0;
}

int cmd_vanishing(const CommonOpts& opts, long cells_bound)
{
    require_format(opts, true);
    HypersurfaceContext ctx{opts.n, opts.d};
    if (!ctx.general_type())
        throw UsageError("vanishing threshold needs d >= n+3");
    std::vector<Partition> shapes;
    if (!opts.partition.empty()) {
        shapes.push_back(pad(parse_partition(opts.partition), opts.n));
    } else {
        for (const auto& shape : partitions_up_to(opts.n, cells_bound))
            if (cells(shape) >= 1) shapes.push_back(shape);
    }
    if (opts.format == "csv") {
        std::ostringstream os;
        os << "partition,applies,vanishes,threshold\n";
        for (const auto& shape : shapes) {
            VanishingCheck vc = vanishing_threshold(ctx, shape);
            std::string p = partition_str(shape);
            os << csv_field(p.substr(1, p.size() - 2)) << "," << (vc.applies ? "true" : "false")
               << "," << (vc.vanishes ? "true" : "false") << "," << rat_str(vc.threshold)
               << "\n";
        }
        emit(opts, os.str());
    } else {
        ordered_json doc;
        doc["n"] = opts.n;
        doc["d"] = opts.d;
        ordered_json rows = ordered_json::array();
        for (const auto& shape : shapes) {
            VanishingCheck vc = vanishing_threshold(ctx, shape);
            ordered_json row;
            row["partition"] = partition_json(shape);
            row["applies"] = vc.applies;
            row["vanishes"] = vc.vanishes;
            row["threshold"] = rat_str(vc.threshold);
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        emit(opts, json_doc(doc));
    }
    return 0;
}

int cmd_report(const CommonOpts& opts)
{
    require_format(opts, false);
    HypersurfaceContext ctx{opts.n, opts.d};
    H0Report rep = h0_report(ctx, opts.kappa, opts.m, opts.max_cells);
    ordered_json doc;
    doc["context"] = ordered_json{{"n", rep.ctx.n}, {"d", rep.ctx.d}};
    doc["kappa"] = rep.kappa;
    doc["m"] = rep.m;
    doc["chi_gr"] = int_str(rep.chi_gr);
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.vanishing) {
        ordered_json r;
        r["partition"] = partition_json(row.partition);
        r["vanishes"] = row.vanishes;
        r["threshold"] = rat_str(row.threshold);
        r["chi"] = int_str(row.chi);
        rows.push_back(std::move(r));
    }
    doc["vanishing"] = std::move(rows);
    doc["leading_coefficient_symbolic"] = rep.leading_coefficient_symbolic;
    doc["general_type"] = rep.general_type;
    emit(opts, json_doc(doc));
    return 0;
}

int cmd_asymptotics(const CommonOpts& opts, const std::string& kind, int q,
                    const std::string& alpha_text)
{
    require_format(opts, true);
    if (kind == "polylog") {
        if (opts.mode == "float") {
            double v = polylog_sum_float(opts.kappa, q);
            if (opts.format == "csv") {
                std::ostringstream os;
                os << "parameter,exact_or_float,float_value\n";
                os << csv_field("kappa=" + std::to_string(opts.kappa) +
                                " q=" + std::to_string(q))
                   << ",float," << ordered_json(v).dump() << "\n";
                emit(opts, os.str());
            } else {
                ordered_json doc;
                doc["kappa"] = opts.kappa;
                doc["q"] = q;
                doc["value"] = v;
                doc["approx"] = true;
                emit(opts, json_doc(doc));
            }
        } else {
            Rat v = polylog_sum(opts.kappa, q);
            if (opts.format == "csv") {
                std::ostringstream os;
                os << "parameter,exact_or_float,value_numerator,value_denominator\n";
                os << csv_field("kappa=" + std::to_string(opts.kappa) +
                                " q=" + std::to_string(q))
                   << ",exact," << v.get_num().get_str() << "," << v.get_den().get_str()
                   << "\n";
                emit(opts, os.str());
            } else {
                ordered_json doc;
                doc["kappa"] = opts.kappa;
                doc["q"] = q;
                doc["value"] = rat_str(v);
                emit(opts, json_doc(doc));
            }
        }
        return 0;
    }

    if (kind == "kernel") {
        if (alpha_text.empty()) throw UsageError("kernel needs --alpha \"a1,a2,...\"");
        std::vector<int> alpha = parse_int_list(alpha_text, "alpha");
        double v = kernel_sum(opts.n, opts.kappa, alpha);
        if (opts.format == "csv") {
            std::ostringstream os;
            os << "parameter,exact_or_float,float_value\n";
            os << csv_field("n=" + std::to_string(opts.n) +
                            " kappa=" + std::to_string(opts.kappa) + " alpha=" + alpha_text)
               << ",float," << ordered_json(v).dump() << "\n";
            emit(opts, os.str());
        } else {
            ordered_json doc;
            doc["n"] = opts.n;
            doc["kappa"] = opts.kappa;
            ordered_json a = ordered_json::array();
            for (int x : alpha) a.push_back(x);
            doc["alpha"] = std::move(a);
            doc["value"] = v;
            doc["approx"] = true;
            emit(opts, json_doc(doc));
        }
        return 0;
    }

    if (kind == "leading") {
        if (opts.m_range.empty()) throw UsageError("leading needs --m-range A..B");
        auto [m_lo, m_hi] = parse_range(opts.m_range);
        HarnessTable table =
            leading_coefficient_harness(opts.n, opts.d, opts.kappa, m_lo, m_hi, opts.max_cells);
        bool exact = opts.mode != "float";
        if (opts.format == "csv") {
            std::ostringstream os;
            if (exact) {
                os << "parameter,exact_or_float,value_numerator,value_denominator,predicted,"
                      "ratio\n";
                for (const auto& row : table.rows)
                    os << csv_field("m=" + std::to_string(row.m)) << ",exact,"
                       << row.estimate.get_num().get_str() << ","
                       << row.estimate.get_den().get_str() << ","
                       << csv_field(rat_str(table.predicted)) << ","
                       << csv_field(rat_str(row.ratio)) << "\n";
            } else {
                os << "parameter,exact_or_float,float_value,predicted,ratio\n";
                for (const auto& row : table.rows)
                    os << csv_field("m=" + std::to_string(row.m)) << ",float,"
                       << ordered_json(row.estimate.get_d()).dump() << ","
                       << ordered_json(table.predicted.get_d()).dump() << ","
                       << ordered_json(row.ratio.get_d()).dump() << "\n";
            }
            emit(opts, os.str());
        } else {
            ordered_json doc;
            doc["n"] = table.n;
            doc["d"] = table.d;
            doc["kappa"] = table.kappa;
            doc["order"] = table.order;
            doc["step"] = table.step;
            if (exact) {
                doc["predicted"] = rat_str(table.predicted);
            } else {
                doc["predicted"] = table.predicted.get_d();
                doc["approx"] = true;
            }
            ordered_json rows = ordered_json::array();
            for (const auto& row : table.rows) {
                ordered_json r;
                r["m"] = row.m;
                r["chi"] = int_str(row.chi);
                if (exact) {
                    r["estimate"] = rat_str(row.estimate);
                    r["ratio"] = rat_str(row.ratio);
                } else {
                    r["estimate"] = row.estimate.get_d();
                    r["ratio"] = row.ratio.get_d();
                }
                rows.push_back(std::move(r));
            }
            doc["rows"] = std::move(rows);
            emit(opts, json_doc(doc));
        }
        return 0;
    }

    throw UsageError("unknown --kind '" + kind + "'");
}

int cmd_plucker(const CommonOpts& opts, const std::string& left_text,
                const std::string& right_text, int points)
{
    require_format(opts, false);
    std::vector<std::pair<DeltaDet, DeltaDet>> pairs;
    if (!left_text.empty() || !right_text.empty()) {
        if (left_text.empty() || right_text.empty())
            throw UsageError("plucker needs both --left and --right, or neither");
        DeltaDet a{parse_int_list(left_text, "left")};
        DeltaDet b{parse_int_list(right_text, "right")};
        if (!incomparable_one(a, b)) throw UsageError("pair is comparable; no relation");
        if (a.size() < b.size() || (a.size() == b.size() && b.orders < a.orders))
            std::swap(a, b);
        pairs.emplace_back(a, b);
    } else {
        pairs = incomparable_pairs(opts.n, opts.kappa);
    }

    RatSampler rng(424243u, 9);
    std::vector<JetPoint> jet_points;
    for (int i = 0; i < points; ++i)
        jet_points.push_back(random_jet_point(opts.n, opts.kappa, rng));

    ordered_json doc;
    doc["n"] = opts.n;
    doc["kappa"] = opts.kappa;
    ordered_json arr = ordered_json::array();
    for (const auto& [a, b] : pairs) {
        auto rel = pluecker_relation(a, b);
        bool vanishes = true;
        for (const auto& p : jet_points)
            if (relation_eval(rel, p) != 0) vanishes = false;
        ordered_json e;
        e["left"] = partition_json(a.orders);
        e["right"] = partition_json(b.orders);
        ordered_json terms = ordered_json::array();
        for (const auto& term : rel) {
            ordered_json t;
            t["sign"] = term.coeff;
            ordered_json factors = ordered_json::array();
            factors.push_back(partition_json(term.left.orders));
            factors.push_back(partition_json(term.right.orders));
            t["factors"] = std::move(factors);
            terms.push_back(std::move(t));
        }
        e["relation"] = std::move(terms);
        e["checked_points"] = points;
        e["vanishes"] = vanishes;
        arr.push_back(std::move(e));
    }
    doc["pairs"] = std::move(arr);
    emit(opts, json_doc(doc));
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, long max_m)
{
    require_format(opts, true);
    std::vector<SuiteResult> results;
    if (suite.empty()) {
        results = run_all_verify_suites(max_m);
    } else {
        try {
            results.push_back(run_verify_suite(suite, max_m));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    bool all_pass = true;
    std::ostringstream os;
    if (opts.format == "csv") {
        os << "suite,passed,detail\n";
        for (const auto& r : results) {
            os << csv_field(r.name) << "," << (r.passed ? "true" : "false") << ","
               << csv_field(r.detail) << "\n";
            all_pass = all_pass && r.passed;
        }
    } else {
        for (const auto& r : results) {
            os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail << ")\n";
            all_pass = all_pass && r.passed;
        }
    }
    emit(opts, os.str());
    return all_pass ? 0 : 4;
}

// key=value config lines; '#' starts a comment
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    while (std::getline(f, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        auto vstart = value.find_first_not_of(" \t");
        value = (vstart == std::string::npos) ? "" : value.substr(vstart);
        if (key.empty()) throw UsageError("config line with empty key");
        pairs.emplace_back(key, value);
    }
    return pairs;
}

}  // namespace

int run_cli(int argc, const char* const* argv)
{
    // pull out --config and splice its pairs in right after the
    // subcommand, so explicit flags (later) win via take-last
    std::vector<std::string> args;
    std::string config_path;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--config") {
            if (i + 1 >= argc) {
                std::cerr << "error: --config needs a path\n";
                return 2;
            }
            config_path = argv[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            config_path = a.substr(9);
        } else {
            args.push_back(std::move(a));
        }
    }
    try {
        if (!config_path.empty()) {
            auto pairs = read_config(config_path);
            std::vector<std::string> spliced;
            size_t i = 0;
            // the subcommand is the first non-flag token
            while (i < args.size()) {
                spliced.push_back(args[i]);
                bool is_sub = args[i].rfind("--", 0) != 0;
                ++i;
                if (is_sub) break;
            }
            for (const auto& [k, v] : pairs) {
                spliced.push_back("--" + k);
                spliced.push_back(v);
            }
            for (; i < args.size(); ++i) spliced.push_back(args[i]);
            args = std::move(spliced);
        }

        CLI::App app{"invariants of jet bundles on projective hypersurfaces"};
        app.require_subcommand(1);

        CommonOpts opts;
        std::string space = "line-bundle";
        int r = 1;
        long cells_bound = 6;
        std::string kind = "polylog";
        int q = 1;
        std::string alpha_text;
        std::string left_text, right_text;
        int points = 100;
        std::string suite;
        long max_m = 12;

        auto add_common = [&](CLI::App* sub, bool with_d) {
            sub->add_option("--n", opts.n, "ambient-hypersurface dimension")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            if (with_d)
                sub->add_option("--d", opts.d, "hypersurface degree")
                    ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            sub->add_option("--kappa", opts.kappa, "jet order")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            sub->add_option("--m", opts.m, "weighted degree")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            sub->add_option("--m-range", opts.m_range, "weighted degree range A..B")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            sub->add_option("--partition", opts.partition, "partition l1,l2,...")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            sub->add_option("--twist", opts.twist, "line-bundle twist")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            sub->add_option("--format", opts.format, "json or csv")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            sub->add_option("--mode", opts.mode, "exact or float")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            sub->add_option("--max-cells", opts.max_cells, "capacity bound on tableau cells")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
            sub->add_option("--out", opts.out, "write the document to a file")
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        };

        CLI::App* rank = app.add_subcommand("rank", "graded bundle rank");
        add_common(rank, false);
        CLI::App* decompose = app.add_subcommand("decompose", "multiplicity table");
        add_common(decompose, false);
        CLI::App* chi = app.add_subcommand("chi", "Euler characteristics");
        add_common(chi, true);
        CLI::App* cohomology = app.add_subcommand("cohomology", "cohomology tables");
        add_common(cohomology, true);
        cohomology->add_option("--space", space, "projective, lambda, or line-bundle")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        cohomology->add_option("--r", r, "form degree for the lambda space")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        CLI::App* vanishing = app.add_subcommand("vanishing", "vanishing thresholds");
        add_common(vanishing, true);
        vanishing->add_option("--cells", cells_bound, "enumerate partitions up to this size")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        CLI::App* report = app.add_subcommand("report", "global-section report");
        add_common(report, true);
        CLI::App* asym = app.add_subcommand("asymptotics", "asymptotic sweeps");
        add_common(asym, true);
        asym->add_option("--kind", kind, "polylog, kernel, or leading")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        asym->add_option("--q", q, "polylog degree")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        asym->add_option("--alpha", alpha_text, "kernel exponents a1,a2,...")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        CLI::App* plucker = app.add_subcommand("plucker", "exchange relations");
        add_common(plucker, false);
        plucker->add_option("--left", left_text, "orders of the first minor")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        plucker->add_option("--right", right_text, "orders of the second minor")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        plucker->add_option("--points", points, "random evaluation points")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        CLI::App* verify = app.add_subcommand("verify", "cross-route identity suites");
        add_common(verify, true);
        verify->add_option("--suite", suite, "run a single suite by name")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        verify->add_option("--max-m", max_m, "weight cap for the sweep suites")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

        std::vector<const char*> cargs;
        cargs.push_back(argc > 0 ? argv[0] : "hyperjet");
        for (const auto& a : args) cargs.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(cargs.size()), cargs.data());
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) return app.exit(e);   // --help
            app.exit(e);
            return 2;
        }

        if (rank->parsed()) return cmd_rank(opts);
        if (decompose->parsed()) return cmd_decompose(opts);
        if (chi->parsed()) return cmd_chi(opts);
        if (cohomology->parsed()) return cmd_cohomology(opts, space, r);
        if (vanishing->parsed()) return cmd_vanishing(opts, cells_bound);
        if (report->parsed()) return cmd_report(opts);
        if (asym->parsed()) return cmd_asymptotics(opts, kind, q, alpha_text);
        if (plucker->parsed()) return cmd_plucker(opts, left_text, right_text, points);
        if (verify->parsed()) return cmd_verify(opts, suite, max_m);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hyperjet
