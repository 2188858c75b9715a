// sds: construct, verify and search for signed difference sets.
//
// Exit codes: 0 success / verified / found, 1 verification failed / none
// found / infeasible, 2 usage or input error, 3 partial search.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sds/io.hpp"
#include "sds/sds.hpp"

namespace {

using namespace sds;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kPartial = 3;

std::string read_input(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SignedDiffSet load_set(const std::string& path) { return parse_set(read_input(path), path == "-" ? "stdin" : path); }

/// --catalog beats $SDS_CATALOG; empty when neither is set.
std::string catalog_path(const std::string& flag)
{
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("SDS_CATALOG")) return env;
    return {};
}

GroupElement parse_element(const AbelianGroup& G, const std::string& text)
{
    GroupElement g;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) g.coords.push_back(std::stoll(part));
    G.require(g);
    return g;
}

std::string join(const std::vector<i64>& xs, const char* sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
    return s;
}

ordered_json params_json(const SdsParams& p)
{
    return ordered_json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"n", p.n}, {"s", p.s}, {"P", p.p_size}, {"N", p.n_size}};
}

std::string params_line(const SdsParams& p)
{
    return "s=" + std::to_string(p.s) + " |P|=" + std::to_string(p.p_size) + " |N|=" + std::to_string(p.n_size);
}

// ---------------------------------------------------------------------------

int cmd_feasible(i64 v, i64 k, i64 lambda, bool as_json)
{
    const auto verdict = derive_params(v, k, lambda);
    const bool trivial = is_excluded_trivial(v, k, lambda);
    if (as_json) {
        ordered_json j{{"v", v}, {"k", k}, {"lambda", lambda}, {"feasible", verdict.feasible()}};
        if (verdict.feasible()) j["params"] = params_json(*verdict.params);
        else j["reason"] = infeasibility_name(verdict.reason), j["detail"] = verdict.detail;
        j["excluded_trivial"] = trivial;
        std::cout << j.dump() << '\n';
    } else if (verdict.feasible()) {
        std::cout << params_line(*verdict.params) << " n=" << verdict.params->n
                  << (trivial ? " (excluded trivial shape)" : "") << '\n';
    } else {
        std::cout << "infeasible (" << infeasibility_name(verdict.reason) << "): " << verdict.detail << '\n';
    }
    return verdict.feasible() ? kOk : kFail;
}

int emit_constructed(const SignedDiffSet& d, const std::string& catalog)
{
    std::cout << dump_set(d) << '\n';
    if (!catalog.empty()) catalog_append(catalog, make_record(d, d.provenance.family));
    return kOk;
}

int cmd_verify(const std::string& path, bool as_json)
{
    const auto d = load_set(path);
    const auto rep = verify(d);
    if (as_json) {
        ordered_json j{{"passed", rep.passed}, {"v", d.v()}, {"k", d.k()}, {"lambda", d.lambda}, {"message", rep.message}};
        j["spectrum"] = rep.equation.spectrum.coeffs;
        ordered_json viol = ordered_json::array();
        for (const auto& x : rep.equation.violations)
            viol.push_back({{"element", d.group.unrank(x.rank).coords}, {"actual", x.actual}, {"expected", x.expected}});
        j["violations"] = viol;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "group " << d.group.literal() << "  (v,k,lambda) = (" << d.v() << "," << d.k() << "," << d.lambda
                  << ")  |P|=" << d.P.size() << " |N|=" << d.N.size() << '\n';
        std::cout << (rep.passed ? "PASS" : "FAIL") << ": " << rep.message << '\n';
        for (const auto& x : rep.equation.violations)
            std::cout << "  at " << AbelianGroup::to_string(d.group.unrank(x.rank)) << ": " << x.actual
                      << " (expected " << x.expected << ")\n";
    }
    return rep.passed ? kOk : kFail;
}

int cmd_autocorr(const std::string& path, bool as_json)
{
    const auto d = load_set(path);
    std::vector<i64> theta;
    try {
        theta = autocorrelation(d);
    } catch (const Error& e) {
        if (e.code() != Errc::not_cyclic) throw;
        std::cerr << "sds: " << e.what() << '\n';
        return kFail;
    }
    bool two_level = true;
    for (std::size_t t = 1; t < theta.size(); ++t) two_level = two_level && theta[t] == d.lambda;
    two_level = two_level && theta[0] == d.k();
    if (as_json)
        std::cout << ordered_json{{"theta", theta}, {"two_level", two_level}}.dump() << '\n';
    else
        std::cout << join(theta) << '\n' << (two_level ? "two-level" : "not two-level") << '\n';
    return two_level ? kOk : kFail;
}

struct SearchArgs {
    std::string group;
    i64 k = 0;
    i64 lambda = 0;
    std::vector<std::string> quotient_gens;
    std::uint64_t max_nodes = 0;
    double time_limit = 0;
    unsigned threads = 1;
    bool no_prune_quotient = false;
    bool no_prune_diff = false;
    bool elements = false;
    i64 multiplier = 0;
    std::string resume;
    std::string frontier_out;
    std::string catalog;
    bool json = false;
};

int cmd_search(const SearchArgs& a)
{
    const auto G = parse_group_literal(a.group);
    SearchOptions opt;
    opt.max_nodes = a.max_nodes;
    opt.time_limit_s = a.time_limit;
    opt.threads = a.threads;
    opt.prune_quotient = !a.no_prune_quotient;
    opt.prune_diff = !a.no_prune_diff;
    if (a.multiplier) opt.multiplier = a.multiplier;
    if (!a.quotient_gens.empty()) {
        opt.quotient_kernels.emplace();
        for (const auto& g : a.quotient_gens) opt.quotient_kernels->push_back({parse_element(G, g)});
    }
    if (!a.resume.empty()) {
        const auto j = nlohmann::json::parse(read_input(a.resume));
        for (const auto& p : j.at("frontier")) opt.frontier.push_back(p.get<SignPrefix>());
    }
    const auto rep = a.elements ? exhaustive_element_search(G, a.k, a.lambda, opt) : orbit_search(G, a.k, a.lambda, opt);

    if (!a.frontier_out.empty() && rep.status == SearchStatus::partial) {
        std::ofstream out(a.frontier_out);
        out << ordered_json{{"frontier", rep.frontier}}.dump() << '\n';
    }
    const auto catalog = catalog_path(a.catalog);
    if (!catalog.empty()) {
        for (auto set : rep.sets_found) {
            set.provenance.parameters = {{"max_nodes", static_cast<i64>(opt.max_nodes)},
                                         {"threads", static_cast<i64>(opt.threads)},
                                         {"multiplier", rep.multiplier},
                                         {"prune_quotient", opt.prune_quotient},
                                         {"prune_diff", opt.prune_diff},
                                         {"element_search", a.elements}};
            catalog_append(catalog, make_record(set, "search"));
        }
    }
    if (a.json) {
        ordered_json j{{"status", status_name(rep.status)}, {"group", G.orders()}, {"k", a.k}, {"lambda", a.lambda}};
        j["nodes_explored"] = rep.nodes_explored;
        j["multiplier"] = rep.multiplier;
        j["cells"] = rep.cell_count;
        j["scope"] = rep.scope;
        j["message"] = rep.message;
        ordered_json sets = ordered_json::array();
        for (const auto& s : rep.sets_found) sets.push_back(set_to_json(s));
        j["sets"] = sets;
        if (rep.status == SearchStatus::partial) j["frontier"] = rep.frontier;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "search " << G.literal() << " k=" << a.k << " lambda=" << a.lambda << ": " << status_name(rep.status);
        if (!rep.message.empty()) std::cout << " (" << rep.message << ")";
        std::cout << '\n';
        if (rep.status != SearchStatus::infeasible) {
            std::cout << "scope: " << rep.scope << '\n';
            std::cout << "nodes explored: " << rep.nodes_explored << ", inequivalent sets found: " << rep.sets_found.size()
                      << " (equivalence: translation, unit multiplication, negation when s=0)\n";
            for (const auto& s : rep.sets_found) std::cout << dump_set(s) << '\n';
        }
    }
    if (!rep.sets_found.empty()) return kOk;
    return rep.status == SearchStatus::partial ? kPartial : kFail;
}

int cmd_scan(i64 e, i64 max_v, bool as_json)
{
    const auto hits = residue_scan(e, max_v);
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& h : hits) arr.push_back(params_json(h.params));
        std::cout << ordered_json{{"e", e}, {"max_v", max_v}, {"hits", arr}}.dump() << '\n';
    } else {
        std::cout << "e=" << e << ", v <= " << max_v << ": " << hits.size() << " hit(s)\n";
        for (const auto& h : hits)
            std::cout << "  (" << h.params.v << "," << h.params.k << "," << h.params.lambda << ")\n";
    }
    return hits.empty() ? kFail : kOk;
}

int cmd_enumerate(i64 max_v, bool dedup, bool as_json)
{
    const auto all = enumerate_feasible(max_v, dedup);
    if (as_json) {
        for (const auto& p : all) std::cout << params_json(p).dump() << '\n';
    } else {
        std::cout << std::setw(6) << "v" << std::setw(6) << "k" << std::setw(8) << "lambda" << std::setw(6) << "n"
                  << std::setw(6) << "s" << std::setw(6) << "|P|" << std::setw(6) << "|N|" << '\n';
        for (const auto& p : all)
            std::cout << std::setw(6) << p.v << std::setw(6) << p.k << std::setw(8) << p.lambda << std::setw(6) << p.n
                      << std::setw(6) << p.s << std::setw(6) << p.p_size << std::setw(6) << p.n_size << '\n';
    }
    return kOk;
}

int cmd_catalog(const std::string& action, const std::string& flag, const std::string& file)
{
    std::string path = catalog_path(flag);
    if (path.empty()) path = "sds_catalog.jsonl";
    if (action == "add") {
        if (file.empty()) throw CLI::ValidationError("catalog add", "needs a set file (or -)");
        auto d = load_set(file);
        const auto rep = verify(d);
        if (!rep.passed) {
            std::cerr << "sds: refusing to add a set that fails verification: " << rep.message << '\n';
            return kFail;
        }
        if (d.provenance.family.empty()) d.provenance.family = "file";
        const bool written = catalog_append(path, make_record(d, "file"));
        std::cout << (written ? "added" : "already present") << '\n';
        return kOk;
    }
    if (action == "check") {
        const auto issues = catalog_check(path);
        for (const auto& i : issues) std::cout << path << ":" << i.line << ": " << i.problem << '\n';
        if (issues.empty()) std::cout << "catalog ok\n";
        return issues.empty() ? kOk : kFail;
    }
    const auto load = load_catalog(path);
    std::cout << std::setw(5) << "line" << std::setw(10) << "group" << std::setw(6) << "v" << std::setw(6) << "k"
              << std::setw(8) << "lambda" << std::setw(6) << "|P|" << std::setw(6) << "|N|" << "  source\n";
    for (const auto& r : load.records)
        std::cout << std::setw(5) << r.line << std::setw(10) << r.set.group.literal() << std::setw(6) << r.set.v()
                  << std::setw(6) << r.set.k() << std::setw(8) << r.set.lambda << std::setw(6) << r.set.P.size()
                  << std::setw(6) << r.set.N.size() << "  " << r.source << '\n';
    for (const auto& i : load.issues) std::cout << path << ":" << i.line << ": " << i.problem << '\n';
    return kOk;
}

int cmd_reproduce_table1(bool search, std::uint64_t max_nodes, const std::vector<std::string>& rows)
{
    std::cout << "Derived s, |P|, |N| against the printed columns\n";
    std::cout << std::setw(5) << "v" << std::setw(5) << "k" << std::setw(5) << "lam" << std::setw(5) << "s"
              << std::setw(5) << "|P|" << std::setw(5) << "|N|" << "  result\n";
    int mismatches = 0;
    for (const auto& row : table1_rows) {
        const auto c = check_table1_row(row);
        std::cout << std::setw(5) << row.v << std::setw(5) << row.k << std::setw(5) << row.lambda;
        if (c.derived.feasible())
            std::cout << std::setw(5) << c.derived.params->s << std::setw(5) << c.derived.params->p_size << std::setw(5)
                      << c.derived.params->n_size;
        else
            std::cout << std::setw(15) << "-";
        std::cout << "  " << (c.matches ? "matches" : "MISMATCH: " + c.note) << '\n';
        mismatches += !c.matches;
    }
    std::cout << mismatches << " row(s) inconsistent with the derived sizes\n";
    if (!search) return kOk;

    std::vector<std::array<i64, 3>> targets = {{19, 13, 2}, {19, 13, 6}, {20, 11, 2}, {55, 10, 1}};
    if (!rows.empty()) {
        targets.clear();
        for (const auto& r : rows) {
            std::array<i64, 3> t{};
            if (std::sscanf(r.c_str(), "%ld,%ld,%ld", &t[0], &t[1], &t[2]) != 3)
                throw CLI::ValidationError("--row", "expected v,k,lambda");
            targets.push_back(t);
        }
    }
    std::cout << "\nBounded orbit searches in Z_v (node budget " << (max_nodes ? std::to_string(max_nodes) : "none") << ")\n";
    for (const auto& [v, k, lambda] : targets) {
        SearchOptions opt;
        opt.max_nodes = max_nodes;
        const auto rep = orbit_search(AbelianGroup({v}), k, lambda, opt);
        std::cout << "  (" << v << "," << k << "," << lambda << "): ";
        if (!rep.sets_found.empty()) {
            const auto& s = rep.sets_found.front();
            std::cout << "found " << rep.sets_found.size() << " class(es), |P|=" << s.P.size() << " |N|=" << s.N.size()
                      << ", " << rep.nodes_explored << " nodes\n";
        } else {
            std::cout << "not found (" << status_name(rep.status) << ", " << rep.nodes_explored << " nodes)\n";
        }
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Construct, verify and search for signed difference sets"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable JSON output");

    // feasible
    i64 fv = 0, fk = 0, fl = 0;
    auto* feasible = app.add_subcommand("feasible", "Feasibility of (v,k,lambda) and the derived |P|, |N|");
    feasible->add_option("v", fv)->required();
    feasible->add_option("k", fk)->required();
    feasible->add_option("lambda", fl)->required()->allow_extra_args(false);

    // construct
    std::string family, cfile, ccatalog;
    i64 cv = 0, cq = 0, cm = 0;
    auto* construct = app.add_subcommand("construct", "Build a set from a known family and print it as JSON");
    construct->add_option("family", family, "complement | qr | paley-signed | quartic | prime-pair | noncyclic-18-13-4")
        ->required()
        ->check(CLI::IsMember({"complement", "qr", "paley-signed", "quartic", "prime-pair", "noncyclic-18-13-4"}));
    construct->add_option("--v", cv, "Prime v (qr, quartic)");
    construct->add_option("--q", cq, "Prime power q = 3 mod 4 (paley-signed; complement of the Paley set)");
    construct->add_option("--m", cm, "Prime-pair parameter m (q = 2m-3, r = 2m+3)");
    construct->add_option("--file", cfile, "Difference set file for complement (- for stdin)");
    construct->add_option("--catalog", ccatalog, "Also append to this catalog (default $SDS_CATALOG if set)");

    std::string vfile;
    auto* verify_cmd = app.add_subcommand("verify", "Check the group-ring equation for a set file");
    verify_cmd->add_option("file", vfile, "Set file, - for stdin")->required();

    std::string afile;
    auto* autocorr = app.add_subcommand("autocorr", "Periodic autocorrelation of a cyclic set");
    autocorr->add_option("file", afile, "Set file, - for stdin")->required();

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Orbit (or element) search for sets with given parameters");
    search->add_option("--group", sa.group, "Group literal, e.g. 19 or 2x3x3")->required();
    search->add_option("--k", sa.k)->required();
    search->add_option("--lambda", sa.lambda)->required();
    search->add_option("--quotient-gen", sa.quotient_gens, "Kernel generator for quotient pruning, e.g. 5 or 0,1,0 (repeatable)");
    search->add_option("--max-nodes", sa.max_nodes, "Node budget (0 = unlimited)");
    search->add_option("--time-limit", sa.time_limit, "Wall-clock budget in seconds (0 = unlimited)");
    search->add_option("--threads", sa.threads, "Worker threads (1 = single-threaded)")->check(CLI::PositiveNumber);
    search->add_flag("--no-prune-quotient", sa.no_prune_quotient);
    search->add_flag("--no-prune-diff", sa.no_prune_diff);
    search->add_flag("--elements", sa.elements, "Element-by-element search instead of orbits (v <= 25)");
    search->add_option("--multiplier", sa.multiplier, "Use this unit t instead of the chosen numerical multiplier");
    search->add_option("--resume", sa.resume, "Resume from a frontier file written by --frontier-out");
    search->add_option("--frontier-out", sa.frontier_out, "Write the unexplored frontier here when partial");
    search->add_option("--catalog", sa.catalog, "Append found sets to this catalog (default $SDS_CATALOG if set)");

    i64 se = 0, smax = 0;
    auto* scan = app.add_subcommand("scan-residues", "Scan primes for e-th power residue sets with N = {0}");
    scan->add_option("--e", se)->required();
    scan->add_option("--max-v", smax)->required();

    i64 emax = 0;
    bool dedup = false;
    auto* enumerate = app.add_subcommand("enumerate", "List feasible parameters");
    enumerate->add_option("--max-v", emax)->required();
    enumerate->add_flag("--dedup-complements", dedup);

    std::string action, catflag, catfile;
    auto* catalog = app.add_subcommand("catalog", "Manage the JSON-lines catalog");
    catalog->add_option("action", action, "list | add | check")->required()->check(CLI::IsMember({"list", "add", "check"}));
    catalog->add_option("file", catfile, "Set file for add (- for stdin)");
    catalog->add_option("--catalog", catflag, "Catalog path (default $SDS_CATALOG, then sds_catalog.jsonl)");

    bool no_search = false;
    std::uint64_t tmax = 2'000'000;
    std::vector<std::string> trows;
    auto* table1 = app.add_subcommand("reproduce-table1", "Check the sporadic parameter table and rerun searches");
    table1->add_flag("--no-search", no_search, "Only the arithmetic check");
    table1->add_option("--max-nodes", tmax, "Node budget per search");
    table1->add_option("--row", trows, "v,k,lambda to search (repeatable; default 19,13,2 19,13,6 20,11,2 55,10,1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*feasible) return cmd_feasible(fv, fk, fl, as_json);
        if (*construct) {
            const auto cat = catalog_path(ccatalog);
            if (family == "complement") {
                if (!cfile.empty()) return emit_constructed(complement_signed(load_set(cfile)), cat);
                if (!cq) throw CLI::ValidationError("complement", "needs --q or --file");
                return emit_constructed(complement_signed(paley_difference_set(cq)), cat);
            }
            if (family == "qr") return emit_constructed(quadratic_residue_sds(cv), cat);
            if (family == "paley-signed") return emit_constructed(paley_signed_sds(cq), cat);
            if (family == "quartic") return emit_constructed(quartic_residue_sds(cv), cat);
            if (family == "prime-pair") return emit_constructed(prime_pair_sds(cm), cat);
            return emit_constructed(noncyclic_18_13_4(), cat);
        }
        if (*verify_cmd) return cmd_verify(vfile, as_json);
        if (*autocorr) return cmd_autocorr(afile, as_json);
        if (*search) {
            sa.json = as_json;
            return cmd_search(sa);
        }
        if (*scan) return cmd_scan(se, smax, as_json);
        if (*enumerate) return cmd_enumerate(emax, dedup, as_json);
        if (*catalog) return cmd_catalog(action, catflag, catfile);
        if (*table1) return cmd_reproduce_table1(!no_search, tmax, trows);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "sds: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "sds: " << e.what() << '\n';
        return e.code() == Errc::verification_failed ? kFail : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "sds: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
