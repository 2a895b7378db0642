#include "extri/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "extri/covers.hpp"
#include "extri/extremal.hpp"
#include "extri/family_io.hpp"
#include "extri/parallel.hpp"
#include "extri/predicates.hpp"
#include "extri/propcheck.hpp"
#include "extri/report_json.hpp"
#include "extri/search.hpp"
#include "extri/triangles.hpp"

namespace extri::cli {

namespace {

/// Thrown when a check or battery fails; carries already-printed output.
struct CheckFailure
{
};

struct RunConfig
{
    unsigned workers = 0;
    std::uint64_t budget = kDefaultNodeBudget;
    std::string format = "table";
    std::uint64_t seed = 1;
};

template <typename T>
T env_or(const char* name, T fallback)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return fallback;
    try {
        return static_cast<T>(std::stoull(raw));
    } catch (const std::exception&) {
        throw DomainError(std::string("invalid value for ") + name + ": " + raw);
    }
}

Block parse_element_list(const std::string& text)
{
    Block b;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            b.set(std::stoi(token));
        } catch (const std::invalid_argument&) {
            throw DomainError("not an element list: " + text);
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return b;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string family_line(const Family& f)
{
    std::string s;
    for (const auto& b : f) {
        if (!s.empty())
            s += ' ';
        s += b.to_string();
    }
    return s.empty() ? "(empty)" : s;
}

void print_search(std::ostream& out, const SearchReport& report, const std::string& format)
{
    if (format == "json") {
        print_json(out, to_json(report));
        return;
    }
    if (format == "csv") {
        out << "n,k,r,max_count,maximizer_count,all_maximizers_sandwich,families_enumerated,target_count\n";
        out << report.n << ',' << report.k << ',' << report.r << ',' << report.max_count << ','
            << report.maximizer_count << ',' << (report.all_maximizers_sandwich ? "true" : "false") << ','
            << report.families_enumerated << ',' << (report.target_count ? report.target_count->str() : "")
            << '\n';
        return;
    }
    out << "n = " << report.n;
    if (report.uniform)
        out << ", k = " << report.k;
    out << ", r = " << report.r << '\n';
    out << "families enumerated     " << report.families_enumerated << '\n';
    out << "max (r+1)-triangles     " << report.max_count << '\n';
    out << "maximizers              " << report.maximizer_count << '\n';
    out << "all sandwiched          " << (report.all_maximizers_sandwich ? "yes" : "no") << '\n';
    if (report.target_count)
        out << "F_X target              " << *report.target_count << '\n';
    if (report.isomorphism_classes)
        out << "isomorphism classes     " << *report.isomorphism_classes << '\n';
    out << "nodes                   " << report.stats.nodes << '\n';
    for (const auto& f : report.maximizers)
        out << "  " << family_line(f) << '\n';
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool search_flags)
{
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
    if (search_flags)
        cmd->add_option("--budget", cfg.budget, "Enumeration node budget");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact counting and search for triangles in r-wise intersecting families", "extri"};
    app.require_subcommand(1);

    int n = 0, k = 0, r = 0, n_to = 0, max_size = 2;
    std::string family_path, x_list, out_path, method = "bnb";
    bool boundary = false, with_search = false, iso = false, nonuniform = false;
    std::size_t count = 1000, max_reported = 16;

    auto* construct = app.add_subcommand("construct", "Build F_{X,k} (or the boundary family F'_{X,k})");
    construct->add_option("--n", n)->required();
    construct->add_option("--k", k);
    construct->add_option("--x", x_list, "Comma-separated X, e.g. 1,2,3")->required();
    construct->add_flag("--boundary", boundary, "Only sets meeting X in exactly |X|-1 elements");
    construct->add_flag("--nonuniform", nonuniform, "All nonempty subsets instead of k-sets");
    construct->add_option("--out", out_path, "Write the family here instead of stdout");
    add_common(construct, cfg, false);

    auto* count_cmd = app.add_subcommand("count-triangles", "Count r-triangles in a family");
    count_cmd->add_option("--family", family_path)->required();
    count_cmd->add_option("--r", r, "Triangle size (3 = ordinary triangles)")->default_val(3);
    add_common(count_cmd, cfg, false);

    auto* tau = app.add_subcommand("tau", "Covering number with a minimum witness");
    tau->add_option("--family", family_path)->required();
    tau->add_option("--method", method)->check(CLI::IsMember({"bnb", "exhaustive"}))->capture_default_str();
    add_common(tau, cfg, false);

    auto* covers = app.add_subcommand("covers", "Minimal covers and the cover graph");
    covers->add_option("--family", family_path)->required();
    covers->add_option("--max-size", max_size)->capture_default_str();
    add_common(covers, cfg, false);

    auto* nrk = app.add_subcommand("nrk", "Exact number of (r+1)-triangles in F_{X,k}, |X| = r+1");
    nrk->add_option("--n", n)->required();
    nrk->add_option("--k", k)->required();
    nrk->add_option("--r", r)->required();
    add_common(nrk, cfg, false);

    auto* bounds = app.add_subcommand("bounds", "Lower bounds on n_{r+1,k} against the exact value");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--n-to", n_to, "Last n of a range starting at --n");
    bounds->add_option("--k", k)->required();
    bounds->add_option("--r", r)->required();
    bounds->add_flag("--with-search", with_search, "Also run the exhaustive search per row");
    add_common(bounds, cfg, true);

    auto* check = app.add_subcommand("check", "Run every property check on a family");
    check->add_option("--family", family_path)->required();
    check->add_option("--r", r)->required();
    add_common(check, cfg, false);

    auto* search = app.add_subcommand("search", "Exhaustive search over maximal r-wise intersecting k-uniform families");
    search->add_option("--n", n)->required();
    search->add_option("--k", k)->required();
    search->add_option("--r", r)->required();
    search->add_option("--max-reported", max_reported)->capture_default_str();
    search->add_flag("--iso", iso, "Report maximizers up to isomorphism (n <= 8)");
    add_common(search, cfg, true);

    auto* search_nu = app.add_subcommand("search-nonuniform", "Same search over all nonempty subsets of [n]");
    search_nu->add_option("--n", n)->required();
    search_nu->add_option("--r", r)->required();
    search_nu->add_option("--max-reported", max_reported)->capture_default_str();
    search_nu->add_flag("--iso", iso, "Report maximizers up to isomorphism (n <= 8)");
    add_common(search_nu, cfg, true);

    auto* battery = app.add_subcommand("battery", "Property checks on seeded random maximal families");
    battery->add_option("--count", count)->capture_default_str();
    battery->add_option("--seed", cfg.seed)->capture_default_str();
    add_common(battery, cfg, false);

    try {
        cfg.workers = env_or<unsigned>("WORKER_COUNT", 0);
        cfg.budget = env_or<std::uint64_t>("NODE_BUDGET", kDefaultNodeBudget);

        std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
        std::reverse(reversed.begin(), reversed.end());
        try {
            app.parse(std::move(reversed));
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << '\n' << app.help();
            return kUsage;
        }

        SearchOptions search_opts;
        search_opts.workers = cfg.workers;
        search_opts.node_budget = cfg.budget;
        search_opts.max_reported = max_reported;
        search_opts.isomorphism_reduction = iso;

        if (construct->parsed()) {
            const auto x = parse_element_list(x_list);
            const auto variant = boundary ? ExtremalVariant::Boundary : ExtremalVariant::Full;
            const auto family = nonuniform ? construct_extremal_nonuniform(n, x, variant)
                                           : construct_extremal(n, k, x, variant);
            std::ofstream file;
            std::ostream* sink = &out;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file)
                    throw DomainError("cannot write " + out_path);
                sink = &file;
            }
            if (cfg.format == "json")
                print_json(*sink, family_to_json(family));
            else
                write_family_text(*sink, family);
        } else if (count_cmd->parsed()) {
            const auto family = read_family_file(family_path);
            const auto value = count_r_triangles(family, r, {}, cfg.workers);
            if (cfg.format == "json")
                print_json(out, Json{{"schema", kReportSchema}, {"r", r}, {"count", big_to_json(value)}});
            else
                out << value << '\n';
        } else if (tau->parsed()) {
            const auto family = read_family_file(family_path);
            const auto cert =
                covering_number(family, method == "exhaustive" ? CoverMethod::Exhaustive : CoverMethod::BranchAndBound);
            if (cfg.format == "json") {
                auto j = to_json(cert);
                j["schema"] = kReportSchema;
                print_json(out, j);
            } else {
                out << "tau = " << cert.tau << ", witness = " << cert.witness.to_string() << '\n';
            }
        } else if (covers->parsed()) {
            const auto family = read_family_file(family_path);
            const auto minimal = minimal_covers(family, max_size);
            const auto graph = cover_graph_analysis(family);
            if (cfg.format == "json") {
                Json j;
                j["schema"] = kReportSchema;
                auto list = Json::array();
                for (const auto& c : minimal)
                    list.push_back(c.elements());
                j["minimal_covers"] = std::move(list);
                j["cover_graph"] = to_json(graph);
                print_json(out, j);
            } else {
                out << "minimal covers (size <= " << max_size << "):";
                for (const auto& c : minimal)
                    out << ' ' << c.to_string();
                out << "\nsingleton covers:";
                for (int v : graph.singleton_covers)
                    out << ' ' << v;
                out << "\ncover graph edges:";
                for (auto [a, b] : graph.edges)
                    out << ' ' << a << '-' << b;
                out << "\ncomponents: " << graph.components.size() << ", max degree " << graph.max_degree
                    << ", induced P3 " << (graph.has_induced_p3 ? "yes" : "no") << ", all cliques "
                    << (graph.all_components_cliques ? "yes" : "no") << '\n';
            }
        } else if (nrk->parsed()) {
            const auto value = n_exact(n, k, r, cfg.workers);
            if (cfg.format == "json")
                print_json(out, Json{{"schema", kReportSchema},
                                     {"n", n},
                                     {"k", k},
                                     {"r", r},
                                     {"n_exact", big_to_json(value)}});
            else if (cfg.format == "csv")
                out << "n,k,r,n_exact\n" << n << ',' << k << ',' << r << ',' << value << '\n';
            else
                out << "n_{" << r + 1 << ',' << k << "} = " << value << '\n';
        } else if (bounds->parsed()) {
            const int last = std::max(n, n_to);
            auto rows = Json::array();
            if (cfg.format == "csv")
                out << "n,k,r,n_exact,incl_excl_bound,half_power_doubled,max_search,sandwich\n";
            for (int nn = n; nn <= last; ++nn) {
                const auto triple = prop1_bounds(nn, k, r);
                const auto exact = n_exact(nn, k, r, cfg.workers);
                const auto verdict = compare_bounds(triple, exact);
                std::optional<SearchReport> found;
                if (with_search)
                    found = max_triangle_search(nn, k, r, search_opts);
                if (cfg.format == "csv") {
                    out << nn << ',' << k << ',' << r << ',' << exact << ',' << triple.incl_excl << ','
                        << triple.half_power_doubled << ',' << (found ? found->max_count.str() : "") << ','
                        << (found ? (found->all_maximizers_sandwich ? "true" : "false") : "") << '\n';
                } else if (cfg.format == "json") {
                    auto row = to_json(triple);
                    row["n"] = nn;
                    row["k"] = k;
                    row["r"] = r;
                    row["n_exact"] = big_to_json(exact);
                    row["incl_excl_le_exact"] = verdict.incl_excl_below_exact;
                    row["half_power_le_double_exact"] = verdict.half_power_below_exact;
                    row["ratio_chain"] = verdict.ratio_below_half_power;
                    if (found) {
                        row["max_search"] = big_to_json(found->max_count);
                        row["sandwich"] = found->all_maximizers_sandwich;
                    }
                    rows.push_back(std::move(row));
                } else {
                    out << "n=" << nn << " k=" << k << " r=" << r << (triple.hypothesis_holds ? "" : " (n < k^2)")
                        << "\n  n_exact            " << exact << "\n  incl_excl          " << triple.incl_excl
                        << (verdict.incl_excl_below_exact ? "  <= n_exact" : "  > n_exact (!)")
                        << "\n  C(n-r-1,k-r)^(r+1) " << triple.half_power_doubled
                        << (verdict.half_power_below_exact ? "  <= 2 n_exact" : "  > 2 n_exact (!)")
                        << "\n  (n-1)^(r+1)        " << triple.ratio_numerator << " / " << triple.ratio_denominator
                        << (verdict.ratio_below_half_power ? "  chain holds" : "  chain fails") << '\n';
                    if (found)
                        out << "  max_search         " << found->max_count
                            << (found->all_maximizers_sandwich ? " (all sandwiched)" : "") << '\n';
                }
            }
            if (cfg.format == "json")
                print_json(out, Json{{"schema", kReportSchema}, {"rows", std::move(rows)}});
        } else if (check->parsed()) {
            const auto family = read_family_file(family_path);
            const auto report = check_all(family, r);
            if (cfg.format == "json") {
                print_json(out, to_json(report));
            } else {
                for (const auto& c : report.checks)
                    out << c.name << ": " << to_string(c.status) << " (" << c.details << ")\n";
            }
            if (report.any_failed())
                throw CheckFailure{};
        } else if (search->parsed()) {
            print_search(out, max_triangle_search(n, k, r, search_opts), cfg.format);
        } else if (search_nu->parsed()) {
            print_search(out, nonuniform_max_triangle_search(n, r, search_opts), cfg.format);
        } else if (battery->parsed()) {
            BatteryOptions opts;
            opts.count = count;
            opts.seed = cfg.seed;
            opts.workers = cfg.workers;
            const auto report = run_battery(opts);
            if (cfg.format == "json") {
                print_json(out, to_json(report));
            } else {
                out << "families: " << report.families << '\n';
                for (const auto& t : report.tallies)
                    out << t.name << ": applicable " << t.applicable << ", passed " << t.passed << ", failed "
                        << t.failed << '\n';
                for (const auto& f : report.failures)
                    out << "FAILED #" << f.index << " (n=" << f.n << " k=" << f.k << " r=" << f.r
                        << " seed=" << f.seed << "): " << family_line(f.family) << '\n';
            }
            if (!report.passed())
                throw CheckFailure{};
        }
    } catch (const CheckFailure&) {
        return kCheckFailed;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

} // namespace extri::cli
