#include "extri/report_json.hpp"

#include "extri/family_io.hpp"

namespace extri {

Json big_to_json(const BigCount& value)
{
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
        return value.convert_to<std::uint64_t>();
    if (value < 0 && value >= std::numeric_limits<std::int64_t>::min())
        return value.convert_to<std::int64_t>();
    return value.str();
}

Json to_json(const CoverCertificate& cert)
{
    Json j;
    j["tau"] = cert.tau;
    j["witness"] = cert.witness.elements();
    j["method"] = cert.method == CoverMethod::Exhaustive ? "exhaustive" : "branch_and_bound";
    return j;
}

Json to_json(const CoverGraphReport& report)
{
    Json j;
    j["n"] = report.n;
    j["singleton_covers"] = report.singleton_covers;
    auto edges = Json::array();
    for (auto [a, b] : report.edges)
        edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["components"] = report.components;
    j["has_induced_p3"] = report.has_induced_p3;
    j["max_degree"] = report.max_degree;
    j["all_components_cliques"] = report.all_components_cliques;
    j["clique_sizes"] = report.clique_sizes;
    return j;
}

Json to_json(const BoundsTriple& bounds)
{
    Json j;
    j["incl_excl"] = big_to_json(bounds.incl_excl);
    j["half_power_doubled"] = big_to_json(bounds.half_power_doubled);
    j["ratio_numerator"] = big_to_json(bounds.ratio_numerator);
    j["ratio_denominator"] = big_to_json(bounds.ratio_denominator);
    j["hypothesis_holds"] = bounds.hypothesis_holds;
    return j;
}

Json to_json(const CheckResult& check)
{
    Json j;
    j["name"] = check.name;
    j["status"] = to_string(check.status);
    j["details"] = check.details;
    return j;
}

Json to_json(const PropReport& report)
{
    Json j;
    j["schema"] = kReportSchema;
    auto checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    j["passed"] = !report.any_failed();
    return j;
}

Json to_json(const SearchReport& report)
{
    Json j;
    j["schema"] = kReportSchema;
    j["n"] = report.n;
    if (report.uniform)
        j["k"] = report.k;
    j["r"] = report.r;
    j["uniform"] = report.uniform;
    j["max_count"] = big_to_json(report.max_count);
    j["maximizer_count"] = big_to_json(report.maximizer_count);
    j["all_maximizers_sandwich"] = report.all_maximizers_sandwich;
    j["families_enumerated"] = big_to_json(report.families_enumerated);
    if (report.target_count)
        j["target_count"] = big_to_json(*report.target_count);
    if (report.isomorphism_classes)
        j["isomorphism_classes"] = *report.isomorphism_classes;
    auto maximizers = Json::array();
    for (const auto& f : report.maximizers)
        maximizers.push_back(family_to_json(f)["blocks"]);
    j["maximizers"] = std::move(maximizers);
    j["stats"] = {{"nodes", report.stats.nodes}, {"subproblems", report.stats.subproblems}};
    return j;
}

Json to_json(const BatteryReport& report)
{
    Json j;
    j["schema"] = kReportSchema;
    j["count"] = report.options.count;
    j["seed"] = report.options.seed;
    j["grid"] = {{"n", report.options.n_values}, {"k", report.options.k_values}, {"r", report.options.r_values}};
    auto tallies = Json::array();
    for (const auto& t : report.tallies)
        tallies.push_back(
            {{"name", t.name}, {"applicable", t.applicable}, {"passed", t.passed}, {"failed", t.failed}});
    j["checks"] = std::move(tallies);
    auto failures = Json::array();
    for (const auto& f : report.failures) {
        Json entry;
        entry["index"] = f.index;
        entry["n"] = f.n;
        entry["k"] = f.k;
        entry["r"] = f.r;
        entry["seed"] = f.seed;
        entry["family"] = family_to_json(f.family);
        auto failed = Json::array();
        for (const auto& c : f.failed)
            failed.push_back(to_json(c));
        entry["failed"] = std::move(failed);
        failures.push_back(std::move(entry));
    }
    j["failures"] = std::move(failures);
    j["passed"] = report.passed();
    return j;
}

} // namespace extri
