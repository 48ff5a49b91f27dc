#include <superchar/report.hpp>

#include <algorithm>

#include <superchar/errors.hpp>

namespace superchar
{

VerificationReport report_from_difference(std::string id, nlohmann::json params, const LaurentPoly &difference)
{
    VerificationReport r{std::move(id), std::move(params), difference.is_zero(), std::nullopt};
    if (!r.pass) {
        r.witness = to_json(difference);
    }
    return r;
}

VerificationReport report_pass(std::string id, nlohmann::json params)
{
    return {std::move(id), std::move(params), true, std::nullopt};
}

VerificationReport report_fail(std::string id, nlohmann::json params, nlohmann::json detail)
{
    return {std::move(id), std::move(params), false, nlohmann::json{{"detail", std::move(detail)}}};
}

nlohmann::json to_json(const VerificationReport &r)
{
    nlohmann::json j{{"id", r.id}, {"params", r.params}, {"pass", r.pass}};
    if (r.witness) {
        j["witness"] = *r.witness;
    }
    return j;
}

VerificationReport report_from_json(const nlohmann::json &j)
{
    try {
        VerificationReport r{j.at("id").get<std::string>(), j.at("params"), j.at("pass").get<bool>(), std::nullopt};
        if (j.contains("witness")) {
            r.witness = j.at("witness");
        }
        if (r.pass == r.witness.has_value()) {
            throw invalid_input("report witness must be present exactly when the check failed");
        }
        return r;
    } catch (const nlohmann::json::exception &ex) {
        throw invalid_input(std::string("malformed report: ") + ex.what());
    }
}

void sort_reports(std::vector<VerificationReport> &reports)
{
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        keys.emplace_back(reports[i].params.dump(), i);
    }
    std::stable_sort(keys.begin(), keys.end(), [&](const auto &a, const auto &b) {
        const auto &ra = reports[a.second];
        const auto &rb = reports[b.second];
        if (ra.id != rb.id) {
            return ra.id < rb.id;
        }
        return a.first < b.first;
    });
    std::vector<VerificationReport> sorted;
    sorted.reserve(reports.size());
    for (const auto &k : keys) {
        sorted.push_back(std::move(reports[k.second]));
    }
    reports = std::move(sorted);
}

std::string to_json_lines(const std::vector<VerificationReport> &reports)
{
    std::string out;
    for (const auto &r : reports) {
        out += to_json(r).dump();
        out += '\n';
    }
    return out;
}

bool all_pass(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport &r) { return r.pass; });
}

} // namespace superchar
