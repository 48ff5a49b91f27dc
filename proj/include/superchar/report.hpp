#ifndef SUPERCHAR_REPORT_HPP
#define SUPERCHAR_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <superchar/laurent.hpp>

namespace superchar
{

/// Outcome of one identity check. `witness` is present exactly when the
/// check failed; it holds the difference polynomial or a description of
/// the first failing value.
struct VerificationReport {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    std::optional<nlohmann::json> witness;
};

/// pass iff `difference` is zero; otherwise the difference is the witness.
VerificationReport report_from_difference(std::string id, nlohmann::json params, const LaurentPoly &difference);
VerificationReport report_pass(std::string id, nlohmann::json params);
VerificationReport report_fail(std::string id, nlohmann::json params, nlohmann::json detail);

nlohmann::json to_json(const VerificationReport &r);
VerificationReport report_from_json(const nlohmann::json &j);

/// Sorts by id, then by the serialized params.
void sort_reports(std::vector<VerificationReport> &reports);

/// One JSON object per line, in the given order.
std::string to_json_lines(const std::vector<VerificationReport> &reports);

bool all_pass(const std::vector<VerificationReport> &reports);

} // namespace superchar

#endif
