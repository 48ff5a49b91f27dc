#ifndef SUPERCHAR_VERIFY_HPP
#define SUPERCHAR_VERIFY_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <superchar/alphabet.hpp>
#include <superchar/report.hpp>

namespace superchar
{

enum class CauchyKind { co_A, co_B, co_C, co_Cdual };
enum class LittlewoodKind { sum_S, sum_L1, sum_L2 };

std::string_view to_string(CauchyKind kind);
CauchyKind parse_cauchy_kind(std::string_view text);
const std::vector<CauchyKind> &all_cauchy_kinds();
std::string_view to_string(LittlewoodKind kind);
LittlewoodKind parse_littlewood_kind(std::string_view text);
const std::vector<LittlewoodKind> &all_littlewood_kinds();

/// Both sides of a Cauchy-type identity in t1..tnT, up to total t-degree
/// degmax. The alphabets' table must not already use the names t1..tnT.
VerificationReport cauchy_check(CauchyKind kind, const Alphabet &X, const Alphabet &Y, int nT, int degmax);

/// Sum of S_lambda(t1..tnT) over one class of partitions against its
/// product formula, up to total degree degmax.
VerificationReport littlewood_sum_check(LittlewoodKind kind, int nT, int degmax);

/// det(t_i^{m-j} - t_i^{m+j}) against its product form in t1..tm.
VerificationReport mmdet_check(int m);

struct SuiteConfig {
    int degmax = 6;
    int max_lambda_size = 5;
    int max_rank = 3; // bound on r + s in the folding batteries
    int t_count = 3;
    int parallelism = 1;
    std::uint64_t seed = 0;

    int lr_oracle_size = 6;
    int lr_property_size = 8;
    int rect_max = 4;
    int fold_max = 3; // bound on a and m
    int mmdet_max = 5;
    int alphabet_x = 3;
    int alphabet_y = 2;
    int cauchy_alphabet = 2;
};

/// Throws invalid_input for negative bounds or parallelism < 1.
void validate(const SuiteConfig &config);
nlohmann::json to_json(const SuiteConfig &config);
/// Missing keys keep their defaults; unknown keys are rejected.
SuiteConfig suite_config_from_json(const nlohmann::json &j);

enum class Battery { partitions, schur, lr, dc, folding, dimensions, twisted_d, cauchy, littlewood, mmdet };

std::string_view to_string(Battery battery);
Battery parse_battery(std::string_view text);
const std::vector<Battery> &all_batteries();

/// Runs the selected batteries on config.parallelism threads. Failed
/// checks become reports; exceptions thrown by a check propagate after all
/// workers have stopped. The result is sorted and independent of the
/// thread count.
std::vector<VerificationReport> run_batteries(const SuiteConfig &config, std::span<const Battery> batteries);
std::vector<VerificationReport> run_suite(const SuiteConfig &config);

} // namespace superchar

#endif
