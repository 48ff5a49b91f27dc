#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include <superchar/errors.hpp>
#include <superchar/folding.hpp>
#include <superchar/lr.hpp>
#include <superchar/schur.hpp>
#include <superchar/verify.hpp>
#include <superchar/weights.hpp>

namespace superchar::cli
{

namespace
{

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
    std::string out_path;
    std::string persist_dir;
    bool json = false;

    std::string lambda, mu, nu;
    std::string x, y;
    std::string bracket = "PLAIN";

    std::string fold_case, branch;
    int r = 0, s = 0, a = 0, m = 0;

    std::string family, labels, weight;

    std::string check;
    int nT = 1, degmax = 0, xi = 1;

    std::string config_path;
    int parallelism = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> batteries;
};

struct Result {
    json value;
    std::string text;     // rendering used without --json; empty means JSON
    bool lines = false;   // value is an array printed one element per line
    int status = exit_ok;
};

std::string render(const Result &r, bool want_json)
{
    if (!want_json && !r.text.empty()) {
        return r.text + "\n";
    }
    if (r.lines) {
        std::string out;
        for (const auto &v : r.value) {
            out += v.dump() + "\n";
        }
        return out;
    }
    return r.value.dump(2) + "\n";
}

VarTablePtr table_for(const std::string &x, const std::string &y)
{
    auto names = alphabet_variable_names(x);
    for (auto &n : alphabet_variable_names(y)) {
        if (std::find(names.begin(), names.end(), n) == names.end()) {
            names.push_back(std::move(n));
        }
    }
    return make_vars(std::move(names));
}

std::vector<Rational> parse_rationals(const std::string &text)
{
    std::vector<Rational> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        out.push_back(parse_rational(token));
    }
    if (text.back() == ',') {
        throw invalid_input("trailing comma in '" + text + "'");
    }
    return out;
}

json rationals_json(const std::vector<Rational> &v)
{
    json out = json::array();
    for (const auto &x : v) {
        out.push_back(to_json(x));
    }
    return out;
}

Result report_result(const VerificationReport &r)
{
    Result out{to_json(r), {}, false, r.pass ? exit_ok : exit_check_failed};
    return out;
}

// ------------------------------------------------------------ commands

Result run_char(const Options &o)
{
    const auto lambda = Partition::parse(o.lambda);
    const auto tag = parse_bracket(o.bracket);
    const auto vars = table_for(o.x, o.y);
    const auto X = parse_alphabet(o.x, vars);
    const auto Y = parse_alphabet(o.y, vars);
    return {to_json(bracket_schur(tag, lambda, X, Y)), {}};
}

Result run_fold(const Options &o)
{
    const FoldingCase c{parse_fold_kind(o.fold_case), o.r, o.s};
    validate(c);
    if (o.branch.empty()) {
        const auto p = kr_supercharacter(c, o.a, o.m);
        return {to_json(p), p.to_string()};
    }
    const auto b = parse_branch(o.branch);
    if (branch_info(b).owner != c.kind) {
        throw invalid_input("branch " + o.branch + " does not belong to case " + o.fold_case);
    }
    const auto [M, N] = ambient_hook(c);
    if (o.a > 0 && o.m > 0 && !in_hook(rectangle(o.m, o.a), M, N)) {
        throw invalid_input("(" + std::to_string(o.m) + "^" + std::to_string(o.a) + ") lies outside the ["
                            + std::to_string(M) + "," + std::to_string(N) + "]-hook of " + o.fold_case);
    }
    auto res = report_result(verify_decomposition(c, b, o.a, o.m));
    res.text = (res.status == exit_ok ? "PASS " : "FAIL ") + res.value["id"].get<std::string>() + " "
               + res.value["params"].dump();
    return res;
}

Result run_lr(const Options &o)
{
    const auto lam = Partition::parse(o.lambda);
    const auto mu = Partition::parse(o.mu);
    const auto nu = Partition::parse(o.nu);
    const auto value = lr_coeff(lam, mu, nu);
    return {json{{"lam", lam.to_string()}, {"mu", mu.to_string()}, {"nu", nu.to_string()}, {"value", value}},
            std::to_string(value)};
}

Result run_weights(const Options &o)
{
    const auto family = parse_family(o.family);
    const int given = !o.lambda.empty() + !o.labels.empty() + !o.weight.empty();
    if (given != 1) {
        throw invalid_input("weights needs exactly one of --lambda, --weight, --labels");
    }
    json out{{"family", family.name()}};
    if (!o.labels.empty()) {
        const KacDynkinLabels b{parse_rationals(o.labels)};
        out["b"] = rationals_json(b.b);
        out["finite_dimensional"] = is_finite_dimensional(family, b);
        return {out, {}};
    }
    HighestWeight w;
    if (!o.lambda.empty()) {
        const auto lambda = Partition::parse(o.lambda == "-" ? "" : o.lambda);
        out["lambda"] = lambda.to_string();
        w = hw_from_diagram(family, lambda);
    } else {
        w.coords = parse_rationals(o.weight);
    }
    const auto b = kd_labels(family, w);
    out["Lambda"] = rationals_json(w.coords);
    out["b"] = rationals_json(b.b);
    out["finite_dimensional"] = is_finite_dimensional(family, b);
    return {out, {}};
}

enum class CheckGroup { cauchy, littlewood, mmdet, dc };

Result run_verify(const Options &o, const CLI::App &sub)
{
    CheckGroup group;
    if (o.check.starts_with("co-")) {
        group = CheckGroup::cauchy;
    } else if (o.check.starts_with("sum-")) {
        group = CheckGroup::littlewood;
    } else if (o.check == "mmdet") {
        group = CheckGroup::mmdet;
    } else if (o.check.starts_with("dc-")) {
        group = CheckGroup::dc;
    } else {
        throw invalid_input("unknown check '" + o.check
                            + "' (expected co-A, co-B, co-C, co-Cdual, sum-S, sum-L1, sum-L2, mmdet or dc-*; "
                              "folding branches are checked with the fold command)");
    }
    std::set<std::string> allowed{"--check", "--out", "--persist", "--json"};
    switch (group) {
        case CheckGroup::cauchy:
            allowed.insert({"--x", "--y", "--nT", "--degmax"});
            break;
        case CheckGroup::littlewood:
            allowed.insert({"--nT", "--degmax"});
            break;
        case CheckGroup::mmdet:
            allowed.insert("--m");
            break;
        case CheckGroup::dc:
            allowed.insert({"--lambda", "--x", "--y", "--xi"});
            break;
    }
    for (const auto *opt : sub.get_options()) {
        const auto name = opt->get_name();
        if (opt->count() > 0 && name.starts_with("--") && !allowed.count(name)) {
            throw invalid_input("option " + name + " does not apply to check " + o.check);
        }
    }
    switch (group) {
        case CheckGroup::cauchy: {
            const auto vars = table_for(o.x, o.y);
            return report_result(cauchy_check(parse_cauchy_kind(o.check), parse_alphabet(o.x, vars),
                                              parse_alphabet(o.y, vars), o.nT, o.degmax));
        }
        case CheckGroup::littlewood:
            return report_result(littlewood_sum_check(parse_littlewood_kind(o.check), o.nT, o.degmax));
        case CheckGroup::mmdet:
            return report_result(mmdet_check(o.m));
        case CheckGroup::dc: {
            const auto rel = parse_dc_relation(o.check);
            const auto lambda = Partition::parse(o.lambda);
            const auto vars = table_for(o.x, o.y);
            return report_result(
                general_dc_check(rel, lambda, parse_alphabet(o.x, vars), parse_alphabet(o.y, vars), o.xi));
        }
    }
    throw internal_error("unhandled check group");
}

Result run_suite_command(const Options &o, std::ostream &err)
{
    SuiteConfig config;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) {
            throw invalid_input("cannot read config file " + o.config_path);
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error &e) {
            throw invalid_input("config file " + o.config_path + " is not valid JSON: " + e.what());
        }
        config = suite_config_from_json(j);
    }
    if (o.parallelism > 0) {
        config.parallelism = o.parallelism;
    }
    if (o.seed != 0) {
        config.seed = o.seed;
    }
    std::vector<Battery> batteries;
    for (const auto &name : o.batteries) {
        batteries.push_back(parse_battery(name));
    }
    if (batteries.empty()) {
        batteries = all_batteries();
    }
    validate(config);
    const auto reports = run_batteries(config, batteries);
    json arr = json::array();
    std::size_t failed = 0;
    for (const auto &r : reports) {
        arr.push_back(to_json(r));
        failed += r.pass ? 0 : 1;
    }
    err << "suite: " << reports.size() << " checks, " << failed << " failed\n";
    Result res{std::move(arr), {}, true, failed == 0 ? exit_ok : exit_check_failed};
    return res;
}

// ------------------------------------------------------------ persistence

std::string utc_stamp()
{
    const auto now = std::chrono::system_clock::now();
    const auto t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

void persist(const fs::path &dir, const std::string &command, const std::vector<std::string> &args,
             const Result &r)
{
    fs::create_directories(dir);
    const auto stem = command + "-" + utc_stamp();
    auto path = dir / (stem + ".json");
    for (int k = 2; fs::exists(path); ++k) {
        path = dir / (stem + "-" + std::to_string(k) + ".json");
    }
    std::ofstream f(path);
    f << json{{"command", command}, {"arguments", args}, {"exit_status", r.status}, {"result", r.value}}.dump(2)
      << "\n";
    if (!f) {
        throw std::runtime_error("failed to write " + path.string());
    }
}

std::optional<fs::path> cache_file()
{
    const char *dir = std::getenv("SUPERCHAR_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') {
        return std::nullopt;
    }
    return fs::path(dir) / "hseries-cache.json";
}

} // namespace

int parse_and_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Supersymmetric Schur functions, foldings and identity checks", "superchar"};
    app.require_subcommand(1);
    Options o;

    const auto common = [&](CLI::App *sub) {
        sub->add_option("--out", o.out_path, "Write the result to this file instead of stdout");
        sub->add_option("--persist", o.persist_dir, "Also store a timestamped JSON copy in this directory");
        sub->add_flag("--json", o.json, "JSON output");
    };

    auto *chr = app.add_subcommand("char", "Supersymmetric Schur function S_lambda(X|Y) or a bracket variant");
    chr->add_option("--lambda", o.lambda, "Partition, e.g. 2,1 (empty for the empty partition)")->required();
    chr->add_option("--x", o.x, "Alphabet X, e.g. x1,x1^-1,1");
    chr->add_option("--y", o.y, "Alphabet Y");
    chr->add_option("--bracket", o.bracket, "PLAIN, SQUARE or ANGLE");
    common(chr);

    auto *fold = app.add_subcommand("fold", "KR supercharacter of a folding, or check one decomposition branch");
    fold->add_option("--case", o.fold_case, "B1, A2_EVEN, A2_ODD, A2_EE, D1, SPO or D2")->required();
    fold->add_option("--r", o.r, "r >= 0");
    fold->add_option("--s", o.s, "s >= 0");
    fold->add_option("--a", o.a, "Rows of the rectangle")->required();
    fold->add_option("--m", o.m, "Columns of the rectangle")->required();
    fold->add_option("--branch", o.branch, "Decomposition branch, e.g. de-BB");
    common(fold);

    auto *lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    lr->add_option("--lam", o.lambda, "Outer partition")->required();
    lr->add_option("--mu", o.mu, "First factor")->required();
    lr->add_option("--nu", o.nu, "Second factor")->required();
    common(lr);

    auto *weights = app.add_subcommand("weights", "Highest weight and Kac-Dynkin labels");
    weights->add_option("--family", o.family, "GL(M,N), B(r,s), B0(s), C(s+1), D_PLUS(r,s) or D_MINUS(r,s)")
        ->required();
    weights->add_option("--lambda", o.lambda, "Diagram in the family's hook (- for the empty one)");
    weights->add_option("--weight", o.weight, "Highest weight coordinates, e.g. 2,1,0");
    weights->add_option("--labels", o.labels, "Kac-Dynkin labels to test, e.g. 1,1/2");
    common(weights);

    auto *verify = app.add_subcommand("verify", "Run a single identity check");
    verify->add_option("--check", o.check, "co-A, co-B, co-C, co-Cdual, sum-S, sum-L1, sum-L2, mmdet or dc-*")
        ->required();
    verify->add_option("--lambda", o.lambda, "Partition (dc checks)");
    verify->add_option("--x", o.x, "Alphabet X");
    verify->add_option("--y", o.y, "Alphabet Y");
    verify->add_option("--xi", o.xi, "Sign for dc-2*/dc-3*");
    verify->add_option("--nT", o.nT, "Number of t variables");
    verify->add_option("--degmax", o.degmax, "Truncation degree in t");
    verify->add_option("--m", o.m, "Determinant size (mmdet)");
    common(verify);

    auto *suite = app.add_subcommand("suite", "Run the full identity battery");
    suite->add_option("--config", o.config_path, "JSON file with suite settings");
    suite->add_option("--parallelism", o.parallelism, "Worker threads (overrides the config)");
    suite->add_option("--seed", o.seed, "Seed for randomized checks (overrides the config)");
    suite->add_option("--battery", o.batteries, "Restrict to the named batteries (repeatable)");
    common(suite);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    const auto *sub = app.get_subcommands().front();
    const auto command = sub->get_name();
    const auto cache = cache_file();
    try {
        if (cache && command != "lr" && command != "weights") {
            try {
                load_h_cache(*cache);
            } catch (const invalid_input &e) {
                err << "warning: ignoring h-series cache: " << e.what() << "\n";
            }
        }
        Result result;
        if (command == "char") {
            result = run_char(o);
        } else if (command == "fold") {
            result = run_fold(o);
        } else if (command == "lr") {
            result = run_lr(o);
        } else if (command == "weights") {
            result = run_weights(o);
        } else if (command == "verify") {
            result = run_verify(o, *sub);
        } else {
            result = run_suite_command(o, err);
        }
        const auto text = render(result, o.json);
        if (o.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(o.out_path, std::ios::binary);
            f << text;
            if (!f) {
                err << "error: cannot write " << o.out_path << "\n";
                return exit_internal;
            }
        }
        if (!o.persist_dir.empty()) {
            persist(o.persist_dir, command, args, result);
        }
        if (cache && command != "lr" && command != "weights") {
            fs::create_directories(cache->parent_path());
            save_h_cache(*cache);
        }
        return result.status;
    } catch (const invalid_input &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

} // namespace superchar::cli
