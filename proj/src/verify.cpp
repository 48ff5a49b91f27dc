#include <superchar/verify.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include <superchar/determinant.hpp>
#include <superchar/errors.hpp>
#include <superchar/folding.hpp>
#include <superchar/lr.hpp>
#include <superchar/schur.hpp>

namespace superchar
{

namespace
{

template <class E, std::size_t N>
std::string_view enum_name(const std::array<std::pair<E, std::string_view>, N> &table, E e)
{
    for (const auto &[k, name] : table) {
        if (k == e) {
            return name;
        }
    }
    return "?";
}

template <class E, std::size_t N>
E enum_parse(const std::array<std::pair<E, std::string_view>, N> &table, std::string_view text, const char *what)
{
    for (const auto &[k, name] : table) {
        if (name == text) {
            return k;
        }
    }
    std::string known;
    for (const auto &[k, name] : table) {
        known += (known.empty() ? "" : ", ") + std::string(name);
    }
    throw invalid_input("unknown " + std::string(what) + " '" + std::string(text) + "' (expected one of " + known
                        + ")");
}

constexpr std::array cauchy_names{
    std::pair{CauchyKind::co_A, std::string_view("co-A")},
    std::pair{CauchyKind::co_B, std::string_view("co-B")},
    std::pair{CauchyKind::co_C, std::string_view("co-C")},
    std::pair{CauchyKind::co_Cdual, std::string_view("co-Cdual")},
};

constexpr std::array littlewood_names{
    std::pair{LittlewoodKind::sum_S, std::string_view("sum-S")},
    std::pair{LittlewoodKind::sum_L1, std::string_view("sum-L1")},
    std::pair{LittlewoodKind::sum_L2, std::string_view("sum-L2")},
};

constexpr std::array battery_names{
    std::pair{Battery::partitions, std::string_view("partitions")},
    std::pair{Battery::schur, std::string_view("schur")},
    std::pair{Battery::lr, std::string_view("lr")},
    std::pair{Battery::dc, std::string_view("dc")},
    std::pair{Battery::folding, std::string_view("folding")},
    std::pair{Battery::dimensions, std::string_view("dimensions")},
    std::pair{Battery::twisted_d, std::string_view("twisted-d")},
    std::pair{Battery::cauchy, std::string_view("cauchy")},
    std::pair{Battery::littlewood, std::string_view("littlewood")},
    std::pair{Battery::mmdet, std::string_view("mmdet")},
};

// ------------------------------------------------------------ series tools

std::vector<int> t_weights(const VarTablePtr &vars)
{
    std::vector<int> w(vars->size(), 0);
    for (std::size_t i = 0; i < vars->size(); ++i) {
        if (vars->name(i).starts_with('t')) {
            w[i] = 1;
        }
    }
    return w;
}

LaurentPoly t_var(const VarTablePtr &vars, int j)
{
    return LaurentPoly::variable(vars, "t" + std::to_string(j));
}

/// 1 + u + u^2 + ... truncated at weighted degree d; u must have positive degree.
LaurentPoly geometric(const LaurentPoly &u, std::span<const int> w, int d)
{
    LaurentPoly sum(u.vars(), 1);
    LaurentPoly term(u.vars(), 1);
    for (int k = 1; k <= d; ++k) {
        term = multiply_truncated(term, u, w, d);
        if (term.is_zero()) {
            break;
        }
        sum += term;
    }
    return sum;
}

/// Product of (1 - t_i t_j) over i <= j (diagonal) or i < j.
LaurentPoly pair_product(const VarTablePtr &vars, int nT, bool diagonal)
{
    LaurentPoly out(vars, 1);
    for (int i = 1; i <= nT; ++i) {
        for (int j = diagonal ? i : i + 1; j <= nT; ++j) {
            out *= LaurentPoly(vars, 1) - t_var(vars, i) * t_var(vars, j);
        }
    }
    return out;
}

/// 1 / prod over i <= j (or i < j) of (1 - t_i t_j), truncated.
LaurentPoly inverse_pair_product(const VarTablePtr &vars, int nT, bool diagonal, std::span<const int> w, int d)
{
    LaurentPoly out(vars, 1);
    for (int i = 1; i <= nT; ++i) {
        for (int j = diagonal ? i : i + 1; j <= nT; ++j) {
            out = multiply_truncated(out, geometric(t_var(vars, i) * t_var(vars, j), w, d), w, d);
        }
    }
    return out;
}

VarTablePtr t_only_table(int nT)
{
    return make_indexed_vars("t", static_cast<std::size_t>(nT));
}

std::vector<Partition> partitions_with_length(int max_size, int max_len)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto level = partitions_of_bounded(n, max_len, n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

void check_truncation_args(int nT, int degmax)
{
    if (nT < 1) {
        throw invalid_input("the number of t variables must be at least 1");
    }
    if (degmax < 0) {
        throw invalid_input("degmax must be non-negative");
    }
}

// ------------------------------------------------------------ suite plumbing

struct Job {
    std::string name;
    std::function<std::vector<VerificationReport>(std::uint64_t seed)> run;
};

std::uint64_t job_seed(std::uint64_t base, const std::string &name)
{
    std::uint64_t h = 1469598103934665603ULL ^ base;
    for (const unsigned char c : name) {
        h = (h ^ c) * 1099511628211ULL;
    }
    // splitmix64 finalizer
    h += 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    return h ^ (h >> 31);
}

nlohmann::json lambda_json(const Partition &p)
{
    return p.to_string();
}

VerificationReport count_report(std::string id, nlohmann::json params, std::size_t failures, std::string first)
{
    if (failures == 0) {
        return report_pass(std::move(id), std::move(params));
    }
    return report_fail(std::move(id), std::move(params),
                       {{"failures", failures}, {"first", std::move(first)}});
}

VarTablePtr formal_xy(int p, int q)
{
    std::vector<std::string> names;
    for (int i = 1; i <= p; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    for (int i = 1; i <= q; ++i) {
        names.push_back("y" + std::to_string(i));
    }
    return make_vars(std::move(names));
}

Alphabet first_letters(const VarTablePtr &vars, char prefix, int k)
{
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) {
        names.push_back(std::string(1, prefix) + std::to_string(i));
    }
    return Alphabet::of(vars, names);
}

// Partition counts by Euler's pentagonal recurrence.
std::vector<long long> pentagonal_counts(int n)
{
    std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k) {
        long long total = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > k) {
                break;
            }
            const long long sign = j % 2 == 1 ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(k - g1)];
            if (g2 <= k) {
                total += sign * p[static_cast<std::size_t>(k - g2)];
            }
        }
        p[static_cast<std::size_t>(k)] = total;
    }
    return p;
}

void partition_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    const int n_max = std::max(cfg.lr_property_size, cfg.max_lambda_size);
    jobs.push_back({"partitions/basic", [n_max](std::uint64_t) {
                        std::vector<VerificationReport> out;
                        const auto counts = pentagonal_counts(n_max);
                        for (int n = 0; n <= n_max; ++n) {
                            const auto parts = partitions_of(n);
                            const nlohmann::json params{{"n", n}};
                            out.push_back(static_cast<long long>(parts.size()) == counts[static_cast<std::size_t>(n)]
                                              ? report_pass("partitions/count", params)
                                              : report_fail("partitions/count", params,
                                                            {{"expected", counts[static_cast<std::size_t>(n)]},
                                                             {"got", parts.size()}}));
                            std::size_t bad = 0;
                            std::string first;
                            std::set<Partition> image;
                            for (const auto &p : parts) {
                                const auto c = p.conjugate();
                                image.insert(c);
                                if (c.conjugate() != p || c.size() != n
                                    || p.has_even_columns() != c.has_even_rows()) {
                                    if (bad++ == 0) {
                                        first = p.to_string();
                                    }
                                }
                            }
                            if (image.size() != parts.size() && bad++ == 0) {
                                first = "conjugation is not a bijection";
                            }
                            out.push_back(count_report("partitions/conjugate", params, bad, first));
                            bad = 0;
                            for (std::size_t i = 1; i < parts.size(); ++i) {
                                if (!(parts[i - 1] < parts[i]) && bad++ == 0) {
                                    first = parts[i - 1].to_string() + " before " + parts[i].to_string();
                                }
                            }
                            out.push_back(count_report("partitions/order", params, bad, first));
                        }
                        return out;
                    }});
    jobs.push_back({"partitions/rect", [cfg](std::uint64_t) {
                        std::vector<VerificationReport> out;
                        for (const auto tag : {RectSubset::box, RectSubset::colpaired, RectSubset::evenrow}) {
                            for (int m = 1; m <= cfg.rect_max; ++m) {
                                for (int a = 1; a <= cfg.rect_max; ++a) {
                                    std::vector<Partition> filtered;
                                    for (const auto &p : partitions_in_box(m, a)) {
                                        if (in_rect_subset(p, tag, m, a)) {
                                            filtered.push_back(p);
                                        }
                                    }
                                    const auto built = enumerate_rect_subset(tag, m, a);
                                    const nlohmann::json params{{"subset", to_string(tag)}, {"m", m}, {"a", a}};
                                    out.push_back(built == filtered
                                                      ? report_pass("partitions/rect-subset", params)
                                                      : report_fail("partitions/rect-subset", params,
                                                                    {{"built", built.size()},
                                                                     {"filtered", filtered.size()}}));
                                }
                            }
                        }
                        return out;
                    }});
}

void schur_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    const auto vars = formal_xy(cfg.alphabet_x, cfg.alphabet_y);
    for (int p = 0; p <= cfg.alphabet_x; ++p) {
        for (int q = 0; q <= cfg.alphabet_y; ++q) {
            const auto name = "schur/" + std::to_string(p) + "," + std::to_string(q);
            jobs.push_back({name, [cfg, vars, p, q](std::uint64_t seed) {
                                std::vector<VerificationReport> out;
                                const auto X = first_letters(vars, 'x', p);
                                const auto Y = first_letters(vars, 'y', q);
                                const int deg = cfg.max_lambda_size + 2;
                                const CompleteFunctions hxy(X, Y, deg);
                                const CompleteFunctions hyx(Y, X, deg);
                                const CompleteFunctions hneg(X.negated(), Y.negated(), deg);

                                std::mt19937_64 rng(seed);
                                std::uniform_int_distribution<int> expo(-2, 2), coin(0, 1);
                                SignedMonomial eta{coin(rng) ? 1 : -1, Exponent{}};
                                for (std::size_t i = 0; i < vars->size(); ++i) {
                                    eta.exp.set(i, expo(rng));
                                }
                                const CompleteFunctions heta(X.with(eta), Y.with(eta), deg);

                                const auto base = [&](const Partition &lam) {
                                    return nlohmann::json{{"X", X.to_string()}, {"Y", Y.to_string()},
                                                          {"lambda", lambda_json(lam)}};
                                };
                                for (const auto &lam : partitions_up_to(cfg.max_lambda_size)) {
                                    const Integer sign = lam.size() % 2 == 0 ? 1 : -1;
                                    const auto plain = super_schur(lam, hxy);
                                    for (const auto tag : {BracketType::plain, BracketType::square, BracketType::angle}) {
                                        auto params = base(lam);
                                        params["bracket"] = std::string(to_string(tag));
                                        params["eta"] = to_string(eta, *vars);
                                        params["seed"] = std::to_string(seed);
                                        out.push_back(report_from_difference(
                                            "schur/stability", params,
                                            bracket_schur(tag, lam, heta) - bracket_schur(tag, lam, hxy)));
                                    }
                                    {
                                        const bool inside = in_hook(lam, p, q);
                                        auto params = base(lam);
                                        params["in_hook"] = inside;
                                        out.push_back(plain.is_zero() != inside
                                                          ? report_pass("schur/hook-vanishing", params)
                                                          : report_fail("schur/hook-vanishing", params,
                                                                        inside ? "zero inside the hook"
                                                                               : "nonzero outside the hook"));
                                    }
                                    out.push_back(report_from_difference("schur/homogeneity", base(lam),
                                                                         super_schur(lam, hneg) - plain * sign));
                                    out.push_back(report_from_difference(
                                        "schur/A-dual", base(lam),
                                        super_schur(lam.conjugate(), hxy) - super_schur(lam, hyx) * sign));
                                    out.push_back(report_from_difference(
                                        "schur/BCD-dual", base(lam),
                                        bracket_schur(BracketType::angle, lam.conjugate(), hxy)
                                            - bracket_schur(BracketType::square, lam, hyx) * sign));
                                    for (const auto tag : {BracketType::square, BracketType::angle}) {
                                        auto params = base(lam);
                                        params["bracket"] = std::string(to_string(tag));
                                        params["form"] = "block";
                                        out.push_back(report_from_difference(
                                            "schur/altform", params,
                                            bracket_schur_altform(tag, lam, hxy) - bracket_schur(tag, lam, hxy)));
                                    }
                                    auto params = base(lam);
                                    params["bracket"] = "SQUARE";
                                    params["form"] = "halved";
                                    out.push_back(report_from_difference(
                                        "schur/altform", params,
                                        square_bracket_halved_form(lam, hxy)
                                            - bracket_schur(BracketType::square, lam, hxy)));
                                }
                                return out;
                            }});
        }
    }
}

void lr_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    for (int n = 0; n <= cfg.lr_property_size; ++n) {
        jobs.push_back({"lr/properties/" + std::to_string(n), [n](std::uint64_t) {
                            std::vector<VerificationReport> out;
                            for (const auto &lam : partitions_of(n)) {
                                const nlohmann::json params{{"lambda", lambda_json(lam)}};
                                std::size_t sym = 0, tr = 0, size = 0;
                                std::string sym_first, tr_first, size_first;
                                for (int k = 0; k <= n; ++k) {
                                    for (const auto &mu : partitions_of(k)) {
                                        if (!mu.contained_in(lam)) {
                                            continue;
                                        }
                                        for (const auto &nu : partitions_of(n - k)) {
                                            const auto c = lr_coeff(lam, mu, nu);
                                            const auto triple = mu.to_string() + " " + nu.to_string();
                                            if ((c < 0 || c != lr_coeff(lam, nu, mu)) && sym++ == 0) {
                                                sym_first = triple;
                                            }
                                            if (c != lr_coeff(lam.conjugate(), mu.conjugate(), nu.conjugate())
                                                && tr++ == 0) {
                                                tr_first = triple;
                                            }
                                        }
                                        for (const int off : {-1, 1}) {
                                            if (n - k + off < 0) {
                                                continue;
                                            }
                                            for (const auto &nu : partitions_of(n - k + off)) {
                                                if (lr_coeff(lam, mu, nu) != 0 && size++ == 0) {
                                                    size_first = mu.to_string() + " " + nu.to_string();
                                                }
                                            }
                                        }
                                    }
                                }
                                out.push_back(count_report("lr/symmetry", params, sym, sym_first));
                                out.push_back(count_report("lr/transpose", params, tr, tr_first));
                                out.push_back(count_report("lr/size", params, size, size_first));
                            }
                            return out;
                        }});
    }
    jobs.push_back({"lr/stacking", [](std::uint64_t) {
                        std::vector<VerificationReport> out;
                        for (const auto &mu : partitions_up_to(4)) {
                            std::size_t bad = 0;
                            std::string first;
                            for (const auto &nu : partitions_up_to(4)) {
                                std::vector<int> rows(std::max(mu.length(), nu.length()));
                                for (std::size_t i = 0; i < rows.size(); ++i) {
                                    rows[i] = mu[i] + nu[i];
                                }
                                if (lr_coeff(Partition(rows), mu, nu) != 1 && bad++ == 0) {
                                    first = nu.to_string();
                                }
                            }
                            out.push_back(count_report("lr/stacking", {{"mu", lambda_json(mu)}}, bad, first));
                        }
                        return out;
                    }});
    for (int total = 0; total <= cfg.lr_oracle_size; ++total) {
        jobs.push_back({"lr/oracle/" + std::to_string(total), [total](std::uint64_t) {
                            std::vector<VerificationReport> out;
                            const int n = std::max(total, 1);
                            for (int k = 0; k <= total; ++k) {
                                for (const auto &mu : partitions_of(k)) {
                                    for (const auto &nu : partitions_of(total - k)) {
                                        const auto expansion =
                                            schur_expand(bialternant_schur(mu, n) * bialternant_schur(nu, n), n);
                                        std::size_t bad = 0;
                                        std::string first;
                                        for (const auto &lam : partitions_of(total)) {
                                            const auto it = expansion.find(lam);
                                            const Integer expected = it == expansion.end() ? Integer(0) : it->second;
                                            if (Integer(lr_coeff(lam, mu, nu)) != expected && bad++ == 0) {
                                                first = lam.to_string();
                                            }
                                        }
                                        out.push_back(count_report(
                                            "lr/oracle", {{"mu", lambda_json(mu)}, {"nu", lambda_json(nu)}}, bad,
                                            first));
                                    }
                                }
                            }
                            return out;
                        }});
    }
    jobs.push_back({"lr/rectangles", [cfg](std::uint64_t) {
                        std::vector<VerificationReport> out;
                        const std::pair<PartitionClass, RectSubset> pairs[] = {
                            {PartitionClass::all, RectSubset::box},
                            {PartitionClass::even_columns, RectSubset::colpaired},
                            {PartitionClass::even_rows, RectSubset::evenrow},
                        };
                        for (int m = 1; m <= cfg.rect_max; ++m) {
                            for (int a = 1; a <= cfg.rect_max; ++a) {
                                const auto rect = rectangle(m, a);
                                const auto box = partitions_in_box(m, a);
                                std::size_t bad = 0;
                                std::string first;
                                for (const auto &mu : box) {
                                    for (const auto &nu : box) {
                                        if (lr_rectangle(m, a, mu, nu) != lr_coeff(rect, mu, nu) && bad++ == 0) {
                                            first = mu.to_string() + " " + nu.to_string();
                                        }
                                    }
                                }
                                out.push_back(count_report("lr/rectangle", {{"m", m}, {"a", a}}, bad, first));
                                for (const auto &[cls, tag] : pairs) {
                                    bad = 0;
                                    for (const auto &mu : box) {
                                        if (lr_rect_sum(m, a, mu, cls) != (in_rect_subset(mu, tag, m, a) ? 1 : 0)
                                            && bad++ == 0) {
                                            first = mu.to_string();
                                        }
                                    }
                                    out.push_back(count_report(
                                        "lr/rect-sum", {{"class", to_string(cls)}, {"m", m}, {"a", a}}, bad, first));
                                }
                            }
                        }
                        return out;
                    }});
}

void dc_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    const auto vars = formal_xy(cfg.alphabet_x, cfg.alphabet_y);
    for (int p = 0; p <= cfg.alphabet_x; ++p) {
        for (int q = 0; q <= cfg.alphabet_y; ++q) {
            for (const auto rel : all_dc_relations()) {
                for (const int xi : {1, -1}) {
                    if (xi == -1 && !uses_xi(rel)) {
                        continue;
                    }
                    const auto name = "dc/" + std::string(to_string(rel)) + "/" + std::to_string(p) + ","
                                      + std::to_string(q) + "/" + std::to_string(xi);
                    jobs.push_back({name, [cfg, vars, p, q, rel, xi](std::uint64_t) {
                                        std::vector<VerificationReport> out;
                                        const auto X = first_letters(vars, 'x', p);
                                        const auto Y = first_letters(vars, 'y', q);
                                        for (const auto &lam : partitions_up_to(cfg.max_lambda_size)) {
                                            out.push_back(general_dc_check(rel, lam, X, Y, xi));
                                        }
                                        return out;
                                    }});
                }
            }
        }
    }
}

std::vector<FoldingCase> folding_cases(int max_rank)
{
    std::vector<FoldingCase> out;
    for (const auto kind : all_fold_kinds()) {
        for (int r = 0; r <= max_rank; ++r) {
            for (int s = 0; r + s <= max_rank; ++s) {
                if (r + s >= 1 && (kind != FoldKind::d2 || r >= 1)) {
                    out.push_back({kind, r, s});
                }
            }
        }
    }
    return out;
}

void folding_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    for (const auto &c : folding_cases(cfg.max_rank)) {
        const auto name = "fold/" + std::string(to_string(c.kind)) + "/" + std::to_string(c.r) + ","
                          + std::to_string(c.s);
        jobs.push_back({name, [cfg, c](std::uint64_t) {
                            std::vector<VerificationReport> out;
                            const auto [M, N] = ambient_hook(c);
                            for (const auto b : branches(c.kind)) {
                                for (int a = 1; a <= cfg.fold_max; ++a) {
                                    for (int m = 1; m <= cfg.fold_max; ++m) {
                                        if (in_hook(rectangle(m, a), M, N)) {
                                            out.push_back(verify_decomposition(c, b, a, m));
                                        }
                                    }
                                }
                            }
                            return out;
                        }});
    }
}

void dimension_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    jobs.push_back({"fold/dimensions", [cfg](std::uint64_t) {
                        std::vector<VerificationReport> out;
                        for (int r = 1; r <= std::max(cfg.max_rank, 1); ++r) {
                            // (case, case parameter r, expected value at all ones)
                            const std::tuple<FoldKind, int, int> rows[] = {
                                {FoldKind::b1, r, 2 * r + 1},     {FoldKind::a2_even, r, 2 * r - 1},
                                {FoldKind::a2_odd, r, 2 * r + 1}, {FoldKind::a2_ee, r, 2 * r},
                                {FoldKind::d1, r, 2 * r},         {FoldKind::spo, r, 2 * r},
                                {FoldKind::d2, r + 1, 2 * r + 2},
                            };
                            for (const auto &[kind, param, expected] : rows) {
                                const auto value = eval_all_ones(kr_supercharacter({kind, param, 0}, 1, 1));
                                const nlohmann::json params{
                                    {"case", std::string(to_string(kind))}, {"r", param}, {"expected", expected}};
                                out.push_back(value == expected
                                                  ? report_pass("fold/dimension", params)
                                                  : report_fail("fold/dimension", params, {{"value", value.str()}}));
                            }
                        }
                        return out;
                    }});
}

void twisted_d_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    for (int r = 0; r <= cfg.max_rank; ++r) {
        jobs.push_back({"fold/de-D200/" + std::to_string(r), [cfg, r](std::uint64_t) {
                            std::vector<VerificationReport> out;
                            const auto vars = make_indexed_vars("x", static_cast<std::size_t>(std::max(r, 1)));
                            const auto x = first_letters(vars, 'x', r);
                            const auto X2 = x + Alphabet::constants(vars, {1, 1}) + x.inverse();
                            const auto Y2 = Alphabet::constants(vars, {1, -1});
                            const auto X1 = x + Alphabet::constants(vars, {1}) + x.inverse();
                            const auto Y1 = Alphabet::constants(vars, {-1});
                            for (int a = 1; a <= cfg.fold_max; ++a) {
                                for (int m = 1; m <= cfg.fold_max; ++m) {
                                    const auto lam = rectangle(m, a);
                                    out.push_back(report_from_difference(
                                        "fold/de-D200", {{"r", r}, {"a", a}, {"m", m}},
                                        super_schur(lam, X2, Y2) - super_schur(lam, X1, Y1)));
                                }
                            }
                            return out;
                        }});
    }
}

void cauchy_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    const int k = cfg.cauchy_alphabet;
    const auto vars = formal_xy(k, k);
    for (const auto kind : all_cauchy_kinds()) {
        for (int p = 0; p <= k; ++p) {
            for (int q = 0; q <= k; ++q) {
                for (int nT = 1; nT <= cfg.t_count; ++nT) {
                    const auto name = "cauchy/" + std::string(to_string(kind)) + "/" + std::to_string(p) + ","
                                      + std::to_string(q) + "/" + std::to_string(nT);
                    jobs.push_back({name, [cfg, vars, kind, p, q, nT](std::uint64_t) {
                                        std::vector<VerificationReport> out;
                                        for (int d = 0; d <= cfg.degmax; ++d) {
                                            out.push_back(cauchy_check(kind, first_letters(vars, 'x', p),
                                                                       first_letters(vars, 'y', q), nT, d));
                                        }
                                        return out;
                                    }});
                }
            }
        }
    }
}

void littlewood_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    for (const auto kind : all_littlewood_kinds()) {
        for (int nT = 1; nT <= cfg.t_count; ++nT) {
            jobs.push_back({"littlewood/" + std::string(to_string(kind)) + "/" + std::to_string(nT),
                            [cfg, kind, nT](std::uint64_t) {
                                std::vector<VerificationReport> out;
                                for (int d = 0; d <= cfg.degmax; ++d) {
                                    out.push_back(littlewood_sum_check(kind, nT, d));
                                }
                                return out;
                            }});
        }
    }
}

void mmdet_jobs(const SuiteConfig &cfg, std::vector<Job> &jobs)
{
    for (int m = 1; m <= cfg.mmdet_max; ++m) {
        jobs.push_back({"mmdet/" + std::to_string(m), [m](std::uint64_t) { return std::vector{mmdet_check(m)}; }});
    }
}

std::vector<VerificationReport> run_jobs(const std::vector<Job> &jobs, int parallelism, std::uint64_t seed)
{
    std::vector<std::vector<VerificationReport>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto worker = [&] {
        while (!failed.load()) {
            const auto i = next.fetch_add(1);
            if (i >= jobs.size()) {
                return;
            }
            try {
                results[i] = jobs[i].run(job_seed(seed, jobs[i].name));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
            }
        }
    };
    const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(parallelism), jobs.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < n_threads; ++t) {
            threads.emplace_back(worker);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    std::vector<VerificationReport> out;
    for (auto &r : results) {
        std::move(r.begin(), r.end(), std::back_inserter(out));
    }
    sort_reports(out);
    return out;
}

} // namespace

std::string_view to_string(CauchyKind kind)
{
    return enum_name(cauchy_names, kind);
}
CauchyKind parse_cauchy_kind(std::string_view text)
{
    return enum_parse(cauchy_names, text, "Cauchy identity");
}
const std::vector<CauchyKind> &all_cauchy_kinds()
{
    static const std::vector kinds{CauchyKind::co_A, CauchyKind::co_B, CauchyKind::co_C, CauchyKind::co_Cdual};
    return kinds;
}
std::string_view to_string(LittlewoodKind kind)
{
    return enum_name(littlewood_names, kind);
}
LittlewoodKind parse_littlewood_kind(std::string_view text)
{
    return enum_parse(littlewood_names, text, "Schur sum");
}
const std::vector<LittlewoodKind> &all_littlewood_kinds()
{
    static const std::vector kinds{LittlewoodKind::sum_S, LittlewoodKind::sum_L1, LittlewoodKind::sum_L2};
    return kinds;
}
std::string_view to_string(Battery battery)
{
    return enum_name(battery_names, battery);
}
Battery parse_battery(std::string_view text)
{
    return enum_parse(battery_names, text, "battery");
}
const std::vector<Battery> &all_batteries()
{
    static const std::vector<Battery> all = [] {
        std::vector<Battery> v;
        for (const auto &[b, name] : battery_names) {
            v.push_back(b);
        }
        return v;
    }();
    return all;
}

VerificationReport cauchy_check(CauchyKind kind, const Alphabet &X, const Alphabet &Y, int nT, int degmax)
{
    check_truncation_args(nT, degmax);
    if (!same_vars(X.vars(), Y.vars())) {
        throw invalid_input("X and Y must share a variable table");
    }
    const auto &base = X.vars();
    auto names = base->names();
    for (int j = 1; j <= nT; ++j) {
        const auto t = "t" + std::to_string(j);
        if (base->index_of(t)) {
            throw invalid_input("alphabet table already uses the name " + t);
        }
        names.push_back(t);
    }
    if (names.size() > max_vars) {
        throw invalid_input("too many variables for a Cauchy check");
    }
    const auto vars = make_vars(std::move(names));
    const auto w = t_weights(vars);
    const bool dual = kind == CauchyKind::co_Cdual;

    // Left side: sum over lambda with at most nT rows.
    const auto lambdas = partitions_with_length(degmax, nT);
    int hdeg = 0;
    for (const auto &lam : lambdas) {
        hdeg = std::max(hdeg, jt_degree(dual ? lam.conjugate() : lam));
    }
    const CompleteFunctions h(X, Y, hdeg);
    LaurentPoly lhs(vars);
    for (const auto &lam : lambdas) {
        LaurentPoly coeff(base);
        switch (kind) {
            case CauchyKind::co_A:
                coeff = super_schur(lam, h);
                break;
            case CauchyKind::co_B:
                coeff = bracket_schur(BracketType::square, lam, h);
                break;
            case CauchyKind::co_C:
                coeff = bracket_schur(BracketType::angle, lam, h);
                break;
            case CauchyKind::co_Cdual:
                coeff = bracket_schur(BracketType::angle, lam.conjugate(), h);
                break;
        }
        if (!coeff.is_zero()) {
            lhs += embed(coeff, vars) * embed(bialternant_schur(lam, nT), vars);
        }
    }

    // Right side: truncated product.
    LaurentPoly rhs(vars, 1);
    const LaurentPoly one(vars, 1);
    for (int j = 1; j <= nT; ++j) {
        const auto tj = t_var(vars, j);
        for (const auto &e : X.elements()) {
            const auto u = embed(LaurentPoly::monomial(base, e), vars) * tj;
            rhs = dual ? multiply_truncated(rhs, one + u, w, degmax)
                       : multiply_truncated(rhs, geometric(u, w, degmax), w, degmax);
        }
        for (const auto &e : Y.elements()) {
            const auto u = embed(LaurentPoly::monomial(base, e), vars) * tj;
            rhs = dual ? multiply_truncated(rhs, geometric(-u, w, degmax), w, degmax)
                       : multiply_truncated(rhs, one - u, w, degmax);
        }
    }
    if (kind != CauchyKind::co_A) {
        rhs = multiply_truncated(rhs, pair_product(vars, nT, kind != CauchyKind::co_C), w, degmax);
    }
    nlohmann::json params{{"X", X.to_string()}, {"Y", Y.to_string()}, {"nT", nT}, {"degmax", degmax}};
    return report_from_difference("cauchy/" + std::string(to_string(kind)), std::move(params), lhs - rhs);
}

VerificationReport littlewood_sum_check(LittlewoodKind kind, int nT, int degmax)
{
    check_truncation_args(nT, degmax);
    const auto vars = t_only_table(nT);
    const std::vector<int> w(vars->size(), 1);
    const PartitionClass cls = kind == LittlewoodKind::sum_S    ? PartitionClass::all
                               : kind == LittlewoodKind::sum_L1 ? PartitionClass::even_rows
                                                                : PartitionClass::even_columns;
    LaurentPoly lhs(vars);
    for (const auto &lam : partitions_with_length(degmax, nT)) {
        if (belongs_to(lam, cls)) {
            lhs += bialternant_schur(lam, nT).relabeled(vars);
        }
    }
    LaurentPoly rhs = inverse_pair_product(vars, nT, kind == LittlewoodKind::sum_L1, w, degmax);
    if (kind == LittlewoodKind::sum_S) {
        for (int i = 1; i <= nT; ++i) {
            rhs = multiply_truncated(rhs, geometric(t_var(vars, i), w, degmax), w, degmax);
        }
    }
    return report_from_difference("littlewood/" + std::string(to_string(kind)), {{"nT", nT}, {"degmax", degmax}},
                                  lhs - rhs);
}

VerificationReport mmdet_check(int m)
{
    if (m < 1) {
        throw invalid_input("mmdet_check requires m >= 1");
    }
    if (static_cast<std::size_t>(m) > max_vars) {
        throw invalid_input("mmdet_check: m exceeds the variable limit");
    }
    const auto vars = t_only_table(m);
    const LaurentPoly one(vars, 1);
    const auto power = [&](int i, int e) {
        Exponent x;
        x.set(static_cast<std::size_t>(i - 1), e);
        return LaurentPoly::monomial(vars, x);
    };
    Matrix<LaurentPoly> a(static_cast<std::size_t>(m), LaurentPoly(vars));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = power(i, m - j) - power(i, m + j);
        }
    }
    const auto lhs = determinant(a, one, [](const LaurentPoly &p) { return p.is_zero(); });
    LaurentPoly rhs = one;
    for (int i = 1; i <= m; ++i) {
        rhs *= one - power(i, 2);
        for (int j = i + 1; j <= m; ++j) {
            rhs *= (power(i, 1) - power(j, 1)) * (one - power(i, 1) * power(j, 1));
        }
    }
    return report_from_difference("mmdet", {{"m", m}}, lhs - rhs);
}

void validate(const SuiteConfig &c)
{
    const std::pair<const char *, int> bounds[] = {
        {"degmax", c.degmax},
        {"max_lambda_size", c.max_lambda_size},
        {"max_rank", c.max_rank},
        {"t_count", c.t_count},
        {"lr_oracle_size", c.lr_oracle_size},
        {"lr_property_size", c.lr_property_size},
        {"rect_max", c.rect_max},
        {"fold_max", c.fold_max},
        {"mmdet_max", c.mmdet_max},
        {"alphabet_x", c.alphabet_x},
        {"alphabet_y", c.alphabet_y},
        {"cauchy_alphabet", c.cauchy_alphabet},
    };
    for (const auto &[name, v] : bounds) {
        if (v < 0) {
            throw invalid_input(std::string("suite config: ") + name + " must be non-negative");
        }
    }
    if (c.parallelism < 1) {
        throw invalid_input("suite config: parallelism must be at least 1");
    }
    if (c.alphabet_x + c.alphabet_y > static_cast<int>(max_vars)
        || 2 * c.cauchy_alphabet + c.t_count > static_cast<int>(max_vars)
        || c.mmdet_max > static_cast<int>(max_vars) || 2 * c.max_rank + 2 > static_cast<int>(max_vars)) {
        throw invalid_input("suite config: bounds exceed the variable limit");
    }
}

nlohmann::json to_json(const SuiteConfig &c)
{
    return {
        {"degmax", c.degmax},
        {"max_lambda_size", c.max_lambda_size},
        {"max_rank", c.max_rank},
        {"t_count", c.t_count},
        {"parallelism", c.parallelism},
        {"seed", c.seed},
        {"lr_oracle_size", c.lr_oracle_size},
        {"lr_property_size", c.lr_property_size},
        {"rect_max", c.rect_max},
        {"fold_max", c.fold_max},
        {"mmdet_max", c.mmdet_max},
        {"alphabet_x", c.alphabet_x},
        {"alphabet_y", c.alphabet_y},
        {"cauchy_alphabet", c.cauchy_alphabet},
    };
}

SuiteConfig suite_config_from_json(const nlohmann::json &j)
{
    if (!j.is_object()) {
        throw invalid_input("suite config must be a JSON object");
    }
    SuiteConfig c;
    const std::pair<const char *, int *> ints[] = {
        {"degmax", &c.degmax},
        {"max_lambda_size", &c.max_lambda_size},
        {"max_rank", &c.max_rank},
        {"t_count", &c.t_count},
        {"parallelism", &c.parallelism},
        {"lr_oracle_size", &c.lr_oracle_size},
        {"lr_property_size", &c.lr_property_size},
        {"rect_max", &c.rect_max},
        {"fold_max", &c.fold_max},
        {"mmdet_max", &c.mmdet_max},
        {"alphabet_x", &c.alphabet_x},
        {"alphabet_y", &c.alphabet_y},
        {"cauchy_alphabet", &c.cauchy_alphabet},
    };
    for (const auto &[key, value] : j.items()) {
        if (key == "seed") {
            if (!value.is_number_unsigned()) {
                throw invalid_input("suite config: seed must be a non-negative integer");
            }
            c.seed = value.get<std::uint64_t>();
            continue;
        }
        const auto it = std::find_if(std::begin(ints), std::end(ints), [&](const auto &p) { return key == p.first; });
        if (it == std::end(ints)) {
            throw invalid_input("suite config: unknown key '" + key + "'");
        }
        if (!value.is_number_integer()) {
            throw invalid_input("suite config: " + key + " must be an integer");
        }
        *it->second = value.get<int>();
    }
    validate(c);
    return c;
}

std::vector<VerificationReport> run_batteries(const SuiteConfig &config, std::span<const Battery> batteries)
{
    validate(config);
    std::vector<Job> jobs;
    for (const auto b : batteries) {
        switch (b) {
            case Battery::partitions:
                partition_jobs(config, jobs);
                break;
            case Battery::schur:
                schur_jobs(config, jobs);
                break;
            case Battery::lr:
                lr_jobs(config, jobs);
                break;
            case Battery::dc:
                dc_jobs(config, jobs);
                break;
            case Battery::folding:
                folding_jobs(config, jobs);
                break;
            case Battery::dimensions:
                dimension_jobs(config, jobs);
                break;
            case Battery::twisted_d:
                twisted_d_jobs(config, jobs);
                break;
            case Battery::cauchy:
                cauchy_jobs(config, jobs);
                break;
            case Battery::littlewood:
                littlewood_jobs(config, jobs);
                break;
            case Battery::mmdet:
                mmdet_jobs(config, jobs);
                break;
        }
    }
    // Costly jobs first keeps the tail short when running in parallel.
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job &a, const Job &b) {
        const auto rank = [](const Job &j) { return j.name.starts_with("lr/oracle") || j.name.starts_with("fold/") ? 0 : 1; };
        return rank(a) < rank(b);
    });
    return run_jobs(jobs, config.parallelism, config.seed);
}

std::vector<VerificationReport> run_suite(const SuiteConfig &config)
{
    return run_batteries(config, all_batteries());
}

} // namespace superchar
