#include <superchar/folding.hpp>

#include <array>
#include <map>
#include <mutex>

#include <superchar/errors.hpp>
#include <superchar/lr.hpp>

namespace superchar
{

namespace
{

constexpr std::array<std::pair<FoldKind, std::string_view>, 7> kind_names{{
    {FoldKind::b1, "B1"},
    {FoldKind::a2_even, "A2_EVEN"},
    {FoldKind::a2_odd, "A2_ODD"},
    {FoldKind::a2_ee, "A2_EE"},
    {FoldKind::d1, "D1"},
    {FoldKind::spo, "SPO"},
    {FoldKind::d2, "D2"},
}};

const std::array<DecompBranch, 11> branch_table{{
    {Branch::de_BB, FoldKind::b1, RectSubset::colpaired, BracketType::square, RhsConstants::plus_one, false},
    {Branch::de_BD, FoldKind::b1, RectSubset::box, BracketType::square, RhsConstants::none, false},
    {Branch::de_t1Bp, FoldKind::a2_even, RectSubset::colpaired, BracketType::square, RhsConstants::minus_one, false},
    {Branch::de_t1Dp, FoldKind::a2_even, RectSubset::box, BracketType::square, RhsConstants::none, true},
    {Branch::de_t2B, FoldKind::a2_odd, RectSubset::evenrow, BracketType::square, RhsConstants::plus_one, false},
    {Branch::de_t2C, FoldKind::a2_odd, RectSubset::box, BracketType::angle, RhsConstants::none, false},
    {Branch::de_t3D, FoldKind::a2_ee, RectSubset::evenrow, BracketType::square, RhsConstants::none, false},
    {Branch::de_t3C, FoldKind::a2_ee, RectSubset::colpaired, BracketType::angle, RhsConstants::none, false},
    {Branch::de_D, FoldKind::d1, RectSubset::colpaired, BracketType::square, RhsConstants::none, false},
    {Branch::de_C, FoldKind::spo, RectSubset::evenrow, BracketType::angle, RhsConstants::none, false},
    {Branch::de_D2, FoldKind::d2, RectSubset::box, BracketType::square, RhsConstants::plus_one, false},
}};

constexpr std::array<std::pair<Branch, std::string_view>, 11> branch_names{{
    {Branch::de_BB, "de-BB"},
    {Branch::de_BD, "de-BD"},
    {Branch::de_t1Bp, "de-t1Bp"},
    {Branch::de_t1Dp, "de-t1Dp"},
    {Branch::de_t2B, "de-t2B"},
    {Branch::de_t2C, "de-t2C"},
    {Branch::de_t3D, "de-t3D"},
    {Branch::de_t3C, "de-t3C"},
    {Branch::de_D, "de-D"},
    {Branch::de_C, "de-C"},
    {Branch::de_D2, "de-D2"},
}};

constexpr std::array<std::pair<DcRelation, std::string_view>, 8> relation_names{{
    {DcRelation::dc_1a, "dc-1a"},
    {DcRelation::dc_1b, "dc-1b"},
    {DcRelation::dc_2a, "dc-2a"},
    {DcRelation::dc_2b, "dc-2b"},
    {DcRelation::dc_3a, "dc-3a"},
    {DcRelation::dc_3b, "dc-3b"},
    {DcRelation::dc_4, "dc-4"},
    {DcRelation::dc_4du, "dc-4du"},
}};

template <class Table, class Key>
std::string_view name_of(const Table &table, Key key)
{
    for (const auto &[k, name] : table) {
        if (k == key) {
            return name;
        }
    }
    return "?";
}

template <class Table>
auto parse_name(const Table &table, std::string_view text, std::string_view what)
{
    for (const auto &[k, name] : table) {
        if (name == text) {
            return k;
        }
    }
    std::string known;
    for (const auto &entry : table) {
        known += known.empty() ? "" : ", ";
        known += entry.second;
    }
    throw invalid_input("unknown " + std::string(what) + " '" + std::string(text) + "' (expected one of " + known
                        + ")");
}

int x_count(const FoldingCase &c)
{
    return c.kind == FoldKind::d2 ? c.r - 1 : c.r;
}

Alphabet with_constants(const Alphabet &x, RhsConstants k)
{
    switch (k) {
        case RhsConstants::plus_one:
            return x + Alphabet::constants(x.vars(), {1}) + x.inverse();
        case RhsConstants::minus_one:
            return x + Alphabet::constants(x.vars(), {-1}) + x.inverse();
        case RhsConstants::none:
            break;
    }
    return x + x.inverse();
}

nlohmann::json case_params(const FoldingCase &c)
{
    return {{"case", std::string(to_string(c.kind))}, {"r", c.r}, {"s", c.s}};
}

void check_rectangle(int a, int m)
{
    if (a < 0 || m < 0) {
        throw invalid_input("rectangle parameters a and m must be non-negative");
    }
}

} // namespace

std::string_view to_string(FoldKind kind)
{
    return name_of(kind_names, kind);
}

FoldKind parse_fold_kind(std::string_view text)
{
    return parse_name(kind_names, text, "folding case");
}

const std::vector<FoldKind> &all_fold_kinds()
{
    static const std::vector<FoldKind> kinds{FoldKind::b1, FoldKind::a2_even, FoldKind::a2_odd, FoldKind::a2_ee,
                                             FoldKind::d1, FoldKind::spo,     FoldKind::d2};
    return kinds;
}

void validate(const FoldingCase &c)
{
    if (c.r < 0 || c.s < 0) {
        throw invalid_input("folding parameters r and s must be non-negative");
    }
    if (c.r + c.s < 1) {
        throw invalid_input("folding requires r + s >= 1");
    }
    if (c.kind == FoldKind::d2 && c.r < 1) {
        throw invalid_input("the D2 folding requires r >= 1");
    }
    if (static_cast<std::size_t>(x_count(c) + c.s) > max_vars) {
        throw invalid_input("folding parameters exceed the variable limit");
    }
}

std::string_view to_string(Branch b)
{
    return name_of(branch_names, b);
}

Branch parse_branch(std::string_view text)
{
    return parse_name(branch_names, text, "branch");
}

const DecompBranch &branch_info(Branch b)
{
    for (const auto &info : branch_table) {
        if (info.id == b) {
            return info;
        }
    }
    throw invalid_input("unknown branch");
}

std::vector<Branch> branches(FoldKind kind)
{
    std::vector<Branch> out;
    for (const auto &info : branch_table) {
        if (info.owner == kind) {
            out.push_back(info.id);
        }
    }
    return out;
}

VarTablePtr fold_vars(const FoldingCase &c)
{
    validate(c);
    static std::mutex mutex;
    static std::map<std::pair<int, int>, VarTablePtr> tables;
    const std::pair key{x_count(c), c.s};
    std::lock_guard lock(mutex);
    auto &slot = tables[key];
    if (!slot) {
        std::vector<std::string> names;
        for (int i = 1; i <= key.first; ++i) {
            names.push_back("x" + std::to_string(i));
        }
        for (int i = 1; i <= key.second; ++i) {
            names.push_back("y" + std::to_string(i));
        }
        slot = make_vars(std::move(names));
    }
    return slot;
}

AlphabetPair fold_alphabets(const FoldingCase &c)
{
    const auto vars = fold_vars(c);
    const auto x = Alphabet::with_prefix(vars, "x");
    const auto y = Alphabet::with_prefix(vars, "y");
    const auto xx = x + x.inverse();
    const auto yy = y + y.inverse();
    const auto cst = [&](std::initializer_list<int> signs) { return Alphabet::constants(vars, signs); };
    switch (c.kind) {
        case FoldKind::b1:
            return {xx, y + cst({-1}) + y.inverse()};
        case FoldKind::a2_even:
            return {xx, y + cst({1}) + y.inverse()};
        case FoldKind::a2_odd:
            return {x + cst({1}) + x.inverse(), yy};
        case FoldKind::a2_ee:
            return {xx, yy};
        case FoldKind::d1:
            return {xx, y + cst({1, -1}) + y.inverse()};
        case FoldKind::spo:
            return {x + cst({1, -1}) + x.inverse(), yy};
        case FoldKind::d2:
            return {x + cst({1}) + x.inverse(), y + cst({-1}) + y.inverse()};
    }
    throw invalid_input("unknown folding case");
}

AlphabetPair rhs_alphabets(const FoldingCase &c, Branch b)
{
    const auto &info = branch_info(b);
    if (info.owner != c.kind) {
        throw invalid_input("branch " + std::string(to_string(b)) + " does not belong to case "
                            + std::string(to_string(c.kind)));
    }
    const auto vars = fold_vars(c);
    const auto x = Alphabet::with_prefix(vars, "x");
    const auto y = Alphabet::with_prefix(vars, "y");
    return {with_constants(x, info.x_constants), y + y.inverse()};
}

std::pair<int, int> ambient_hook(const FoldingCase &c)
{
    validate(c);
    switch (c.kind) {
        case FoldKind::b1:
        case FoldKind::a2_even:
            return {2 * c.r, 2 * c.s + 1};
        case FoldKind::a2_odd:
            return {2 * c.r + 1, 2 * c.s};
        case FoldKind::a2_ee:
            return {2 * c.r, 2 * c.s};
        case FoldKind::d1:
        case FoldKind::d2:
            return {2 * c.r, 2 * c.s + 2};
        case FoldKind::spo:
            return {2 * c.r + 2, 2 * c.s};
    }
    throw invalid_input("unknown folding case");
}

LaurentPoly kr_supercharacter(const FoldingCase &c, int a, int m)
{
    check_rectangle(a, m);
    const auto [M, N] = ambient_hook(c);
    const auto vars = fold_vars(c);
    if (a == 0 || m == 0) {
        return LaurentPoly(vars, 1);
    }
    if (!in_hook(rectangle(m, a), M, N)) {
        throw invalid_input("(" + std::to_string(m) + "^" + std::to_string(a) + ") lies outside the ["
                            + std::to_string(M) + "," + std::to_string(N) + "]-hook of " + std::string(to_string(c.kind))
                            + ": need a <= " + std::to_string(M) + " or m <= " + std::to_string(N));
    }
    const auto [X, Y] = fold_alphabets(c);
    return super_schur(rectangle(m, a), X, Y);
}

LaurentPoly decomposition_rhs(const FoldingCase &c, Branch b, int a, int m)
{
    check_rectangle(a, m);
    const auto &info = branch_info(b);
    const auto [X, Y] = rhs_alphabets(c, b);
    if (a == 0 || m == 0) {
        return LaurentPoly(X.vars(), 1);
    }
    const CompleteFunctions h(X, Y, jt_degree(rectangle(m, a)));
    LaurentPoly sum(X.vars());
    for (const auto &lambda : enumerate_rect_subset(info.subset, m, a)) {
        const auto term = bracket_schur(info.bracket, lambda, h);
        if (info.signed_terms && (m * a + lambda.size()) % 2 != 0) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

VerificationReport verify_decomposition(const FoldingCase &c, Branch b, int a, int m)
{
    auto params = case_params(c);
    params["branch"] = std::string(to_string(b));
    params["a"] = a;
    params["m"] = m;
    const auto lhs = kr_supercharacter(c, a, m);
    const auto rhs = decomposition_rhs(c, b, a, m);
    return report_from_difference("fold/" + std::string(to_string(b)), std::move(params), lhs - rhs);
}

std::string_view to_string(DcRelation rel)
{
    return name_of(relation_names, rel);
}

DcRelation parse_dc_relation(std::string_view text)
{
    return parse_name(relation_names, text, "relation");
}

const std::vector<DcRelation> &all_dc_relations()
{
    static const std::vector<DcRelation> rels{DcRelation::dc_1a, DcRelation::dc_1b, DcRelation::dc_2a,
                                              DcRelation::dc_2b, DcRelation::dc_3a, DcRelation::dc_3b,
                                              DcRelation::dc_4,  DcRelation::dc_4du};
    return rels;
}

bool uses_xi(DcRelation rel)
{
    return rel == DcRelation::dc_2a || rel == DcRelation::dc_2b || rel == DcRelation::dc_3a
           || rel == DcRelation::dc_3b;
}

VerificationReport general_dc_check(DcRelation rel, const Partition &lambda, const Alphabet &X, const Alphabet &Y,
                                    int xi)
{
    if (xi != 1 && xi != -1) {
        throw invalid_input("xi must be +1 or -1");
    }
    if (!same_vars(X.vars(), Y.vars())) {
        throw invalid_input("X and Y must share a variable table");
    }
    const auto &vars = X.vars();
    const SignedMonomial c_xi{xi, Exponent{}};
    const SignedMonomial c_neg_xi{-xi, Exponent{}};
    const auto pm = Alphabet::constants(vars, {1, -1});

    // Left side alphabets, right side alphabets, right bracket, and how the
    // coefficient of each mu is formed.
    enum class Weighting { even_rows, even_columns, signed_all };
    Alphabet lx = X, ly = Y, rx = X, ry = Y;
    BracketType bracket = BracketType::square;
    Weighting weighting = Weighting::even_rows;
    int nu_sign = 1; // factor per box of nu in the signed sums
    switch (rel) {
        case DcRelation::dc_1a:
            break;
        case DcRelation::dc_1b:
            bracket = BracketType::angle;
            weighting = Weighting::even_columns;
            break;
        case DcRelation::dc_2a:
            ly = Y.with(c_xi);
            rx = X.with(c_neg_xi);
            weighting = Weighting::even_columns;
            break;
        case DcRelation::dc_2b:
            ly = Y.with(c_xi);
            weighting = Weighting::signed_all;
            nu_sign = -xi;
            break;
        case DcRelation::dc_3a:
            lx = X.with(c_xi);
            ry = Y.with(c_neg_xi);
            bracket = BracketType::angle;
            break;
        case DcRelation::dc_3b:
            lx = X.with(c_xi);
            bracket = BracketType::angle;
            weighting = Weighting::signed_all;
            nu_sign = xi;
            break;
        case DcRelation::dc_4:
            ly = Y + pm;
            weighting = Weighting::even_columns;
            break;
        case DcRelation::dc_4du:
            lx = X + pm;
            bracket = BracketType::angle;
            break;
    }

    const auto lhs = super_schur(lambda, lx, ly);
    const CompleteFunctions h(rx, ry, jt_degree(lambda));
    LaurentPoly rhs(vars);
    for (const auto &mu : partitions_up_to(lambda.size())) {
        if (!mu.contained_in(lambda)) {
            continue;
        }
        Integer coeff = 0;
        for (const auto &kappa : partitions_of(lambda.size() - mu.size())) {
            if ((weighting == Weighting::even_rows && !kappa.has_even_rows())
                || (weighting == Weighting::even_columns && !kappa.has_even_columns())) {
                continue;
            }
            const auto lr = lr_coeff(lambda, kappa, mu);
            if (lr == 0) {
                continue;
            }
            const bool flip = weighting == Weighting::signed_all && nu_sign < 0 && kappa.size() % 2 != 0;
            coeff += flip ? -lr : lr;
        }
        if (coeff != 0) {
            rhs += bracket_schur(bracket, mu, h) * coeff;
        }
    }
    nlohmann::json params{{"lambda", lambda.parts()}, {"X", X.to_string()}, {"Y", Y.to_string()}};
    params["xi"] = uses_xi(rel) ? nlohmann::json(xi) : nlohmann::json(nullptr);
    return report_from_difference("dc/" + std::string(to_string(rel)), std::move(params), lhs - rhs);
}

} // namespace superchar
