#include <doctest.h>

#include <superchar/errors.hpp>
#include <superchar/folding.hpp>
#include <superchar/schur.hpp>

#include "support.hpp"

using namespace superchar;
using testsupport::first_vars;
using testsupport::formal_table;

namespace
{

std::vector<FoldingCase> sweep_cases(int max_rank)
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

LaurentPoly x_var(const VarTablePtr &vars, int i, int power = 1)
{
    return LaurentPoly::variable(vars, "x" + std::to_string(i), power);
}

} // namespace

TEST_CASE("folding names and validation")
{
    for (const auto kind : all_fold_kinds()) {
        CHECK(parse_fold_kind(to_string(kind)) == kind);
        CHECK_FALSE(branches(kind).empty());
        for (const auto b : branches(kind)) {
            CHECK(parse_branch(to_string(b)) == b);
            CHECK(branch_info(b).owner == kind);
        }
    }
    CHECK(to_string(FoldKind::a2_even) == "A2_EVEN");
    CHECK(to_string(Branch::de_t1Dp) == "de-t1Dp");
    CHECK_THROWS_AS(parse_fold_kind("E6"), invalid_input);
    CHECK_THROWS_AS(validate(FoldingCase{FoldKind::b1, 0, 0}), invalid_input);
    CHECK_THROWS_AS(validate(FoldingCase{FoldKind::d2, 0, 2}), invalid_input);
    CHECK_THROWS_AS(validate(FoldingCase{FoldKind::d1, -1, 2}), invalid_input);
    CHECK_THROWS_AS(rhs_alphabets({FoldKind::b1, 1, 0}, Branch::de_D), invalid_input);
    CHECK_THROWS_AS(decomposition_rhs({FoldKind::b1, 1, 0}, Branch::de_C, 1, 1), invalid_input);
}

TEST_CASE("folded alphabets")
{
    const auto b1 = fold_alphabets({FoldKind::b1, 1, 0});
    CHECK(b1.X.to_string() == "{x1,x1^-1}");
    CHECK(b1.Y.to_string() == "{-1}");
    const auto a2 = fold_alphabets({FoldKind::a2_odd, 1, 0});
    CHECK(a2.X.to_string() == "{x1,1,x1^-1}");
    CHECK(a2.Y.size() == 0);
    const auto d1 = fold_alphabets({FoldKind::d1, 2, 0});
    CHECK(d1.X.to_string() == "{x1,x2,x1^-1,x2^-1}");
    CHECK(d1.Y.to_string() == "{1,-1}");
    const auto d2 = fold_alphabets({FoldKind::d2, 2, 1});
    CHECK(d2.X.to_string() == "{x1,1,x1^-1}");
    CHECK(d2.Y.to_string() == "{y1,-1,y1^-1}");
    const auto spo = fold_alphabets({FoldKind::spo, 1, 1});
    CHECK(spo.X.to_string() == "{x1,1,-1,x1^-1}");
    CHECK(spo.Y.to_string() == "{y1,y1^-1}");
}

TEST_CASE("KR supercharacter examples")
{
    const FoldingCase b1{FoldKind::b1, 1, 0};
    const auto vars = fold_vars(b1);
    CHECK(kr_supercharacter(b1, 1, 1) == x_var(vars, 1) + LaurentPoly(vars, 1) + x_var(vars, 1, -1));
    CHECK(eval_all_ones(kr_supercharacter(b1, 1, 1)) == 3);
    const FoldingCase ee{FoldKind::a2_ee, 1, 0};
    CHECK(kr_supercharacter(ee, 1, 1) == x_var(vars, 1) + x_var(vars, 1, -1));
    for (const auto kind : all_fold_kinds()) {
        const FoldingCase c{kind, 1, 1};
        CHECK(kr_supercharacter(c, 1, 0) == LaurentPoly(fold_vars(c), 1));
        CHECK(kr_supercharacter(c, 0, 3) == LaurentPoly(fold_vars(c), 1));
        for (const auto b : branches(kind)) {
            CHECK(decomposition_rhs(c, b, 0, 2) == LaurentPoly(fold_vars(c), 1));
        }
    }
    CHECK_THROWS_AS(kr_supercharacter(ee, 3, 1), invalid_input);
    CHECK_THROWS_AS(kr_supercharacter(ee, -1, 1), invalid_input);
}

TEST_CASE("decomposition right-hand side examples")
{
    const FoldingCase b1{FoldKind::b1, 1, 0};
    const auto vars = fold_vars(b1);
    const LaurentPoly one(vars, 1);
    const auto five = x_var(vars, 1, 2) + x_var(vars, 1) + one + x_var(vars, 1, -1) + x_var(vars, 1, -2);
    CHECK(decomposition_rhs(b1, Branch::de_BB, 1, 2) == five);
    CHECK(kr_supercharacter(b1, 1, 2) == five);
    const auto report = verify_decomposition(b1, Branch::de_BB, 1, 2);
    CHECK(report.pass);
    CHECK_FALSE(report.witness.has_value());
    CHECK(report.id == "fold/de-BB");
    CHECK(report.params["a"] == 1);

    // Signed two-term sum: -S_[()] + S_[(1)].
    const FoldingCase a2{FoldKind::a2_even, 1, 0};
    CHECK(decomposition_rhs(a2, Branch::de_t1Dp, 1, 1) == x_var(vars, 1) + x_var(vars, 1, -1) - one);
    CHECK(verify_decomposition(a2, Branch::de_t1Dp, 1, 1).pass);
    CHECK(verify_decomposition({FoldKind::a2_ee, 2, 1}, Branch::de_t3D, 2, 2).pass);
    CHECK(verify_decomposition({FoldKind::d2, 2, 0}, Branch::de_D2, 1, 1).pass);
}

TEST_CASE("every branch decomposes its KR supercharacter")
{
    for (const auto &c : sweep_cases(3)) {
        const auto [M, N] = ambient_hook(c);
        for (const auto b : branches(c.kind)) {
            for (int a = 1; a <= 3; ++a) {
                for (int m = 1; m <= 3; ++m) {
                    if (!in_hook(rectangle(m, a), M, N)) {
                        continue;
                    }
                    const auto report = verify_decomposition(c, b, a, m);
                    INFO(to_json(report).dump());
                    CHECK(report.pass);
                }
            }
        }
    }
}

TEST_CASE("s = 0 dimensions of the fundamental KR modules")
{
    for (int r = 1; r <= 3; ++r) {
        CHECK(eval_all_ones(kr_supercharacter({FoldKind::b1, r, 0}, 1, 1)) == 2 * r + 1);
        CHECK(eval_all_ones(kr_supercharacter({FoldKind::a2_odd, r, 0}, 1, 1)) == 2 * r + 1);
        CHECK(eval_all_ones(kr_supercharacter({FoldKind::a2_even, r, 0}, 1, 1)) == 2 * r - 1);
        CHECK(eval_all_ones(kr_supercharacter({FoldKind::a2_ee, r, 0}, 1, 1)) == 2 * r);
        CHECK(eval_all_ones(kr_supercharacter({FoldKind::d1, r, 0}, 1, 1)) == 2 * r);
        CHECK(eval_all_ones(kr_supercharacter({FoldKind::spo, r, 0}, 1, 1)) == 2 * r);
        // x of length r, plus the constant 1 in X and -1 in Y.
        CHECK(eval_all_ones(kr_supercharacter({FoldKind::d2, r + 1, 0}, 1, 1)) == 2 * r + 2);
    }
}

TEST_CASE("the two s = 0 forms of the twisted D character agree")
{
    const auto vars = make_indexed_vars("x", 3);
    for (int r = 0; r <= 3; ++r) {
        std::vector<std::string> names;
        for (int i = 1; i <= r; ++i) {
            names.push_back("x" + std::to_string(i));
        }
        const auto x = Alphabet::of(vars, names);
        const auto X2 = x + Alphabet::constants(vars, {1, 1}) + x.inverse();
        const auto Y2 = Alphabet::constants(vars, {1, -1});
        const auto X1 = x + Alphabet::constants(vars, {1}) + x.inverse();
        const auto Y1 = Alphabet::constants(vars, {-1});
        for (int a = 1; a <= 3; ++a) {
            for (int m = 1; m <= 3; ++m) {
                const auto lam = rectangle(m, a);
                CHECK(super_schur(lam, X2, Y2) == super_schur(lam, X1, Y1));
            }
        }
    }
}

TEST_CASE("folded characters vanish outside the ambient hook")
{
    for (const auto &c : sweep_cases(2)) {
        const auto [M, N] = ambient_hook(c);
        const auto [X, Y] = fold_alphabets(c);
        for (int a = 1; a <= M + 2; ++a) {
            for (int m = 1; m <= N + 2; ++m) {
                const auto lam = rectangle(m, a);
                const bool inside = in_hook(lam, M, N);
                const auto value = super_schur(lam, X, Y);
                INFO(to_string(c.kind) << " r=" << c.r << " s=" << c.s << " a=" << a << " m=" << m);
                if (!inside) {
                    CHECK(value.is_zero());
                    CHECK_THROWS_AS(kr_supercharacter(c, a, m), invalid_input);
                } else if (c.kind != FoldKind::d1 && c.kind != FoldKind::spo && c.kind != FoldKind::d2) {
                    CHECK_FALSE(value.is_zero());
                }
            }
        }
    }
}

// When the constants in the alphabets cancel, characters can vanish inside the hook.
TEST_CASE("in-hook zeros when one alphabet holds both signs")
{
    const FoldingCase spo{FoldKind::spo, 1, 0};
    const auto [X, Y] = fold_alphabets(spo);
    CHECK(in_hook(Partition{1, 1}, 4, 0));
    CHECK(super_schur({1, 1}, X, Y).is_zero());
    const FoldingCase d1{FoldKind::d1, 0, 1};
    const auto [X1, Y1] = fold_alphabets(d1);
    CHECK(super_schur({2}, X1, Y1).is_zero());
    const FoldingCase d2{FoldKind::d2, 2, 0};
    const auto [X2, Y2] = fold_alphabets(d2);
    CHECK(in_hook(rectangle(3, 4), 4, 2));
    CHECK(super_schur(rectangle(3, 4), X2, Y2).is_zero());
}

TEST_CASE("branching relations examples")
{
    const auto vars = formal_table(2, 2);
    const auto X = first_vars(vars, 'x', 2);
    const auto Y = first_vars(vars, 'y', 2);
    for (const auto rel : all_dc_relations()) {
        CHECK(parse_dc_relation(to_string(rel)) == rel);
    }
    CHECK(general_dc_check(DcRelation::dc_4, {1}, X, Y, 1).pass);
    const auto empty = general_dc_check(DcRelation::dc_1a, {}, X, Y, 1);
    CHECK(empty.pass);
    CHECK(empty.id == "dc/dc-1a");
    const auto v1 = make_vars({"x1"});
    const auto x1 = Alphabet::with_prefix(v1, "x");
    CHECK(general_dc_check(DcRelation::dc_2b, {2}, x1 + x1.inverse(), Alphabet(v1, {}), -1).pass);
    CHECK_THROWS_AS(general_dc_check(DcRelation::dc_2a, {1}, X, Y, 0), invalid_input);
    CHECK(general_dc_check(DcRelation::dc_1a, {1}, X, Y, 1).params["xi"].is_null());
    CHECK(general_dc_check(DcRelation::dc_2a, {1}, X, Y, -1).params["xi"] == -1);
}

TEST_CASE("branching relations hold for formal alphabets")
{
    const auto vars = formal_table(3, 2);
    for (int p = 0; p <= 3; ++p) {
        for (int q = 0; q <= 2; ++q) {
            const auto X = first_vars(vars, 'x', p);
            const auto Y = first_vars(vars, 'y', q);
            for (const auto rel : all_dc_relations()) {
                for (const int xi : {1, -1}) {
                    if (xi == -1 && !uses_xi(rel)) {
                        continue;
                    }
                    for (const auto &lam : partitions_up_to(4)) {
                        const auto report = general_dc_check(rel, lam, X, Y, xi);
                        INFO(to_json(report).dump());
                        CHECK(report.pass);
                    }
                }
            }
        }
    }
}

TEST_CASE("a corrupted h series makes the checks fail")
{
    const auto vars = formal_table(2, 1);
    const auto X = first_vars(vars, 'x', 2);
    const auto Y = first_vars(vars, 'y', 1);
    const ScopedHListFault fault;
    const auto report = general_dc_check(DcRelation::dc_4, {3, 1}, X, Y, 1);
    CHECK_FALSE(report.pass);
    REQUIRE(report.witness.has_value());
    CHECK_FALSE(poly_from_json(*report.witness).is_zero());
    CHECK_FALSE(verify_decomposition({FoldKind::b1, 1, 1}, Branch::de_BD, 2, 2).pass);
}
