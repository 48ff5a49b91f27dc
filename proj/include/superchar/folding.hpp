#ifndef SUPERCHAR_FOLDING_HPP
#define SUPERCHAR_FOLDING_HPP

#include <string_view>
#include <utility>
#include <vector>

#include <superchar/alphabet.hpp>
#include <superchar/partition.hpp>
#include <superchar/report.hpp>
#include <superchar/schur.hpp>

namespace superchar
{

/// The foldings of gl(M|N) supercharacters. Names follow the affine
/// algebra whose Kirillov-Reshetikhin characters they produce:
///   b1       osp(2r+1|2s)^(1)      a2_even  sl(2r|2s+1)^(2)
///   a2_odd   sl(2r+1|2s)^(2)       a2_ee    sl(2r|2s)^(2)
///   d1       osp(2r|2s)^(1)        spo      spo(2r|2s)^(1)
///   d2       osp(2r|2s)^(2)
enum class FoldKind { b1, a2_even, a2_odd, a2_ee, d1, spo, d2 };

std::string_view to_string(FoldKind kind);
FoldKind parse_fold_kind(std::string_view text);
const std::vector<FoldKind> &all_fold_kinds();

struct FoldingCase {
    FoldKind kind;
    int r = 0;
    int s = 0;
};

/// Throws invalid_input unless r, s >= 0 and r + s >= 1 (r >= 1 for d2).
void validate(const FoldingCase &c);

enum class Branch { de_BB, de_BD, de_t1Bp, de_t1Dp, de_t2B, de_t2C, de_t3D, de_t3C, de_D, de_C, de_D2 };

std::string_view to_string(Branch b);
Branch parse_branch(std::string_view text);

/// Which constants join x and x^-1 on the right-hand side.
enum class RhsConstants { none, plus_one, minus_one };

struct DecompBranch {
    Branch id;
    FoldKind owner;
    RectSubset subset;
    BracketType bracket;
    RhsConstants x_constants;
    bool signed_terms; // (-1)^{ma+|lambda|} on every summand
};

const DecompBranch &branch_info(Branch b);
std::vector<Branch> branches(FoldKind kind);

struct AlphabetPair {
    Alphabet X;
    Alphabet Y;
};

/// Variables x1..xk, y1..ys where k = r (r - 1 for d2).
VarTablePtr fold_vars(const FoldingCase &c);
AlphabetPair fold_alphabets(const FoldingCase &c);
/// The alphabets of the bracket characters summed on a branch's right side.
AlphabetPair rhs_alphabets(const FoldingCase &c, Branch b);

/// (M, N) such that the folded gl(M|N) character vanishes outside the [M,N]-hook.
std::pair<int, int> ambient_hook(const FoldingCase &c);

/// S_{(m^a)} of the folded alphabets; a = 0 or m = 0 gives 1. Throws
/// invalid_input if (m^a) is outside the ambient hook.
LaurentPoly kr_supercharacter(const FoldingCase &c, int a, int m);

/// Sum of the branch's bracket characters over its rectangle subset.
LaurentPoly decomposition_rhs(const FoldingCase &c, Branch b, int a, int m);

/// Compares kr_supercharacter with decomposition_rhs.
VerificationReport verify_decomposition(const FoldingCase &c, Branch b, int a, int m);

enum class DcRelation { dc_1a, dc_1b, dc_2a, dc_2b, dc_3a, dc_3b, dc_4, dc_4du };

std::string_view to_string(DcRelation rel);
DcRelation parse_dc_relation(std::string_view text);
const std::vector<DcRelation> &all_dc_relations();
/// True for the relations that depend on the sign xi.
bool uses_xi(DcRelation rel);

/// Both sides of one branching relation for S_lambda(X|Y). xi must be +1
/// or -1 and is ignored by relations that do not use it.
VerificationReport general_dc_check(DcRelation rel, const Partition &lambda, const Alphabet &X, const Alphabet &Y,
                                    int xi);

} // namespace superchar

#endif
