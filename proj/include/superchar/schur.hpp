#ifndef SUPERCHAR_SCHUR_HPP
#define SUPERCHAR_SCHUR_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <string_view>
#include <vector>

#include <superchar/alphabet.hpp>
#include <superchar/laurent.hpp>
#include <superchar/partition.hpp>

namespace superchar
{

enum class BracketType { plain, square, angle };

std::string_view to_string(BracketType tag);
BracketType parse_bracket(std::string_view text);

/// [h_0, ..., h_degmax] for the generating function
/// prod_Y (1 - y t) / prod_X (1 - x t). Results are cached per
/// (variable table, X and Y as multisets).
std::vector<LaurentPoly> h_list(const Alphabet &X, const Alphabet &Y, int degmax);

/// Read-only view of h_0..h_degmax with h_k = 0 for k < 0.
class CompleteFunctions
{
public:
    CompleteFunctions(const Alphabet &X, const Alphabet &Y, int degmax);

    /// Throws invalid_input for k > degmax.
    const LaurentPoly &operator()(int k) const;
    int degmax() const noexcept
    {
        return static_cast<int>(h_->size()) - 1;
    }
    const VarTablePtr &vars() const noexcept
    {
        return zero_.vars();
    }

private:
    std::shared_ptr<const std::vector<LaurentPoly>> h_;
    LaurentPoly zero_;
};

/// Largest h index read by any of the determinant forms for lambda.
int jt_degree(const Partition &lambda);

LaurentPoly super_schur(const Partition &lambda, const CompleteFunctions &h);
LaurentPoly super_schur(const Partition &lambda, const Alphabet &X, const Alphabet &Y);

LaurentPoly bracket_schur(BracketType tag, const Partition &lambda, const CompleteFunctions &h);
LaurentPoly bracket_schur(BracketType tag, const Partition &lambda, const Alphabet &X, const Alphabet &Y);

/// The block-matrix forms: a first column of H_{l_i-i+1} (square) or
/// h_{l_i-i+1} (angle) followed by the symmetrized columns, with
/// H_m = h_m - h_{m-2}. PLAIN is rejected.
LaurentPoly bracket_schur_altform(BracketType tag, const Partition &lambda, const CompleteFunctions &h);
LaurentPoly bracket_schur_altform(BracketType tag, const Partition &lambda, const Alphabet &X, const Alphabet &Y);

/// S_[lambda] as half the determinant of (H_{l_i-i+j} + H_{l_i-i-j+2}).
LaurentPoly square_bracket_halved_form(const Partition &lambda, const CompleteFunctions &h);

/// det(t_i^{lambda_j+n-j}) / det(t_i^{n-j}) over the table t1..tn.
LaurentPoly bialternant_schur(const Partition &lambda, int n);

/// prod_{i<j} (t_i - t_j) over t1..tn.
LaurentPoly vandermonde(int n);

/// Coefficients of p in the Schur basis of t1..tn (p must live over a
/// table of exactly n variables). Non-symmetric or non-polynomial input
/// is rejected.
std::map<Partition, Integer> schur_expand(const LaurentPoly &p, int n);

// h-series cache maintenance.
void clear_h_cache();
std::size_t h_cache_size();
void save_h_cache(const std::filesystem::path &file);
/// Merges entries from a file written by save_h_cache; a missing file is
/// not an error.
void load_h_cache(const std::filesystem::path &file);

/// Test hook: while an instance is alive every h_list result has 1 added
/// to h_2, and the cache is bypassed.
class ScopedHListFault
{
public:
    ScopedHListFault();
    ~ScopedHListFault();
    ScopedHListFault(const ScopedHListFault &) = delete;
    ScopedHListFault &operator=(const ScopedHListFault &) = delete;
};

} // namespace superchar

#endif
