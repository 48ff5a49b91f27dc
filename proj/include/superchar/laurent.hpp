#ifndef SUPERCHAR_LAURENT_HPP
#define SUPERCHAR_LAURENT_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

namespace superchar
{

using Integer = boost::multiprecision::cpp_int;

/// Upper bound on the number of variables in one table.
inline constexpr std::size_t max_vars = 16;

/// Ordered list of distinct variable names. The position of a name fixes its
/// slot in every exponent vector built over the table.
class VarTable
{
public:
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const noexcept
    {
        return names_.size();
    }
    const std::string &name(std::size_t i) const
    {
        return names_.at(i);
    }
    const std::vector<std::string> &names() const noexcept
    {
        return names_;
    }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VarTable &, const VarTable &) = default;

private:
    std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);
/// Names prefix1..prefixN.
VarTablePtr make_indexed_vars(std::string_view prefix, std::size_t n);
bool same_vars(const VarTablePtr &a, const VarTablePtr &b);

/// Dense exponent vector; slots beyond the owning table's size stay zero.
class Exponent
{
public:
    Exponent() = default;

    int operator[](std::size_t i) const noexcept
    {
        return e_[i];
    }
    void set(std::size_t i, int value);

    Exponent &operator+=(const Exponent &o);
    Exponent &operator-=(const Exponent &o);
    friend Exponent operator+(Exponent a, const Exponent &b)
    {
        return a += b;
    }
    friend Exponent operator-(Exponent a, const Exponent &b)
    {
        return a -= b;
    }
    Exponent negated() const;
    Exponent scaled(int k) const;

    bool is_zero() const noexcept;
    bool is_nonnegative() const noexcept;
    int total() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const Exponent &, const Exponent &) = default;
    friend auto operator<=>(const Exponent &, const Exponent &) = default;

private:
    std::array<std::int16_t, max_vars> e_{};
};

struct ExponentHash {
    std::size_t operator()(const Exponent &e) const noexcept
    {
        return e.hash();
    }
};

/// sign * x^exp with sign in {+1, -1}. The constants +1 and -1 are the
/// signed monomials with zero exponent.
struct SignedMonomial {
    int sign = 1;
    Exponent exp;

    SignedMonomial inverse() const
    {
        return {sign, exp.negated()};
    }
    friend bool operator==(const SignedMonomial &, const SignedMonomial &) = default;
    friend auto operator<=>(const SignedMonomial &, const SignedMonomial &) = default;
};

struct Term {
    Exponent exp;
    Integer coeff;

    friend bool operator==(const Term &, const Term &) = default;
};

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Terms are kept sorted by exponent (lexicographic,
/// ascending) with no zero coefficients, so equality is term-set equality.
class LaurentPoly
{
public:
    explicit LaurentPoly(VarTablePtr vars);
    LaurentPoly(VarTablePtr vars, Integer constant);

    static LaurentPoly monomial(VarTablePtr vars, const Exponent &exp, Integer coeff = 1);
    static LaurentPoly monomial(VarTablePtr vars, const SignedMonomial &m);
    /// name^power; throws invalid_input for an unknown name.
    static LaurentPoly variable(VarTablePtr vars, std::string_view name, int power = 1);
    /// Accepts unsorted terms with duplicates and zeros.
    static LaurentPoly from_terms(VarTablePtr vars, std::vector<Term> terms);

    const VarTablePtr &vars() const noexcept
    {
        return vars_;
    }
    std::span<const Term> terms() const noexcept
    {
        return terms_;
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    bool is_polynomial() const noexcept;
    Integer coeff(const Exponent &exp) const;
    /// Largest exponent in lexicographic order; throws on the zero polynomial.
    const Term &leading_term() const;

    /// Multiplication by sign * x^exp; lexicographic order is preserved.
    LaurentPoly shifted(const Exponent &exp, int sign = 1) const;
    LaurentPoly shifted(const SignedMonomial &m) const
    {
        return shifted(m.exp, m.sign);
    }
    /// Same terms over another table of the same size (positional relabel).
    LaurentPoly relabeled(VarTablePtr vars) const;

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o);
    LaurentPoly &operator*=(const Integer &c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b)
    {
        return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b)
    {
        return a -= b;
    }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer &c)
    {
        return a *= c;
    }

    /// Divides every coefficient by d; throws internal_error on a remainder.
    LaurentPoly divided_exactly(const Integer &d) const;

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b);

    /// Human-readable form, terms in descending lexicographic order.
    std::string to_string() const;

private:
    void check_compatible(const LaurentPoly &o) const;
    void add_scaled(const LaurentPoly &o, int sign);

    VarTablePtr vars_;
    std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly &p, unsigned k);

/// Product with every term whose weighted degree exceeds max_degree dropped.
/// weights[i] is the grading weight of variable i.
LaurentPoly multiply_truncated(const LaurentPoly &a, const LaurentPoly &b, std::span<const int> weights,
                               int max_degree);
LaurentPoly truncate_degree(const LaurentPoly &p, std::span<const int> weights, int max_degree);

/// Substitution of named variables by signed monomials over `target`.
/// Variables without an entry map to the variable of the same name in
/// `target`, which must exist whenever the variable actually occurs.
using Substitution = std::map<std::string, SignedMonomial, std::less<>>;
LaurentPoly specialize(const LaurentPoly &p, const Substitution &assignment, const VarTablePtr &target);
LaurentPoly specialize(const LaurentPoly &p, const Substitution &assignment);

/// Re-expresses p over a table containing all of its variables (by name).
LaurentPoly embed(const LaurentPoly &p, const VarTablePtr &target);

/// Sum of coefficients, i.e. the value at x_i = 1 for all i.
Integer eval_all_ones(const LaurentPoly &p);

/// Exact quotient of two polynomials (no negative exponents), computed by
/// lexicographic leading-term division. Throws internal_error if q does not
/// divide p and invalid_input for non-polynomial operands.
LaurentPoly exact_divide(const LaurentPoly &p, const LaurentPoly &q);

/// Wire encoding {"vars": [...], "terms": [{"exp": [...], "coeff": "..."}]}
/// with terms sorted lexicographically by exponent.
nlohmann::json to_json(const LaurentPoly &p);
LaurentPoly poly_from_json(const nlohmann::json &j);
/// Parses into an existing table; the encoded names must equal the table's.
LaurentPoly poly_from_json(const nlohmann::json &j, const VarTablePtr &vars);

std::string to_string(const SignedMonomial &m, const VarTable &vars);

} // namespace superchar

#endif
