#ifndef SUPERCHAR_ALPHABET_HPP
#define SUPERCHAR_ALPHABET_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <superchar/laurent.hpp>

namespace superchar
{

/// Ordered multiset of signed monomials over one variable table. Elements
/// may be formal variables, their inverses, products thereof, or the
/// constants +1 and -1.
class Alphabet
{
public:
    explicit Alphabet(VarTablePtr vars, std::vector<SignedMonomial> elements = {});

    /// The named variables of `vars`, each with sign +1 and exponent 1.
    static Alphabet of(VarTablePtr vars, const std::vector<std::string> &names);
    /// Every variable whose name starts with `prefix`, in table order.
    static Alphabet with_prefix(VarTablePtr vars, std::string_view prefix);
    /// The constants given by `signs` (each +1 or -1).
    static Alphabet constants(VarTablePtr vars, std::initializer_list<int> signs);

    const VarTablePtr &vars() const noexcept
    {
        return vars_;
    }
    const std::vector<SignedMonomial> &elements() const noexcept
    {
        return elements_;
    }
    std::size_t size() const noexcept
    {
        return elements_.size();
    }
    bool empty() const noexcept
    {
        return elements_.empty();
    }

    /// Multiset union, keeping the order of *this followed by o.
    Alphabet operator+(const Alphabet &o) const;
    Alphabet with(const SignedMonomial &m) const;
    /// Every element inverted (x -> x^-1, the constants are fixed).
    Alphabet inverse() const;
    /// Every element multiplied by -1.
    Alphabet negated() const;
    /// Same elements over an equal-sized table (positional).
    Alphabet relabeled(VarTablePtr vars) const;

    /// The elements as sorted, order-independent text; equal for alphabets
    /// that agree as multisets.
    std::string canonical_key() const;
    std::string to_string() const;

    /// Sum of the elements as a Laurent polynomial.
    LaurentPoly power_sum() const;

    friend bool operator==(const Alphabet &a, const Alphabet &b);

private:
    VarTablePtr vars_;
    std::vector<SignedMonomial> elements_;
};

/// Parses "x1,-y2^-1,1,-1" into an alphabet over `vars`. Each element is
/// an optional '-', then either the constant 1 or name[^int].
Alphabet parse_alphabet(std::string_view text, const VarTablePtr &vars);

/// Variable names mentioned by an alphabet string, in order of first use.
std::vector<std::string> alphabet_variable_names(std::string_view text);

} // namespace superchar

#endif
