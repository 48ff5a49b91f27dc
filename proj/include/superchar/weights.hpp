#ifndef SUPERCHAR_WEIGHTS_HPP
#define SUPERCHAR_WEIGHTS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

#include <superchar/partition.hpp>

namespace superchar
{

using Rational = boost::multiprecision::cpp_rational;

enum class FamilyKind { gl, b, b0, c, d_plus, d_minus };

/// An algebra family with its integer parameters:
///   gl       gl(M|N)             p = M, q = N
///   b        osp(2r+1|2s), r > 0 p = r, q = s
///   b0       osp(1|2s)           p = 0, q = s
///   c        osp(2|2s)           p = 1, q = s
///   d_plus, d_minus  osp(2r|2s), r >= 2, the two sign choices of the last coordinate
struct AlgebraFamily {
    FamilyKind kind;
    int p = 0;
    int q = 0;

    static AlgebraFamily gl(int M, int N);
    static AlgebraFamily b(int r, int s);
    static AlgebraFamily b0(int s);
    static AlgebraFamily c(int s);
    static AlgebraFamily d_plus(int r, int s);
    static AlgebraFamily d_minus(int r, int s);

    /// Number of Kac-Dynkin labels.
    int rank() const;
    /// Number of highest-weight coordinates.
    int weight_length() const;
    /// (M, N) of the hook whose diagrams parametrize the family.
    std::pair<int, int> hook() const;
    std::string name() const;
};

/// Throws invalid_input for parameters outside the family's range.
void validate(const AlgebraFamily &f);
FamilyKind parse_family_kind(std::string_view text);
/// Parses the printed form: "GL(2,1)", "B(2,1)", "B0(2)", "C(3)" (osp(2|4)),
/// "D_PLUS(2,0)", "D_MINUS(2,0)". Validates the parameters.
AlgebraFamily parse_family(std::string_view text);
std::string_view to_string(FamilyKind kind);

struct HighestWeight {
    std::vector<Rational> coords;
    friend bool operator==(const HighestWeight &, const HighestWeight &) = default;
};

struct KacDynkinLabels {
    std::vector<Rational> b;
    friend bool operator==(const KacDynkinLabels &, const KacDynkinLabels &) = default;
};

/// Highest weight attached to a diagram in the family's hook. Throws
/// invalid_input naming the violated row bound otherwise.
HighestWeight hw_from_diagram(const AlgebraFamily &f, const Partition &lambda);

/// Throws invalid_input if the weight has the wrong length.
KacDynkinLabels kd_labels(const AlgebraFamily &f, const HighestWeight &w);

/// Throws invalid_input if the label count differs from the rank.
bool is_finite_dimensional(const AlgebraFamily &f, const KacDynkinLabels &labels);

/// Integers print plainly, other values as "p/q".
std::string to_string(const Rational &x);
Rational parse_rational(std::string_view text);
nlohmann::json to_json(const Rational &x);

} // namespace superchar

#endif
