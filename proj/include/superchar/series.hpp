#ifndef SUPERCHAR_SERIES_HPP
#define SUPERCHAR_SERIES_HPP

#include <vector>

#include <superchar/laurent.hpp>

namespace superchar
{

/// Power series in an auxiliary variable t with Laurent-polynomial
/// coefficients, truncated after t^cutoff.
class TruncatedSeries
{
public:
    /// The zero series.
    TruncatedSeries(VarTablePtr vars, int cutoff);
    /// Coefficients beyond `cutoff` are dropped, missing ones are zero.
    TruncatedSeries(VarTablePtr vars, int cutoff, std::vector<LaurentPoly> coeffs);

    static TruncatedSeries one(VarTablePtr vars, int cutoff);

    int cutoff() const noexcept
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const VarTablePtr &vars() const noexcept
    {
        return vars_;
    }
    const std::vector<LaurentPoly> &coeffs() const noexcept
    {
        return coeffs_;
    }
    /// Coefficient of t^k; zero outside [0, cutoff].
    LaurentPoly operator[](int k) const;
    void set(int k, LaurentPoly p);

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    VarTablePtr vars_;
    std::vector<LaurentPoly> coeffs_;
};

/// Cauchy product up to the smaller of the two cutoffs.
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);

/// Formal inverse; the constant coefficient must be exactly 1.
TruncatedSeries series_inv(const TruncatedSeries &a);

} // namespace superchar

#endif
