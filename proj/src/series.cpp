#include <superchar/series.hpp>

#include <algorithm>

#include <superchar/errors.hpp>

namespace superchar
{

TruncatedSeries::TruncatedSeries(VarTablePtr vars, int cutoff) : vars_(std::move(vars))
{
    if (cutoff < 0) {
        throw invalid_input("series cutoff must be non-negative");
    }
    coeffs_.assign(static_cast<std::size_t>(cutoff) + 1, LaurentPoly(vars_));
}

TruncatedSeries::TruncatedSeries(VarTablePtr vars, int cutoff, std::vector<LaurentPoly> coeffs)
    : TruncatedSeries(std::move(vars), cutoff)
{
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) {
        set(static_cast<int>(k), std::move(coeffs[k]));
    }
}

TruncatedSeries TruncatedSeries::one(VarTablePtr vars, int cutoff)
{
    TruncatedSeries s(vars, cutoff);
    s.coeffs_[0] = LaurentPoly(vars, 1);
    return s;
}

LaurentPoly TruncatedSeries::operator[](int k) const
{
    if (k < 0 || k > cutoff()) {
        return LaurentPoly(vars_);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set(int k, LaurentPoly p)
{
    if (k < 0 || k > cutoff()) {
        throw invalid_input("series index out of range");
    }
    if (!same_vars(p.vars(), vars_)) {
        throw invalid_input("series coefficient over a different variable table");
    }
    coeffs_[static_cast<std::size_t>(k)] = std::move(p);
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (!same_vars(a.vars(), b.vars())) {
        throw invalid_input("series over different variable tables");
    }
    const int n = std::min(a.cutoff(), b.cutoff());
    TruncatedSeries out(a.vars(), n);
    for (int k = 0; k <= n; ++k) {
        LaurentPoly c(a.vars());
        for (int i = 0; i <= k; ++i) {
            const auto &ai = a.coeffs()[static_cast<std::size_t>(i)];
            const auto &bj = b.coeffs()[static_cast<std::size_t>(k - i)];
            if (!ai.is_zero() && !bj.is_zero()) {
                c += ai * bj;
            }
        }
        out.set(k, std::move(c));
    }
    return out;
}

TruncatedSeries series_inv(const TruncatedSeries &a)
{
    if (a.coeffs()[0] != LaurentPoly(a.vars(), 1)) {
        throw invalid_input("series_inv requires constant term 1");
    }
    // b_0 = 1, b_k = -sum_{i=1..k} a_i b_{k-i}.
    const int n = a.cutoff();
    TruncatedSeries out = TruncatedSeries::one(a.vars(), n);
    for (int k = 1; k <= n; ++k) {
        LaurentPoly c(a.vars());
        for (int i = 1; i <= k; ++i) {
            const auto &ai = a.coeffs()[static_cast<std::size_t>(i)];
            if (!ai.is_zero()) {
                c -= ai * out.coeffs()[static_cast<std::size_t>(k - i)];
            }
        }
        out.set(k, std::move(c));
    }
    return out;
}

} // namespace superchar
