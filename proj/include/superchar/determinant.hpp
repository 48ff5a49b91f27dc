#ifndef SUPERCHAR_DETERMINANT_HPP
#define SUPERCHAR_DETERMINANT_HPP

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <superchar/errors.hpp>

namespace superchar
{

/// Square matrix stored row-major.
template <class T>
class Matrix
{
public:
    Matrix(std::size_t n, const T &fill) : n_(n), data_(n * n, fill) {}

    std::size_t size() const noexcept
    {
        return n_;
    }
    T &operator()(std::size_t i, std::size_t j)
    {
        return data_[i * n_ + j];
    }
    const T &operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * n_ + j];
    }

private:
    std::size_t n_;
    std::vector<T> data_;
};

/// Division-free Laplace expansion along rows, memoized on the set of
/// columns still available. `one` is the multiplicative identity of the
/// ring (needed for the empty minor), `is_zero` lets sparse rows skip work.
template <class T, class IsZero>
T determinant(const Matrix<T> &m, const T &one, IsZero is_zero)
{
    const std::size_t n = m.size();
    if (n > 20) {
        throw invalid_input("determinant size too large for cofactor expansion");
    }
    if (n == 0) {
        return one;
    }
    // memo[mask] = det of rows (n - popcount(mask))..n-1 restricted to the columns in mask.
    std::unordered_map<std::uint32_t, T> memo;
    auto rec = [&](auto &&self, std::uint32_t mask, std::size_t row) -> T {
        if (row == n) {
            return one;
        }
        if (const auto it = memo.find(mask); it != memo.end()) {
            return it->second;
        }
        T acc = one - one;
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) {
                continue;
            }
            const T &entry = m(row, j);
            if (!is_zero(entry)) {
                const T minor = self(self, mask & ~(1u << j), row + 1);
                if (!is_zero(minor)) {
                    if (sign > 0) {
                        acc = acc + entry * minor;
                    } else {
                        acc = acc - entry * minor;
                    }
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (n == 32 ? 0u : (1u << n)) - 1u, 0);
}

} // namespace superchar

#endif
