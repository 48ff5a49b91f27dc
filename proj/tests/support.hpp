#ifndef SUPERCHAR_TEST_SUPPORT_HPP
#define SUPERCHAR_TEST_SUPPORT_HPP

#include <functional>
#include <string>
#include <vector>

#include <superchar/alphabet.hpp>
#include <superchar/partition.hpp>

namespace testsupport
{

using namespace superchar;

// Table x1..xp, y1..yq.
inline VarTablePtr formal_table(int p, int q)
{
    std::vector<std::string> names;
    for (int i = 1; i <= p; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    for (int i = 1; i <= q; ++i) {
        names.push_back("y" + std::to_string(i));
    }
    return make_vars(std::move(names));
}

inline Alphabet first_vars(const VarTablePtr &vars, char prefix, int k)
{
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) {
        names.push_back(std::string(1, prefix) + std::to_string(i));
    }
    return Alphabet::of(vars, names);
}

// Supersymmetric Schur function by brute-force enumeration of
// (M|N)-semistandard tableaux: letters 0..M-1 are even (weakly increasing
// along rows, strictly down columns), letters M..M+N-1 odd (strictly along
// rows, weakly down columns); each odd letter contributes -y.
inline LaurentPoly supertableau_sum(const Partition &lambda, const Alphabet &X, const Alphabet &Y)
{
    const auto vars = X.vars();
    const int M = static_cast<int>(X.size());
    const int N = static_cast<int>(Y.size());
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            cells.emplace_back(static_cast<int>(r), c);
        }
    }
    std::vector<std::vector<int>> fill(lambda.length());
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        fill[r].assign(static_cast<std::size_t>(lambda[r]), -1);
    }
    LaurentPoly total(vars);
    std::function<void(std::size_t, LaurentPoly)> rec = [&](std::size_t k, LaurentPoly weight) {
        if (k == cells.size()) {
            total += weight;
            return;
        }
        const auto [r, c] = cells[k];
        for (int v = 0; v < M + N; ++v) {
            const bool odd = v >= M;
            if (c > 0) {
                const int left = fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)];
                if (odd ? left >= v : left > v) {
                    continue;
                }
            }
            if (r > 0) {
                const int up = fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
                if (odd ? up > v : up >= v) {
                    continue;
                }
            }
            fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            const auto &el = odd ? Y.elements()[static_cast<std::size_t>(v - M)] : X.elements()[static_cast<std::size_t>(v)];
            auto next = weight.shifted(el);
            if (odd) {
                next = -next;
            }
            rec(k + 1, std::move(next));
        }
        fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -1;
    };
    rec(0, LaurentPoly(vars, 1));
    return total;
}

} // namespace testsupport

#endif
