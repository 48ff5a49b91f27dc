#include <superchar/lr.hpp>

#include <vector>

#include <superchar/errors.hpp>

namespace superchar
{

namespace
{

struct SkewFiller {
    const Partition &lam;
    const Partition &mu;
    std::vector<int> content;         // target multiplicity of each letter
    std::vector<int> used;            // letters placed so far
    std::vector<std::vector<int>> t;  // t[row][col], 0 for cells of mu
    std::int64_t count = 0;

    void run(std::size_t row, int col)
    {
        if (row == lam.length()) {
            ++count;
            return;
        }
        if (col < mu[row]) {
            run(row + 1, row + 1 < lam.length() ? lam[row + 1] - 1 : 0);
            return;
        }
        const int right = col + 1 < lam[row] ? t[row][static_cast<std::size_t>(col + 1)] : static_cast<int>(content.size());
        const int above = row > 0 && col < lam[row - 1] ? t[row - 1][static_cast<std::size_t>(col)] : 0;
        // Weakly increasing rows: v <= right. Strict columns: v > above.
        for (int v = above + 1; v <= right; ++v) {
            const auto k = static_cast<std::size_t>(v - 1);
            if (used[k] == content[k] || (k > 0 && used[k] == used[k - 1])) {
                continue;
            }
            ++used[k];
            t[row][static_cast<std::size_t>(col)] = v;
            run(row, col - 1);
            t[row][static_cast<std::size_t>(col)] = 0;
            --used[k];
        }
    }
};

} // namespace

std::int64_t lr_coeff(const Partition &lam, const Partition &mu, const Partition &nu)
{
    if (!mu.contained_in(lam) || lam.size() != mu.size() + nu.size()) {
        return 0;
    }
    if (nu.empty()) {
        return 1;
    }
    SkewFiller f{lam, mu, nu.parts(), std::vector<int>(nu.length(), 0), {}, 0};
    for (std::size_t r = 0; r < lam.length(); ++r) {
        f.t.emplace_back(static_cast<std::size_t>(lam[r]), 0);
    }
    f.run(0, lam[0] - 1);
    return f.count;
}

int lr_rectangle(int m, int a, const Partition &mu, const Partition &nu)
{
    const auto rect = rectangle(m, a);
    if (!mu.contained_in(rect) || !nu.contained_in(rect)) {
        throw invalid_input("lr_rectangle: mu and nu must lie inside (" + std::to_string(m) + "^" + std::to_string(a)
                            + ")");
    }
    for (int i = 1; i <= a; ++i) {
        if (mu[static_cast<std::size_t>(i - 1)] + nu[static_cast<std::size_t>(a - i)] != m) {
            return 0;
        }
    }
    return 1;
}

std::int64_t lr_rect_sum(int m, int a, const Partition &mu, PartitionClass variant)
{
    if (m < 1 || a < 1) {
        throw invalid_input("lr_rect_sum requires m >= 1 and a >= 1");
    }
    const auto rect = rectangle(m, a);
    std::int64_t sum = 0;
    for (const auto &kappa : partitions_in_box(m, a)) {
        if (belongs_to(kappa, variant)) {
            sum += lr_coeff(rect, kappa, mu);
        }
    }
    return sum;
}

} // namespace superchar
