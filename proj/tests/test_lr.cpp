#include <doctest.h>

#include <superchar/errors.hpp>
#include <superchar/lr.hpp>
#include <superchar/schur.hpp>

using namespace superchar;

namespace
{

Partition transpose(const Partition &p)
{
    return p.conjugate();
}

Partition add_rows(const Partition &a, const Partition &b)
{
    std::vector<int> rows(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i] = a[i] + b[i];
    }
    return Partition(rows);
}

} // namespace

TEST_CASE("lr_coeff examples")
{
    CHECK(lr_coeff({2, 1}, {}, {2, 1}) == 1);
    CHECK(lr_coeff({2, 1}, {2, 1}, {}) == 1);
    CHECK(lr_coeff({3}, {}, {2, 1}) == 0);
    CHECK(lr_coeff({2, 2}, {1}, {1}) == 0);
    CHECK(lr_coeff({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_coeff({3, 2, 1}, {2, 1}, {2, 1}) == 2);
    CHECK(lr_coeff({2}, {3}, {}) == 0);
    CHECK(lr_coeff({}, {}, {}) == 1);
}

TEST_CASE("lr_coeff symmetry and transpose invariance up to size 8")
{
    for (const auto &lam : partitions_up_to(8)) {
        for (int k = 0; k <= lam.size(); ++k) {
            for (const auto &mu : partitions_of(k)) {
                if (!mu.contained_in(lam)) {
                    continue;
                }
                for (const auto &nu : partitions_of(lam.size() - k)) {
                    const auto c = lr_coeff(lam, mu, nu);
                    CHECK(c >= 0);
                    CHECK(c == lr_coeff(lam, nu, mu));
                    CHECK(c == lr_coeff(transpose(lam), transpose(mu), transpose(nu)));
                }
            }
        }
    }
}

TEST_CASE("stacking gives multiplicity one")
{
    for (const auto &mu : partitions_up_to(4)) {
        for (const auto &nu : partitions_up_to(4)) {
            CHECK(lr_coeff(add_rows(mu, nu), mu, nu) == 1);
        }
    }
}

TEST_CASE("lr_coeff matches the expansion of products of Schur polynomials")
{
    constexpr int max_size = 6;
    for (int total = 0; total <= max_size; ++total) {
        const int n = std::max(total, 1);
        for (int k = 0; k <= total; ++k) {
            for (const auto &mu : partitions_of(k)) {
                for (const auto &nu : partitions_of(total - k)) {
                    if (mu > nu) {
                        continue;
                    }
                    const auto product = bialternant_schur(mu, n) * bialternant_schur(nu, n);
                    const auto expansion = schur_expand(product, n);
                    for (const auto &lam : partitions_of(total)) {
                        const auto it = expansion.find(lam);
                        const Integer expected = it == expansion.end() ? Integer(0) : it->second;
                        INFO(lam.to_string() << " " << mu.to_string() << " " << nu.to_string());
                        CHECK(Integer(lr_coeff(lam, mu, nu)) == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("lr_rectangle examples")
{
    CHECK(lr_rectangle(2, 2, {2, 1}, {1}) == 1);
    CHECK(lr_rectangle(2, 2, {2, 2}, {}) == 1);
    CHECK(lr_rectangle(2, 2, {1, 1}, {1}) == 0);
    CHECK_THROWS_AS(lr_rectangle(2, 2, {3}, {1}), invalid_input);
    CHECK_THROWS_AS(lr_rectangle(2, 2, {1}, {1, 1, 1}), invalid_input);
}

TEST_CASE("lr_rectangle agrees with lr_coeff")
{
    for (int m = 1; m <= 3; ++m) {
        for (int a = 1; a <= 3; ++a) {
            const auto rect = rectangle(m, a);
            const auto box = partitions_in_box(m, a);
            for (const auto &mu : box) {
                for (const auto &nu : box) {
                    CHECK(lr_rectangle(m, a, mu, nu) == lr_coeff(rect, mu, nu));
                }
            }
        }
    }
}

TEST_CASE("lr_rect_sum examples")
{
    CHECK(lr_rect_sum(2, 2, {2, 1}, PartitionClass::all) == 1);
    CHECK(lr_rect_sum(2, 2, {1, 1}, PartitionClass::even_columns) == 1);
    CHECK(lr_rect_sum(2, 1, {1}, PartitionClass::even_rows) == 0);
    CHECK_THROWS_AS(lr_rect_sum(0, 2, {}, PartitionClass::all), invalid_input);
}

TEST_CASE("lr_rect_sum detects the rectangle subsets")
{
    const std::pair<PartitionClass, RectSubset> pairs[] = {
        {PartitionClass::all, RectSubset::box},
        {PartitionClass::even_columns, RectSubset::colpaired},
        {PartitionClass::even_rows, RectSubset::evenrow},
    };
    for (int m = 1; m <= 4; ++m) {
        for (int a = 1; a <= 4; ++a) {
            for (const auto &mu : partitions_in_box(m, a)) {
                for (const auto &[cls, tag] : pairs) {
                    INFO(m << "x" << a << " " << mu.to_string() << " " << to_string(cls));
                    CHECK(lr_rect_sum(m, a, mu, cls) == (in_rect_subset(mu, tag, m, a) ? 1 : 0));
                }
            }
        }
    }
}
