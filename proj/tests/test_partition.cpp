#include <doctest.h>

#include <algorithm>
#include <set>

#include <superchar/errors.hpp>
#include <superchar/partition.hpp>

using namespace superchar;

namespace
{

long long binomial(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Brute force: all weakly decreasing sequences of length a with entries in [0, m].
std::vector<Partition> box_by_brute_force(int m, int a)
{
    std::vector<Partition> out;
    std::vector<int> rows(static_cast<std::size_t>(a), 0);
    while (true) {
        if (std::is_sorted(rows.rbegin(), rows.rend())) {
            out.emplace_back(rows);
        }
        std::size_t i = 0;
        while (i < rows.size() && rows[i] == m) {
            rows[i++] = 0;
        }
        if (i == rows.size()) {
            break;
        }
        ++rows[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("construction and parsing")
{
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{}.length() == 0);
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("3,2,2") == Partition{3, 2, 2});
    CHECK_THROWS_AS(Partition::parse("1,2"), invalid_input);
    CHECK_THROWS_AS(Partition::parse("2,,1"), invalid_input);
    CHECK_THROWS_AS(Partition::parse("2,0"), invalid_input);
    CHECK_THROWS_AS(Partition::parse("a"), invalid_input);
    CHECK_THROWS_AS((Partition{1, -1}), invalid_input);
    CHECK(Partition{2, 1}[5] == 0);
    CHECK(Partition{3, 1}.to_string() == "(3,1)");
}

TEST_CASE("conjugate")
{
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
}

TEST_CASE("in_hook")
{
    CHECK_FALSE(in_hook(Partition{3, 3, 3}, 2, 2));
    CHECK(in_hook(Partition{5, 1}, 1, 1));
    CHECK(in_hook(Partition{}, 0, 0));
    CHECK(in_hook(Partition{}, 4, 7));
    CHECK_THROWS_AS(in_hook(Partition{1}, -1, 0), invalid_input);
}

TEST_CASE("enumerate_rect_subset examples")
{
    const auto box = enumerate_rect_subset(RectSubset::box, 2, 2);
    const std::vector<Partition> expected{{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}};
    CHECK(box == expected);
    CHECK(enumerate_rect_subset(RectSubset::colpaired, 2, 1) == std::vector<Partition>{{2}});
    CHECK(enumerate_rect_subset(RectSubset::evenrow, 1, 2) == std::vector<Partition>{{1, 1}});
    CHECK_THROWS_AS(enumerate_rect_subset(RectSubset::box, 0, 2), invalid_input);
    CHECK_THROWS_AS(enumerate_rect_subset(RectSubset::evenrow, 2, 0), invalid_input);
}

TEST_CASE("enumerate_class examples")
{
    CHECK(enumerate_class(PartitionClass::even_rows, 4) == std::vector<Partition>{{}, {2}, {4}, {2, 2}});
    CHECK(enumerate_class(PartitionClass::even_columns, 2) == std::vector<Partition>{{}, {1, 1}});
    CHECK(enumerate_class(PartitionClass::all, 0) == std::vector<Partition>{{}});
}

TEST_CASE("ordering is graded reverse lexicographic")
{
    CHECK(Partition{} < Partition{1});
    CHECK(Partition{2} < Partition{1, 1});
    CHECK(Partition{3} < Partition{2, 1});
    CHECK(Partition{2, 1} < Partition{1, 1, 1});
    CHECK(Partition{1, 1, 1} < Partition{4});
}

TEST_CASE("partition counts")
{
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(p[n]));
    }
}

TEST_CASE("conjugation is an involution exchanging even rows and even columns")
{
    for (const auto &l : partitions_up_to(12)) {
        const auto c = l.conjugate();
        CHECK(c.size() == l.size());
        CHECK(c.conjugate() == l);
        CHECK(l.has_even_rows() == c.has_even_columns());
    }
}

TEST_CASE("box size is binomial")
{
    for (int m = 1; m <= 6; ++m) {
        for (int a = 1; a <= 6; ++a) {
            CHECK(enumerate_rect_subset(RectSubset::box, m, a).size() == static_cast<std::size_t>(binomial(m + a, a)));
        }
    }
}

TEST_CASE("rectangle subsets against a brute-force filter")
{
    for (int m = 1; m <= 4; ++m) {
        for (int a = 1; a <= 4; ++a) {
            const auto brute = box_by_brute_force(m, a);
            CHECK(enumerate_rect_subset(RectSubset::box, m, a) == brute);
            for (const auto tag : {RectSubset::colpaired, RectSubset::evenrow}) {
                const auto subset = enumerate_rect_subset(tag, m, a);
                CHECK(std::is_sorted(subset.begin(), subset.end()));
                std::vector<Partition> filtered;
                std::copy_if(brute.begin(), brute.end(), std::back_inserter(filtered),
                             [&](const Partition &l) { return in_rect_subset(l, tag, m, a); });
                CHECK(subset == filtered);
                for (const auto &l : subset) {
                    CHECK(l.contained_in(rectangle(m, a)));
                    CHECK(in_rect_subset(l, tag, m, a));
                }
            }
        }
    }
}

TEST_CASE("rectangle subsets match the written chains")
{
    // a odd: first row pinned to m, then pairs.
    CHECK(enumerate_rect_subset(RectSubset::colpaired, 2, 3)
          == std::vector<Partition>{{2}, {2, 1, 1}, {2, 2, 2}});
    // a even: pairs only.
    CHECK(enumerate_rect_subset(RectSubset::colpaired, 1, 2) == std::vector<Partition>{{}, {1, 1}});
    // m even: even rows including 0.
    CHECK(enumerate_rect_subset(RectSubset::evenrow, 2, 2) == std::vector<Partition>{{}, {2}, {2, 2}});
    // m odd: every one of the a rows odd.
    CHECK(enumerate_rect_subset(RectSubset::evenrow, 3, 2) == std::vector<Partition>{{1, 1}, {3, 1}, {3, 3}});
}
