#include <superchar/partition.hpp>

#include <algorithm>
#include <charconv>
#include <functional>

#include <superchar/errors.hpp>

namespace superchar
{

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw invalid_input("partition entries must be non-negative, got " + std::to_string(parts_[i]));
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw invalid_input("partition entries must be weakly decreasing (entry " + std::to_string(i + 1) + ")");
        }
        size_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty()) {
        return Partition{};
    }
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw invalid_input("malformed partition '" + std::string(text) + "': bad entry '" + std::string(token)
                                + "'");
        }
        if (value < 1) {
            throw invalid_input("malformed partition '" + std::string(text) + "': entries must be positive");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const
{
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (const int row : parts_) {
        for (int c = 0; c < row; ++c) {
            ++conj[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(conj));
}

bool Partition::contained_in(const Partition &outer) const noexcept
{
    if (parts_.size() > outer.parts_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] > outer.parts_[i]) {
            return false;
        }
    }
    return true;
}

bool Partition::has_even_rows() const noexcept
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

bool Partition::has_even_columns() const
{
    return conjugate().has_even_rows();
}

std::string Partition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::strong_ordering operator<=>(const Partition &a, const Partition &b) noexcept
{
    if (a.size_ != b.size_) {
        return a.size_ <=> b.size_;
    }
    // Reverse lexicographic within a size: the larger sequence sorts first.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                  a.parts_.end());
}

bool in_hook(const Partition &lambda, int M, int N)
{
    if (M < 0 || N < 0) {
        throw invalid_input("hook parameters must be non-negative");
    }
    return lambda[static_cast<std::size_t>(M)] <= N;
}

Partition rectangle(int m, int a)
{
    if (m < 0 || a < 0) {
        throw invalid_input("rectangle dimensions must be non-negative");
    }
    if (m == 0 || a == 0) {
        return {};
    }
    return Partition(std::vector<int>(static_cast<std::size_t>(a), m));
}

bool belongs_to(const Partition &lambda, PartitionClass cls)
{
    switch (cls) {
        case PartitionClass::all:
            return true;
        case PartitionClass::even_rows:
            return lambda.has_even_rows();
        case PartitionClass::even_columns:
            return lambda.has_even_columns();
    }
    return false;
}

bool in_rect_subset(const Partition &lambda, RectSubset tag, int m, int a)
{
    if (m < 1 || a < 1) {
        throw invalid_input("rectangle subsets need m >= 1 and a >= 1");
    }
    if (!lambda.contained_in(rectangle(m, a))) {
        return false;
    }
    const auto row = [&](int j) { return lambda[static_cast<std::size_t>(j - 1)]; };
    switch (tag) {
        case RectSubset::box:
            return true;
        case RectSubset::colpaired: {
            // a odd: m = l1 >= l2 = l3 >= ... ; a even: l1 = l2 >= l3 = l4 >= ...
            int j = 1;
            if (a % 2 == 1) {
                if (row(1) != m) {
                    return false;
                }
                j = 2;
            }
            for (; j + 1 <= a; j += 2) {
                if (row(j) != row(j + 1)) {
                    return false;
                }
            }
            return true;
        }
        case RectSubset::evenrow:
            for (int j = 1; j <= a; ++j) {
                if (m % 2 == 1 ? (row(j) < 1 || row(j) % 2 == 0) : (row(j) % 2 != 0)) {
                    return false;
                }
            }
            return true;
    }
    return false;
}

namespace
{

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int> &cur, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) {
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

void sort_canonical(std::vector<Partition> &v)
{
    std::sort(v.begin(), v.end());
}

} // namespace

std::vector<Partition> partitions_of_bounded(int n, int max_len, int max_part)
{
    std::vector<Partition> out;
    if (n < 0 || max_len < 0 || max_part < 0) {
        return out;
    }
    std::vector<int> cur;
    partitions_rec(n, max_part, max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int n)
{
    return partitions_of_bounded(n, n, n);
}

std::vector<Partition> partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto level = partitions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Partition> partitions_in_box(int m, int a)
{
    std::vector<Partition> out;
    for (int n = 0; n <= m * a; ++n) {
        auto level = partitions_of_bounded(n, a, m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Partition> enumerate_class(PartitionClass cls, int max_size)
{
    std::vector<Partition> out;
    for (auto &p : partitions_up_to(max_size)) {
        if (belongs_to(p, cls)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<Partition> enumerate_rect_subset(RectSubset tag, int m, int a)
{
    if (m < 1 || a < 1) {
        throw invalid_input("enumerate_rect_subset requires m >= 1 and a >= 1 (got m=" + std::to_string(m)
                            + ", a=" + std::to_string(a) + ")");
    }
    std::vector<Partition> out;
    switch (tag) {
        case RectSubset::box:
            return partitions_in_box(m, a);
        case RectSubset::colpaired: {
            // Build the chains from a partition of the paired rows.
            for (const auto &pairs : partitions_in_box(m, a / 2)) {
                std::vector<int> rows;
                if (a % 2 == 1) {
                    rows.push_back(m);
                }
                for (std::size_t i = 0; i < static_cast<std::size_t>(a / 2); ++i) {
                    rows.push_back(pairs[i]);
                    rows.push_back(pairs[i]);
                }
                out.emplace_back(std::move(rows));
            }
            break;
        }
        case RectSubset::evenrow: {
            // Rows are 2c (m even) or 2c+1 (m odd) for c inside ((m/2)^a).
            const int offset = m % 2;
            for (const auto &half : partitions_in_box(m / 2, a)) {
                std::vector<int> rows;
                for (std::size_t i = 0; i < static_cast<std::size_t>(a); ++i) {
                    rows.push_back(2 * half[i] + offset);
                }
                out.emplace_back(std::move(rows));
            }
            break;
        }
    }
    sort_canonical(out);
    return out;
}

std::string_view to_string(PartitionClass cls)
{
    switch (cls) {
        case PartitionClass::all:
            return "ALL";
        case PartitionClass::even_rows:
            return "EVEN_ROWS";
        case PartitionClass::even_columns:
            return "EVEN_COLUMNS";
    }
    return "?";
}

std::string_view to_string(RectSubset tag)
{
    switch (tag) {
        case RectSubset::box:
            return "S_BOX";
        case RectSubset::colpaired:
            return "S_COLPAIRED";
        case RectSubset::evenrow:
            return "S_EVENROW";
    }
    return "?";
}

} // namespace superchar
