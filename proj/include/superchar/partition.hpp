#ifndef SUPERCHAR_PARTITION_HPP
#define SUPERCHAR_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace superchar
{

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so every partition has exactly one
/// representation; `operator[]` returns 0 past the stored length.
///
/// Ordering is graded reverse-lexicographic: smaller size first, and within
/// a size the lexicographically larger sequence first. This is the order
/// used by every enumeration in the library.
class Partition
{
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Parses the wire syntax "3,2,1" (empty string is the empty partition).
    static Partition parse(std::string_view text);

    const std::vector<int> &parts() const noexcept
    {
        return parts_;
    }
    /// Zero-based row access; rows past the length are 0.
    int operator[](std::size_t i) const noexcept
    {
        return i < parts_.size() ? parts_[i] : 0;
    }
    std::size_t length() const noexcept
    {
        return parts_.size();
    }
    int size() const noexcept
    {
        return size_;
    }
    bool empty() const noexcept
    {
        return parts_.empty();
    }

    Partition conjugate() const;
    /// True iff every box of `*this` is a box of `outer`.
    bool contained_in(const Partition &outer) const noexcept;
    bool has_even_rows() const noexcept;
    bool has_even_columns() const;

    std::string to_string() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b) noexcept;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// True iff lambda_{M+1} <= N, i.e. the diagram fits in the [M,N]-hook.
bool in_hook(const Partition &lambda, int M, int N);

/// (m, m, ..., m) with a rows; the empty partition when m or a is 0.
Partition rectangle(int m, int a);

enum class PartitionClass { all, even_rows, even_columns };

bool belongs_to(const Partition &lambda, PartitionClass cls);

/// The three rectangle subsets: every partition inside (m^a), the
/// paired-row chains of the column-paired set, and the parity-constrained
/// rows of the even-row set.
enum class RectSubset { box, colpaired, evenrow };

/// Membership test against the defining inequality chain of each subset.
bool in_rect_subset(const Partition &lambda, RectSubset tag, int m, int a);

/// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);

/// All partitions with |lambda| <= max_size, graded reverse-lex order.
std::vector<Partition> partitions_up_to(int max_size);

/// All partitions of n with at most max_len rows and first row at most max_part.
std::vector<Partition> partitions_of_bounded(int n, int max_len, int max_part);

/// All lambda contained in (m^a), graded reverse-lex order.
std::vector<Partition> partitions_in_box(int m, int a);

std::vector<Partition> enumerate_class(PartitionClass cls, int max_size);

/// Throws invalid_input when m < 1 or a < 1.
std::vector<Partition> enumerate_rect_subset(RectSubset tag, int m, int a);

std::string_view to_string(PartitionClass cls);
std::string_view to_string(RectSubset tag);

} // namespace superchar

#endif
