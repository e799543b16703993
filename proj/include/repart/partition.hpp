#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace repart {

using Part = std::int64_t;

/// A partition: weakly decreasing sequence of positive parts. The empty
/// sequence is the unique partition of 0. Immutable value type; all
/// statistics below are pure functions of the part sequence.
class Partition {
public:
    Partition() = default;

    /// Validating constructor. Throws std::invalid_argument on nonpositive
    /// parts or input that is not weakly decreasing.
    explicit Partition(std::vector<Part> parts);

    /// Trusted construction from data already known to be valid.
    static Partition unchecked(std::vector<Part> parts);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    Part sum() const noexcept { return sum_; }
    bool empty() const noexcept { return parts_.empty(); }
    Part operator[](std::size_t i) const noexcept { return parts_[i]; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Part> parts_;
    Part sum_ = 0;
};

/// Number of parts equal to k. Requires k >= 1; absent values count 0.
Part multiplicity(const Partition& p, Part k);

/// Number of distinct part values.
Part distinct_part_count(const Partition& p);

/// Number of maximal runs of consecutive integers among the parts: one more
/// than the number of descents by 2 or greater. 0 for the empty partition.
Part consecutive_run_count(const Partition& p);

/// Transpose of the Young diagram: part j of the result counts the parts of
/// p that are >= j. Involution.
Partition conjugate(const Partition& p);

struct QuotRem {
    Part quotient = 0;
    Part remainder = 0;
    bool operator==(const QuotRem&) const = default;
};

/// part = r * quotient + remainder with 0 <= remainder < r.
/// Requires part >= 1, r >= 1.
QuotRem quot_rem(Part part, Part r);

/// p(n), counted by dynamic programming over the maximal part.
std::uint64_t partition_count(Part n);

namespace detail {
// Exhaustive enumeration is refused past this size.
inline constexpr Part kMaxEnumerationSize = 60;
void check_enumeration_size(Part n);
}  // namespace detail

/// Visit every partition of n exactly once, in descending lexicographic
/// order of part sequences. The callback receives the working buffer, valid
/// only for the duration of the call.
template <typename F>
void for_each_partition(Part n, F&& visit) {
    detail::check_enumeration_size(n);
    std::vector<Part> buf;
    if (n == 0) {
        visit(static_cast<const std::vector<Part>&>(buf));
        return;
    }
    buf.reserve(static_cast<std::size_t>(n));
    buf.push_back(n);
    for (;;) {
        visit(static_cast<const std::vector<Part>&>(buf));
        // Locate the last part > 1; everything after it is a run of 1s.
        std::size_t i = buf.size();
        while (i > 0 && buf[i - 1] == 1) --i;
        if (i == 0) break;
        const Part ones = static_cast<Part>(buf.size() - i);
        const Part x = buf[i - 1] - 1;
        Part m = buf[i - 1] + ones;
        buf.resize(i - 1);
        while (m >= x) {
            buf.push_back(x);
            m -= x;
        }
        if (m > 0) buf.push_back(m);
    }
}

/// Materialized form of for_each_partition; count equals partition_count(n).
std::vector<Partition> enumerate_partitions(Part n);

/// Canonical text form: comma-separated parts, e.g. "15,9,7,3,1"; the empty
/// string denotes the empty partition.
std::string to_text(const Partition& p);

/// Inverse of to_text. Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace repart
