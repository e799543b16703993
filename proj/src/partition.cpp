#include "repart/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace repart {

Partition::Partition(std::vector<Part> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive, got " +
                                        std::to_string(parts[i]));
        }
        if (i > 0 && parts[i - 1] < parts[i]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    parts_ = std::move(parts);
    sum_ = std::accumulate(parts_.begin(), parts_.end(), Part{0});
}

Partition Partition::unchecked(std::vector<Part> parts) {
    Partition p;
    p.sum_ = std::accumulate(parts.begin(), parts.end(), Part{0});
    p.parts_ = std::move(parts);
    return p;
}

Part multiplicity(const Partition& p, Part k) {
    if (k < 1) throw std::invalid_argument("multiplicity requires k >= 1");
    const auto& v = p.parts();
    // parts are sorted descending
    auto lo = std::lower_bound(v.begin(), v.end(), k, std::greater<Part>{});
    auto hi = std::upper_bound(v.begin(), v.end(), k, std::greater<Part>{});
    return static_cast<Part>(hi - lo);
}

Part distinct_part_count(const Partition& p) {
    const auto& v = p.parts();
    Part kinds = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == 0 || v[i] != v[i - 1]) ++kinds;
    }
    return kinds;
}

Part consecutive_run_count(const Partition& p) {
    const auto& v = p.parts();
    if (v.empty()) return 0;
    Part runs = 1;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] > v[i + 1] + 1) ++runs;
    }
    return runs;
}

Partition conjugate(const Partition& p) {
    const auto& v = p.parts();
    if (v.empty()) return {};
    std::vector<Part> out(static_cast<std::size_t>(v[0]), 0);
    for (Part part : v) {
        for (Part j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    }
    return Partition::unchecked(std::move(out));
}

QuotRem quot_rem(Part part, Part r) {
    if (part < 1) throw std::invalid_argument("quot_rem requires part >= 1");
    if (r < 1) throw std::invalid_argument("quot_rem requires r >= 1");
    return {part / r, part % r};
}

std::uint64_t partition_count(Part n) {
    if (n < 0) throw std::invalid_argument("partition_count requires n >= 0");
    if (n > 400) throw std::invalid_argument("partition_count(n) limited to n <= 400 (64-bit counts)");
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (Part k = 1; k <= n; ++k) {
        for (Part m = k; m <= n; ++m) {
            ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - k)];
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

namespace detail {
void check_enumeration_size(Part n) {
    if (n < 0) throw std::invalid_argument("enumeration requires n >= 0");
    if (n > kMaxEnumerationSize) {
        throw std::invalid_argument("refusing to enumerate partitions of n = " + std::to_string(n) +
                                    " (limit " + std::to_string(kMaxEnumerationSize) + ")");
    }
}
}  // namespace detail

std::vector<Partition> enumerate_partitions(Part n) {
    std::vector<Partition> out;
    out.reserve(partition_count(std::min<Part>(n, detail::kMaxEnumerationSize)));
    for_each_partition(n, [&](const std::vector<Part>& parts) {
        out.push_back(Partition::unchecked(parts));
    });
    return out;
}

std::string to_text(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<Part> parts;
    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_spaces();
    if (pos == text.size()) return {};
    while (true) {
        skip_spaces();
        Part value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + pos) {
            throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        parts.push_back(value);
        skip_spaces();
        if (pos == text.size()) break;
        if (text[pos] != ',') {
            throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
        }
        ++pos;
    }
    return Partition(std::move(parts));
}

}  // namespace repart
