#include "repart/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace repart {

bool is_r_regular(const Partition& p, Part r) {
    if (r < 1) throw std::invalid_argument("is_r_regular requires r >= 1");
    const auto& v = p.parts();
    Part run = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        run = (i > 0 && v[i] == v[i - 1]) ? run + 1 : 1;
        if (run >= r) return false;
    }
    return true;
}

bool is_r_class_regular(const Partition& p, Part r) {
    if (r < 1) throw std::invalid_argument("is_r_class_regular requires r >= 1");
    for (Part part : p.parts()) {
        if (part % r == 0) return false;
    }
    return true;
}

std::vector<ExponentBlock> exponent_blocks(const Partition& p) {
    std::vector<ExponentBlock> blocks;
    for (Part part : p.parts()) {
        if (blocks.empty() || blocks.back().value != part) {
            blocks.push_back({part, 1});
        } else {
            ++blocks.back().count;
        }
    }
    return blocks;
}

PeriodPattern::PeriodPattern(Part r, std::vector<Part> s) : modulus_(r), residues_(std::move(s)) {
    if (r < 2) throw std::invalid_argument("period pattern requires modulus r >= 2");
    for (std::size_t i = 0; i < residues_.size(); ++i) {
        if (residues_[i] < 1 || residues_[i] > r - 1) {
            throw std::invalid_argument("pattern residues must lie in [1, r-1]");
        }
        if (i > 0 && residues_[i - 1] >= residues_[i]) {
            throw std::invalid_argument("pattern residues must be strictly increasing");
        }
    }
}

std::vector<Part> PeriodPattern::block_sizes() const {
    std::vector<Part> d;
    d.reserve(blocks_per_period());
    Part prev = 0;
    for (Part s : residues_) {
        d.push_back(s - prev);
        prev = s;
    }
    d.push_back(modulus_ - prev);
    return d;
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Free: return "free";
        case Variant::FullPeriod: return "full";
        case Variant::ZeroTail: return "zerotail";
    }
    throw std::invalid_argument("unknown variant");
}

Variant parse_variant(std::string_view text) {
    if (text == "free") return Variant::Free;
    if (text == "full") return Variant::FullPeriod;
    if (text == "zerotail") return Variant::ZeroTail;
    throw std::invalid_argument("unknown variant '" + std::string(text) +
                                "' (expected free|full|zerotail)");
}

namespace {

void check_legacy_params(Part r, Part j) {
    if (r < 1) throw std::invalid_argument("legacy family requires r >= 1");
    if (j < 1 || j > r - 1) throw std::invalid_argument("legacy family requires 1 <= j <= r-1");
}

}  // namespace

bool is_rp_legacy(const Partition& p, Part r, Part j) {
    check_legacy_params(r, j);
    const auto blocks = exponent_blocks(p);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const Part want = (b % 2 == 0) ? j : r - j;
        if (blocks[b].count != want) return false;
    }
    return true;
}

bool is_cp_legacy(const Partition& p, Part r, Part j) {
    check_legacy_params(r, j);
    for (Part part : p.parts()) {
        if (part % r != j) return false;
    }
    return true;
}

bool is_rp_pattern(const Partition& p, const PeriodPattern& pat, Variant v) {
    const auto d = pat.block_sizes();
    const std::size_t t = d.size();
    const auto blocks = exponent_blocks(p);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].count != d[b % t]) return false;
    }
    switch (v) {
        case Variant::Free:
            return true;
        case Variant::FullPeriod:
            return static_cast<Part>(p.length()) % pat.modulus() == 0;
        case Variant::ZeroTail: {
            const Part rem = static_cast<Part>(p.length()) % pat.modulus();
            if (rem == 0) return true;
            return !pat.residues().empty() && rem == pat.residues().back();
        }
    }
    return false;
}

bool is_cp_pattern(const Partition& p, const PeriodPattern& pat, Variant v) {
    const auto& s = pat.residues();
    if (s.empty()) {
        throw std::invalid_argument("class-regular pattern families need at least one residue");
    }
    const Part r = pat.modulus();
    if (!is_r_class_regular(p, r)) return false;

    const std::size_t n = p.length();
    std::vector<QuotRem> qr(n);
    std::set<std::pair<Part, Part>> present;
    for (std::size_t i = 0; i < n; ++i) {
        qr[i] = quot_rem(p[i], r);
        present.emplace(qr[i].quotient, qr[i].remainder);
    }
    const Part top_residue = s.back();
    auto residue_index = [&](Part rem) -> std::optional<std::size_t> {
        auto it = std::lower_bound(s.begin(), s.end(), rem);
        if (it == s.end() || *it != rem) return std::nullopt;
        return static_cast<std::size_t>(it - s.begin());  // 0-based
    };

    for (std::size_t i0 = 0; i0 < n; ++i0) {
        const Part i = static_cast<Part>(i0) + 1;  // 1-based position
        const auto [q, rem] = qr[i0];
        const auto j = residue_index(rem);
        if (!j) return false;  // C1
        if (q >= i) {
            // C2
            if (rem != top_residue) return false;
            for (std::size_t a = 0; a + 1 < s.size(); ++a) {
                if (!present.count({i - 1, s[a]})) return false;
            }
        }
        if (q == i - 1) {
            // C3
            for (std::size_t a = 0; a < *j; ++a) {
                if (!present.count({i - 1, s[a]})) return false;
            }
        }
        if (v == Variant::FullPeriod && q == i - 1) return false;
        if (v == Variant::ZeroTail && q >= i - 1 && rem != top_residue) return false;
    }
    return true;
}

bool is_bcp(const Partition& p, Part r) {
    if (r < 2) throw std::invalid_argument("is_bcp requires r >= 2");
    if (!is_r_class_regular(p, r)) return false;
    const std::size_t n = p.length();
    std::vector<QuotRem> qr(n);
    for (std::size_t k = 0; k < n; ++k) qr[k] = quot_rem(p[k], r);
    for (std::size_t i0 = 0; i0 < n; ++i0) {
        const Part i = static_cast<Part>(i0) + 1;
        if (p[i0] <= r * (i - 1)) continue;
        // Parts above row i with quotient i-1 sit above the diagonal cell and
        // are already ordered by sortedness; the dominance condition binds the
        // parts from row i downward.
        for (std::size_t k = i0; k < n; ++k) {
            if (qr[k].quotient == i - 1 && qr[k].remainder > qr[i0].remainder) return false;
        }
    }
    return true;
}

bool is_brp(const Partition& p, Part r) {
    if (r < 2) throw std::invalid_argument("is_brp requires r >= 2");
    if (!is_r_regular(p, r)) return false;
    const Part len = static_cast<Part>(p.length());
    auto part_at = [&](Part pos) -> Part {  // 1-based, 0 past the end
        return (pos >= 1 && pos <= len) ? p[static_cast<std::size_t>(pos - 1)] : 0;
    };
    auto mult0 = [&](Part value) -> Part { return value == 0 ? 0 : multiplicity(p, value); };
    for (Part i = 1; r * i <= len; ++i) {
        const Part a = part_at(r * i);
        const Part b = part_at(r * i + 1);
        if (a <= b) return false;
        if (a == b + 1) {
            const Part c = part_at(r * (i + 1));
            if (mult0(a) > std::max(mult0(c), r * (i + 1) - len)) return false;
        }
    }
    return true;
}

FamilySelector FamilySelector::wildcard() {
    FamilySelector f;
    f.all = true;
    return f;
}

FamilySelector FamilySelector::parse(std::string_view text) {
    if (text == "all") return wildcard();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("family selector needs a side prefix, got '" +
                                    std::string(text) + "'");
    }
    const std::string_view head = text.substr(0, colon);
    FamilySelector f;
    if (head == "cp") {
        f.side = Side::CP;
    } else if (head == "rp") {
        f.side = Side::RP;
    } else if (head == "bcp") {
        f.side = Side::CP;
        f.kind = Kind::Bounded;
    } else if (head == "brp") {
        f.side = Side::RP;
        f.kind = Kind::Bounded;
    } else {
        throw std::invalid_argument("unknown family side '" + std::string(head) + "'");
    }

    std::optional<Part> r, j;
    std::optional<std::vector<Part>> s;
    std::optional<Variant> variant;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view field = rest.substr(0, comma);
        rest = (comma == std::string_view::npos) ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = field.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("malformed selector field '" + std::string(field) + "'");
        }
        const std::string_view key = field.substr(0, eq);
        const std::string value(field.substr(eq + 1));
        auto parse_int = [&](const std::string& v) -> Part {
            std::size_t used = 0;
            Part out = std::stoll(v, &used);
            if (used != v.size()) throw std::invalid_argument("bad integer '" + v + "'");
            return out;
        };
        if (key == "r") {
            r = parse_int(value);
        } else if (key == "j") {
            j = parse_int(value);
        } else if (key == "s") {
            std::vector<Part> seq;
            std::size_t pos = 0;
            while (pos <= value.size()) {
                const auto plus = value.find('+', pos);
                const std::string tok = value.substr(pos, plus == std::string::npos ? std::string::npos
                                                                                    : plus - pos);
                seq.push_back(parse_int(tok));
                if (plus == std::string::npos) break;
                pos = plus + 1;
            }
            s = std::move(seq);
        } else if (key == "variant") {
            variant = parse_variant(value);
        } else {
            throw std::invalid_argument("unknown selector field '" + std::string(key) + "'");
        }
    }

    if (!r) throw std::invalid_argument("family selector requires r");
    f.r = *r;
    if (f.kind == Kind::Bounded) {
        if (j || s || variant) {
            throw std::invalid_argument("bcp/brp selectors take only r");
        }
        if (f.r < 2) throw std::invalid_argument("bcp/brp require r >= 2");
        return f;
    }
    if (j && s) throw std::invalid_argument("selector cannot mix j and s");
    if (j) {
        check_legacy_params(f.r, *j);
        f.kind = Kind::Legacy;
        f.j = *j;
    } else if (s) {
        f.kind = Kind::Pattern;
        f.pattern = PeriodPattern(f.r, *s);
        f.variant = variant.value_or(Variant::Free);
    } else {
        if (variant) throw std::invalid_argument("variant is only valid with s");
        f.kind = Kind::Plain;
        if (f.r < 1) throw std::invalid_argument("plain families require r >= 1");
    }
    return f;
}

std::string FamilySelector::to_text() const {
    if (all) return "all";
    std::string out;
    if (kind == Kind::Bounded) {
        out = (side == Side::CP) ? "bcp" : "brp";
    } else {
        out = (side == Side::CP) ? "cp" : "rp";
    }
    out += ":r=" + std::to_string(r);
    switch (kind) {
        case Kind::Plain:
        case Kind::Bounded:
            break;
        case Kind::Legacy:
            out += ",j=" + std::to_string(j);
            break;
        case Kind::Pattern: {
            out += ",s=";
            const auto& s = pattern->residues();
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i > 0) out += '+';
                out += std::to_string(s[i]);
            }
            out += ",variant=" + variant_name(variant);
            break;
        }
    }
    return out;
}

bool in_family(const Partition& p, const FamilySelector& f) {
    if (f.all) return true;
    switch (f.kind) {
        case FamilySelector::Kind::Plain:
            return f.side == FamilySelector::Side::CP ? is_r_class_regular(p, f.r)
                                                      : is_r_regular(p, f.r);
        case FamilySelector::Kind::Legacy:
            return f.side == FamilySelector::Side::CP ? is_cp_legacy(p, f.r, f.j)
                                                      : is_rp_legacy(p, f.r, f.j);
        case FamilySelector::Kind::Pattern:
            return f.side == FamilySelector::Side::CP ? is_cp_pattern(p, *f.pattern, f.variant)
                                                      : is_rp_pattern(p, *f.pattern, f.variant);
        case FamilySelector::Kind::Bounded:
            return f.side == FamilySelector::Side::CP ? is_bcp(p, f.r) : is_brp(p, f.r);
    }
    return false;
}

std::vector<Partition> enumerate_family(Part n, const FamilySelector& f) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<Part>& parts) {
        Partition p = Partition::unchecked(parts);
        if (in_family(p, f)) out.push_back(std::move(p));
    });
    return out;
}

std::uint64_t count_family(Part n, const FamilySelector& f) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](const std::vector<Part>& parts) {
        if (in_family(Partition::unchecked(parts), f)) ++count;
    });
    return count;
}

namespace {

bool variant_allows_block_count(std::size_t blocks, std::size_t t, Variant v) {
    switch (v) {
        case Variant::Free: return true;
        case Variant::FullPeriod: return blocks % t == 0;
        case Variant::ZeroTail: return blocks % t == 0 || blocks % t == t - 1;
    }
    return false;
}

}  // namespace

std::vector<Partition> generate_rp_pattern(Part n, const PeriodPattern& pat, Variant v) {
    detail::check_enumeration_size(n);
    const auto d = pat.block_sizes();
    const std::size_t t = d.size();
    std::vector<Partition> out;
    std::vector<Part> parts;

    // DFS over strictly decreasing block values, largest value first, so the
    // emitted partitions come out in descending lexicographic order.
    auto rec = [&](auto&& self, std::size_t block, Part max_value, Part remaining) -> void {
        if (remaining == 0) {
            if (variant_allows_block_count(block, t, v)) {
                out.push_back(Partition::unchecked(parts));
            }
            return;
        }
        const Part dj = d[block % t];
        Part k = std::min<Part>(max_value, remaining / dj);
        for (; k >= 1; --k) {
            parts.insert(parts.end(), static_cast<std::size_t>(dj), k);
            self(self, block + 1, k - 1, remaining - dj * k);
            parts.resize(parts.size() - static_cast<std::size_t>(dj));
        }
    };
    rec(rec, 0, n, n);
    return out;
}

std::uint64_t count_cp_legacy_dp(Part n, Part r, Part j) {
    if (n < 0) throw std::invalid_argument("count_cp_legacy_dp requires n >= 0");
    check_legacy_params(r, j);
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (Part coin = j; coin <= n; coin += r) {
        for (Part m = coin; m <= n; ++m) {
            ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - coin)];
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

}  // namespace repart
