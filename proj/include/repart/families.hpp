#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repart/partition.hpp"

namespace repart {

/// Every part value k occurs strictly fewer than r times.
bool is_r_regular(const Partition& p, Part r);

/// No part value is divisible by r.
bool is_r_class_regular(const Partition& p, Part r);

struct ExponentBlock {
    Part value = 0;
    Part count = 0;
    bool operator==(const ExponentBlock&) const = default;
};

/// Run-length encoding of the part sequence, largest value first.
std::vector<ExponentBlock> exponent_blocks(const Partition& p);

/// Repeating multiplicity pattern with period r: the residues s_1 < ... <
/// s_{t-1} in [1, r-1] cut one period into block sizes d_1 = s_1,
/// d_2 = s_2 - s_1, ..., d_t = r - s_{t-1}. An empty residue list is the
/// degenerate t = 1 pattern with the single block size r; it is accepted on
/// the regular side only (class-regular predicates need at least one
/// residue and reject it).
struct PeriodPattern {
    PeriodPattern(Part r, std::vector<Part> s);

    Part modulus() const noexcept { return modulus_; }
    const std::vector<Part>& residues() const noexcept { return residues_; }
    /// t: number of blocks per period.
    std::size_t blocks_per_period() const noexcept { return residues_.size() + 1; }
    /// d_1..d_t, summing to the modulus.
    std::vector<Part> block_sizes() const;

    bool operator==(const PeriodPattern&) const = default;

private:
    Part modulus_;
    std::vector<Part> residues_;
};

enum class Variant {
    Free,        // partition length unconstrained
    FullPeriod,  // length == 0 mod r; the ' families
    ZeroTail,    // length == 0 or s_{t-1} mod r; the '' families
};

std::string variant_name(Variant v);
Variant parse_variant(std::string_view text);

/// Multiplicities alternate j, r-j, j, r-j, ... in whole blocks.
bool is_rp_legacy(const Partition& p, Part r, Part j);

/// Every part is congruent to j modulo r.
bool is_cp_legacy(const Partition& p, Part r, Part j);

/// The multiplicity sequence of the exponent blocks is a whole-block prefix
/// of the periodic sequence d_1, d_2, ..., d_t, d_1, ...; variants add the
/// length congruence.
bool is_rp_pattern(const Partition& p, const PeriodPattern& pat, Variant v);

/// Class-regular-side counterpart of is_rp_pattern, characterized through
/// the quotient/remainder decomposition of the parts:
///   C1  every remainder is one of the residues s_1..s_{t-1};
///   C2  if Q(p_i) >= i then R(p_i) = s_{t-1} and for every a in [1, t-2]
///       some part has (Q, R) = (i-1, s_a);
///   C3  if Q(p_i) = i-1 and R(p_i) = s_j then for every a in [1, j-1]
///       some part has (Q, R) = (i-1, s_a).
/// FullPeriod further demands Q(p_i) != i-1 for all i; ZeroTail demands
/// Q(p_i) >= i-1 implies R(p_i) = s_{t-1}.
bool is_cp_pattern(const Partition& p, const PeriodPattern& pat, Variant v);

/// Class-regular partitions whose remainders are dominated along the
/// diagonal: for every i with p_i > r(i-1), every part p_k with k >= i and
/// quotient i-1 has remainder <= R(p_i).
bool is_bcp(const Partition& p, Part r);

/// Regular-side counterpart of is_bcp: for every i with ri <= length,
/// p_{ri} > p_{ri+1}, and when p_{ri} = p_{ri+1} + 1 the multiplicity of
/// p_{ri} is at most max(multiplicity of p_{r(i+1)}, r(i+1) - length).
/// Out-of-range parts read as 0 and the multiplicity of 0 is 0.
bool is_brp(const Partition& p, Part r);

/// Uniform address for one partition family.
struct FamilySelector {
    enum class Side { CP, RP };
    enum class Kind {
        Plain,    // r-(class-)regular, by r alone
        Legacy,   // alternating two-block families, by (r, j)
        Pattern,  // periodic families, by pattern and variant
        Bounded,  // bcp / brp families, by r
    };

    Side side = Side::CP;
    Kind kind = Kind::Plain;
    Part r = 2;
    Part j = 1;
    std::optional<PeriodPattern> pattern;
    Variant variant = Variant::Free;
    bool all = false;  // wildcard selector: every partition of n

    /// Grammar: "all" | "cp:r=3" | "rp:r=3" | "cp:r=3,j=1" |
    /// "rp:r=6,s=1+3,variant=free|full|zerotail" | "bcp:r=2" | "brp:r=2".
    static FamilySelector parse(std::string_view text);
    static FamilySelector wildcard();

    std::string to_text() const;
};

/// Membership of p in the selected family.
bool in_family(const Partition& p, const FamilySelector& f);

/// All members of the family at size n, descending lexicographic order.
std::vector<Partition> enumerate_family(Part n, const FamilySelector& f);

/// Count-only variant of enumerate_family.
std::uint64_t count_family(Part n, const FamilySelector& f);

/// Direct constructive generator for the regular-side pattern families:
/// emits the same set as enumerate_family on an RP Pattern selector,
/// without scanning all partitions of n.
std::vector<Partition> generate_rp_pattern(Part n, const PeriodPattern& pat, Variant v);

/// Counting oracle for partitions of n with all parts congruent to j mod r,
/// by coin-change DP over the part set {j, r+j, 2r+j, ...}. Independent of
/// the enumeration path.
std::uint64_t count_cp_legacy_dp(Part n, Part r, Part j);

}  // namespace repart
