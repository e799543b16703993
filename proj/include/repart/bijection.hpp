#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repart/families.hpp"
#include "repart/partition.hpp"

namespace repart {

/// Rows of positive entries. Built from a partition, row k holds Q_r(p_k)
/// copies of r followed by the remainder R_r(p_k) when nonzero, which makes
/// the shape a Young diagram with entries weakly decreasing along rows and
/// columns. Intermediate tableaux produced by hook stripping keep only the
/// positivity and nonempty-row invariants; their shape may be ragged.
class Tableau {
public:
    Tableau() = default;
    /// Validates that rows are nonempty and entries positive.
    explicit Tableau(std::vector<std::vector<Part>> rows);

    const std::vector<std::vector<Part>>& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }
    Part cell_sum() const;

    /// One row per line, entries space-separated; "" for the empty tableau.
    std::string render() const;

    bool operator==(const Tableau&) const = default;

private:
    std::vector<std::vector<Part>> rows_;
};

/// Quotient/remainder tableau of a partition. The empty partition gives the
/// empty tableau.
Tableau build_tableau(const Partition& p, Part r);

struct HookStrip {
    Part part = 0;  // (length of row 1) + (number of rows) - 1
    Tableau rest;
};

/// Remove one diagonal hook: decrement every cell of row 1 and the first
/// cell of every other row, drop zero cells (re-packing rows left) and empty
/// rows. The recorded part is the hook cell count, taken before removal.
HookStrip strip_hook(const Tableau& t);

/// Strip hooks until the tableau is empty; total function, the returned
/// sizes always sum to p.sum() but need not be weakly decreasing for
/// partitions outside the theorem families.
std::vector<Part> hook_strip_sizes(const Partition& p, Part r);

struct ForwardStep {
    Part part = 0;
    Tableau after;
};

struct ForwardTrace {
    Tableau initial;
    std::vector<ForwardStep> steps;
    std::vector<Part> stripped;
    bool weakly_decreasing = true;
};

ForwardTrace forward_trace(const Partition& p, Part r);

/// Iterated diagonal-hook stripping of the quotient/remainder tableau.
/// Throws std::domain_error when the stripped sizes are not weakly
/// decreasing (input outside the theorem's domain), with the offending
/// sequence in the message.
Partition forward_map(const Partition& p, Part r);

/// Consecutive position-blocks of r parts each; the last group may be
/// shorter. Concatenation restores the input.
std::vector<Partition> split_groups(const Partition& p, Part r);

/// Hook sequence of one group: ascending except for the final element,
/// which is the largest non-r value of the group's conjugate.
struct HookSequence {
    std::vector<Part> values;
    bool operator==(const HookSequence&) const = default;
};

/// Conjugate the group, pull one copy of its largest non-r value to the far
/// right, arrange the rest ascending. Throws std::domain_error when the
/// conjugate consists of r entries only (input outside the theorem domain).
HookSequence group_sequence(const Partition& group, Part r);

/// All tableaux reachable by choosing one fold point per sequence such that
/// the assembled tableau is valid: rows contiguous, row g occupied from
/// column g rightward by the tail of sequence g (its final element last),
/// column g below row g by the reversed head, every row zero or more r
/// entries followed by exactly one non-r entry, row lengths weakly
/// decreasing, columns weakly decreasing.
std::vector<Tableau> enumerate_valid_folds(const std::vector<HookSequence>& seqs, Part r);

/// The unique valid fold. Throws std::domain_error when no fold validates
/// ("not in the image") or when several do (uniqueness violation); both are
/// surfaced, never masked.
Tableau fold_into_tableau(const std::vector<HookSequence>& seqs, Part r);

struct InverseTrace {
    std::vector<Partition> groups;
    std::vector<Partition> conjugates;
    std::vector<HookSequence> sequences;
    Tableau folded;
    Partition result;
};

InverseTrace inverse_trace(const Partition& p, Part r);

/// Split into groups of r parts, conjugate each, fold the hook sequences
/// back into a tableau and read each row as r*(count of r entries) + final
/// entry. Inverse of forward_map on the pattern families.
Partition inverse_map(const Partition& p, Part r);

/// Oracle: scan every member of the family at size |p| and return the one
/// whose forward image is p, if any. Throws std::domain_error when several
/// members map to p (injectivity violation).
std::optional<Partition> brute_force_inverse(const Partition& p, Part r,
                                             const FamilySelector& family);

}  // namespace repart
