#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "repart/families.hpp"
#include "repart/partition.hpp"

namespace repart {

struct CountRecord {
    Part n = 0;
    std::optional<Part> m;  // refinement statistic value; empty for unrefined rows
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    bool match = false;
};

struct FailureWitness {
    Part n = 0;
    std::optional<Part> m;
    std::vector<std::string> left;   // canonical member texts, capped
    std::vector<std::string> right;
    std::string note;
};

/// Per-n counting comparison for one theorem and parameter tuple, with
/// refinement rows and explicit witnesses on mismatch.
struct VerificationReport {
    std::string theorem;
    std::string params;
    std::vector<CountRecord> records;
    std::vector<FailureWitness> witnesses;

    bool all_match() const;
};

inline constexpr std::size_t kWitnessCap = 10;

/// CSV with header "theorem,params,n,m,left,right,match"; m empty on
/// unrefined rows. params uses ';' separators so rows stay unquoted.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

/// JSON mirror of the reports: one object for a single report, an array
/// otherwise. Key order is fixed, output is byte-stable.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// 0 when every match flag in every report is true, 1 otherwise.
int reports_exit_code(const std::vector<VerificationReport>& reports);

/// Generic left-vs-right count comparison over n in [0, n_max]. The
/// verifiers below are built on this; tests use it to inject corrupted
/// counters and watch the mismatch surface.
VerificationReport verify_counts_equal(std::string theorem, std::string params, Part n_max,
                                       const std::function<std::uint64_t(Part)>& left,
                                       const std::function<std::uint64_t(Part)>& right);

/// Odd-vs-strict refinement: distinct-value counts on the class-regular side
/// against consecutive-run counts on the regular side, r = 2.
VerificationReport verify_theorem1(Part n_max);

/// Alternating two-block families, refined by the same pair of statistics;
/// the class-regular counts are cross-checked against the coin-change DP.
VerificationReport verify_theorem2(Part r, Part j, Part n_max);

/// Periodic-pattern family cardinalities, one variant at a time; the
/// regular side is computed both by filtering and by the direct generator.
VerificationReport verify_theorem3(const PeriodPattern& pat, Variant v, Part n_max);

/// Bounded families: cardinalities plus injective transport of the
/// class-regular side into the regular side under the hook map.
VerificationReport verify_theorem4(Part r, Part n_max);

/// Map-level checks on one pattern family: round trip, image membership,
/// injectivity, fold uniqueness, and unique-preimage agreement.
VerificationReport verify_bijection(const PeriodPattern& pat, Variant v, Part n_max);

/// Every nonempty strictly increasing residue sequence in [1, r-1],
/// lexicographic order.
std::vector<std::vector<Part>> pattern_residue_sweep(Part r);

struct CampaignOptions {
    Part r_max = 5;
    Part n_max = 22;
};

/// The default sweep: theorem 1, theorems 2-4 for every r <= r_max (all j,
/// all residue sequences, all variants), and the bijection suite for every
/// pattern. Deterministic report order.
std::vector<VerificationReport> run_campaign(const CampaignOptions& options = {});

}  // namespace repart
