#include "repart/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "repart/bijection.hpp"

namespace repart {

namespace {

void check_n_max(Part n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    if (n_max > detail::kMaxEnumerationSize) {
        throw std::invalid_argument("n_max = " + std::to_string(n_max) + " exceeds the enumeration limit " +
                                    std::to_string(detail::kMaxEnumerationSize));
    }
}

std::vector<std::string> member_texts(const std::vector<Partition>& members) {
    std::vector<std::string> out;
    for (const auto& p : members) {
        if (out.size() == kWitnessCap) break;
        out.push_back(to_text(p));
    }
    return out;
}

std::string pattern_params(const PeriodPattern& pat, Variant v) {
    std::string out = "r=" + std::to_string(pat.modulus()) + ";s=";
    const auto& s = pat.residues();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(s[i]);
    }
    out += ";variant=" + variant_name(v);
    return out;
}

}  // namespace

bool VerificationReport::all_match() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CountRecord& rec) { return rec.match; });
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "theorem,params,n,m,left,right,match\n";
    for (const auto& report : reports) {
        for (const auto& rec : report.records) {
            out += report.theorem;
            out += ',';
            out += report.params;
            out += ',';
            out += std::to_string(rec.n);
            out += ',';
            if (rec.m) out += std::to_string(*rec.m);
            out += ',';
            out += std::to_string(rec.left);
            out += ',';
            out += std::to_string(rec.right);
            out += ',';
            out += rec.match ? "true" : "false";
            out += '\n';
        }
    }
    return out;
}

namespace {

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["theorem"] = report.theorem;
    j["params"] = report.params;
    j["all_match"] = report.all_match();
    auto& records = j["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : report.records) {
        nlohmann::ordered_json r;
        r["n"] = rec.n;
        if (rec.m) {
            r["m"] = *rec.m;
        } else {
            r["m"] = nullptr;
        }
        r["left"] = rec.left;
        r["right"] = rec.right;
        r["match"] = rec.match;
        records.push_back(std::move(r));
    }
    auto& witnesses = j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& wit : report.witnesses) {
        nlohmann::ordered_json w;
        w["n"] = wit.n;
        if (wit.m) {
            w["m"] = *wit.m;
        } else {
            w["m"] = nullptr;
        }
        w["left"] = wit.left;
        w["right"] = wit.right;
        w["note"] = wit.note;
        witnesses.push_back(std::move(w));
    }
    return j;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json doc;
    if (reports.size() == 1) {
        doc = report_to_json(reports.front());
    } else {
        doc = nlohmann::ordered_json::array();
        for (const auto& report : reports) doc.push_back(report_to_json(report));
    }
    return doc.dump(2) + "\n";
}

int reports_exit_code(const std::vector<VerificationReport>& reports) {
    for (const auto& report : reports) {
        if (!report.all_match()) return 1;
    }
    return 0;
}

VerificationReport verify_counts_equal(std::string theorem, std::string params, Part n_max,
                                       const std::function<std::uint64_t(Part)>& left,
                                       const std::function<std::uint64_t(Part)>& right) {
    check_n_max(n_max);
    VerificationReport report{std::move(theorem), std::move(params), {}, {}};
    for (Part n = 0; n <= n_max; ++n) {
        const std::uint64_t l = left(n);
        const std::uint64_t r = right(n);
        report.records.push_back({n, std::nullopt, l, r, l == r});
        if (l != r) {
            report.witnesses.push_back({n, std::nullopt, {}, {}, "count mismatch"});
        }
    }
    return report;
}

namespace {

// Shared engine for the two refined identities: unrefined cardinalities plus
// the distinct-value / consecutive-run histograms, side by side.
VerificationReport refined_statistic_report(std::string theorem, std::string params,
                                            const FamilySelector& cp, const FamilySelector& rp,
                                            Part n_max, bool with_dp, Part r, Part j) {
    check_n_max(n_max);
    VerificationReport report{std::move(theorem), std::move(params), {}, {}};
    for (Part n = 0; n <= n_max; ++n) {
        std::size_t witnesses_this_n = 0;
        const auto left_members = enumerate_family(n, cp);
        const auto right_members = enumerate_family(n, rp);
        bool unrefined_match = left_members.size() == right_members.size();
        std::string note;
        if (with_dp) {
            const std::uint64_t dp = count_cp_legacy_dp(n, r, j);
            if (dp != left_members.size()) {
                unrefined_match = false;
                note = "coin-change DP count " + std::to_string(dp) +
                       " disagrees with enumeration " + std::to_string(left_members.size());
            }
        }
        report.records.push_back({n, std::nullopt, left_members.size(), right_members.size(),
                                  unrefined_match});
        if (!unrefined_match) {
            report.witnesses.push_back(
                {n, std::nullopt, member_texts(left_members), member_texts(right_members), note});
            ++witnesses_this_n;
        }

        std::map<Part, std::uint64_t> left_hist, right_hist;
        for (const auto& p : left_members) ++left_hist[distinct_part_count(p)];
        for (const auto& p : right_members) ++right_hist[consecutive_run_count(p)];
        std::vector<Part> keys;
        for (const auto& [m, count] : left_hist) keys.push_back(m);
        for (const auto& [m, count] : right_hist) {
            if (!left_hist.count(m)) keys.push_back(m);
        }
        std::sort(keys.begin(), keys.end());
        for (Part m : keys) {
            const std::uint64_t l = left_hist.count(m) ? left_hist.at(m) : 0;
            const std::uint64_t rr = right_hist.count(m) ? right_hist.at(m) : 0;
            report.records.push_back({n, m, l, rr, l == rr});
            if (l != rr && witnesses_this_n < kWitnessCap) {
                std::vector<Partition> lw, rw;
                for (const auto& p : left_members) {
                    if (distinct_part_count(p) == m) lw.push_back(p);
                }
                for (const auto& p : right_members) {
                    if (consecutive_run_count(p) == m) rw.push_back(p);
                }
                report.witnesses.push_back(
                    {n, m, member_texts(lw), member_texts(rw), "refined count mismatch"});
                ++witnesses_this_n;
            }
        }
    }
    return report;
}

}  // namespace

VerificationReport verify_theorem1(Part n_max) {
    FamilySelector cp = FamilySelector::parse("cp:r=2");
    FamilySelector rp = FamilySelector::parse("rp:r=2");
    return refined_statistic_report("1", "r=2", cp, rp, n_max, /*with_dp=*/false, 2, 1);
}

VerificationReport verify_theorem2(Part r, Part j, Part n_max) {
    FamilySelector cp = FamilySelector::parse("cp:r=" + std::to_string(r) + ",j=" + std::to_string(j));
    FamilySelector rp = FamilySelector::parse("rp:r=" + std::to_string(r) + ",j=" + std::to_string(j));
    return refined_statistic_report("2", "r=" + std::to_string(r) + ";j=" + std::to_string(j), cp, rp,
                                    n_max, /*with_dp=*/true, r, j);
}

VerificationReport verify_theorem3(const PeriodPattern& pat, Variant v, Part n_max) {
    check_n_max(n_max);
    VerificationReport report{"3", pattern_params(pat, v), {}, {}};
    for (Part n = 0; n <= n_max; ++n) {
        std::vector<Partition> left, right;
        for_each_partition(n, [&](const std::vector<Part>& parts) {
            Partition p = Partition::unchecked(parts);
            if (is_cp_pattern(p, pat, v)) left.push_back(p);
            if (is_rp_pattern(p, pat, v)) right.push_back(std::move(p));
        });
        const auto generated = generate_rp_pattern(n, pat, v);
        bool match = left.size() == right.size();
        std::string note;
        if (generated != right) {
            match = false;
            note = "direct generator yielded " + std::to_string(generated.size()) +
                   " members, filter enumeration " + std::to_string(right.size());
        }
        report.records.push_back({n, std::nullopt, left.size(), right.size(), match});
        if (!match) {
            report.witnesses.push_back({n, std::nullopt, member_texts(left), member_texts(right), note});
        }
    }
    return report;
}

VerificationReport verify_theorem4(Part r, Part n_max) {
    check_n_max(n_max);
    VerificationReport report{"4", "r=" + std::to_string(r), {}, {}};
    const FamilySelector bcp = FamilySelector::parse("bcp:r=" + std::to_string(r));
    const FamilySelector brp = FamilySelector::parse("brp:r=" + std::to_string(r));
    for (Part n = 0; n <= n_max; ++n) {
        const auto left = enumerate_family(n, bcp);
        const auto right = enumerate_family(n, brp);
        bool match = left.size() == right.size();
        std::string note;
        std::vector<Partition> failing;
        std::map<std::vector<Part>, int> image_count;
        for (const auto& p : left) {
            const ForwardTrace trace = forward_trace(p, r);
            const bool ok = trace.weakly_decreasing &&
                            is_brp(Partition::unchecked(trace.stripped), r);
            if (!ok) {
                failing.push_back(p);
                continue;
            }
            if (++image_count[trace.stripped] > 1) failing.push_back(p);
        }
        if (!failing.empty()) {
            match = false;
            note = "hook map does not carry the class-regular side injectively into the regular side";
        }
        report.records.push_back({n, std::nullopt, left.size(), right.size(), match});
        if (!match) {
            report.witnesses.push_back({n, std::nullopt,
                                        failing.empty() ? member_texts(left) : member_texts(failing),
                                        member_texts(right), note});
        }
    }
    return report;
}

VerificationReport verify_bijection(const PeriodPattern& pat, Variant v, Part n_max) {
    check_n_max(n_max);
    VerificationReport report{"bijection", pattern_params(pat, v), {}, {}};
    for (Part n = 0; n <= n_max; ++n) {
        std::vector<Partition> members;
        for_each_partition(n, [&](const std::vector<Part>& parts) {
            Partition p = Partition::unchecked(parts);
            if (is_cp_pattern(p, pat, v)) members.push_back(std::move(p));
        });

        // One forward pass over the whole family; the image map doubles as
        // the unique-preimage oracle.
        std::map<std::vector<Part>, std::vector<std::size_t>> preimages;
        std::vector<ForwardTrace> traces;
        traces.reserve(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            traces.push_back(forward_trace(members[i], pat.modulus()));
            preimages[traces.back().stripped].push_back(i);
        }

        std::uint64_t passing = 0;
        std::vector<std::string> failures;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const auto& trace = traces[i];
            std::string why;
            if (!trace.weakly_decreasing) {
                why = "forward image is not a partition";
            } else {
                const Partition image = Partition::unchecked(trace.stripped);
                if (!is_rp_pattern(image, pat, v)) {
                    why = "forward image " + to_text(image) + " is outside the regular-side family";
                } else if (preimages.at(trace.stripped).size() > 1) {
                    why = "forward image " + to_text(image) + " has multiple preimages";
                } else {
                    try {
                        if (inverse_map(image, pat.modulus()) != members[i]) {
                            why = "round trip through " + to_text(image) + " did not return the input";
                        }
                    } catch (const std::domain_error& e) {
                        why = std::string("inverse failed: ") + e.what();
                    }
                }
            }
            if (why.empty()) {
                ++passing;
            } else if (failures.size() < kWitnessCap) {
                failures.push_back(to_text(members[i]) + ": " + why);
            }
        }
        const bool match = passing == members.size();
        report.records.push_back({n, std::nullopt, members.size(), passing, match});
        if (!match) {
            report.witnesses.push_back({n, std::nullopt, failures, {},
                                        "bijection checks failed for " +
                                            std::to_string(members.size() - passing) + " member(s)"});
        }
    }
    return report;
}

std::vector<std::vector<Part>> pattern_residue_sweep(Part r) {
    if (r < 2) throw std::invalid_argument("pattern sweep requires r >= 2");
    std::vector<std::vector<Part>> out;
    std::vector<Part> cur;
    auto rec = [&](auto&& self, Part next) -> void {
        for (Part v = next; v <= r - 1; ++v) {
            cur.push_back(v);
            out.push_back(cur);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<VerificationReport> run_campaign(const CampaignOptions& options) {
    check_n_max(options.n_max);
    if (options.r_max < 2) throw std::invalid_argument("campaign requires r_max >= 2");
    constexpr Variant kVariants[] = {Variant::Free, Variant::FullPeriod, Variant::ZeroTail};
    std::vector<VerificationReport> reports;
    reports.push_back(verify_theorem1(options.n_max));
    for (Part r = 2; r <= options.r_max; ++r) {
        for (Part j = 1; j <= r - 1; ++j) {
            reports.push_back(verify_theorem2(r, j, options.n_max));
        }
    }
    for (Part r = 2; r <= options.r_max; ++r) {
        for (const auto& s : pattern_residue_sweep(r)) {
            const PeriodPattern pat(r, s);
            for (Variant v : kVariants) {
                reports.push_back(verify_theorem3(pat, v, options.n_max));
            }
        }
    }
    for (Part r = 2; r <= options.r_max; ++r) {
        reports.push_back(verify_theorem4(r, options.n_max));
    }
    for (Part r = 2; r <= options.r_max; ++r) {
        for (const auto& s : pattern_residue_sweep(r)) {
            const PeriodPattern pat(r, s);
            for (Variant v : kVariants) {
                reports.push_back(verify_bijection(pat, v, options.n_max));
            }
        }
    }
    return reports;
}

}  // namespace repart
