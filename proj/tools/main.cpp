#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "repart/bijection.hpp"
#include "repart/families.hpp"
#include "repart/partition.hpp"
#include "repart/verify.hpp"

namespace {

using namespace repart;

std::vector<Part> parse_plus_list(const std::string& text) {
    std::vector<Part> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto plus = text.find('+', pos);
        const std::string tok =
            text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        std::size_t used = 0;
        out.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad residue list '" + text + "'");
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return out;
}

void emit_report(const std::vector<VerificationReport>& reports, const std::string& format,
                 const std::string& out_path) {
    const std::string payload =
        (format == "json") ? reports_to_json(reports) : reports_to_csv(reports);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        out << payload;
    }
}

void print_tableau(const Tableau& t) {
    if (t.empty()) {
        std::cout << "(empty)\n";
    } else {
        std::cout << t.render() << '\n';
    }
}

int run_map(const std::string& direction, Part r, const std::string& partition_text, bool trace) {
    const Partition input = parse_partition(partition_text);
    if (direction == "forward") {
        const ForwardTrace result = forward_trace(input, r);
        if (trace) {
            print_tableau(result.initial);
            for (const auto& step : result.steps) {
                std::cout << "-- strip " << step.part << " -->\n";
                print_tableau(step.after);
            }
        }
        if (!result.weakly_decreasing) {
            // surface the diagnostic through the same path as forward_map
            forward_map(input, r);
        }
        std::cout << to_text(Partition::unchecked(result.stripped)) << '\n';
        return 0;
    }
    if (direction == "inverse") {
        if (input.empty()) {
            std::cout << '\n';
            return 0;
        }
        const InverseTrace result = inverse_trace(input, r);
        if (trace) {
            for (std::size_t i = 0; i < result.groups.size(); ++i) {
                std::cout << "group " << (i + 1) << ": " << to_text(result.groups[i]) << '\n';
                std::cout << "conjugate: " << to_text(result.conjugates[i]) << '\n';
                std::cout << "sequence:";
                for (Part v : result.sequences[i].values) std::cout << ' ' << v;
                std::cout << '\n';
            }
            std::cout << "folded tableau:\n";
            print_tableau(result.folded);
        }
        std::cout << to_text(result.result) << '\n';
        return 0;
    }
    throw std::invalid_argument("direction must be forward or inverse");
}

int run_verify(const std::string& theorem, std::optional<Part> r, std::optional<Part> j,
               const std::optional<std::string>& s_text, const std::optional<std::string>& variant_text,
               Part n_max, const std::string& format, const std::string& out_path) {
    constexpr Part kSweepRMax = 5;
    constexpr Variant kVariants[] = {Variant::Free, Variant::FullPeriod, Variant::ZeroTail};
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("format must be csv or json");
    }
    std::vector<VerificationReport> reports;

    auto r_values = [&]() -> std::vector<Part> {
        if (r) return {*r};
        std::vector<Part> out;
        for (Part rv = 2; rv <= kSweepRMax; ++rv) out.push_back(rv);
        return out;
    };
    auto variants = [&]() -> std::vector<Variant> {
        if (variant_text) return {parse_variant(*variant_text)};
        return {kVariants[0], kVariants[1], kVariants[2]};
    };
    auto check_unused = [&](bool uses_r, bool uses_j, bool uses_s, bool uses_variant) {
        if (!uses_r && r) throw std::invalid_argument("--r does not apply to theorem " + theorem);
        if (!uses_j && j) throw std::invalid_argument("--j does not apply to theorem " + theorem);
        if (!uses_s && s_text) throw std::invalid_argument("--s does not apply to theorem " + theorem);
        if (!uses_variant && variant_text) {
            throw std::invalid_argument("--variant does not apply to theorem " + theorem);
        }
        if (uses_s && s_text && !r) throw std::invalid_argument("--s requires --r");
        if (uses_j && j && !r) throw std::invalid_argument("--j requires --r");
    };

    if (theorem == "1") {
        check_unused(false, false, false, false);
        reports.push_back(verify_theorem1(n_max));
    } else if (theorem == "2") {
        check_unused(true, true, false, false);
        for (Part rv : r_values()) {
            if (j) {
                reports.push_back(verify_theorem2(rv, *j, n_max));
            } else {
                for (Part jv = 1; jv <= rv - 1; ++jv) {
                    reports.push_back(verify_theorem2(rv, jv, n_max));
                }
            }
        }
    } else if (theorem == "3" || theorem == "bijection") {
        check_unused(true, false, true, true);
        for (Part rv : r_values()) {
            const auto sweeps =
                s_text ? std::vector<std::vector<Part>>{parse_plus_list(*s_text)}
                       : pattern_residue_sweep(rv);
            for (const auto& s : sweeps) {
                const PeriodPattern pat(rv, s);
                for (Variant v : variants()) {
                    reports.push_back(theorem == "3" ? verify_theorem3(pat, v, n_max)
                                                     : verify_bijection(pat, v, n_max));
                }
            }
        }
    } else if (theorem == "4") {
        check_unused(true, false, false, false);
        for (Part rv : r_values()) reports.push_back(verify_theorem4(rv, n_max));
    } else if (theorem == "all") {
        check_unused(false, false, false, false);
        reports = run_campaign({kSweepRMax, n_max});
    } else {
        throw std::invalid_argument("--theorem must be one of 1|2|3|4|bijection|all");
    }

    emit_report(reports, format, out_path);
    return reports_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition families, statistics and the diagonal-hook correspondence"};
    app.require_subcommand(1);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List family members at one size");
    Part en_n = 0;
    std::string en_family = "all";
    enumerate_cmd->add_option("--n", en_n, "size")->required();
    enumerate_cmd->add_option("--family", en_family, "family selector (default: all)");

    auto* count_cmd = app.add_subcommand("count", "Count family members over a size range");
    std::string c_family;
    Part c_from = 0, c_to = 0;
    count_cmd->add_option("--family", c_family, "family selector")->required();
    count_cmd->add_option("--n-from", c_from, "first size")->required();
    count_cmd->add_option("--n-to", c_to, "last size")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively verify one of the identities");
    std::string v_theorem;
    std::optional<Part> v_r, v_j;
    std::optional<std::string> v_s, v_variant;
    Part v_nmax = 22;
    std::string v_format = "csv", v_out;
    verify_cmd->add_option("--theorem", v_theorem, "1|2|3|4|bijection|all")->required();
    verify_cmd->add_option("--r", v_r, "modulus (omit to sweep 2..5)");
    verify_cmd->add_option("--j", v_j, "legacy residue (omit to sweep 1..r-1)");
    verify_cmd->add_option("--s", v_s, "pattern residues a+b+.. (omit to sweep)");
    verify_cmd->add_option("--variant", v_variant, "free|full|zerotail (omit to sweep)");
    verify_cmd->add_option("--n-max", v_nmax, "verify sizes 0..n-max (default 22)");
    verify_cmd->add_option("--format", v_format, "csv|json (default csv)");
    verify_cmd->add_option("--out", v_out, "write the report here instead of stdout");

    auto* map_cmd = app.add_subcommand("map", "Apply the hook map to one partition");
    std::string m_direction, m_partition;
    Part m_r = 2;
    bool m_trace = false;
    map_cmd->add_option("--direction", m_direction, "forward|inverse")->required();
    map_cmd->add_option("--r", m_r, "modulus")->required();
    map_cmd->add_option("--partition", m_partition, "comma-separated parts")->required();
    map_cmd->add_flag("--trace", m_trace, "print every intermediate step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate_cmd->parsed()) {
            const auto members = enumerate_family(en_n, FamilySelector::parse(en_family));
            for (const auto& p : members) std::cout << to_text(p) << '\n';
            return 0;
        }
        if (count_cmd->parsed()) {
            if (c_from > c_to) throw std::invalid_argument("--n-from must not exceed --n-to");
            const auto selector = FamilySelector::parse(c_family);
            std::cout << "n,count\n";
            for (Part n = c_from; n <= c_to; ++n) {
                std::cout << n << ',' << count_family(n, selector) << '\n';
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            return run_verify(v_theorem, v_r, v_j, v_s, v_variant, v_nmax, v_format, v_out);
        }
        if (map_cmd->parsed()) {
            return run_map(m_direction, m_r, m_partition, m_trace);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
