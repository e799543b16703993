#include "repart/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace repart {

Tableau::Tableau(std::vector<std::vector<Part>> rows) : rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
        for (Part cell : row) {
            if (cell <= 0) throw std::invalid_argument("tableau entries must be positive");
        }
    }
}

Part Tableau::cell_sum() const {
    Part total = 0;
    for (const auto& row : rows_) {
        total = std::accumulate(row.begin(), row.end(), total);
    }
    return total;
}

std::string Tableau::render() const {
    std::string out;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (k > 0) out += '\n';
        for (std::size_t c = 0; c < rows_[k].size(); ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(rows_[k][c]);
        }
    }
    return out;
}

Tableau build_tableau(const Partition& p, Part r) {
    if (r < 2) throw std::invalid_argument("build_tableau requires r >= 2");
    std::vector<std::vector<Part>> rows;
    rows.reserve(p.length());
    for (Part part : p.parts()) {
        const auto [q, rem] = quot_rem(part, r);
        std::vector<Part> row(static_cast<std::size_t>(q), r);
        if (rem != 0) row.push_back(rem);
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

HookStrip strip_hook(const Tableau& t) {
    if (t.empty()) throw std::invalid_argument("strip_hook requires a nonempty tableau");
    const auto& rows = t.rows();
    HookStrip out;
    out.part = static_cast<Part>(rows[0].size() + rows.size()) - 1;
    std::vector<std::vector<Part>> next;
    next.reserve(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::vector<Part> row;
        row.reserve(rows[k].size());
        for (std::size_t c = 0; c < rows[k].size(); ++c) {
            Part cell = rows[k][c];
            if (k == 0 || c == 0) --cell;
            if (cell > 0) row.push_back(cell);
        }
        if (!row.empty()) next.push_back(std::move(row));
    }
    out.rest = Tableau(std::move(next));
    return out;
}

std::vector<Part> hook_strip_sizes(const Partition& p, Part r) {
    std::vector<Part> sizes;
    Tableau t = build_tableau(p, r);
    while (!t.empty()) {
        auto [part, rest] = strip_hook(t);
        sizes.push_back(part);
        t = std::move(rest);
    }
    return sizes;
}

ForwardTrace forward_trace(const Partition& p, Part r) {
    ForwardTrace trace;
    trace.initial = build_tableau(p, r);
    Tableau t = trace.initial;
    while (!t.empty()) {
        auto [part, rest] = strip_hook(t);
        trace.stripped.push_back(part);
        trace.steps.push_back({part, rest});
        t = std::move(rest);
    }
    trace.weakly_decreasing = std::is_sorted(trace.stripped.begin(), trace.stripped.end(),
                                             std::greater<Part>{});
    return trace;
}

Partition forward_map(const Partition& p, Part r) {
    ForwardTrace trace = forward_trace(p, r);
    if (!trace.weakly_decreasing) {
        std::string seq;
        for (Part v : trace.stripped) {
            if (!seq.empty()) seq += ',';
            seq += std::to_string(v);
        }
        throw std::domain_error("hook stripping of " + to_text(p) + " (r=" + std::to_string(r) +
                                ") produced the non-monotone sequence " + seq +
                                "; input is outside the map's domain");
    }
    return Partition::unchecked(std::move(trace.stripped));
}

std::vector<Partition> split_groups(const Partition& p, Part r) {
    if (r < 2) throw std::invalid_argument("split_groups requires r >= 2");
    const auto& v = p.parts();
    std::vector<Partition> groups;
    const std::size_t step = static_cast<std::size_t>(r);
    for (std::size_t begin = 0; begin < v.size(); begin += step) {
        const std::size_t end = std::min(begin + step, v.size());
        groups.push_back(Partition::unchecked({v.begin() + static_cast<std::ptrdiff_t>(begin),
                                               v.begin() + static_cast<std::ptrdiff_t>(end)}));
    }
    return groups;
}

HookSequence group_sequence(const Partition& group, Part r) {
    if (r < 2) throw std::invalid_argument("group_sequence requires r >= 2");
    if (group.empty()) throw std::invalid_argument("group_sequence requires a nonempty group");
    std::vector<Part> values = conjugate(group).parts();
    auto it = std::find_if(values.begin(), values.end(), [&](Part v) { return v != r; });
    if (it == values.end()) {
        throw std::domain_error("conjugate of group " + to_text(group) + " contains only " +
                                std::to_string(r) + "s; input is outside the map's domain");
    }
    const Part pulled = *it;
    values.erase(it);
    std::reverse(values.begin(), values.end());
    values.push_back(pulled);
    return {std::move(values)};
}

namespace {

// Sequence g folds into the row segment values[p..] (row g, columns g and to
// the right, final element last) and the column segment values[0..p)
// (column g, rows g+1 downward, values[0] at the bottom). Indices 0-based.
struct FoldSearch {
    const std::vector<HookSequence>& seqs;
    Part r;
    std::vector<std::size_t> split;
    std::vector<std::vector<Part>> rows;
    std::vector<Tableau> found;

    bool row_shape_ok(const std::vector<Part>& row) const {
        for (std::size_t c = 0; c + 1 < row.size(); ++c) {
            if (row[c] != r) return false;
        }
        return row.back() != r;
    }

    void run() {
        descend(0);
    }

    void descend(std::size_t g) {
        const std::size_t m = seqs.size();
        if (g == m) {
            finish();
            return;
        }
        // Every earlier column has to reach this row, otherwise it has a hole.
        std::vector<Part> prefix;
        prefix.reserve(g);
        for (std::size_t j = 0; j < g; ++j) {
            if (j + split[j] < g) return;
            prefix.push_back(seqs[j].values[split[j] - (g - j)]);
        }
        const auto& vals = seqs[g].values;
        for (std::size_t p = 0; p < vals.size(); ++p) {
            std::vector<Part> row = prefix;
            row.insert(row.end(), vals.begin() + static_cast<std::ptrdiff_t>(p), vals.end());
            if (!row_shape_ok(row)) continue;
            if (g > 0 && row.size() > rows.back().size()) continue;
            split[g] = p;
            rows.push_back(std::move(row));
            descend(g + 1);
            rows.pop_back();
        }
    }

    void finish() {
        const std::size_t m = seqs.size();
        std::vector<std::vector<Part>> full = rows;
        std::size_t max_reach = 0;
        for (std::size_t j = 0; j < m; ++j) max_reach = std::max(max_reach, j + split[j]);
        for (std::size_t q = m; q <= max_reach; ++q) {
            std::vector<Part> row;
            for (std::size_t j = 0; j < m && j < q; ++j) {
                if (j + split[j] >= q) {
                    if (row.size() != j) return;  // hole left of this column
                    row.push_back(seqs[j].values[split[j] - (q - j)]);
                }
            }
            if (row.empty() || !row_shape_ok(row) || row.size() > full.back().size()) return;
            full.push_back(std::move(row));
        }
        for (std::size_t q = 1; q < full.size(); ++q) {
            for (std::size_t c = 0; c < full[q].size(); ++c) {
                if (full[q - 1][c] < full[q][c]) return;  // column must not grow downward
            }
        }
        found.push_back(Tableau(std::move(full)));
    }
};

}  // namespace

std::vector<Tableau> enumerate_valid_folds(const std::vector<HookSequence>& seqs, Part r) {
    if (r < 2) throw std::invalid_argument("fold requires r >= 2");
    for (const auto& seq : seqs) {
        if (seq.values.empty()) throw std::invalid_argument("hook sequences must be nonempty");
    }
    if (seqs.empty()) return {Tableau{}};
    FoldSearch search{seqs, r, std::vector<std::size_t>(seqs.size(), 0), {}, {}};
    search.run();
    return search.found;
}

Tableau fold_into_tableau(const std::vector<HookSequence>& seqs, Part r) {
    auto folds = enumerate_valid_folds(seqs, r);
    if (folds.empty()) {
        throw std::domain_error("no valid fold: the sequences do not assemble into a tableau "
                                "(input not in the map's image)");
    }
    if (folds.size() > 1) {
        throw std::domain_error("fold is not unique: " + std::to_string(folds.size()) +
                                " valid folds found (uniqueness violation)");
    }
    return folds.front();
}

namespace {

Partition read_tableau_rows(const Tableau& t) {
    std::vector<Part> parts;
    parts.reserve(t.rows().size());
    for (const auto& row : t.rows()) {
        parts.push_back(std::accumulate(row.begin(), row.end(), Part{0}));
    }
    return Partition(std::move(parts));
}

}  // namespace

InverseTrace inverse_trace(const Partition& p, Part r) {
    InverseTrace trace;
    trace.groups = split_groups(p, r);
    for (const auto& group : trace.groups) {
        trace.conjugates.push_back(conjugate(group));
        trace.sequences.push_back(group_sequence(group, r));
    }
    trace.folded = fold_into_tableau(trace.sequences, r);
    trace.result = read_tableau_rows(trace.folded);
    return trace;
}

Partition inverse_map(const Partition& p, Part r) {
    if (p.empty()) return {};
    return inverse_trace(p, r).result;
}

std::optional<Partition> brute_force_inverse(const Partition& p, Part r,
                                             const FamilySelector& family) {
    std::optional<Partition> found;
    for (const Partition& candidate : enumerate_family(p.sum(), family)) {
        ForwardTrace trace = forward_trace(candidate, r);
        if (trace.stripped != p.parts()) continue;
        if (found) {
            throw std::domain_error("multiple preimages of " + to_text(p) + " under the hook map: " +
                                    to_text(*found) + " and " + to_text(candidate) +
                                    " (injectivity violation)");
        }
        found = candidate;
    }
    return found;
}

}  // namespace repart
