#include "discocat/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>

namespace discocat::oracle {

namespace {

void all_partial_matchings(std::size_t n, std::vector<std::optional<std::size_t>>& partner,
                           std::size_t p, std::vector<CupList>& out) {
    while (p < n && partner[p])
        ++p;
    if (p == n) {
        CupList cups;
        for (std::size_t i = 0; i < n; ++i)
            if (partner[i] && *partner[i] > i)
                cups.push_back(Cup{i, *partner[i]});
        out.push_back(std::move(cups));
        return;
    }
    // p stays unmatched; mark it as its own partner while recursing.
    partner[p] = p;
    all_partial_matchings(n, partner, p + 1, out);
    partner[p].reset();
    for (std::size_t q = p + 1; q < n; ++q) {
        if (partner[q])
            continue;
        partner[p] = q;
        partner[q] = p;
        all_partial_matchings(n, partner, p + 1, out);
        partner[p].reset();
        partner[q].reset();
    }
}

bool is_valid(const CompoundType& s, const CupList& cups) {
    std::vector<bool> matched(s.size(), false);
    for (const auto& c : cups) {
        const auto& a = s[c.left];
        const auto& b = s[c.right];
        if (!(a.base == b.base && b.adjoint == a.adjoint + 1))
            return false;
        matched[c.left] = matched[c.right] = true;
    }
    for (const auto& x : cups)
        for (const auto& y : cups)
            if (x.left < y.left && y.left < x.right && x.right < y.right)
                return false;
    for (const auto& c : cups)
        for (std::size_t p = c.left + 1; p < c.right; ++p)
            if (!matched[p])
                return false;
    return true;
}

CompoundType residual(const CompoundType& s, const CupList& cups) {
    std::vector<bool> matched(s.size(), false);
    for (const auto& c : cups)
        matched[c.left] = matched[c.right] = true;
    std::vector<SimpleType> out;
    for (std::size_t p = 0; p < s.size(); ++p)
        if (!matched[p])
            out.push_back(s[p]);
    return CompoundType(std::move(out));
}

CompoundType from_code(std::uint64_t code, std::size_t len) {
    static const BasicType bases[2] = {BasicType("a"), BasicType("b")};
    std::vector<SimpleType> simples;
    simples.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        const auto digit = code % 6;
        code /= 6;
        simples.push_back(SimpleType{bases[digit / 3], static_cast<int>(digit % 3) - 1});
    }
    return CompoundType(std::move(simples));
}

std::vector<CupList> cup_lists(const std::vector<ReductionDiagram>& ds) {
    std::vector<CupList> out;
    out.reserve(ds.size());
    for (const auto& d : ds)
        out.push_back(d.cups());
    return out;
}

void check_source(const CompoundType& s, OracleSummary& summary) {
    ++summary.sources_checked;
    std::map<CompoundType, std::vector<CupList>> by_residual;
    for (auto& cups : all_valid_matchings(s))
        by_residual[residual(s, cups)].push_back(std::move(cups));

    // A target that no reduction reaches: the source with an extra wire.
    by_residual.try_emplace(CompoundType{});
    by_residual.try_emplace(s + CompoundType{SimpleType{BasicType("a"), 0}});

    for (const auto& [target, expected] : by_residual) {
        ++summary.targets_checked;
        const auto got = cup_lists(enumerate_reductions(s, target));
        if (got != expected) {
            if (summary.mismatches == 0) {
                std::ostringstream os;
                os << "source '" << s << "' target '" << target << "': expected "
                   << expected.size() << " diagrams, got " << got.size();
                summary.first_mismatch = os.str();
            }
            ++summary.mismatches;
        }
    }
}

} // namespace

std::vector<CupList> all_valid_matchings(const CompoundType& source) {
    std::vector<CupList> every;
    std::vector<std::optional<std::size_t>> partner(source.size());
    all_partial_matchings(source.size(), partner, 0, every);
    std::vector<CupList> out;
    for (auto& cups : every) {
        std::sort(cups.begin(), cups.end());
        if (is_valid(source, cups))
            out.push_back(std::move(cups));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CupList> brute_force_reductions(const CompoundType& source, const CompoundType& target) {
    std::vector<CupList> out;
    for (auto& cups : all_valid_matchings(source))
        if (residual(source, cups) == target)
            out.push_back(std::move(cups));
    return out;
}

OracleSummary compare_with_enumeration(std::size_t max_len, std::size_t exhaustive_len,
                                       std::size_t samples, std::uint64_t seed) {
    OracleSummary summary;
    const std::size_t full = std::min(max_len, exhaustive_len);
    for (std::size_t len = 0; len <= full; ++len) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < len; ++i)
            count *= 6;
        for (std::uint64_t code = 0; code < count; ++code)
            check_source(from_code(code, len), summary);
    }
    if (max_len > full && samples > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick_len(full + 1, max_len);
        for (std::size_t i = 0; i < samples; ++i) {
            const std::size_t len = pick_len(rng);
            std::uint64_t count = 1;
            for (std::size_t k = 0; k < len; ++k)
                count *= 6;
            std::uniform_int_distribution<std::uint64_t> pick_code(0, count - 1);
            check_source(from_code(pick_code(rng), len), summary);
        }
    }
    return summary;
}

} // namespace discocat::oracle
