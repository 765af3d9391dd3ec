#pragma once

#include "discocat/pregroup.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace discocat::oracle {

using CupList = std::vector<Cup>;

/// Every contractible, planar, nesting-closed partial matching of `source`,
/// found by listing all partial matchings and filtering. Each list is sorted;
/// the outer list is sorted lexicographically. Exponential: keep n small.
std::vector<CupList> all_valid_matchings(const CompoundType& source);

/// The subset of all_valid_matchings whose unmatched wires spell `target`.
std::vector<CupList> brute_force_reductions(const CompoundType& source, const CompoundType& target);

struct OracleSummary {
    std::size_t sources_checked = 0;
    std::size_t targets_checked = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;
};

/// Compares enumerate_reductions against the brute force. Lengths up to
/// `exhaustive_len` are covered completely; longer ones up to `max_len` are
/// sampled (`samples` sources, seeded). Alphabet: bases {a, b}, adjoints
/// {-1, 0, 1}. For each source every residual that occurs is checked, plus
/// the unit and one unreachable target.
OracleSummary compare_with_enumeration(std::size_t max_len, std::size_t exhaustive_len,
                                       std::size_t samples, std::uint64_t seed);

} // namespace discocat::oracle
