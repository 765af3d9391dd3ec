#pragma once

#include "discocat/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace discocat {

/// Which words span the noun space and what counts as "near".
class ContextConfig {
public:
    /// Throws std::invalid_argument on an empty or duplicated context list,
    /// or window == 0.
    explicit ContextConfig(std::vector<std::string> context_words, std::size_t window = 3,
                           bool lowercase = true, bool strip_punct = true);

    const std::vector<std::string>& context_words() const noexcept { return context_; }
    std::size_t window() const noexcept { return window_; }
    bool lowercase() const noexcept { return lowercase_; }
    bool strip_punct() const noexcept { return strip_punct_; }

    std::optional<std::size_t> index_of(std::string_view word) const;

    /// The space spanned by the context words, labelled "N".
    VectorSpace space() const;

private:
    std::vector<std::string> context_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::size_t window_;
    bool lowercase_;
    bool strip_punct_;
};

std::vector<std::string> tokenize(std::string_view text, const ContextConfig& cfg);

/// Raw co-occurrence counts, one row of length |contexts| per target word.
/// Counts from several documents combine by addition.
class CooccurrenceCounts {
public:
    explicit CooccurrenceCounts(std::size_t num_contexts) : num_contexts_(num_contexts) {}

    std::size_t num_contexts() const noexcept { return num_contexts_; }
    std::uint64_t count(std::string_view word, std::size_t context_index) const;

    /// Registers `word` with an all-zero row if it has none.
    std::vector<std::uint64_t>& row(const std::string& word);
    const std::map<std::string, std::vector<std::uint64_t>, std::less<>>& rows() const noexcept { return rows_; }

    CooccurrenceCounts& operator+=(const CooccurrenceCounts& other);

    friend bool operator==(const CooccurrenceCounts&, const CooccurrenceCounts&) = default;

private:
    std::size_t num_contexts_;
    std::map<std::string, std::vector<std::uint64_t>, std::less<>> rows_;
};

/// For every position p and every context word at q with 0 < |p - q| <= k,
/// adds one to counts[token p][context of q]. Every token gets a row.
CooccurrenceCounts count_cooccurrence(std::span<const std::string> tokens, const ContextConfig& cfg);

/// The count row of `word` as a vector in cfg.space(); zero if unseen.
Tensor build_noun_vector(std::string_view word, const CooccurrenceCounts& counts, const ContextConfig& cfg);

/// Header `word<TAB>ctx_1...` then one row per word, lexicographic.
void write_vectors_tsv(std::ostream& os, const CooccurrenceCounts& counts, const ContextConfig& cfg);

/// One context word per line; blank lines and surrounding whitespace
/// ignored. Throws std::invalid_argument on duplicates.
std::vector<std::string> parse_context_list(std::string_view text);

} // namespace discocat
