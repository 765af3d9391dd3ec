#pragma once

#include "discocat/lexicon.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace discocat {

/// One reading of a sentence: which lexicon entry each word uses (index
/// into that word's homonym list) and which reduction is applied.
struct Parse {
    std::vector<std::size_t> entry_choice;
    ReductionDiagram diagram;
};

/// All readings reducing to `target`, ordered by entry choice (first word
/// slowest) and then by reduction order. Throws UnknownWordError.
std::vector<Parse> enumerate_parses(std::span<const std::string> words, const Lexicon& lexicon,
                                    const CompoundType& target,
                                    std::size_t limit = static_cast<std::size_t>(-1));

struct SentenceAnalysis {
    std::vector<LexiconEntry> words;
    CompoundType concat_type;
    ReductionDiagram chosen;
    Tensor meaning;
};

/// Tensor the chosen word states together and push them through the lifted
/// reduction. Throws UnknownWordError, NoParseError, ParseIndexError.
SentenceAnalysis sentence_meaning(std::span<const std::string> words, const Lexicon& lexicon,
                                  const FunctorAssignment& f, const CompoundType& target,
                                  std::size_t parse_index = 0);

/// Evaluates one specific reading.
SentenceAnalysis evaluate_parse(std::span<const std::string> words, const Lexicon& lexicon,
                                const FunctorAssignment& f, const Parse& parse);

} // namespace discocat
