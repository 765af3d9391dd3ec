#include "discocat/meaning.hpp"

#include "discocat/error.hpp"

namespace discocat {

namespace {

std::vector<std::vector<const LexiconEntry*>> lookup_all(std::span<const std::string> words,
                                                         const Lexicon& lexicon) {
    std::vector<std::vector<const LexiconEntry*>> out;
    out.reserve(words.size());
    for (const auto& w : words) {
        auto entries = lexicon.lookup(w);
        if (entries.empty())
            throw UnknownWordError(w);
        out.push_back(std::move(entries));
    }
    return out;
}

} // namespace

std::vector<Parse> enumerate_parses(std::span<const std::string> words, const Lexicon& lexicon,
                                    const CompoundType& target, std::size_t limit) {
    const auto candidates = lookup_all(words, lexicon);
    std::vector<Parse> out;
    std::vector<std::size_t> choice(words.size(), 0);
    for (;;) {
        CompoundType concat;
        for (std::size_t w = 0; w < words.size(); ++w)
            concat += candidates[w][choice[w]]->gtype;
        for (auto& d : enumerate_reductions(concat, target, limit - out.size()))
            out.push_back(Parse{choice, std::move(d)});
        if (out.size() >= limit)
            break;

        // odometer, last word fastest
        std::size_t w = words.size();
        while (w > 0 && ++choice[w - 1] == candidates[w - 1].size())
            choice[--w] = 0;
        if (w == 0)
            break;
    }
    return out;
}

SentenceAnalysis evaluate_parse(std::span<const std::string> words, const Lexicon& lexicon,
                                const FunctorAssignment& f, const Parse& parse) {
    const auto candidates = lookup_all(words, lexicon);
    std::vector<LexiconEntry> chosen;
    CompoundType concat;
    Tensor state = Tensor::scalar(1.0);
    for (std::size_t w = 0; w < words.size(); ++w) {
        const LexiconEntry& e = *candidates[w].at(parse.entry_choice.at(w));
        chosen.push_back(e);
        concat += e.gtype;
        state = tensor_product(state, e.state);
    }
    if (!(concat == parse.diagram.source()))
        throw std::invalid_argument("parse diagram does not match the chosen entries");
    Tensor meaning = contract(state, lift_reduction(f, parse.diagram));
    return SentenceAnalysis{std::move(chosen), std::move(concat), parse.diagram, std::move(meaning)};
}

SentenceAnalysis sentence_meaning(std::span<const std::string> words, const Lexicon& lexicon,
                                  const FunctorAssignment& f, const CompoundType& target,
                                  std::size_t parse_index) {
    auto parses = enumerate_parses(words, lexicon, target, parse_index + 1);
    if (parses.empty()) {
        std::string sentence;
        for (const auto& w : words)
            sentence += (sentence.empty() ? "" : " ") + w;
        throw NoParseError("'" + sentence + "' has no reduction to '" + to_string(target) + "'");
    }
    if (parse_index >= parses.size())
        throw ParseIndexError("parse index " + std::to_string(parse_index) + " out of range: only " +
                              std::to_string(parses.size()) + " parse(s)");
    return evaluate_parse(words, lexicon, f, parses[parse_index]);
}

} // namespace discocat
