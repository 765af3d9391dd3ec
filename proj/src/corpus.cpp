#include "discocat/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace discocat {

ContextConfig::ContextConfig(std::vector<std::string> context_words, std::size_t window, bool lowercase,
                             bool strip_punct)
    : context_(std::move(context_words)), window_(window), lowercase_(lowercase), strip_punct_(strip_punct) {
    if (context_.empty())
        throw std::invalid_argument("context word list is empty");
    if (window_ == 0)
        throw std::invalid_argument("window must be >= 1");
    for (std::size_t i = 0; i < context_.size(); ++i)
        if (!index_.emplace(context_[i], i).second)
            throw std::invalid_argument("duplicate context word '" + context_[i] + "'");
}

std::optional<std::size_t> ContextConfig::index_of(std::string_view word) const {
    auto it = index_.find(word);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

VectorSpace ContextConfig::space() const { return VectorSpace("N", context_.size(), context_); }

namespace {

bool keeps(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'';
}

} // namespace

std::vector<std::string> tokenize(std::string_view text, const ContextConfig& cfg) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (cfg.strip_punct()) {
            std::size_t b = 0;
            std::size_t e = tok.size();
            while (b < e && !keeps(tok[b]))
                ++b;
            while (e > b && !keeps(tok[e - 1]))
                --e;
            tok = tok.substr(b, e - b);
        }
        if (cfg.lowercase())
            for (auto& c : tok)
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (!tok.empty())
            out.push_back(std::move(tok));
    }
    return out;
}

std::uint64_t CooccurrenceCounts::count(std::string_view word, std::size_t context_index) const {
    if (context_index >= num_contexts_)
        throw std::out_of_range("context index out of range");
    auto it = rows_.find(word);
    return it == rows_.end() ? 0 : it->second[context_index];
}

std::vector<std::uint64_t>& CooccurrenceCounts::row(const std::string& word) {
    auto it = rows_.find(word);
    if (it == rows_.end())
        it = rows_.emplace(word, std::vector<std::uint64_t>(num_contexts_, 0)).first;
    return it->second;
}

CooccurrenceCounts& CooccurrenceCounts::operator+=(const CooccurrenceCounts& other) {
    if (other.num_contexts_ != num_contexts_)
        throw std::invalid_argument("cannot merge counts over different context lists");
    for (const auto& [word, counts] : other.rows_) {
        auto& mine = row(word);
        for (std::size_t i = 0; i < num_contexts_; ++i)
            mine[i] += counts[i];
    }
    return *this;
}

CooccurrenceCounts count_cooccurrence(std::span<const std::string> tokens, const ContextConfig& cfg) {
    CooccurrenceCounts counts(cfg.context_words().size());
    std::vector<std::optional<std::size_t>> ctx(tokens.size());
    for (std::size_t q = 0; q < tokens.size(); ++q)
        ctx[q] = cfg.index_of(tokens[q]);

    const std::size_t k = cfg.window();
    for (std::size_t p = 0; p < tokens.size(); ++p) {
        auto& row = counts.row(tokens[p]);
        const std::size_t lo = p > k ? p - k : 0;
        const std::size_t hi = std::min(tokens.size() - 1, p + k);
        for (std::size_t q = lo; q <= hi; ++q)
            if (q != p && ctx[q])
                ++row[*ctx[q]];
    }
    return counts;
}

Tensor build_noun_vector(std::string_view word, const CooccurrenceCounts& counts, const ContextConfig& cfg) {
    Tensor v({cfg.space()});
    auto it = counts.rows().find(word);
    if (it != counts.rows().end())
        for (std::size_t i = 0; i < v.size(); ++i)
            v.data()[i] = static_cast<double>(it->second[i]);
    return v;
}

void write_vectors_tsv(std::ostream& os, const CooccurrenceCounts& counts, const ContextConfig& cfg) {
    os << "word";
    for (const auto& c : cfg.context_words())
        os << '\t' << c;
    os << '\n';
    for (const auto& [word, row] : counts.rows()) {
        os << word;
        for (auto c : row)
            os << '\t' << c;
        os << '\n';
    }
}

std::vector<std::string> parse_context_list(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        const auto e = line.find_last_not_of(" \t\r");
        std::string word = line.substr(b, e - b + 1);
        if (std::find(out.begin(), out.end(), word) != out.end())
            throw std::invalid_argument("duplicate context word '" + word + "'");
        out.push_back(std::move(word));
    }
    return out;
}

} // namespace discocat
