#pragma once

#include "discocat/functor.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace discocat {

/// Words with their grammar types and meaning states, plus the space
/// assignment those states live in. A word may have several entries
/// (homonyms); entries keep insertion order.
class Lexicon {
public:
    Lexicon() = default;
    explicit Lexicon(FunctorAssignment assignment) : assignment_(std::move(assignment)) {}

    const FunctorAssignment& assignment() const noexcept { return assignment_; }
    const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }

    /// Throws UnassignedTypeError or DimensionError naming the word when the
    /// state does not fit F(gtype).
    void add(LexiconEntry entry);

    /// All entries for `word`, in insertion order.
    std::vector<const LexiconEntry*> lookup(std::string_view word) const;
    bool contains(std::string_view word) const { return !lookup(word).empty(); }

    friend bool operator==(const Lexicon&, const Lexicon&) = default;

private:
    FunctorAssignment assignment_;
    std::vector<LexiconEntry> entries_;
};

/// `{"dims": [...], "data": [...]}`. Integral values are written as JSON
/// integers.
nlohmann::json tensor_to_json(const Tensor& t);
/// Reads a tensor literal onto the given spaces. Throws SchemaError with
/// `path` prefixed onto the field name.
Tensor tensor_from_json(const nlohmann::json& j, std::vector<VectorSpace> spaces, const std::string& path);

nlohmann::json lexicon_to_json(const Lexicon& lex);
/// Throws SchemaError naming the offending field.
Lexicon lexicon_from_json(const nlohmann::json& j);
/// Throws SchemaError (also for malformed JSON, path "$").
Lexicon parse_lexicon(std::string_view text);

/// Throws IoError.
void save_lexicon(const Lexicon& lex, const std::filesystem::path& path);
/// Throws IoError or SchemaError.
Lexicon load_lexicon(const std::filesystem::path& path);

/// The toy model over N = span{sweet, green, furry} and a 1-dimensional S:
/// bananas, banana, fruit, puppy, puppies as nouns, `are` as the identity
/// copula, `yellow` as the identity adjective.
Lexicon fruit_lexicon();

} // namespace discocat
