#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace discocat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed type expression. `position()` is a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class UnassignedTypeError : public Error {
public:
    using Error::Error;
};

class UnknownWordError : public Error {
public:
    explicit UnknownWordError(std::string word)
        : Error("unknown word: '" + word + "'"), word_(std::move(word)) {}

    const std::string& word() const noexcept { return word_; }

private:
    std::string word_;
};

class NoParseError : public Error {
public:
    using Error::Error;
};

class ParseIndexError : public Error {
public:
    using Error::Error;
};

class SearchRadiusExceeded : public Error {
public:
    using Error::Error;
};

/// Lexicon file does not match the schema. `path()` names the offending
/// field, e.g. `entries[2].tensor.dims`.
class SchemaError : public Error {
public:
    SchemaError(std::string path, std::string detail)
        : Error(path + ": " + detail), path_(std::move(path)), detail_(std::move(detail)) {}

    const std::string& path() const noexcept { return path_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string path_;
    std::string detail_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace discocat
