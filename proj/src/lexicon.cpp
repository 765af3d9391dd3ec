#include "discocat/lexicon.hpp"

#include "discocat/error.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace discocat {

using nlohmann::json;

void Lexicon::add(LexiconEntry entry) {
    std::vector<VectorSpace> expected;
    try {
        expected = assign_spaces(assignment_, entry.gtype);
    } catch (const UnassignedTypeError& e) {
        throw UnassignedTypeError("word '" + entry.word + "': " + e.what());
    }
    std::vector<std::size_t> want;
    for (const auto& s : expected)
        want.push_back(s.dim());
    if (entry.state.dims() != want) {
        std::ostringstream os;
        os << "word '" << entry.word << "': tensor dims [";
        for (std::size_t i = 0; i < entry.state.dims().size(); ++i)
            os << (i ? "," : "") << entry.state.dims()[i];
        os << "] do not match type '" << to_string(entry.gtype) << "' dims [";
        for (std::size_t i = 0; i < want.size(); ++i)
            os << (i ? "," : "") << want[i];
        os << "]";
        throw DimensionError(os.str());
    }
    entries_.push_back(std::move(entry));
}

std::vector<const LexiconEntry*> Lexicon::lookup(std::string_view word) const {
    std::vector<const LexiconEntry*> out;
    for (const auto& e : entries_)
        if (e.word == word)
            out.push_back(&e);
    return out;
}

json tensor_to_json(const Tensor& t) {
    json data = json::array();
    for (double x : t.data()) {
        if (std::nearbyint(x) == x && std::abs(x) < 9.0e15)
            data.push_back(static_cast<std::int64_t>(x));
        else
            data.push_back(x);
    }
    return json{{"dims", t.dims()}, {"data", std::move(data)}};
}

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(path + "." + key, "missing required field");
    return *it;
}

std::size_t positive_int(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1)
        throw SchemaError(path, "expected a positive integer");
    return j.get<std::size_t>();
}

} // namespace

Tensor tensor_from_json(const json& j, std::vector<VectorSpace> spaces, const std::string& path) {
    const json& dims = require(j, "dims", path);
    const json& data = require(j, "data", path);
    if (!dims.is_array())
        throw SchemaError(path + ".dims", "expected an array");
    if (!data.is_array())
        throw SchemaError(path + ".data", "expected an array");

    std::vector<std::size_t> declared;
    for (std::size_t i = 0; i < dims.size(); ++i)
        declared.push_back(positive_int(dims[i], path + ".dims[" + std::to_string(i) + "]"));
    std::vector<std::size_t> want;
    for (const auto& s : spaces)
        want.push_back(s.dim());
    if (declared != want)
        throw SchemaError(path + ".dims", "dims do not match the declared type");

    std::vector<double> values;
    values.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!data[i].is_number())
            throw SchemaError(path + ".data[" + std::to_string(i) + "]", "expected a number");
        values.push_back(data[i].get<double>());
    }
    std::size_t volume = 1;
    for (auto d : declared)
        volume *= d;
    if (values.size() != volume)
        throw SchemaError(path + ".data", "has " + std::to_string(values.size()) + " entries, dims require " +
                                              std::to_string(volume));
    return Tensor(std::move(spaces), std::move(values));
}

json lexicon_to_json(const Lexicon& lex) {
    json spaces = json::object();
    for (const auto& [name, space] : lex.assignment().spaces()) {
        json s{{"dim", space.dim()}};
        if (space.basis_labels())
            s["basis"] = *space.basis_labels();
        spaces[name] = std::move(s);
    }
    json entries = json::array();
    for (const auto& e : lex.entries())
        entries.push_back(json{{"word", e.word}, {"type", to_string(e.gtype)}, {"tensor", tensor_to_json(e.state)}});
    return json{{"spaces", std::move(spaces)}, {"entries", std::move(entries)}};
}

Lexicon lexicon_from_json(const json& j) {
    if (!j.is_object())
        throw SchemaError("$", "expected an object");

    const json& spaces = require(j, "spaces", "$");
    if (!spaces.is_object())
        throw SchemaError("$.spaces", "expected an object");
    FunctorAssignment assignment;
    for (const auto& [name, spec] : spaces.items()) {
        const std::string path = "$.spaces." + name;
        std::optional<BasicType> base;
        try {
            base.emplace(name);
        } catch (const ParseError& e) {
            throw SchemaError(path, e.what());
        }
        const std::size_t dim = positive_int(require(spec, "dim", path), path + ".dim");
        std::optional<std::vector<std::string>> basis;
        if (auto it = spec.find("basis"); it != spec.end()) {
            if (!it->is_array())
                throw SchemaError(path + ".basis", "expected an array of strings");
            basis.emplace();
            for (std::size_t i = 0; i < it->size(); ++i) {
                if (!(*it)[i].is_string())
                    throw SchemaError(path + ".basis[" + std::to_string(i) + "]", "expected a string");
                basis->push_back((*it)[i].get<std::string>());
            }
        }
        try {
            assignment.assign(*base, VectorSpace(name, dim, std::move(basis)));
        } catch (const DimensionError& e) {
            throw SchemaError(path + ".basis", e.what());
        }
    }

    Lexicon lex(std::move(assignment));
    const json& entries = require(j, "entries", "$");
    if (!entries.is_array())
        throw SchemaError("$.entries", "expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string path = "$.entries[" + std::to_string(i) + "]";
        const json& e = entries[i];
        const json& word = require(e, "word", path);
        if (!word.is_string() || word.get<std::string>().empty())
            throw SchemaError(path + ".word", "expected a nonempty string");
        const std::string w = word.get<std::string>();
        const json& type = require(e, "type", path);
        if (!type.is_string())
            throw SchemaError(path + ".type", "expected a type expression string");

        CompoundType gtype;
        try {
            gtype = parse_type_expr(type.get<std::string>());
        } catch (const ParseError& err) {
            throw SchemaError(path + ".type", "word '" + w + "': " + err.what() + " at column " +
                                                   std::to_string(err.position()));
        }
        std::vector<VectorSpace> target;
        try {
            target = assign_spaces(lex.assignment(), gtype);
        } catch (const UnassignedTypeError& err) {
            throw SchemaError(path + ".type", "word '" + w + "': " + err.what());
        }

        const json& tensor = require(e, "tensor", path);
        Tensor state = Tensor::scalar(0.0);
        if (tensor.is_object() && tensor.contains("builtin")) {
            const json& b = tensor["builtin"];
            if (!b.is_string() || b.get<std::string>() != "identity-verb")
                throw SchemaError(path + ".tensor.builtin", "unknown builtin (supported: identity-verb)");
            try {
                state = identity_verb(lex.assignment(), gtype);
            } catch (const DimensionError& err) {
                throw SchemaError(path + ".tensor.builtin", "word '" + w + "': " + err.what());
            }
        } else {
            try {
                state = tensor_from_json(tensor, std::move(target), path + ".tensor");
            } catch (const SchemaError& err) {
                throw SchemaError(err.path(), "word '" + w + "': " + err.detail());
            }
        }
        lex.add(LexiconEntry{w, std::move(gtype), std::move(state)});
    }
    return lex;
}

Lexicon parse_lexicon(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
    return lexicon_from_json(j);
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << lexicon_to_json(lex).dump(2) << '\n';
    if (!out)
        throw IoError("write to '" + path.string() + "' failed");
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_lexicon(buf.str());
}

Lexicon fruit_lexicon() {
    FunctorAssignment f;
    f.assign(BasicType("n"), VectorSpace("n", 3, std::vector<std::string>{"sweet", "green", "furry"}));
    f.assign(BasicType("s"), VectorSpace("s", 1));
    Lexicon lex(f);

    const auto noun = [&](const char* word, std::vector<double> v) {
        const auto t = parse_type_expr("n");
        lex.add(LexiconEntry{word, t, Tensor(assign_spaces(f, t), std::move(v))});
    };
    noun("bananas", {21, 9, 0});
    noun("banana", {21, 9, 0});
    noun("fruit", {43, 19, 0});
    noun("puppy", {8, 1, 32});
    noun("puppies", {8, 1, 32});

    const auto verb = parse_type_expr("n^r s n^l");
    lex.add(LexiconEntry{"are", verb, identity_verb(f, verb)});
    const auto adjective = parse_type_expr("n n^l");
    lex.add(LexiconEntry{"yellow", adjective, identity_verb(f, adjective)});
    return lex;
}

} // namespace discocat
