#include "discocat/cli.hpp"

#include "discocat/corpus.hpp"
#include "discocat/error.hpp"
#include "discocat/functor.hpp"
#include "discocat/lexicon.hpp"
#include "discocat/meaning.hpp"
#include "discocat/monotone.hpp"
#include "discocat/oracle.hpp"
#include "discocat/pregroup.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace discocat::cli {

namespace {

using nlohmann::json;

std::string format_number(double x) {
    if (std::nearbyint(x) == x && std::abs(x) < 1e15)
        return std::to_string(static_cast<long long>(x));
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string format_values(std::span<const double> values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? ", " : "") + format_number(values[i]);
    return s + "]";
}

std::string format_tensor(const Tensor& t) {
    std::string dims = "[";
    for (std::size_t i = 0; i < t.order(); ++i)
        dims += (i ? ", " : "") + std::to_string(t.dims()[i]);
    return "dims " + dims + "] data " + format_values(t.data());
}

std::string format_cups(const std::vector<Cup>& cups) {
    if (cups.empty())
        return "(none)";
    std::string s;
    for (const auto& c : cups)
        s += (s.empty() ? "" : " ") + ("(" + std::to_string(c.left) + "," + std::to_string(c.right) + ")");
    return s;
}

json cups_json(const std::vector<Cup>& cups) {
    json j = json::array();
    for (const auto& c : cups)
        j.push_back(json::array({c.left, c.right}));
    return j;
}

std::string truth_gloss(double v) {
    if (v == 0.0)
        return "false";
    if (v < 0.0)
        return "negative (not true)";
    return v > 1.0 ? "true, strength " + format_number(v) : "true";
}

void report_parse_error(std::ostream& err, const std::string& text, const ParseError& e) {
    err << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
}

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

Range parse_range(const std::string& text) {
    const auto sep = text.find("..");
    Range r;
    const auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || s.empty())
            throw std::invalid_argument("bad range '" + text + "', expected A..B");
        return v;
    };
    if (sep == std::string::npos) {
        r.lo = r.hi = parse_int(text);
    } else {
        r.lo = parse_int(std::string_view(text).substr(0, sep));
        r.hi = parse_int(std::string_view(text).substr(sep + 2));
    }
    if (r.lo > r.hi)
        throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// reduce -------------------------------------------------------------------

struct ReduceArgs {
    std::string type_expr;
    std::string target = "s";
    std::size_t limit = 1000;
    bool json = false;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
    CompoundType source;
    CompoundType target;
    try {
        source = parse_type_expr(a.type_expr);
    } catch (const ParseError& e) {
        report_parse_error(err, a.type_expr, e);
        return kUsage;
    }
    try {
        target = parse_type_expr(a.target);
    } catch (const ParseError& e) {
        report_parse_error(err, a.target, e);
        return kUsage;
    }

    const auto diagrams = enumerate_reductions(source, target, a.limit);
    if (a.json) {
        json reductions = json::array();
        for (const auto& d : diagrams)
            reductions.push_back(cups_json(d.cups()));
        out << json{{"source", to_string(source)}, {"target", to_string(target)}, {"reductions", reductions}}.dump()
            << '\n';
    } else {
        out << "type:   " << to_string(source) << "\ntarget: " << to_string(target) << '\n'
            << diagrams.size() << " reduction(s)\n";
        for (std::size_t i = 0; i < diagrams.size(); ++i)
            out << "\n[" << i << "] cups: " << format_cups(diagrams[i].cups()) << '\n'
                << render_diagram(diagrams[i]);
    }
    if (diagrams.empty()) {
        err << "no reduction of '" << to_string(source) << "' to '" << to_string(target) << "'\n";
        return kDomainFailure;
    }
    return kOk;
}

// meaning ------------------------------------------------------------------

struct MeaningArgs {
    std::vector<std::string> words;
    std::string lexicon_path;
    std::string target = "s";
    std::size_t parse_index = 0;
    bool json = false;
    bool all = false;
};

json analysis_json(const SentenceAnalysis& a, std::size_t index, std::size_t count) {
    json entries = json::array();
    for (const auto& e : a.words)
        entries.push_back(json{{"word", e.word}, {"type", to_string(e.gtype)}});
    return json{{"parse", cups_json(a.chosen.cups())},
                {"meaning", tensor_to_json(a.meaning)},
                {"parse_index", index},
                {"num_parses", count},
                {"entries", entries}};
}

void print_analysis(std::ostream& out, const SentenceAnalysis& a, std::size_t index, std::size_t count) {
    out << "parse " << index << " of " << count << "\n  types: ";
    for (std::size_t i = 0; i < a.words.size(); ++i)
        out << (i ? " | " : "") << a.words[i].word << " : " << to_string(a.words[i].gtype);
    out << "\n  cups:  " << format_cups(a.chosen.cups()) << '\n';
    std::istringstream diagram(render_diagram(a.chosen));
    for (std::string line; std::getline(diagram, line);)
        out << "    " << line << '\n';
    out << "  meaning: " << format_tensor(a.meaning) << '\n';
    if (a.meaning.size() == 1)
        out << "  scalar: " << format_number(a.meaning.data()[0]) << " (" << truth_gloss(a.meaning.data()[0])
            << ")\n";
}

int cmd_meaning(const MeaningArgs& a, std::ostream& out, std::ostream& err) {
    Lexicon lexicon;
    try {
        lexicon = a.lexicon_path.empty() ? fruit_lexicon() : load_lexicon(a.lexicon_path);
    } catch (const Error& e) {
        err << "error: cannot load lexicon: " << e.what() << '\n';
        return kUsage;
    }
    CompoundType target;
    try {
        target = parse_type_expr(a.target);
    } catch (const ParseError& e) {
        report_parse_error(err, a.target, e);
        return kUsage;
    }

    try {
        const auto& f = lexicon.assignment();
        if (a.all) {
            const auto parses = enumerate_parses(a.words, lexicon, target);
            if (parses.empty())
                throw NoParseError("no reading of the sentence reduces to '" + to_string(target) + "'");
            json all = json::array();
            for (std::size_t i = 0; i < parses.size(); ++i) {
                const auto analysis = evaluate_parse(a.words, lexicon, f, parses[i]);
                if (a.json)
                    all.push_back(analysis_json(analysis, i, parses.size()));
                else
                    print_analysis(out, analysis, i, parses.size());
            }
            if (a.json)
                out << all.dump() << '\n';
            return kOk;
        }
        const auto count = enumerate_parses(a.words, lexicon, target).size();
        const auto analysis = sentence_meaning(a.words, lexicon, f, target, a.parse_index);
        if (a.json)
            out << analysis_json(analysis, a.parse_index, count).dump() << '\n';
        else
            print_analysis(out, analysis, a.parse_index, count);
        return kOk;
    } catch (const UnknownWordError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const NoParseError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const ParseIndexError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::string dims;
    std::string window = "-100..100";
    std::size_t max_len = 8;
    std::size_t exhaustive_len = 5;
    std::size_t samples = 10000;
    std::uint64_t seed = 20180601;
};

int verify_yanking(const VerifyArgs& a, std::ostream& out) {
    const Range r = parse_range(a.dims.empty() ? "1..16" : a.dims);
    if (r.lo < 1)
        throw std::invalid_argument("dims must be >= 1");
    bool all = true;
    out << "dim  rightward  leftward  result\n";
    for (auto d = r.lo; d <= r.hi; ++d) {
        const auto [right, left] = snake_composites(static_cast<std::size_t>(d));
        const auto id = LinearMap::identity(right.domain());
        const bool ok_r = right.entries().size() == id.entries().size() &&
                          std::equal(right.entries().begin(), right.entries().end(), id.entries().begin());
        const bool ok_l = std::equal(left.entries().begin(), left.entries().end(), id.entries().begin());
        all = all && ok_r && ok_l;
        out << std::setw(3) << d << "  " << std::setw(9) << (ok_r ? "id" : "not id") << "  " << std::setw(8)
            << (ok_l ? "id" : "not id") << "  " << pass_fail(ok_r && ok_l) << '\n';
    }
    return all ? kOk : kDomainFailure;
}

int verify_preller(const VerifyArgs& a, std::ostream& out) {
    const Range r = parse_range(a.dims.empty() ? "1..8" : a.dims);
    if (r.lo < 1)
        throw std::invalid_argument("dims must be >= 1");
    bool all = true;
    out << "dim  identity  kills e1(x)e2(x)e1  result\n";
    for (auto d = r.lo; d <= r.hi; ++d) {
        const auto w = preller_obstruction(static_cast<std::size_t>(d));
        const bool ok = d == 1 ? w.is_identity : (!w.is_identity && w.zero_witness.has_value());
        all = all && ok;
        out << std::setw(3) << d << "  " << std::setw(8) << (w.is_identity ? "yes" : "no") << "  " << std::setw(17)
            << (d == 1 ? "n/a" : (w.zero_witness ? "yes" : "no")) << "  " << pass_fail(ok) << '\n';
    }
    return all ? kOk : kDomainFailure;
}

int verify_galois(const VerifyArgs& a, std::ostream& out) {
    const Range r = parse_range(a.window);
    const IntWindow window{r.lo, r.hi};

    auto sampled = sample_monotone_maps(a.seed, 5);
    std::vector<MonotoneMap> maps;
    maps.reserve(3 + sampled.size());
    maps.emplace_back("2m", [](std::int64_t m) { return 2 * m; });
    maps.emplace_back("id", [](std::int64_t m) { return m; });
    maps.emplace_back("3m+1", [](std::int64_t m) { return 3 * m + 1; });
    for (auto& m : sampled)
        maps.push_back(std::move(m));

    bool all = true;
    out << "map                   probes  galois  result\n";
    for (const auto& f : maps) {
        const bool probes = f.is_monotone_on_probes() && f.is_unbounded_on_probes();
        bool ok = probes && galois_check(f, window);
        if (f.name() == "2m") {
            // closed forms: f^l n = floor((n+1)/2), f^r n = floor(n/2)
            const auto floor_half = [](std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
            for (auto n = window.lo; n <= window.hi; ++n)
                ok = ok && monotone_left_dual(f, n) == floor_half(n + 1) && monotone_right_dual(f, n) == floor_half(n);
        }
        all = all && ok;
        out << std::left << std::setw(20) << f.name() << std::right << "  " << std::setw(6)
            << (probes ? "ok" : "bad") << "  " << std::setw(6) << (ok ? "holds" : "fails") << "  " << pass_fail(ok)
            << '\n';
    }
    return all ? kOk : kDomainFailure;
}

int verify_oracle(const VerifyArgs& a, std::ostream& out) {
    if (a.max_len > 12)
        throw std::invalid_argument("--max-len above 12 is too expensive for the brute force");
    const auto s = oracle::compare_with_enumeration(a.max_len, a.exhaustive_len, a.samples, a.seed);
    out << "sources checked: " << s.sources_checked << "\ntargets checked: " << s.targets_checked
        << "\nmismatches:      " << s.mismatches << '\n';
    if (s.mismatches)
        out << "first mismatch:  " << s.first_mismatch << '\n';
    out << pass_fail(s.mismatches == 0) << '\n';
    return s.mismatches == 0 ? kOk : kDomainFailure;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    try {
        if (a.suite == "yanking")
            return verify_yanking(a, out);
        if (a.suite == "preller")
            return verify_preller(a, out);
        if (a.suite == "galois")
            return verify_galois(a, out);
        return verify_oracle(a, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SearchRadiusExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kDomainFailure;
    }
}

// vectors ------------------------------------------------------------------

struct VectorsArgs {
    std::string corpus_path;
    std::string contexts_path;
    std::size_t window = 3;
};

bool read_file(const std::string& path, std::string& text) {
    std::ifstream in(path);
    if (!in)
        return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

int cmd_vectors(const VectorsArgs& a, std::ostream& out, std::ostream& err) {
    std::string corpus;
    std::string contexts;
    if (!read_file(a.contexts_path, contexts)) {
        err << "error: cannot read context file '" << a.contexts_path << "'\n";
        return kDomainFailure;
    }
    if (!read_file(a.corpus_path, corpus)) {
        err << "error: cannot read corpus '" << a.corpus_path << "'\n";
        return kDomainFailure;
    }
    std::optional<ContextConfig> cfg;
    try {
        cfg.emplace(parse_context_list(contexts), a.window);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    const auto tokens = tokenize(corpus, *cfg);
    write_vectors_tsv(out, count_cooccurrence(tokens, *cfg), *cfg);
    return kOk;
}

// demo ---------------------------------------------------------------------

int cmd_demo(std::ostream& out) {
    const Lexicon lex = fruit_lexicon();
    const auto& f = lex.assignment();
    const std::vector<std::string> words{"bananas", "are", "fruit"};

    out << "Step 1: assign each word a grammar type\n";
    for (const auto& w : words)
        out << "  " << std::left << std::setw(8) << w << std::right << " : " << to_string(lex.lookup(w)[0]->gtype)
            << '\n';

    const auto& n = f.space_of(BasicType("n"));
    const auto& s = f.space_of(BasicType("s"));
    out << "Step 2: fix a noun space and a sentence space\n  N = span{";
    for (std::size_t i = 0; i < n.dim(); ++i)
        out << (i ? ", " : "") << (*n.basis_labels())[i];
    out << "} (dim " << n.dim() << "), S (dim " << s.dim() << ")\n";

    out << "Step 3: word states\n";
    for (const auto& w : words) {
        const auto& e = *lex.lookup(w)[0];
        out << "  " << std::left << std::setw(8) << w << std::right << " = " << format_tensor(e.state) << '\n';
    }
    const auto are = state_to_process(Tensor({n, n}, std::vector<double>(lex.lookup("are")[0]->state.data().begin(),
                                                                          lex.lookup("are")[0]->state.data().end())));
    out << "  'are' as a matrix N -> N:\n";
    for (std::size_t r = 0; r < are.rows(); ++r) {
        out << "    ";
        for (std::size_t c = 0; c < are.cols(); ++c)
            out << (c ? " " : "") << format_number(are(r, c));
        out << '\n';
    }

    const auto analysis = sentence_meaning(words, lex, f, parse_type_expr("s"));
    out << "Step 4: choose a type reduction of " << to_string(analysis.concat_type) << " to s\n"
        << "  cups: " << format_cups(analysis.chosen.cups()) << '\n';
    std::istringstream diagram(render_diagram(analysis.chosen));
    for (std::string line; std::getline(diagram, line);)
        out << "    " << line << '\n';

    const double value = analysis.meaning.data()[0];
    out << "Step 5: apply F\n"
        << "  (eps_N (x) 1_S (x) eps_N)(bananas (x) are (x) fruit) = " << format_number(value) << " ("
        << truth_gloss(value) << ")\n";
    const bool ok = value == 1074.0;
    out << "check: expected 1074 ... " << (ok ? "ok" : "MISMATCH") << '\n';
    return ok ? kOk : kDomainFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compositional distributional meaning: pregroup reductions lifted to tensor contractions",
                 "discocat"};
    app.require_subcommand(1);

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "List every reduction of a type expression to a target type");
    reduce->add_option("type", reduce_args.type_expr, "Type expression, e.g. \"n n^r s n^l n\"")->required();
    reduce->add_option("target,--target", reduce_args.target, "Target type (default s)");
    reduce->add_option("--limit", reduce_args.limit, "Maximum number of reductions to list");
    reduce->add_flag("--json", reduce_args.json, "Emit JSON");

    MeaningArgs meaning_args;
    auto* meaning = app.add_subcommand("meaning", "Compute the meaning of a sentence");
    meaning->add_option("words", meaning_args.words, "Words of the sentence")->required();
    meaning->add_option("--lexicon", meaning_args.lexicon_path, "Lexicon JSON file (default: built-in toy model)");
    meaning->add_option("--target", meaning_args.target, "Target type (default s)");
    meaning->add_option("--parse-index", meaning_args.parse_index, "Which parse to evaluate (default 0)");
    meaning->add_flag("--all", meaning_args.all, "Evaluate every parse");
    meaning->add_flag("--json", meaning_args.json, "Emit JSON");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", verify_args.suite, "yanking | preller | galois | oracle")
        ->required()
        ->check(CLI::IsMember({"yanking", "preller", "galois", "oracle"}));
    verify->add_option("--dims", verify_args.dims, "Dimension range A..B (yanking, preller)");
    verify->add_option("--window", verify_args.window, "Integer window A..B (galois), e.g. --window=-100..100");
    verify->add_option("--max-len", verify_args.max_len, "Longest type to check (oracle)");
    verify->add_option("--exhaustive-len", verify_args.exhaustive_len, "Check every type up to this length (oracle)");
    verify->add_option("--samples", verify_args.samples, "Seeded samples above the exhaustive length (oracle)");
    verify->add_option("--seed", verify_args.seed, "Random seed (oracle, galois)");

    VectorsArgs vectors_args;
    auto* vectors = app.add_subcommand("vectors", "Count co-occurrences and print word vectors as TSV");
    vectors->add_option("corpus", vectors_args.corpus_path, "Plain-text corpus")->required();
    vectors->add_option("--contexts", vectors_args.contexts_path, "Context words, one per line")->required();
    vectors->add_option("--window", vectors_args.window, "Window size k (default 3)")->check(CLI::PositiveNumber);

    auto* demo = app.add_subcommand("demo", "Walk through the bananas-are-fruit example");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (reduce->parsed())
        return cmd_reduce(reduce_args, out, err);
    if (meaning->parsed())
        return cmd_meaning(meaning_args, out, err);
    if (verify->parsed())
        return cmd_verify(verify_args, out, err);
    if (vectors->parsed())
        return cmd_vectors(vectors_args, out, err);
    if (demo->parsed())
        return cmd_demo(out);
    return kUsage;
}

} // namespace discocat::cli
