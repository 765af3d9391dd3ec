// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include "discocat/cli.hpp"
#include "discocat/error.hpp"
#include "discocat/functor.hpp"
#include "discocat/lexicon.hpp"
#include "discocat/meaning.hpp"
#include "discocat/monotone.hpp"
#include "discocat/oracle.hpp"
#include "discocat/pregroup.hpp"

#include "json.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace discocat;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kData = DISCOCAT_DATA_DIR;
const std::vector<std::string> kShippedLexicons{"fruit.json", "telescope.json"};

struct Outcome {
    bool ok;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << "s";
    return os.str();
}

Outcome golden_example() {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    const int code = cli::run({"meaning", "--lexicon", (kData / "lexicons" / "fruit.json").string(), "bananas", "are",
                               "fruit", "--json"},
                              out, err);
    const double t = seconds_since(start);
    if (code != cli::kOk)
        return {false, "exit " + std::to_string(code) + ": " + err.str()};
    const auto meaning = json::parse(out.str()).at("meaning");
    const bool ok = meaning.at("dims") == json::array({1}) && meaning.at("data") == json::array({1074}) && t < 1.0;
    return {ok, "meaning " + meaning.at("data").dump() + " in " + fmt_seconds(t)};
}

Outcome grammar_fixtures() {
    const auto adj = enumerate_reductions(parse_type_expr("n n^l n"), parse_type_expr("n"));
    const auto tv = enumerate_reductions(parse_type_expr("n n^r s n^l n"), parse_type_expr("s"));
    const bool ok = adj.size() == 1 && adj[0].cups() == std::vector<Cup>{{1, 2}} && tv.size() == 1 &&
                    tv[0].cups() == std::vector<Cup>{{0, 1}, {3, 4}};
    return {ok, std::to_string(adj.size()) + " and " + std::to_string(tv.size()) + " diagram(s)"};
}

Outcome yanking_suite() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t passed = 0;
    for (std::size_t d = 1; d <= 16; ++d)
        passed += yanking_check(d, 0.0) ? 1 : 0;
    const double t = seconds_since(start);
    return {passed == 16 && t < 1.0, std::to_string(passed) + "/16 dims exact in " + fmt_seconds(t)};
}

Outcome preller_obstruction_suite() {
    std::size_t passed = 0;
    for (std::size_t d = 2; d <= 8; ++d) {
        const auto w = preller_obstruction(d);
        // e1 (x) e2 (x) e1 has flat index (0*d + 1)*d + 0 = d
        bool kills = true;
        for (std::size_t r = 0; r < w.map.rows(); ++r)
            kills = kills && w.map(r, d) == 0.0;
        passed += (!w.is_identity && kills) ? 1 : 0;
    }
    const bool one = preller_obstruction(1).is_identity;
    return {passed == 7 && one,
            std::to_string(passed) + "/7 dims non-injective; dim 1 " + (one ? "identity" : "NOT identity")};
}

Outcome oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    const auto s = oracle::compare_with_enumeration(8, 5, 10000, 20180601);
    const double t = seconds_since(start);
    std::string detail = std::to_string(s.sources_checked) + " sources, " + std::to_string(s.targets_checked) +
                         " targets, " + std::to_string(s.mismatches) + " mismatches in " + fmt_seconds(t);
    if (s.mismatches)
        detail += "; first: " + s.first_mismatch;
    return {s.mismatches == 0 && s.sources_checked >= 9331 + 10000 && t < 60.0, detail};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a / b - ((a % b != 0) && ((a < 0) != (b < 0)));
}

Outcome galois_suite() {
    const IntWindow window{-100, 100};
    const MonotoneMap twice("2m", [](std::int64_t m) { return 2 * m; });
    bool closed = true;
    for (std::int64_t n = window.lo; n <= window.hi; ++n)
        closed = closed && monotone_left_dual(twice, n) == floor_div(n + 1, 2) &&
                 monotone_right_dual(twice, n) == floor_div(n, 2);
    const bool twice_ok = galois_check(twice, window);

    // Sampled maps: searched duals against a linear scan, then both adjunctions.
    std::size_t sampled_ok = 0;
    const auto maps = sample_monotone_maps(20180601, 5);
    for (const auto& f : maps) {
        bool agree = true;
        for (std::int64_t n = window.lo; n <= window.hi; ++n) {
            std::optional<std::int64_t> left, right;
            for (std::int64_t m = -2000; m <= 2000; ++m) {
                if (!left && n <= f(m))
                    left = m;
                if (f(m) <= n)
                    right = m;
            }
            agree = agree && left && right && monotone_left_dual(f, n) == *left && monotone_right_dual(f, n) == *right;
        }
        sampled_ok += (agree && galois_check(f, window)) ? 1 : 0;
    }
    return {closed && twice_ok && sampled_ok == maps.size(),
            std::string("2m closed forms ") + (closed ? "match" : "DIFFER") + ", adjunctions " +
                (twice_ok ? "hold" : "FAIL") + "; " + std::to_string(sampled_ok) + "/5 sampled maps"};
}

// Views any tensor as a state of V (x) W with V its first factor (the unit
// for scalars) and W the rest flattened, then round trips through a map.
bool reshape_round_trip(const Tensor& t) {
    const auto dims = t.dims();
    const std::size_t first = dims.empty() ? 1 : dims.front();
    const std::size_t rest = t.size() / first;
    const Tensor flat({VectorSpace("V", first), VectorSpace("W", rest)},
                      std::vector<double>(t.data().begin(), t.data().end()));
    const auto f = state_to_process(flat);
    const auto back = process_to_state(f);
    if (!(back == flat) || !(state_to_process(back) == f))
        return false;
    const Tensor restored(t.spaces(), std::vector<double>(back.data().begin(), back.data().end()));
    return restored == t;
}

Outcome process_state_duality() {
    std::size_t tensors = 0, passed = 0;
    for (const auto& name : kShippedLexicons) {
        const auto lex = load_lexicon(kData / "lexicons" / name);
        for (const auto& e : lex.entries()) {
            ++tensors;
            passed += reshape_round_trip(e.state) ? 1 : 0;
        }
    }
    const bool eta = state_to_process(make_eta(VectorSpace("A", 3))) == LinearMap::identity(VectorSpace("A", 3));
    return {passed == tensors && tensors > 0 && eta, std::to_string(passed) + "/" + std::to_string(tensors) +
                                                         " fixture tensors; eta(3) " +
                                                         (eta ? "is I3" : "is NOT I3")};
}

Outcome ambiguity_fixture() {
    const auto lex = load_lexicon(kData / "lexicons" / "telescope.json");
    std::ifstream in(kData / "lexicons" / "telescope.expected.json");
    const auto expected = json::parse(in);
    const auto sentence = expected.at("sentence").get<std::vector<std::string>>();
    const auto target = parse_type_expr(expected.at("target").get<std::string>());
    const auto& want = expected.at("parses");

    const auto parses = enumerate_parses(sentence, lex, target);
    bool match = parses.size() == want.size();
    std::vector<std::pair<json, json>> pairs;
    for (std::size_t i = 0; match && i < parses.size(); ++i) {
        json cups = json::array();
        for (const auto& c : parses[i].diagram.cups())
            cups.push_back({c.left, c.right});
        const auto meaning = tensor_to_json(evaluate_parse(sentence, lex, lex.assignment(), parses[i]).meaning);
        match = cups == want[i].at("parse") && meaning == want[i].at("meaning") &&
                json(parses[i].entry_choice) == want[i].at("entry_choice");
        pairs.emplace_back(cups, meaning);
    }
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j)
            seen = seen || (pairs[j].first == pairs[i].first && pairs[j].second == pairs[i].second);
        distinct += seen ? 0 : 1;
    }
    std::set<json> meanings;
    for (const auto& p : pairs)
        meanings.insert(p.second);
    return {match && distinct >= 2, std::to_string(parses.size()) + " parses, " + std::to_string(distinct) +
                                        " distinct pairs, " + std::to_string(meanings.size()) + " distinct meanings, " +
                                        (match ? "match" : "MISMATCH") + " expected output"};
}

Outcome persistence() {
    const fs::path tmp = fs::temp_directory_path() / ("discocat-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    std::size_t round_trips = 0;
    for (const auto& name : kShippedLexicons) {
        const auto lex = load_lexicon(kData / "lexicons" / name);
        save_lexicon(lex, tmp / name);
        round_trips += load_lexicon(tmp / name) == lex ? 1 : 0;
    }
    fs::remove_all(tmp);

    struct Bad {
        const char* text;
        const char* path;
    };
    const std::vector<Bad> bad{
        {"{\"spaces\": ", "$"},
        {R"({"entries": []})", "$.spaces"},
        {R"({"spaces": {"n": {"dim": -1}}, "entries": []})", "$.spaces.n.dim"},
        {R"({"spaces": {"n": {"dim": 2}}, "entries": [{"word": "w", "type": "n^x", "tensor": {}}]})",
         "$.entries[0].type"},
        {R"({"spaces": {"n": {"dim": 2}}, "entries": [{"word": "w", "type": "n", "tensor": {"dims": [3], "data": [1,2,3]}}]})",
         "$.entries[0].tensor.dims"},
        {R"({"spaces": {"n": {"dim": 2}}, "entries": [{"word": "w", "type": "n", "tensor": {"dims": [2], "data": [1]}}]})",
         "$.entries[0].tensor.data"},
    };
    std::size_t diagnosed = 0;
    for (const auto& b : bad) {
        try {
            parse_lexicon(b.text);
        } catch (const SchemaError& e) {
            diagnosed += e.path() == b.path ? 1 : 0;
        }
    }
    return {round_trips == kShippedLexicons.size() && diagnosed == bad.size(),
            std::to_string(round_trips) + "/" + std::to_string(kShippedLexicons.size()) + " lossless, " +
                std::to_string(diagnosed) + "/" + std::to_string(bad.size()) + " malformed files diagnosed"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 golden example", golden_example},
        {"2 grammar fixtures", grammar_fixtures},
        {"3 yanking", yanking_suite},
        {"4 snake obstruction", preller_obstruction_suite},
        {"5 reduction oracle", oracle_equivalence},
        {"6 galois connections", galois_suite},
        {"7 process-state duality", process_state_duality},
        {"8 ambiguity fixture", ambiguity_fixture},
        {"9 persistence", persistence},
    };
    std::size_t failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << '\n';
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures ? 1 : 0;
}
