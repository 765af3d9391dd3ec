#include "discocat/oracle.hpp"

#include "doctest.h"

using namespace discocat;

namespace {

std::vector<oracle::CupList> as_lists(const std::vector<ReductionDiagram>& ds) {
    std::vector<oracle::CupList> out;
    for (const auto& d : ds)
        out.push_back(d.cups());
    return out;
}

} // namespace

TEST_CASE("brute force on small hand-checked cases") {
    // a a^r a a^r: only (0,1) and (2,3) contract; (0,3) alone traps a^r a.
    const auto src = parse_type_expr("a a^r a a^r");
    CHECK(oracle::all_valid_matchings(src) ==
          std::vector<oracle::CupList>{{}, {Cup{0, 1}}, {Cup{0, 1}, Cup{2, 3}}, {Cup{2, 3}}});
    CHECK(oracle::brute_force_reductions(src, CompoundType{}).size() == 1);
    CHECK(oracle::brute_force_reductions(src, parse_type_expr("a a^r")).size() == 2);
    CHECK(oracle::brute_force_reductions(src, src).size() == 1);

    // a a a^r a^r: the nested matching is the only full one
    const auto nested = parse_type_expr("a a a^r a^r");
    CHECK(oracle::brute_force_reductions(nested, CompoundType{}) ==
          std::vector<oracle::CupList>{{Cup{0, 3}, Cup{1, 2}}});
    CHECK(oracle::all_valid_matchings(nested).size() == 3);
}

TEST_CASE("enumeration matches brute force on the adjective and transitive fixtures") {
    for (const auto& [s, t] : {std::pair{"n n^l n", "n"}, std::pair{"n n^r s n^l n", "s"}}) {
        const auto src = parse_type_expr(s);
        const auto tgt = parse_type_expr(t);
        CHECK(as_lists(enumerate_reductions(src, tgt)) == oracle::brute_force_reductions(src, tgt));
    }
}

TEST_CASE("enumeration matches brute force: exhaustive to length 5, sampled to 8") {
    const auto summary = oracle::compare_with_enumeration(8, 5, 2000, 99);
    INFO(summary.first_mismatch);
    CHECK(summary.mismatches == 0);
    CHECK(summary.sources_checked == 9331 + 2000);
}

TEST_CASE("enumeration matches brute force on longer words with four adjoint levels") {
    // Outside the acceptance alphabet: adjoints -2..1 over three bases.
    std::uint64_t state = 12345;
    const auto next = [&] { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
    const char* bases[] = {"a", "b", "c"};
    for (int i = 0; i < 200; ++i) {
        std::vector<SimpleType> simples;
        const std::size_t len = 4 + (next() >> 33) % 5;
        for (std::size_t k = 0; k < len; ++k)
            simples.push_back(SimpleType{BasicType(bases[(next() >> 33) % 3]), static_cast<int>((next() >> 33) % 4) - 2});
        const CompoundType src(simples);
        for (const auto& cups : oracle::all_valid_matchings(src)) {
            std::vector<bool> matched(src.size(), false);
            for (const auto& c : cups)
                matched[c.left] = matched[c.right] = true;
            std::vector<SimpleType> rest;
            for (std::size_t p = 0; p < src.size(); ++p)
                if (!matched[p])
                    rest.push_back(src[p]);
            const CompoundType tgt(rest);
            CHECK(as_lists(enumerate_reductions(src, tgt)) == oracle::brute_force_reductions(src, tgt));
        }
    }
}
