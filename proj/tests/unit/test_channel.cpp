#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "helpers.hpp"
#include "vtcodes/channel.hpp"

using namespace vtcodes;
using testing_helpers::for_each_word;

TEST_CASE("single-symbol edits") {
    const Word x = parse_word("0103112013", 4);
    CHECK(format_word(delete_at(x, 1)) == "103112013");
    CHECK(format_word(delete_at(x, 10)) == "010311201");
    CHECK(format_word(delete_at(x, 4)) == "010112013");
    CHECK(format_word(insert_at(x, 1, 3)) == "30103112013");
    CHECK(format_word(insert_at(x, 11, 2)) == "0103112013" "2");
    CHECK(delete_at(insert_at(x, 5, 2), 5) == x);

    CHECK_THROWS_AS(delete_at(x, 0), ArgumentError);
    CHECK_THROWS_AS(delete_at(x, 11), ArgumentError);
    CHECK_THROWS_AS(insert_at(x, 0, 1), ArgumentError);
    CHECK_THROWS_AS(insert_at(x, 12, 1), ArgumentError);
    CHECK_THROWS_WITH_AS(insert_at(x, 1, 4), "symbol out of alphabet", ArgumentError);
}

TEST_CASE("subsequence relation") {
    CHECK(is_subsequence(parse_word("13", 4), parse_word("132", 4)));
    CHECK(is_subsequence(parse_word("12", 4), parse_word("132", 4)));
    CHECK_FALSE(is_subsequence(parse_word("31", 4), parse_word("132", 4)));
    CHECK(is_subsequence(Word(4), parse_word("132", 4)));  // empty word
    CHECK_FALSE(is_subsequence(parse_word("1321", 4), parse_word("132", 4)));
    CHECK_THROWS_WITH_AS(is_subsequence(parse_word("13", 5), parse_word("132", 4)),
                         "shape mismatch", ArgumentError);
}

TEST_CASE("indel ball contents") {
    const std::vector<Word> ball = indel_ball(parse_word("0", 2));
    REQUIRE(ball.size() == 4);
    CHECK(ball[0] == Word(2));  // the empty word
    CHECK(format_word(ball[1]) == "00");
    CHECK(format_word(ball[2]) == "01");
    CHECK(format_word(ball[3]) == "10");
}

TEST_CASE("indel ball is sorted, deduplicated, and excludes the center") {
    for (auto [q, n] : {std::pair<Symbol, std::uint64_t>{2, 5}, {3, 4}}) {
        for_each_word(q, n, [&](const Word& w) {
            const std::vector<Word> ball = indel_ball(w);
            REQUIRE(std::is_sorted(ball.begin(), ball.end()));
            REQUIRE(std::adjacent_find(ball.begin(), ball.end()) == ball.end());
            for (const Word& b : ball) {
                REQUIRE(b != w);
                REQUIRE((b.size() == n - 1 || b.size() == n + 1));
            }
        });
    }
    // a constant word has the smallest possible ball: n+3 elements
    for (std::uint64_t n : {std::uint64_t{3}, std::uint64_t{8}}) {
        CHECK(indel_ball(Word(std::vector<Symbol>(n, 0), 2)).size() == n + 3);
    }
}

TEST_CASE("disjointness checker finds an overlap witness") {
    const std::vector<Word> bad = {parse_word("213", 4), parse_word("132", 4)};
    const auto witness = check_code_disjointness(bad);
    REQUIRE(witness.has_value());
    CHECK(format_word(witness->x) == "213");
    CHECK(format_word(witness->y) == "132");
    CHECK(format_word(witness->common) == "13");
    CHECK(is_subsequence(witness->common, witness->x));
    CHECK(is_subsequence(witness->common, witness->y));
}

TEST_CASE("disjointness checker accepts codes that correct one indel") {
    VtStarCode code(CodeParams(3, 5, 0));
    CHECK_FALSE(check_code_disjointness(code.enumerate()).has_value());

    CHECK_FALSE(check_code_disjointness({}).has_value());
    CHECK_FALSE(check_code_disjointness({parse_word("0103112013", 4)}).has_value());

    CHECK_THROWS_WITH_AS(
        check_code_disjointness({parse_word("00", 2), parse_word("000", 2)}),
        "shape mismatch", ArgumentError);
    CHECK_THROWS_AS(check_code_disjointness({parse_word("00", 2), parse_word("00", 3)}),
                    ArgumentError);
}

TEST_CASE("random corruption is deterministic and mode-respecting") {
    const Word w = parse_word("0212", 3);
    const auto [c1, r1] = random_corrupt(w, 42, CorruptMode::either);
    const auto [c2, r2] = random_corrupt(w, 42, CorruptMode::either);
    CHECK(c1 == c2);
    CHECK(r1.kind == r2.kind);
    CHECK(r1.position == r2.position);
    CHECK(r1.symbol == r2.symbol);
    CHECK(r1.seed == 42);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto [d, rd] = random_corrupt(w, seed, CorruptMode::deletion);
        CHECK(d.size() == w.size() - 1);
        CHECK(rd.kind == ErrorKind::deletion);
        CHECK_FALSE(rd.symbol.has_value());
        CHECK(d == delete_at(w, rd.position));

        const auto [i, ri] = random_corrupt(w, seed, CorruptMode::insertion);
        CHECK(i.size() == w.size() + 1);
        CHECK(ri.kind == ErrorKind::insertion);
        REQUIRE(ri.symbol.has_value());
        CHECK(i == insert_at(w, ri.position, *ri.symbol));
    }

    CHECK_THROWS_WITH_AS(random_corrupt(Word(3), 1, CorruptMode::deletion), "empty word",
                         ArgumentError);
    // either-mode on the empty word can only insert
    const auto [c, r] = random_corrupt(Word(3), 9, CorruptMode::either);
    CHECK(c.size() == 1);
    CHECK(r.kind == ErrorKind::insertion);
}

TEST_CASE("random corruption is close to uniform over all outcomes") {
    const Word w = parse_word("0212", 3);
    // outcomes: 4 deletions + 5 positions * 3 symbols = 19 equally likely draws
    const double total = 10000.0;
    const double p = 1.0 / 19.0;
    const double tol = 5.0 * std::sqrt(total * p * (1.0 - p));

    std::map<std::tuple<int, std::uint64_t, Symbol>, std::uint64_t> counts;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const auto [c, r] = random_corrupt(w, seed, CorruptMode::either);
        const Symbol sym = r.symbol.value_or(Symbol{3});
        ++counts[{static_cast<int>(r.kind), r.position, sym}];
    }
    REQUIRE(counts.size() == 19);
    for (const auto& [outcome, count] : counts) {
        CHECK(std::abs(static_cast<double>(count) - total * p) < tol);
    }
}

TEST_CASE("fuzz round-trip reports") {
    VtStarCode code(CodeParams(4, 10, 0));

    const FuzzReport empty = fuzz_roundtrip(code, 0, 5);
    CHECK(empty.trials == 0);
    CHECK(empty.failures == 0);
    CHECK(empty.witnesses.empty());

    const FuzzReport r = fuzz_roundtrip(code, 1000, 7);
    CHECK(r.trials == 1000);
    CHECK(r.failures == 0);
    CHECK(r.q == 4);
    CHECK(r.n == 10);
    CHECK(r.a == 0);
    CHECK(r.seed == 7);

    // replaying the same seed is bit-identical
    const FuzzReport again = fuzz_roundtrip(code, 1000, 7);
    CHECK(again.failures == r.failures);

    std::ostringstream os;
    os << r;
    CHECK(os.str() == "fuzz q=4 n=10 a=0 seed=7 trials=1000 failures=0\n");
}

TEST_CASE("fuzzing covers every residue of a small code") {
    for (std::uint64_t a = 0; a < 12; ++a) {
        VtStarCode code(CodeParams(2, 6, a));
        CHECK(fuzz_roundtrip(code, 100, a + 1).failures == 0);
    }
}

TEST_CASE("brute-force reference decoder") {
    VtStarCode code(CodeParams(3, 5, 0));
    const std::vector<Word> members = code.enumerate();
    const Word x = members[3];
    CHECK(brute_force_indel_decode(members, x) == x);
    CHECK(brute_force_indel_decode(members, delete_at(x, 2)) == x);
    CHECK(brute_force_indel_decode(members, insert_at(x, 4, 1)) == x);

    // ambiguous: "13" lies in the balls of both 213 and 132
    const std::vector<Word> bad = {parse_word("213", 4), parse_word("132", 4)};
    CHECK_THROWS_WITH_AS(brute_force_indel_decode(bad, parse_word("13", 4)),
                         "not decodable", UncorrectableError);
    // unreachable word
    CHECK_THROWS_WITH_AS(brute_force_indel_decode(bad, parse_word("000", 4)),
                         "not decodable", UncorrectableError);
}
