#include <doctest.h>

#include "vtcodes/word.hpp"

using namespace vtcodes;

TEST_CASE("word construction validates the alphabet") {
    CHECK_NOTHROW(Word({0, 1, 3}, 4));
    CHECK_THROWS_WITH_AS(Word({0, 1, 0, 4}, 4), "symbol out of alphabet", ArgumentError);
    CHECK_THROWS_AS(Word({0}, 1), ArgumentError);
    CHECK(Word(5).empty());
    CHECK(Word::repeated(2, 4, 3) == Word({2, 2, 2, 2}, 3));
}

TEST_CASE("symbol_sum") {
    CHECK(Word({0, 1, 0, 3, 1, 1, 2, 0, 1, 3}, 4).symbol_sum() == 12);
    CHECK(Word(2).symbol_sum() == 0);
}

TEST_CASE("parse_word handles digit strings for small alphabets") {
    CHECK(parse_word("0103112013", 4) == Word({0, 1, 0, 3, 1, 1, 2, 0, 1, 3}, 4));
    CHECK(parse_word("0,1,0,3", 4) == Word({0, 1, 0, 3}, 4));
    CHECK_THROWS_WITH_AS(parse_word("0104", 4), "symbol out of alphabet", ArgumentError);
    CHECK_THROWS_AS(parse_word("", 4), ArgumentError);
    CHECK_THROWS_AS(parse_word("01a2", 4), ArgumentError);
    CHECK_THROWS_AS(parse_word("0,,1", 4), ArgumentError);
    CHECK_THROWS_AS(parse_word("-1,2", 4), ArgumentError);
}

TEST_CASE("parse_word uses comma tokens for large alphabets") {
    const Word w = parse_word("11,3,0", 12);
    CHECK(w.size() == 3);
    CHECK(w[0] == 11);
    CHECK(format_word(w) == "11,3,0");
    CHECK(parse_word(format_word(w), 12) == w);
    CHECK_THROWS_AS(parse_word("12,0", 12), ArgumentError);
}

TEST_CASE("format_word round-trips") {
    const Word w = parse_word("2101", 3);
    CHECK(format_word(w) == "2101");
    CHECK(parse_word(format_word(w), 3) == w);
}

TEST_CASE("ordering is shortlex") {
    CHECK(Word({1}, 2) < Word({0, 0}, 2));
    CHECK(Word({0, 1}, 2) < Word({1, 0}, 2));
    CHECK(Word({0, 1}, 2) < Word({0, 1, 0}, 2));
    CHECK_FALSE(Word({0, 1}, 2) == Word({0, 1}, 3));  // alphabets differ
}

TEST_CASE("WordHash is consistent with equality") {
    WordHash h;
    CHECK(h(parse_word("012", 3)) == h(Word({0, 1, 2}, 3)));
    CHECK(h(parse_word("012", 3)) != h(parse_word("021", 3)));  // not guaranteed, but FNV here
}

TEST_CASE("ceil_log is the smallest t with q^t >= n") {
    CHECK(ceil_log(2, 1) == 0);
    CHECK(ceil_log(2, 2) == 1);
    CHECK(ceil_log(2, 1024) == 10);
    CHECK(ceil_log(2, 1025) == 11);
    CHECK(ceil_log(3, 10) == 3);
    CHECK(ceil_log(4, 10) == 2);
    CHECK(ceil_log(10, 3) == 1);
    CHECK(ceil_log(4, 1048576) == 10);
}

TEST_CASE("CodeParams derives t and k and validates bounds") {
    const CodeParams p(3, 10, 0);
    CHECK(p.modulus() == 30);
    CHECK(p.t() == 3);
    CHECK(p.k() == 6);

    const CodeParams p4(4, 10, 0);
    CHECK(p4.t() == 2);
    CHECK(p4.k() == 7);

    CHECK_THROWS_AS(CodeParams(3, 10, 30), ArgumentError);  // a must be < q*n
    CHECK_THROWS_AS(CodeParams(1, 10, 0), ArgumentError);
    CHECK_THROWS_AS(CodeParams(3, 1, 0), ArgumentError);
    CHECK_NOTHROW(validate_params(3, 10, 29));
    CHECK(validate_params(CodeParams(2, 4, 7)) == CodeParams(2, 4, 7));
}
