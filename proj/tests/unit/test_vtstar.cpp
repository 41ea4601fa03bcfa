#include <doctest.h>

#include <map>
#include <numeric>

#include "helpers.hpp"
#include "vtcodes/vtstar.hpp"

using namespace vtcodes;
using testing_helpers::for_each_word;
using testing_helpers::plain_syndrome;

TEST_CASE("syndrome returns both the exact integer and the residue") {
    const Word y = parse_word("3112032323", 4);
    const SyndromeValue s = syndrome(y);
    CHECK(s.unreduced == 120);
    CHECK(s.modulus == 40);
    CHECK(s.value == 0);

    const SyndromeValue s4 = syndrome(parse_word("111", 2), 4);
    CHECK(s4.unreduced == 6);
    CHECK(s4.value == 2);
    CHECK_THROWS_AS(syndrome(Word(2)), ArgumentError);
}

TEST_CASE("membership of the worked codeword") {
    VtStarCode code(CodeParams(4, 10, 0));
    const Word x = parse_word("0103112013", 4);
    CHECK(code.is_member(x));
    CHECK(code.parity_residue() == 0);
    CHECK(x.symbol_sum() % 4 == 0);
    CHECK_FALSE(code.is_member(parse_word("1103112013", 4)));
    CHECK_THROWS_WITH_AS(code.is_member(parse_word("013112013", 4)), "shape mismatch",
                         ArgumentError);
    CHECK_THROWS_AS(code.is_member(parse_word("0103112013", 5)), ArgumentError);
}

TEST_CASE("enumerate lists exactly the members, lexicographically") {
    VtStarCode code(CodeParams(2, 2, 0));
    const std::vector<Word> members = code.enumerate();
    REQUIRE(members.size() == 1);
    CHECK(format_word(members[0]) == "00");

    // independent oracle: recompute membership from the definition
    for (std::uint64_t a = 0; a < 4; ++a) {
        VtStarCode c(CodeParams(2, 2, a));
        std::vector<Word> expected;
        for_each_word(2, 2, [&](const Word& w) {
            if (plain_syndrome(diff(w)) % 4 == a) expected.push_back(w);
        });
        CHECK(c.enumerate() == expected);
    }

    // lexicographic order + every member passes is_member
    VtStarCode c35(CodeParams(3, 5, 7));
    const std::vector<Word> m35 = c35.enumerate();
    CHECK(std::is_sorted(m35.begin(), m35.end()));
    for (const Word& w : m35) CHECK(c35.is_member(w));
}

TEST_CASE("codes with fixed (n,q) partition the whole space") {
    for (auto [q, n] : {std::pair<Symbol, std::uint64_t>{3, 4}, {2, 6}, {4, 3}}) {
        std::uint64_t total = 0;
        std::uint64_t space = 1;
        for (std::uint64_t i = 0; i < n; ++i) space *= q;
        for (std::uint64_t a = 0; a < q * n; ++a) {
            total += VtStarCode(CodeParams(q, n, a)).enumerate().size();
        }
        CHECK(total == space);
    }
}

TEST_CASE("members satisfy the parity congruence") {
    for (Symbol q : {2, 3}) {
        for (std::uint64_t n : {4, 5}) {
            for (std::uint64_t a = 0; a < q * n; ++a) {
                VtStarCode code(CodeParams(q, n, a));
                for (const Word& w : code.enumerate()) {
                    CHECK(w.symbol_sum() % q == a % q);
                }
            }
        }
    }
}

TEST_CASE("enumeration budget is a hard refusal") {
    VtStarCode code(CodeParams(2, 4, 0));
    CHECK_THROWS_WITH_AS(code.enumerate(10), "enumeration too large", BudgetError);
    CHECK_THROWS_AS(best_syndrome(64, 2, kDefaultEnumerationBudget), BudgetError);
    CHECK_NOTHROW(code.enumerate(16));
}

TEST_CASE("best_syndrome maximizes the class size, smallest residue on ties") {
    const BestSyndrome b42 = best_syndrome(4, 2);
    CHECK(b42.a == 0);
    CHECK(b42.cardinality == 2);
    CHECK(b42.cardinality * 8 >= 16);  // pigeonhole

    const BestSyndrome b53 = best_syndrome(5, 3);
    CHECK(b53.a == 0);
    CHECK(b53.cardinality == 17);
    CHECK(b53.cardinality * 15 >= 243);

    const std::vector<std::uint64_t> hist = syndrome_histogram(2, 2);
    CHECK(hist == std::vector<std::uint64_t>{1, 1, 1, 1});
    CHECK(best_syndrome(2, 2).cardinality == 1);
}

TEST_CASE("binary VT membership") {
    CHECK(binary_vt_member(4, 0, parse_word("0000", 2)));
    CHECK(binary_vt_member(4, 3, parse_word("0010", 2)));
    CHECK_FALSE(binary_vt_member(4, 1, parse_word("0010", 2)));
    CHECK_THROWS_WITH_AS(binary_vt_member(4, 0, parse_word("0000", 4)), "shape mismatch",
                         ArgumentError);
    CHECK_THROWS_AS(binary_vt_member(3, 0, parse_word("0000", 2)), ArgumentError);
    CHECK_THROWS_AS(binary_vt_member(4, 5, parse_word("0000", 2)), ArgumentError);

    // Pigeonhole for the binary baseline, against a definitional oracle.
    for (std::uint64_t n = 2; n <= 10; ++n) {
        std::vector<std::uint64_t> sizes(n + 1, 0);
        for_each_word(2, n, [&](const Word& w) { ++sizes[plain_syndrome(w) % (n + 1)]; });
        const std::uint64_t max = *std::max_element(sizes.begin(), sizes.end());
        CHECK(max * (n + 1) >= (std::uint64_t{1} << n));
        for (std::uint64_t a = 0; a <= n; ++a) {
            std::uint64_t count = 0;
            for_each_word(2, n, [&](const Word& w) {
                if (binary_vt_member(n, a, w)) ++count;
            });
            CHECK(count == sizes[a]);
        }
    }
}

TEST_CASE("signature marks non-decreasing steps") {
    CHECK(format_word(signature(parse_word("0000", 3))) == "111");
    CHECK(format_word(signature(parse_word("0211301", 4))) == "101101");
    CHECK(format_word(signature(parse_word("3210", 4))) == "000");
    CHECK_THROWS_WITH_AS(signature(parse_word("1", 4)), "too short", ArgumentError);
}

TEST_CASE("Tenengolts membership and its pigeonhole bound") {
    CHECK(tenengolts_member(TenengoltsParams(3, 4, 2, 0), parse_word("0000", 3)));
    CHECK_FALSE(tenengolts_member(TenengoltsParams(3, 4, 2, 1), parse_word("0000", 3)));
    CHECK_THROWS_AS(tenengolts_member(TenengoltsParams(3, 4, 2, 0), parse_word("000", 3)),
                    ArgumentError);
    CHECK_THROWS_AS(TenengoltsParams(3, 4, 4, 0), ArgumentError);  // a < n required
    CHECK_THROWS_AS(TenengoltsParams(3, 4, 0, 3), ArgumentError);  // b < q required

    // max_{a,b} |T_{a,b}(5;3)| >= 3^5 / 15
    std::map<std::pair<std::uint64_t, Symbol>, std::uint64_t> sizes;
    for (std::uint64_t a = 0; a < 5; ++a) {
        for (Symbol b = 0; b < 3; ++b) {
            TenengoltsParams tp(3, 5, a, b);
            for_each_word(3, 5, [&](const Word& w) {
                if (tenengolts_member(tp, w)) ++sizes[{a, b}];
            });
        }
    }
    std::uint64_t total = 0, max = 0;
    for (const auto& [key, size] : sizes) {
        total += size;
        max = std::max(max, size);
    }
    CHECK(total == 243);  // partition
    CHECK(max * 15 >= 243);
    CHECK(max == 17);
    CHECK(sizes[{0, 0}] == 17);
}
