#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "vtcodes/decoder.hpp"
#include "vtcodes/vtstar.hpp"

namespace vtcodes {

// Single-symbol edits; positions are 1-based like everywhere at the API
// surface. delete_at(insert_at(w, i, v), i) == w.
Word delete_at(const Word& w, std::uint64_t position);
Word insert_at(const Word& w, std::uint64_t position, Symbol symbol);

// true iff `needle` can be obtained from `hay` by deletions only.
bool is_subsequence(const Word& needle, const Word& hay);

// The indel ball: every distinct word reachable by one deletion or one
// insertion, sorted by (length, lexicographic). Run-induced duplicates are
// merged; the ball never contains the word itself.
std::vector<Word> indel_ball(const Word& w);

struct DisjointnessWitness {
    Word x;
    Word y;
    Word common;  // a word in both indel balls
};

// ok (nullopt) iff the indel balls of all pairs of distinct words are
// disjoint, i.e. the set corrects one indel. Otherwise a concrete witness.
std::optional<DisjointnessWitness> check_code_disjointness(const std::vector<Word>& code);

enum class CorruptMode { deletion, insertion, either };

struct Corruption {
    ErrorKind kind = ErrorKind::deletion;
    std::uint64_t position = 0;        // 1-based
    std::optional<Symbol> symbol;      // inserted symbol; absent for deletions
    std::uint64_t seed = 0;
};

// Deterministic given the seed: one bounded draw from a splitmix64 stream
// picks uniformly among all valid (kind, position, symbol) outcomes of the
// mode. mode = deletion on an empty word is an error.
std::pair<Word, Corruption> random_corrupt(const Word& w, std::uint64_t seed, CorruptMode mode);

struct FuzzWitness {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    Word message;
    Corruption corruption;
    std::optional<Word> decoded;  // absent when decoding threw
    std::string error;
};

struct FuzzReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    Symbol q = 0;
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    std::uint64_t seed = 0;
    std::vector<FuzzWitness> witnesses;
};

// One summary line, then one line per failure witness.
std::ostream& operator<<(std::ostream& os, const FuzzReport& report);

// Encode a random message, corrupt it (either mode), decode, compare.
// Trial i draws from its own stream seeded by splitmix(seed, i), so trials
// are order-independent and individually replayable. Failures are data.
FuzzReport fuzz_roundtrip(const VtStarCode& code, std::uint64_t trials, std::uint64_t seed);

// Reference decoder from the definition: the unique codeword whose indel
// ball (or the codeword itself) contains `received`. Zero or several
// candidates -> "not decodable". O(|code| * n); oracle use only.
Word brute_force_indel_decode(const std::vector<Word>& code, const Word& received);

}  // namespace vtcodes
