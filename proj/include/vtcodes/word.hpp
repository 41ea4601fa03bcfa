#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vtcodes/errors.hpp"

namespace vtcodes {

using Symbol = std::uint32_t;

/// A word over the alphabet {0, ..., q-1}. Immutable after construction:
/// there is no mutating API, so values may be shared freely across threads.
class Word {
public:
    // Empty word over alphabet q.
    explicit Word(Symbol q);
    // Validates every symbol against q.
    Word(std::vector<Symbol> symbols, Symbol q);

    // n identical symbols; convenience for run-heavy tests.
    static Word repeated(Symbol symbol, std::size_t n, Symbol q);

    Symbol q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    // Plain integer sum of the symbols.
    std::uint64_t symbol_sum() const noexcept;

    // Words over different alphabets never compare equal.
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

    auto begin() const noexcept { return symbols_.cbegin(); }
    auto end() const noexcept { return symbols_.cend(); }

private:
    std::vector<Symbol> symbols_;
    Symbol q_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

// Text formats: a contiguous digit string when q <= 10 (the conventional
// notation for small alphabets), comma-separated decimal integers otherwise.
// parse_word accepts either form for q <= 10 and is the exact inverse of
// format_word.
Word parse_word(const std::string& text, Symbol q);
std::string format_word(const Word& w);

/// Parameters (q, n, a) of one code VT*_a(n;q): words of length n over
/// alphabet q whose transformed syndrome is congruent to a mod q*n.
/// Construction validates q >= 2, n >= 2, 0 <= a < q*n and derives
/// t = ceil(log_q n) and the message length k = n - t - 1.
class CodeParams {
public:
    CodeParams(Symbol q, std::uint64_t n, std::uint64_t a);

    Symbol q() const noexcept { return q_; }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t a() const noexcept { return a_; }
    std::uint64_t modulus() const noexcept { return static_cast<std::uint64_t>(q_) * n_; }
    std::uint32_t t() const noexcept { return t_; }
    std::uint64_t k() const noexcept { return k_; }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;

private:
    Symbol q_;
    std::uint64_t n_;
    std::uint64_t a_;
    std::uint32_t t_;
    std::uint64_t k_;
};

CodeParams validate_params(Symbol q, std::uint64_t n, std::uint64_t a);
CodeParams validate_params(const CodeParams& p);

// Smallest t >= 0 with q^t >= n.
std::uint32_t ceil_log(std::uint64_t q, std::uint64_t n);

}  // namespace vtcodes
