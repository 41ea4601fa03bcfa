#include "vtcodes/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace vtcodes {

namespace {

void require_alphabet(Symbol q) {
    if (q < 2) throw ArgumentError("invalid parameters: q must be at least 2");
}

}  // namespace

Word::Word(Symbol q) : q_(q) { require_alphabet(q); }

Word::Word(std::vector<Symbol> symbols, Symbol q) : symbols_(std::move(symbols)), q_(q) {
    require_alphabet(q);
    for (Symbol s : symbols_) {
        if (s >= q_) throw ArgumentError("symbol out of alphabet");
    }
}

Word Word::repeated(Symbol symbol, std::size_t n, Symbol q) {
    return Word(std::vector<Symbol>(n, symbol), q);
}

std::uint64_t Word::symbol_sum() const noexcept {
    std::uint64_t sum = 0;
    for (Symbol s : symbols_) sum += s;
    return sum;
}

// Shortlex within an alphabet: alphabet, then length, then lexicographic.
// Gives indel balls and enumerations their documented order with plain sort.
std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    if (auto c = a.symbols_.size() <=> b.symbols_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(),
                                                  b.symbols_.begin(), b.symbols_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    // FNV-1a over the symbols, seeded with the alphabet size.
    std::uint64_t h = 14695981039346656037ULL ^ w.q();
    for (Symbol s : w.symbols()) {
        h ^= s;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

Word parse_word(const std::string& text, Symbol q) {
    require_alphabet(q);
    if (text.empty()) throw ArgumentError("parse error: empty word text");

    std::vector<Symbol> symbols;
    if (text.find(',') == std::string::npos && q <= 10) {
        symbols.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') throw ArgumentError("parse error: expected digit");
            symbols.push_back(static_cast<Symbol>(c - '0'));
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view token(text.data() + pos,
                                   (comma == std::string::npos ? text.size() : comma) - pos);
            Symbol value = 0;
            auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
            if (ec != std::errc() || ptr != token.end() || token.empty()) {
                throw ArgumentError("parse error: malformed symbol token");
            }
            symbols.push_back(value);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return Word(std::move(symbols), q);
}

std::string format_word(const Word& w) {
    std::ostringstream out;
    if (w.q() <= 10) {
        for (Symbol s : w) out << static_cast<char>('0' + s);
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << ',';
            out << w[i];
        }
    }
    return out.str();
}

std::uint32_t ceil_log(std::uint64_t q, std::uint64_t n) {
    if (q < 2) throw ArgumentError("invalid parameters: q must be at least 2");
    std::uint32_t t = 0;
    std::uint64_t power = 1;
    while (power < n) {
        ++t;
        if (power > std::numeric_limits<std::uint64_t>::max() / q) break;  // q^t >= 2^64 > n
        power *= q;
    }
    return t;
}

CodeParams::CodeParams(Symbol q, std::uint64_t n, std::uint64_t a) : q_(q), n_(n), a_(a) {
    require_alphabet(q);
    if (n < 2) throw ArgumentError("invalid parameters: n must be at least 2");
    if (n > std::numeric_limits<std::uint64_t>::max() / q) {
        throw ArgumentError("invalid parameters: q*n overflows");
    }
    if (a >= static_cast<std::uint64_t>(q) * n) {
        throw ArgumentError("invalid parameters: a must be less than q*n");
    }
    t_ = ceil_log(q, n);
    k_ = n - t_ - 1;  // t <= n-1 since q^(n-1) >= 2^(n-1) >= n
}

CodeParams validate_params(Symbol q, std::uint64_t n, std::uint64_t a) {
    return CodeParams(q, n, a);
}

CodeParams validate_params(const CodeParams& p) {
    return CodeParams(p.q(), p.n(), p.a());
}

}  // namespace vtcodes
