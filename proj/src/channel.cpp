#include "vtcodes/channel.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

#include "vtcodes/encoders.hpp"
#include "vtcodes/rng.hpp"

namespace vtcodes {

Word delete_at(const Word& w, std::uint64_t position) {
    if (position < 1 || position > w.size()) throw ArgumentError("index out of range");
    std::vector<Symbol> out(w.begin(), w.end());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(position - 1));
    return Word(std::move(out), w.q());
}

Word insert_at(const Word& w, std::uint64_t position, Symbol symbol) {
    if (position < 1 || position > w.size() + 1) throw ArgumentError("index out of range");
    if (symbol >= w.q()) throw ArgumentError("symbol out of alphabet");
    std::vector<Symbol> out(w.begin(), w.end());
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(position - 1), symbol);
    return Word(std::move(out), w.q());
}

bool is_subsequence(const Word& needle, const Word& hay) {
    if (needle.q() != hay.q()) throw ArgumentError("shape mismatch");
    std::size_t i = 0;
    for (std::size_t j = 0; j < hay.size() && i < needle.size(); ++j) {
        if (needle[i] == hay[j]) ++i;
    }
    return i == needle.size();
}

std::vector<Word> indel_ball(const Word& w) {
    std::vector<Word> ball;
    ball.reserve(w.size() + (w.size() + 1) * w.q());
    for (std::uint64_t i = 1; i <= w.size(); ++i) {
        ball.push_back(delete_at(w, i));
    }
    for (std::uint64_t i = 1; i <= w.size() + 1; ++i) {
        for (Symbol v = 0; v < w.q(); ++v) {
            ball.push_back(insert_at(w, i, v));
        }
    }
    std::sort(ball.begin(), ball.end());  // shortlex: deletions first
    ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
    return ball;
}

std::optional<DisjointnessWitness> check_code_disjointness(const std::vector<Word>& code) {
    for (std::size_t i = 1; i < code.size(); ++i) {
        if (code[i].q() != code[0].q() || code[i].size() != code[0].size()) {
            throw ArgumentError("shape mismatch");
        }
    }
    // Map every ball element to the first codeword producing it; a repeat
    // from a different codeword is exactly a disjointness violation.
    std::unordered_map<Word, std::size_t, WordHash> seen;
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (const Word& b : indel_ball(code[i])) {
            auto [it, inserted] = seen.try_emplace(b, i);
            if (!inserted && it->second != i) {
                return DisjointnessWitness{code[it->second], code[i], b};
            }
        }
    }
    return std::nullopt;
}

std::pair<Word, Corruption> random_corrupt(const Word& w, std::uint64_t seed,
                                           CorruptMode mode) {
    const std::uint64_t deletions = mode == CorruptMode::insertion ? 0 : w.size();
    const std::uint64_t insertions =
        mode == CorruptMode::deletion ? 0 : (w.size() + 1) * w.q();
    if (mode == CorruptMode::deletion && w.empty()) throw ArgumentError("empty word");

    SplitMix64 rng(seed);
    const std::uint64_t draw = rng.bounded(deletions + insertions);

    Corruption c;
    c.seed = seed;
    if (draw < deletions) {
        c.kind = ErrorKind::deletion;
        c.position = draw + 1;
        return {delete_at(w, c.position), c};
    }
    const std::uint64_t index = draw - deletions;
    c.kind = ErrorKind::insertion;
    c.position = index / w.q() + 1;
    c.symbol = static_cast<Symbol>(index % w.q());
    return {insert_at(w, c.position, *c.symbol), c};
}

std::ostream& operator<<(std::ostream& os, const FuzzReport& report) {
    os << "fuzz q=" << report.q << " n=" << report.n << " a=" << report.a
       << " seed=" << report.seed << " trials=" << report.trials
       << " failures=" << report.failures << '\n';
    for (const FuzzWitness& w : report.witnesses) {
        os << "witness trial=" << w.trial << " seed=" << w.seed
           << " msg=" << format_word(w.message) << " kind=" << to_string(w.corruption.kind)
           << " pos=" << w.corruption.position << " sym=";
        if (w.corruption.symbol) {
            os << *w.corruption.symbol;
        } else {
            os << '-';
        }
        os << " got=" << (w.decoded ? format_word(*w.decoded) : std::string("-"))
           << " error=" << (w.error.empty() ? std::string("-") : w.error) << '\n';
    }
    return os;
}

FuzzReport fuzz_roundtrip(const VtStarCode& code, std::uint64_t trials, std::uint64_t seed) {
    const CodeParams& cp = code.params();
    FuzzReport report;
    report.trials = trials;
    report.q = cp.q();
    report.n = cp.n();
    report.a = cp.a();
    report.seed = seed;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        // Per-trial stream: k message symbols, then the corruption seed.
        const std::uint64_t trial_seed = derive_seed(seed, trial);
        SplitMix64 rng(trial_seed);
        std::vector<Symbol> symbols(cp.k());
        for (Symbol& s : symbols) s = static_cast<Symbol>(rng.bounded(cp.q()));
        const Word message(std::move(symbols), cp.q());

        FuzzWitness witness{trial, trial_seed, message, Corruption{}, std::nullopt, {}};
        try {
            const Word codeword = encode2(code, message);
            auto [corrupted, corruption] =
                random_corrupt(codeword, rng.next(), CorruptMode::either);
            witness.corruption = corruption;
            const Word decoded = decode2(code, corrupted);
            if (decoded == message) continue;
            witness.decoded = decoded;
        } catch (const std::exception& e) {
            witness.error = e.what();
        }
        ++report.failures;
        report.witnesses.push_back(std::move(witness));
    }
    return report;
}

Word brute_force_indel_decode(const std::vector<Word>& code, const Word& received) {
    const Word* match = nullptr;
    for (const Word& x : code) {
        bool hit = false;
        if (received.size() == x.size()) {
            hit = received == x;
        } else if (received.size() + 1 == x.size()) {
            hit = is_subsequence(received, x);  // one deletion of x
        } else if (received.size() == x.size() + 1) {
            hit = is_subsequence(x, received);  // one insertion into x
        }
        if (hit) {
            if (match != nullptr) throw UncorrectableError("not decodable");
            match = &x;
        }
    }
    if (match == nullptr) throw UncorrectableError("not decodable");
    return *match;
}

}  // namespace vtcodes
