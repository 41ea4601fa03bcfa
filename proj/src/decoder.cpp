#include "vtcodes/decoder.hpp"

#include <cassert>
#include <vector>

namespace vtcodes {

const char* to_string(CaseTag tag) noexcept {
    switch (tag) {
        case CaseTag::identity: return "identity";
        case CaseTag::case1: return "1";
        case CaseTag::case2a: return "2a";
        case CaseTag::case2b: return "2b";
        case CaseTag::scan: return "scan";
    }
    return "?";
}

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::none: return "none";
        case ErrorKind::deletion: return "deletion";
        case ErrorKind::insertion: return "insertion";
    }
    return "?";
}

namespace {

Word insert_symbol(const Word& w, std::uint64_t position, Symbol symbol) {
    std::vector<Symbol> out(w.begin(), w.end());
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(position - 1), symbol);
    return Word(std::move(out), w.q());
}

Word erase_symbol(const Word& w, std::uint64_t position) {
    std::vector<Symbol> out(w.begin(), w.end());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(position - 1));
    return Word(std::move(out), w.q());
}

}  // namespace

DecodeReport decode_deletion(const VtStarCode& code, const Word& received) {
    const CodeParams& cp = code.params();
    const Symbol q = cp.q();
    const std::uint64_t n = cp.n();
    if (received.q() != q || received.size() != n - 1) {
        throw UncorrectableError("uncorrectable input");
    }

    // Deleted value from the parity residue: p * sum(x) = a (mod q) on members.
    const Symbol v = static_cast<Symbol>(
        (static_cast<std::uint64_t>(code.p_inverse()) * (cp.a() % q) % q + q -
         received.symbol_sum() % q) %
        q);

    const Word y = code.transform(received);
    const std::uint64_t modulus = cp.modulus();
    const std::uint64_t syn = syndrome(y, modulus).value;
    // 0 <= delta <= q*n - 1 and the true syndrome gap lies in that window,
    // so this residue representative is the exact integer gap.
    const std::uint64_t delta = (cp.a() % modulus + modulus - syn) % modulus;

    // suffix[h] = y_h + ... + y_{n-1} (1-based), h in [1, n-1]; suffix[n] = 0.
    std::vector<std::uint64_t> suffix(n + 1, 0);
    for (std::uint64_t h = n - 1; h >= 1; --h) {
        suffix[h] = suffix[h + 1] + y[h - 1];
    }
    const std::uint64_t s = suffix[1];

    DecodeTrace trace;
    trace.delta = delta;
    trace.s = s;

    std::uint64_t position = 0;
    if (delta + 1 <= s) {
        // Merged cell kept its value (no wraparound): the gap equals the sum
        // of the cells strictly right of the merge. suffix is non-increasing
        // in h, so the largest h with suffix[h] > delta is binary-searchable.
        trace.case_tag = CaseTag::case2a;
        std::uint64_t lo = 1, hi = n - 1;
        while (lo < hi) {
            const std::uint64_t mid = lo + (hi - lo + 1) / 2;
            ++trace.comparisons;
            if (suffix[mid] > delta) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        trace.h = lo;
        position = lo + 1;
    } else if (delta <= s + q - 1) {
        // First symbol deleted; the transform lost its leading cell.
        trace.case_tag = CaseTag::case1;
        position = 1;
    } else if (delta == s + q) {
        throw UncorrectableError("uncorrectable input");
    } else {
        // Merged cell wrapped mod q: gap = q*i + suffix(i), strictly
        // increasing in the merge index, so again binary-searchable.
        trace.case_tag = CaseTag::case2b;
        std::uint64_t lo = 1, hi = n - 1;
        while (lo < hi) {
            const std::uint64_t mid = lo + (hi - lo + 1) / 2;
            ++trace.comparisons;
            if (q * mid + suffix[mid] < delta) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        trace.h = lo;
        position = lo + 1;
    }

    Word codeword = insert_symbol(received, position, v);
    if (!code.is_member(codeword)) throw UncorrectableError("uncorrectable input");

    DecodeReport report{std::move(codeword), ErrorKind::deletion, position, v, trace};
    return report;
}

DecodeReport decode_insertion(const VtStarCode& code, const Word& received) {
    const CodeParams& cp = code.params();
    const Symbol q = cp.q();
    const std::uint64_t n = cp.n();
    if (received.q() != q || received.size() != n + 1) {
        throw UncorrectableError("uncorrectable input");
    }

    // Deleting position j of the received word merges cells j-1 and j of its
    // transform, so every candidate syndrome is an O(1) update of Syn(y):
    //   Syn_j = Syn(y) - suffix(j) - (j-1) * q * [merge wrapped].
    const Word y = code.transform(received);
    const std::uint64_t m = received.size();
    const std::uint64_t modulus = cp.modulus();
    const std::uint64_t syn = syndrome(y, modulus).unreduced;

    std::vector<std::uint64_t> suffix(m + 2, 0);
    for (std::uint64_t h = m; h >= 1; --h) {
        suffix[h] = suffix[h + 1] + y[h - 1];
    }

    DecodeTrace trace;
    trace.case_tag = CaseTag::scan;
    trace.delta = (cp.a() % modulus + modulus - syn % modulus) % modulus;
    trace.s = suffix[1];

    std::optional<std::uint64_t> found;
    Word codeword(q);
    for (std::uint64_t j = 1; j <= m; ++j) {
        const std::uint64_t wrap = (j >= 2 && y[j - 2] + y[j - 1] >= q) ? q : 0;
        const std::uint64_t drop = suffix[j] + (j - 1) * wrap;
        // drop <= syn: syn - drop is the candidate's own (nonnegative) syndrome.
        const std::uint64_t cand = (syn - drop) % modulus;
        if (cand == cp.a()) {
            Word candidate = erase_symbol(received, j);
            if (code.is_member(candidate)) {
                if (!found) {
                    found = j;
                    codeword = std::move(candidate);
#ifdef NDEBUG
                    break;
#endif
                } else {
                    assert(candidate == codeword &&
                           "all passing insertion candidates must agree");
                }
            }
        }
    }
    if (!found) throw UncorrectableError("uncorrectable input");

    DecodeReport report{std::move(codeword), ErrorKind::insertion, *found,
                        received[*found - 1], trace};
    return report;
}

DecodeReport decode(const VtStarCode& code, const Word& received) {
    const CodeParams& cp = code.params();
    if (received.q() != cp.q()) throw ArgumentError("shape mismatch");
    const std::uint64_t m = received.size();
    if (m == cp.n() - 1) return decode_deletion(code, received);
    if (m == cp.n() + 1) return decode_insertion(code, received);
    if (m != cp.n()) throw ArgumentError("shape mismatch");

    if (!code.is_member(received)) throw UncorrectableError("uncorrectable input");
    DecodeTrace trace;
    trace.case_tag = CaseTag::identity;
    trace.s = code.transform(received).symbol_sum();
    return DecodeReport{received, ErrorKind::none, std::nullopt, std::nullopt, trace};
}

}  // namespace vtcodes
