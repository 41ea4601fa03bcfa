#pragma once

#include <cstdint>
#include <optional>

#include "vtcodes/vtstar.hpp"

namespace vtcodes {

enum class ErrorKind { none, deletion, insertion };

enum class CaseTag {
    identity,  // received at length n, already a member
    case1,     // first symbol deleted: delta in [s, s+q-1]
    case2a,    // interior deletion, merged cell did not wrap: delta <= s-1
    case2b,    // interior deletion with wraparound: delta >= s+q+1
    scan,      // insertion path: verified candidate scan
};

const char* to_string(CaseTag tag) noexcept;
const char* to_string(ErrorKind kind) noexcept;

struct DecodeTrace {
    std::uint64_t delta = 0;             // (a - Syn(y')) mod q*n, exact by the delta < q*n bound
    std::uint64_t s = 0;                 // integer sum of the received word's transform
    CaseTag case_tag = CaseTag::identity;
    std::optional<std::uint64_t> h;      // localization index in y' (case 2a/2b)
    std::uint32_t comparisons = 0;       // localization comparisons (binary search probes)
};

struct DecodeReport {
    Word codeword;
    ErrorKind kind = ErrorKind::none;
    // 1-based position in the received word: for a deletion, inserting
    // `symbol` at `position` into the received word yields `codeword`;
    // for an insertion, removing `position` from it does.
    std::optional<std::uint64_t> position;
    std::optional<Symbol> symbol;
    DecodeTrace trace;
};

// Corrects a single deletion: received has length n-1. The deleted value
// comes from the parity residue, the location from the syndrome gap delta
// via an O(log n) binary search over precomputed suffix sums. When the
// deleted symbol sat in a run of identical symbols several positions are
// equivalent; the rule picks one and the codeword is the contract.
// Throws UncorrectableError when no consistent reconstruction exists.
DecodeReport decode_deletion(const VtStarCode& code, const Word& received);

// Corrects a single insertion: received has length n+1. Scans candidate
// deletion positions with O(1) incremental syndrome updates and returns the
// first member; all passing candidates reconstruct the same codeword.
DecodeReport decode_insertion(const VtStarCode& code, const Word& received);

// Length dispatch: n-1 -> deletion, n+1 -> insertion, n -> identity report
// iff the word is a member. Any other length is a shape mismatch.
DecodeReport decode(const VtStarCode& code, const Word& received);

}  // namespace vtcodes
