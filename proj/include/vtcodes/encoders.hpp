#pragma once

#include <cstdint>
#include <vector>

#include "vtcodes/decoder.hpp"
#include "vtcodes/vtstar.hpp"

namespace vtcodes {

/// Intermediates of the non-systematic encoder: the redundancy index set
/// S = {q^{j-1} : j in [t]} + {n}, its complement I, and the syndrome
/// deficit a' split as a' = alpha*n + a'' with a'' spread over the power-of-q
/// positions in q-ary digits.
struct EncoderTrace {
    std::vector<std::uint64_t> s_indices;  // sorted, 1-based, size t+1
    std::vector<std::uint64_t> i_indices;  // sorted, 1-based, size k
    std::uint64_t a_prime = 0;             // (a - Syn(prefill y)) mod q*n
    Symbol alpha = 0;                      // floor(a'/n), in [0, q-1]
    std::uint64_t a_dprime = 0;            // a' - alpha*n, < n
    std::vector<Symbol> z;                 // q-ary digits of a'', z[j] = z_j (LSB first), size t
};

struct Encoder2Result {
    Word codeword;
    EncoderTrace trace;
};

// Non-systematic encoder into VT*_a(n;q): fills the message into the
// transform domain outside S, zeroes S, then sets y_n = alpha and
// y_{q^{j-1}} = z_{j-1} so the syndrome lands exactly on a. Redundancy is
// n - k = ceil(log_q n) + 1 symbols. msg must have shape (k, q).
Word encode2(const VtStarCode& code, const Word& msg);
Encoder2Result encode2_traced(const VtStarCode& code, const Word& msg);

// Inverse after zero or one indel: error-decode to the codeword, transform,
// read off the positions outside S.
Word decode2(const VtStarCode& code, const Word& received);

struct Decode2Result {
    Word message;
    DecodeReport report;
};

Decode2Result decode2_traced(const VtStarCode& code, const Word& received);

/// Systematic frame: data || marker p p || syndrome digits z_1..z_{t+1} ||
/// comma 0 1 1, with p = (x_k + 1) mod q and t = ceil(log_q k). The digits
/// encode Syn(Diff(data)) mod q*k, most significant first. Total length
/// k + t + 6.
struct SystematicFrame {
    Word data;
    Symbol marker = 0;
    std::vector<Symbol> syndrome_digits;  // MSB first, size t+1
    Word frame;
};

// The fixed frame terminator.
inline constexpr Symbol kFrameComma[3] = {0, 1, 1};

// Frame length for message length k over alphabet q.
std::uint64_t frame_length(Symbol q, std::uint64_t k);

// Systematic encoder: the message appears verbatim as the frame prefix.
// Requires k >= 2, q >= 2, msg of shape (k, q).
SystematicFrame encode1(Symbol q, std::uint64_t k, const Word& msg);

// Recovers the message from a frame after at most one indel anywhere.
// Parses under two hypotheses (error in data with the redundancy tail at its
// shifted offsets; error in redundancy with the data verbatim) and accepts a
// candidate only if re-encoding it reproduces a frame whose indel ball
// contains the received word.
Word decode1(Symbol q, std::uint64_t k, const Word& received);

}  // namespace vtcodes
