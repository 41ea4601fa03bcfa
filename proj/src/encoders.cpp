#include "vtcodes/encoders.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "vtcodes/channel.hpp"

namespace vtcodes {

namespace {

// S = {q^{j-1} : j in [t]} + {n}, ascending. Every power is < n by
// minimality of t = ceil_log(q, n), so the union has exactly t+1 indices.
std::vector<std::uint64_t> redundancy_indices(const CodeParams& cp) {
    std::vector<std::uint64_t> s;
    s.reserve(cp.t() + 1);
    std::uint64_t power = 1;
    for (std::uint32_t j = 0; j < cp.t(); ++j) {
        s.push_back(power);
        power *= cp.q();
    }
    s.push_back(cp.n());
    return s;
}

std::vector<std::uint64_t> message_indices(const CodeParams& cp,
                                           const std::vector<std::uint64_t>& s_indices) {
    std::vector<std::uint64_t> ix;
    ix.reserve(cp.k());
    std::size_t si = 0;
    for (std::uint64_t i = 1; i <= cp.n(); ++i) {
        if (si < s_indices.size() && s_indices[si] == i) {
            ++si;
        } else {
            ix.push_back(i);
        }
    }
    return ix;
}

}  // namespace

Encoder2Result encode2_traced(const VtStarCode& code, const Word& msg) {
    const CodeParams& cp = code.params();
    if (msg.q() != cp.q() || msg.size() != cp.k()) throw ArgumentError("shape mismatch");

    EncoderTrace trace;
    trace.s_indices = redundancy_indices(cp);
    trace.i_indices = message_indices(cp, trace.s_indices);

    const Symbol q = cp.q();
    const std::uint64_t n = cp.n();
    const std::uint64_t modulus = cp.modulus();

    std::vector<Symbol> y(n, 0);
    for (std::size_t j = 0; j < trace.i_indices.size(); ++j) {
        y[trace.i_indices[j] - 1] = msg[j];
    }
    std::uint64_t syn = 0;
    for (std::uint64_t i = 1; i <= n; ++i) syn += i * y[i - 1];

    trace.a_prime = (cp.a() % modulus + modulus - syn % modulus) % modulus;
    trace.alpha = static_cast<Symbol>(trace.a_prime / n);  // <= q-1 since a' <= qn-1
    trace.a_dprime = trace.a_prime - static_cast<std::uint64_t>(trace.alpha) * n;

    trace.z.assign(cp.t(), 0);
    std::uint64_t rem = trace.a_dprime;
    for (std::uint32_t j = 0; j < cp.t(); ++j) {
        trace.z[j] = static_cast<Symbol>(rem % q);
        rem /= q;
    }
    assert(rem == 0 && "a'' < n <= q^t fits in t digits");

    y[n - 1] = trace.alpha;
    std::uint64_t power = 1;
    for (std::uint32_t j = 0; j < cp.t(); ++j) {
        y[power - 1] = trace.z[j];
        power *= q;
    }

    Word yw(std::move(y), q);
    if (syndrome(yw, modulus).value != cp.a()) {
        throw std::logic_error("encoder syndrome identity violated");
    }
    return Encoder2Result{code.inv_transform(yw), std::move(trace)};
}

Word encode2(const VtStarCode& code, const Word& msg) {
    return encode2_traced(code, msg).codeword;
}

Decode2Result decode2_traced(const VtStarCode& code, const Word& received) {
    DecodeReport report = decode(code, received);
    const Word y = code.transform(report.codeword);
    const std::vector<std::uint64_t> s_indices = redundancy_indices(code.params());
    const std::vector<std::uint64_t> i_indices = message_indices(code.params(), s_indices);
    std::vector<Symbol> msg;
    msg.reserve(i_indices.size());
    for (std::uint64_t i : i_indices) msg.push_back(y[i - 1]);
    return Decode2Result{Word(std::move(msg), code.params().q()), std::move(report)};
}

Word decode2(const VtStarCode& code, const Word& received) {
    return decode2_traced(code, received).message;
}

std::uint64_t frame_length(Symbol q, std::uint64_t k) {
    if (q < 2) throw ArgumentError("invalid parameters: q must be at least 2");
    if (k < 2) throw ArgumentError("invalid parameters: k must be at least 2");
    return k + ceil_log(q, k) + 6;
}

SystematicFrame encode1(Symbol q, std::uint64_t k, const Word& msg) {
    frame_length(q, k);  // parameter validation
    if (msg.q() != q || msg.size() != k) throw ArgumentError("shape mismatch");

    const std::uint32_t t = ceil_log(q, k);
    const Symbol marker = (msg[k - 1] + 1) % q;
    const std::uint64_t syn = syndrome(diff(msg)).value;  // modulus q*k

    // q^{t+1} >= q*k > syn, so t+1 digits always suffice.
    std::vector<Symbol> digits(t + 1, 0);
    std::uint64_t rem = syn;
    for (std::uint32_t j = 0; j <= t; ++j) {
        digits[t - j] = static_cast<Symbol>(rem % q);  // most significant first
        rem /= q;
    }
    assert(rem == 0);

    std::vector<Symbol> frame(msg.begin(), msg.end());
    frame.push_back(marker);
    frame.push_back(marker);
    frame.insert(frame.end(), digits.begin(), digits.end());
    frame.insert(frame.end(), std::begin(kFrameComma), std::end(kFrameComma));

    SystematicFrame out{msg, marker, std::move(digits), Word(std::move(frame), q)};
    return out;
}

Word decode1(Symbol q, std::uint64_t k, const Word& received) {
    const std::uint64_t frame_n = frame_length(q, k);
    if (received.q() != q) throw ArgumentError("shape mismatch");
    const std::uint64_t m = received.size();
    if (m + 1 < frame_n || m > frame_n + 1) throw ArgumentError("shape mismatch");
    const std::uint32_t t = ceil_log(q, k);

    std::optional<Word> accepted;
    auto verify_and_take = [&](const Word& candidate) {
        // Acceptance test: the received word must be the candidate's
        // re-encoded frame after the hypothesized indel.
        const Word frame = encode1(q, k, candidate).frame;
        bool ok = false;
        if (m == frame_n) {
            ok = received == frame;
        } else if (m == frame_n - 1) {
            ok = is_subsequence(received, frame);
        } else {
            ok = is_subsequence(frame, received);
        }
        if (!ok) return;
        if (accepted) {
            assert(*accepted == candidate && "verified hypotheses must agree");
        } else {
            accepted = candidate;
        }
    };

    // Hypothesis: the indel hit the data prefix, leaving the redundancy tail
    // (marker, marker, t+1 digits, comma) intact at the end of the word.
    // Read the stored syndrome from its shifted offsets and run the syndrome
    // decoder on the data segment.
    {
        const std::uint64_t tail_len = static_cast<std::uint64_t>(t) + 6;
        std::uint64_t a_read = 0;
        for (std::uint32_t j = 0; j < t + 1; ++j) {
            a_read = a_read * q + received[m - tail_len + 2 + j];
        }
        // A tail that decodes to a syndrome outside [0, qk) cannot be the
        // intact redundancy of any frame; skip the hypothesis.
        if (a_read < static_cast<std::uint64_t>(q) * k) {
            Word data(std::vector<Symbol>(received.begin(),
                                          received.begin() + (m - tail_len)),
                      q);
            try {
                VtStarCode inner(CodeParams(q, k, a_read));
                if (data.size() == k) {
                    if (inner.is_member(data)) verify_and_take(data);
                } else {
                    verify_and_take(decode(inner, data).codeword);
                }
            } catch (const UncorrectableError&) {
                // hypothesis failed; the other one may still verify
            }
        }
    }

    // Hypothesis: the indel hit the redundancy tail; the message is the
    // first k symbols verbatim.
    {
        verify_and_take(
            Word(std::vector<Symbol>(received.begin(), received.begin() + k), q));
    }

    if (!accepted) throw UncorrectableError("uncorrectable input");
    return *accepted;
}

}  // namespace vtcodes
