#pragma once

#include <cstdint>
#include <vector>

#include "vtcodes/transform.hpp"
#include "vtcodes/word.hpp"

namespace vtcodes {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Weighted sum Syn(y) = sum_i i*y_i (1-based weights), both as the exact
/// integer and reduced modulo `modulus`. The decoder needs the exact value:
/// the proof bounds the syndrome gap by q*n, so the residue pins it down.
struct SyndromeValue {
    std::uint64_t unreduced;
    std::uint64_t value;
    std::uint64_t modulus;
};

// Default modulus is q * len(y).
SyndromeValue syndrome(const Word& y);
SyndromeValue syndrome(const Word& y, std::uint64_t modulus);

/// One code VT*_a(n;q): the words x of length n with
/// Syn(gamma_p(x)) = a (mod q*n). Shipped codes use p = 1 (plain Diff);
/// any unit p mod q gives an equivalent family.
class VtStarCode {
public:
    explicit VtStarCode(CodeParams params, Symbol p = 1);

    const CodeParams& params() const noexcept { return params_; }
    Symbol p() const noexcept { return p_; }
    Symbol p_inverse() const noexcept { return p_inv_; }

    // The code's transform and its inverse (Diff when p = 1).
    Word transform(const Word& x) const;
    Word inv_transform(const Word& y) const;

    // Membership: shape-checked, then the syndrome congruence.
    bool is_member(const Word& x) const;

    // a mod q. Every member satisfies p * sum(x_i) = a (mod q), which is how
    // the decoder recovers a deleted symbol's value.
    std::uint64_t parity_residue() const noexcept;

    // All members in lexicographic order. Refuses (BudgetError) when q^n
    // exceeds the budget.
    std::vector<Word> enumerate(std::uint64_t budget = kDefaultEnumerationBudget) const;

private:
    CodeParams params_;
    Symbol p_;
    Symbol p_inv_;
};

struct BestSyndrome {
    std::uint64_t a;
    std::uint64_t cardinality;
};

// The residue a maximizing |VT*_a(n;q)| (smallest a on ties) and that size.
// Pigeonhole guarantees cardinality * (q*n) >= q^n.
BestSyndrome best_syndrome(std::uint64_t n, Symbol q,
                           std::uint64_t budget = kDefaultEnumerationBudget);

// Class sizes |VT*_a(n;q)| for every a in Z_{qn}, one enumeration pass.
std::vector<std::uint64_t> syndrome_histogram(std::uint64_t n, Symbol q,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

// --- baselines, membership only (error correction goes through the generic
// --- brute-force decoder in channel.hpp) ---

// Binary VT code: sum i*x_i = a (mod n+1) over {0,1}^n.
bool binary_vt_member(std::uint64_t n, std::uint64_t a, const Word& x);

// Signature: binary vector of length n-1, 1 where x_{i+1} >= x_i.
Word signature(const Word& x);

/// Parameters of one Tenengolts code T_{a,b}(n;q): signature in the binary
/// VT code VT_a(n-1), symbol sum b mod q.
class TenengoltsParams {
public:
    TenengoltsParams(Symbol q, std::uint64_t n, std::uint64_t a, Symbol b);

    Symbol q() const noexcept { return q_; }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t a() const noexcept { return a_; }
    Symbol b() const noexcept { return b_; }

private:
    Symbol q_;
    std::uint64_t n_;
    std::uint64_t a_;
    Symbol b_;
};

bool tenengolts_member(const TenengoltsParams& tp, const Word& x);

}  // namespace vtcodes
