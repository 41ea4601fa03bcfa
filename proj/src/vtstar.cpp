#include "vtcodes/vtstar.hpp"

#include <algorithm>
#include <limits>

namespace vtcodes {

namespace {

// q^n if it fits within budget, else BudgetError.
std::uint64_t checked_space_size(Symbol q, std::uint64_t n, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (total > budget / q) throw BudgetError("enumeration too large");
        total *= q;
    }
    if (total > budget) throw BudgetError("enumeration too large");
    return total;
}

// Syn(gamma_p(x)) mod modulus without materializing the transform.
std::uint64_t transform_syndrome_mod(const std::vector<Symbol>& x, Symbol q, Symbol p,
                                     std::uint64_t modulus) {
    const std::size_t n = x.size();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Symbol cell = static_cast<Symbol>((x[i] + q - x[i + 1]) % q);
        sum += (i + 1) * (static_cast<std::uint64_t>(p) * cell % q);
    }
    sum += n * (static_cast<std::uint64_t>(p) * x[n - 1] % q);
    return sum % modulus;
}

// Lexicographic odometer step; false once the space is exhausted.
bool next_word(std::vector<Symbol>& x, Symbol q) {
    std::size_t i = x.size();
    while (i > 0 && x[i - 1] == q - 1) x[--i] = 0;
    if (i == 0) return false;
    ++x[i - 1];
    return true;
}

}  // namespace

SyndromeValue syndrome(const Word& y) {
    if (y.empty()) throw ArgumentError("empty word");
    return syndrome(y, static_cast<std::uint64_t>(y.q()) * y.size());
}

SyndromeValue syndrome(const Word& y, std::uint64_t modulus) {
    if (modulus == 0) throw ArgumentError("invalid parameters: modulus must be positive");
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        sum += (i + 1) * static_cast<std::uint64_t>(y[i]);
    }
    return SyndromeValue{sum, sum % modulus, modulus};
}

VtStarCode::VtStarCode(CodeParams params, Symbol p)
    : params_(params), p_(p % params.q()), p_inv_(mod_inverse(p, params.q())) {}

Word VtStarCode::transform(const Word& x) const {
    if (x.q() != params_.q()) throw ArgumentError("shape mismatch");
    return p_ == 1 ? diff(x) : gamma_p(x, p_);
}

Word VtStarCode::inv_transform(const Word& y) const {
    if (y.q() != params_.q()) throw ArgumentError("shape mismatch");
    return p_ == 1 ? inv_diff(y) : inv_gamma_p(y, p_);
}

bool VtStarCode::is_member(const Word& x) const {
    if (x.q() != params_.q() || x.size() != params_.n()) throw ArgumentError("shape mismatch");
    return syndrome(transform(x)).value == params_.a();
}

std::uint64_t VtStarCode::parity_residue() const noexcept {
    return params_.a() % params_.q();
}

std::vector<Word> VtStarCode::enumerate(std::uint64_t budget) const {
    const Symbol q = params_.q();
    const std::uint64_t n = params_.n();
    checked_space_size(q, n, budget);

    std::vector<Word> members;
    std::vector<Symbol> x(n, 0);
    do {
        if (transform_syndrome_mod(x, q, p_, params_.modulus()) == params_.a()) {
            members.emplace_back(x, q);
        }
    } while (next_word(x, q));
    return members;
}

std::vector<std::uint64_t> syndrome_histogram(std::uint64_t n, Symbol q, std::uint64_t budget) {
    validate_params(q, n, 0);
    checked_space_size(q, n, budget);

    const std::uint64_t modulus = static_cast<std::uint64_t>(q) * n;
    std::vector<std::uint64_t> histogram(modulus, 0);
    std::vector<Symbol> x(n, 0);
    do {
        ++histogram[transform_syndrome_mod(x, q, /*p=*/1, modulus)];
    } while (next_word(x, q));
    return histogram;
}

BestSyndrome best_syndrome(std::uint64_t n, Symbol q, std::uint64_t budget) {
    const std::vector<std::uint64_t> histogram = syndrome_histogram(n, q, budget);
    std::uint64_t best_a = 0;
    for (std::uint64_t a = 1; a < histogram.size(); ++a) {
        if (histogram[a] > histogram[best_a]) best_a = a;  // smallest a on ties
    }
    return BestSyndrome{best_a, histogram[best_a]};
}

bool binary_vt_member(std::uint64_t n, std::uint64_t a, const Word& x) {
    if (x.q() != 2 || x.size() != n || n == 0) throw ArgumentError("shape mismatch");
    if (a > n) throw ArgumentError("invalid parameters: a must be at most n");
    return syndrome(x, n + 1).value == a;
}

Word signature(const Word& x) {
    if (x.size() < 2) throw ArgumentError("too short");
    std::vector<Symbol> bits(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        bits[i] = x[i + 1] >= x[i] ? 1 : 0;
    }
    return Word(std::move(bits), 2);
}

TenengoltsParams::TenengoltsParams(Symbol q, std::uint64_t n, std::uint64_t a, Symbol b)
    : q_(q), n_(n), a_(a), b_(b) {
    if (q < 2) throw ArgumentError("invalid parameters: q must be at least 2");
    if (n < 2) throw ArgumentError("invalid parameters: n must be at least 2");
    if (a >= n) throw ArgumentError("invalid parameters: a must be less than n");
    if (b >= q) throw ArgumentError("invalid parameters: b must be less than q");
}

bool tenengolts_member(const TenengoltsParams& tp, const Word& x) {
    if (x.q() != tp.q() || x.size() != tp.n()) throw ArgumentError("shape mismatch");
    return binary_vt_member(tp.n() - 1, tp.a(), signature(x)) &&
           x.symbol_sum() % tp.q() == tp.b();
}

}  // namespace vtcodes
