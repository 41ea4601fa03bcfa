#include "vtcodes/transform.hpp"

#include <utility>
#include <vector>

namespace vtcodes {

Word diff(const Word& x) {
    if (x.empty()) throw ArgumentError("empty word");
    const Symbol q = x.q();
    const std::size_t n = x.size();
    std::vector<Symbol> y(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        y[i] = (x[i] + q - x[i + 1]) % q;
    }
    y[n - 1] = x[n - 1];
    return Word(std::move(y), q);
}

Word inv_diff(const Word& y) {
    if (y.empty()) throw ArgumentError("empty word");
    const Symbol q = y.q();
    const std::size_t n = y.size();
    std::vector<Symbol> x(n);
    Symbol suffix = 0;
    for (std::size_t i = n; i-- > 0;) {
        suffix = (suffix + y[i]) % q;
        x[i] = suffix;
    }
    return Word(std::move(x), q);
}

Symbol mod_inverse(Symbol p, Symbol q) {
    if (q < 2) throw ArgumentError("invalid parameters: q must be at least 2");
    // Extended Euclid on (p mod q, q); p is a unit iff the gcd is 1.
    std::int64_t r0 = static_cast<std::int64_t>(p % q), r1 = q;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        const std::int64_t quo = r0 / r1;
        r0 = std::exchange(r1, r0 - quo * r1);
        s0 = std::exchange(s1, s0 - quo * s1);
    }
    if (r0 != 1) throw ArgumentError("p not invertible modulo q");
    return static_cast<Symbol>(((s0 % q) + q) % q);
}

Word gamma_p(const Word& x, Symbol p) {
    const Symbol q = x.q();
    mod_inverse(p, q);  // reject non-units up front
    Word y = diff(x);
    std::vector<Symbol> scaled(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        scaled[i] = static_cast<Symbol>(static_cast<std::uint64_t>(p % q) * y[i] % q);
    }
    return Word(std::move(scaled), q);
}

Word inv_gamma_p(const Word& y, Symbol p) {
    const Symbol q = y.q();
    const Symbol p_inv = mod_inverse(p, q);
    std::vector<Symbol> unscaled(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        unscaled[i] = static_cast<Symbol>(static_cast<std::uint64_t>(p_inv) * y[i] % q);
    }
    return inv_diff(Word(std::move(unscaled), q));
}

}  // namespace vtcodes
