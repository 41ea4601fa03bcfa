#pragma once

#include "vtcodes/word.hpp"

namespace vtcodes {

// Differential vector: y_i = x_i - x_{i+1} (mod q) for i < n, y_n = x_n.
// A bijection on words of every length; a deletion in x collapses to a
// single-cell merge in Diff(x), which is what makes syndrome decoding work.
Word diff(const Word& x);

// Inverse: x_i = sum_{j=i}^{n} y_j (mod q), i.e. suffix sums.
Word inv_diff(const Word& y);

// p-transformation: Diff scaled by a unit p modulo q (gcd(p,q) = 1).
// gamma_p with p = 1 is exactly diff.
Word gamma_p(const Word& x, Symbol p);
Word inv_gamma_p(const Word& y, Symbol p);

// Multiplicative inverse of p mod q; throws ArgumentError when gcd(p,q) != 1.
Symbol mod_inverse(Symbol p, Symbol q);

}  // namespace vtcodes
