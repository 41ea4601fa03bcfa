#pragma once

// Small independent oracles shared by the unit tests. These deliberately
// recompute everything from definitions, not through the library's fast
// paths, so they can catch errors in either.

#include <cstdint>
#include <vector>

#include "vtcodes/word.hpp"

namespace testing_helpers {

// Invoke fn on every word of length n over {0..q-1}, lexicographically.
template <typename Fn>
void for_each_word(vtcodes::Symbol q, std::size_t n, Fn&& fn) {
    std::vector<vtcodes::Symbol> x(n, 0);
    while (true) {
        fn(vtcodes::Word(x, q));
        std::size_t i = n;
        while (i > 0 && x[i - 1] == q - 1) x[--i] = 0;
        if (i == 0) return;
        ++x[i - 1];
    }
}

// Definitional weighted sum, no reduction.
inline std::uint64_t plain_syndrome(const vtcodes::Word& w) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i + 1) * static_cast<std::uint64_t>(w[i]);
    return s;
}

// Definitional differential vector.
inline vtcodes::Word naive_diff(const vtcodes::Word& x) {
    const vtcodes::Symbol q = x.q();
    std::vector<vtcodes::Symbol> y;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        y.push_back(static_cast<vtcodes::Symbol>(
            ((static_cast<int>(x[i]) - static_cast<int>(x[i + 1])) % static_cast<int>(q) + q) %
            q));
    }
    y.push_back(x[x.size() - 1]);
    return vtcodes::Word(std::move(y), q);
}

// Cell-merge oracle: the differential vector of a word after deleting its
// i-th symbol equals the differential vector with cells i-1 and i merged
// (i = 1 just drops the first cell).
inline vtcodes::Word merge_cells(const vtcodes::Word& y, std::size_t i) {
    const vtcodes::Symbol q = y.q();
    std::vector<vtcodes::Symbol> out;
    for (std::size_t j = 1; j <= y.size(); ++j) {
        if (j == i) continue;
        if (i >= 2 && j == i - 1) {
            out.push_back((y[j - 1] + y[i - 1]) % q);
        } else {
            out.push_back(y[j - 1]);
        }
    }
    return vtcodes::Word(std::move(out), q);
}

}  // namespace testing_helpers
