#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vtcodes/word.hpp"

namespace vtcodes {

// One row of the encoder-redundancy comparison for block length n over an
// alphabet of size q. Formula-based columns are exact integers; the lower
// bound for syndrome-compression encoders and the converse floor are real.
struct RedundancyRow {
    Symbol q = 0;
    std::uint64_t n = 0;
    std::uint64_t enc_t = 0;            // ceil(log_q n) + 3 + ceil(log_q 3)
    double enc_a_lower = 0.0;           // log_q n + log2 n (strict lower bound)
    std::uint64_t enc1_formula = 0;     // same accounting as enc_t
    std::optional<std::uint64_t> enc1_measured;  // n - k with k + ceil(log_q k) + 6 = n
    std::optional<std::uint64_t> enc1_k;         // the k that attains it, if any
    std::uint64_t enc2 = 0;             // ceil(log_q n) + 1
    double optimal_floor = 0.0;         // log_q n + log_q(q - 1)
};

RedundancyRow redundancy_row(Symbol q, std::uint64_t n);

std::vector<RedundancyRow> redundancy_rows(const std::vector<Symbol>& qs,
                                           const std::vector<std::uint64_t>& ns);

}  // namespace vtcodes
