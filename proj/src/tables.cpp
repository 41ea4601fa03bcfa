#include "vtcodes/tables.hpp"

#include <cmath>

namespace vtcodes {

RedundancyRow redundancy_row(Symbol q, std::uint64_t n) {
    validate_params(q, n, 0);
    RedundancyRow row;
    row.q = q;
    row.n = n;

    const std::uint64_t t = ceil_log(q, n);
    row.enc_t = t + 3 + ceil_log(q, 3);
    row.enc1_formula = row.enc_t;
    row.enc2 = t + 1;

    const double log_q_n = std::log(static_cast<double>(n)) / std::log(static_cast<double>(q));
    row.enc_a_lower = log_q_n + std::log2(static_cast<double>(n));
    row.optimal_floor =
        log_q_n + std::log(static_cast<double>(q - 1)) / std::log(static_cast<double>(q));

    // Measured systematic-frame cost: the k whose frame k + ceil_log(q,k) + 6
    // fills n exactly. The frame length is strictly increasing in k but skips
    // values where the digit count steps, so some n have no exact fit.
    if (n > 8) {  // smallest frame is 2 + 1 + 6 = 9
        std::uint64_t lo = 2, hi = n - 7;  // frame(k) >= k + 7
        while (lo < hi) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (mid + ceil_log(q, mid) + 6 < n) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if (lo + ceil_log(q, lo) + 6 == n) {
            row.enc1_k = lo;
            row.enc1_measured = n - lo;
        }
    }
    return row;
}

std::vector<RedundancyRow> redundancy_rows(const std::vector<Symbol>& qs,
                                           const std::vector<std::uint64_t>& ns) {
    std::vector<RedundancyRow> rows;
    rows.reserve(qs.size() * ns.size());
    for (Symbol q : qs) {
        for (std::uint64_t n : ns) {
            rows.push_back(redundancy_row(q, n));
        }
    }
    return rows;
}

}  // namespace vtcodes
