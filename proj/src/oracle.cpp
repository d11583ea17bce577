#include "zqcode/oracle.hpp"

#include <stdexcept>
#include <vector>

#include "zqcode/errors.hpp"
#include "zqcode/parallel.hpp"

namespace zqcode {

namespace {

struct SparseRow {
    std::vector<int> col;
    std::vector<long> val;  // entry mod q, in [1, q)
};

// Tally of wt(uG) over the index range [first, last) of Z_q^k in mixed-radix
// order (digit i = u_{i+1}, least significant first).
std::vector<std::uint64_t> tally_range(const std::vector<SparseRow>& rows, int n, long q,
                                       std::uint64_t first, std::uint64_t last) {
    const int k = static_cast<int>(rows.size());
    std::vector<long> digit(k, 0);
    std::uint64_t rest = first;
    for (int i = 0; i < k; ++i) {
        digit[i] = static_cast<long>(rest % static_cast<std::uint64_t>(q));
        rest /= static_cast<std::uint64_t>(q);
    }

    std::vector<long> s(n, 0);
    for (int i = 0; i < k; ++i) {
        if (digit[i] == 0) continue;
        const auto& row = rows[i];
        for (std::size_t t = 0; t < row.col.size(); ++t)
            s[row.col[t]] = (s[row.col[t]] + digit[i] * row.val[t]) % q;
    }
    int nonzero = 0;
    for (int j = 0; j < n; ++j) nonzero += s[j] != 0;

    std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
    // Adding any row once is also the update for a digit wrapping q-1 -> 0,
    // since -(q-1) == 1 (mod q).
    auto apply_row = [&](int i) {
        const auto& row = rows[i];
        for (std::size_t t = 0; t < row.col.size(); ++t) {
            long& cell = s[row.col[t]];
            nonzero -= cell != 0;
            cell += row.val[t];
            if (cell >= q) cell -= q;
            nonzero += cell != 0;
        }
    };

    for (std::uint64_t idx = first;;) {
        tally[static_cast<std::size_t>(nonzero)] += 1;
        if (++idx >= last) break;
        int i = 0;
        while (digit[i] == q - 1) {
            digit[i] = 0;
            apply_row(i);
            ++i;
        }
        ++digit[i];
        apply_row(i);
    }
    return tally;
}

}  // namespace

OracleResult oracle_enumerate(const IntMatrix& g, const BigInt& q, const OracleOptions& options) {
    require_no_zero_columns(g);
    if (q < 1) throw std::invalid_argument("modulus q must be positive");

    const BigInt space = pow_int(q, static_cast<unsigned long>(g.rows));
    if (space > BigInt(static_cast<unsigned long>(options.budget)))
        throw budget_error("enumeration of q^k = " + space.get_str() + " vectors exceeds budget " +
                           std::to_string(options.budget));
    const std::uint64_t total = space.get_ui();
    const long qv = static_cast<long>(q.get_ui());

    std::vector<SparseRow> rows(static_cast<std::size_t>(g.rows));
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) {
            const long v = static_cast<long>(mpz_fdiv_ui(g.at(i, j).get_mpz_t(), static_cast<unsigned long>(qv)));
            if (v != 0) {
                rows[i].col.push_back(j);
                rows[i].val.push_back(v);
            }
        }

    std::vector<std::vector<std::uint64_t>> parts;
    if (options.jobs <= 1 || total < 4096) {
        parts.push_back(tally_range(rows, g.cols, qv, 0, total));
    } else {
        const int jobs = options.jobs;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        parts.assign(static_cast<std::size_t>((total + chunk - 1) / chunk), {});
        parallel_chunks(jobs, parts.size(), [&](std::size_t first, std::size_t last) {
            for (std::size_t c = first; c < last; ++c) {
                const std::uint64_t lo = c * chunk;
                const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
                parts[c] = tally_range(rows, g.cols, qv, lo, hi);
            }
        });
    }

    std::vector<BigInt> ucounts(static_cast<std::size_t>(g.cols) + 1, BigInt(0));
    for (const auto& part : parts)
        for (std::size_t i = 0; i < part.size(); ++i) ucounts[i] += static_cast<unsigned long>(part[i]);

    OracleResult result;
    result.q = q;
    result.kernel_size = ucounts[0];
    result.distribution.q = q;
    result.distribution.counts.reserve(ucounts.size());
    for (std::size_t i = 0; i < ucounts.size(); ++i) {
        if (ucounts[i] % result.kernel_size != 0)
            throw consistency_error("u-space tally for weight " + std::to_string(i) +
                                    " is not divisible by the kernel size");
        result.distribution.counts.push_back(ucounts[i] / result.kernel_size);
    }
    result.min_weight = min_weight_of(result.distribution);
    return result;
}

}  // namespace zqcode
