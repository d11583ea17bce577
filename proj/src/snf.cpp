#include "zqcode/snf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace zqcode {

namespace {

class Eliminator {
  public:
    Eliminator(const IntMatrix& m) : rows_(m.rows), cols_(m.cols), a_(m.a) {}

    std::vector<BigInt> run() {
        std::vector<BigInt> divisors;
        const int steps = std::min(rows_, cols_);
        int s = 0;
        while (s < steps) {
            if (!select_pivot(s)) break;
            reduce(s);
            if (!fix_divisibility(s)) continue;  // pivot must be re-reduced
            divisors.push_back(abs(at(s, s)));
            ++s;
        }
        return divisors;
    }

  private:
    BigInt& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    void swap_rows(int i1, int i2) {
        if (i1 == i2) return;
        for (int j = 0; j < cols_; ++j) std::swap(at(i1, j), at(i2, j));
    }

    void swap_cols(int j1, int j2) {
        if (j1 == j2) return;
        for (int i = 0; i < rows_; ++i) std::swap(at(i, j1), at(i, j2));
    }

    // Moves a nonzero entry of minimum absolute value in the trailing
    // submatrix to (s, s). Returns false when the submatrix is zero.
    bool select_pivot(int s) {
        int pi = -1, pj = -1;
        for (int i = s; i < rows_; ++i)
            for (int j = s; j < cols_; ++j) {
                if (at(i, j) == 0) continue;
                if (pi < 0 || cmpabs(at(i, j), at(pi, pj)) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) return false;
        swap_rows(s, pi);
        swap_cols(s, pj);
        return true;
    }

    static int cmpabs(const BigInt& x, const BigInt& y) {
        return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
    }

    // Clears row s and column s outside the pivot. Remainders smaller than the
    // pivot are swapped in as the new pivot, so each pass shrinks it.
    void reduce(int s) {
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (int i = s + 1; i < rows_; ++i) {
                if (at(i, s) == 0) continue;
                const BigInt q = at(i, s) / at(s, s);
                if (q != 0)
                    for (int j = s; j < cols_; ++j) at(i, j) -= q * at(s, j);
                if (at(i, s) != 0) {
                    swap_rows(s, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = s + 1; j < cols_; ++j) {
                if (at(s, j) == 0) continue;
                const BigInt q = at(s, j) / at(s, s);
                if (q != 0)
                    for (int i = s; i < rows_; ++i) at(i, j) -= q * at(i, s);
                if (at(s, j) != 0) {
                    swap_cols(s, j);
                    dirty = true;
                }
            }
        }
    }

    // Enforces that the pivot divides every trailing entry; folding a bad row
    // into row s lets the next reduce() pass shrink the pivot strictly.
    bool fix_divisibility(int s) {
        for (int i = s + 1; i < rows_; ++i)
            for (int j = s + 1; j < cols_; ++j)
                if (at(i, j) % at(s, s) != 0) {
                    for (int c = 0; c < cols_; ++c) at(s, c) += at(i, c);
                    return false;
                }
        return true;
    }

    int rows_, cols_;
    std::vector<BigInt> a_;
};

// Next subset of the same popcount (Gosper), or 0 when exhausted.
std::uint64_t next_combination(std::uint64_t v) {
    const std::uint64_t t = v | (v - 1);
    const std::uint64_t w = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    return w;
}

BigInt det_bareiss(IntMatrix m) {
    const int n = m.rows;
    BigInt prev = 1;
    int sign = 1;
    for (int p = 0; p < n; ++p) {
        if (m.at(p, p) == 0) {
            int swap = -1;
            for (int i = p + 1; i < n && swap < 0; ++i)
                if (m.at(i, p) != 0) swap = i;
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = p + 1; i < n; ++i)
            for (int j = p + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(p, p) - m.at(i, p) * m.at(p, j)) / prev;
        prev = m.at(p, p);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace

DivisorChain smith_divisors(const IntMatrix& m) {
    DivisorChain chain;
    if (m.rows == 0 || m.cols == 0) return chain;
    chain.divisors = Eliminator(m).run();
    chain.rank = static_cast<int>(chain.divisors.size());
    return chain;
}

BigInt minor_gcd(const IntMatrix& m, int j) {
    if (j < 1 || j > std::min(m.rows, m.cols))
        throw std::out_of_range("minor_gcd: order out of range");
    const std::uint64_t row_start = (std::uint64_t(1) << j) - 1;
    BigInt g = 0;
    for (std::uint64_t rmask = row_start; rmask < (std::uint64_t(1) << m.rows);
         rmask = next_combination(rmask)) {
        for (std::uint64_t cmask = row_start; cmask < (std::uint64_t(1) << m.cols);
             cmask = next_combination(cmask)) {
            IntMatrix sub(j, j);
            int si = 0;
            for (int i = 0; i < m.rows; ++i) {
                if (!(rmask >> i & 1u)) continue;
                int sj = 0;
                for (int c = 0; c < m.cols; ++c) {
                    if (!(cmask >> c & 1u)) continue;
                    sub.at(si, sj++) = m.at(i, c);
                }
                ++si;
            }
            g = gcd_int(g, det_bareiss(std::move(sub)));
            if (g == 1) return g;
        }
    }
    return g;
}

}  // namespace zqcode
