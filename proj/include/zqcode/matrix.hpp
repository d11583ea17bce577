#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zqcode/rational.hpp"

namespace zqcode {

/// Integer matrix, row-major. The ground set E = {1..cols} is identified with
/// bit positions 0..cols-1 of column-subset masks throughout the library.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, BigInt(0)) {}

    BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    /// Submatrix of the columns whose bits are set in mask, ascending order.
    IntMatrix columns(std::uint32_t mask) const;

    bool operator==(const IntMatrix& other) const = default;
};

/// Convenience builder for literals in tests and fixtures.
IntMatrix make_matrix(const std::vector<std::vector<long>>& rows);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Throws std::invalid_argument naming the first offending (1-based) column.
void require_no_zero_columns(const IntMatrix& m);

/// Text format: optional first line "k n", then k rows of n whitespace-separated
/// integers; lines starting with '#' are ignored.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix_text(const std::string& text);
IntMatrix load_matrix_file(const std::string& path);
std::string format_matrix(const IntMatrix& m, bool header = true);

}  // namespace zqcode
