#include "zqcode/matrix.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zqcode {

IntMatrix IntMatrix::columns(std::uint32_t mask) const {
    IntMatrix sub(rows, std::popcount(mask));
    int out = 0;
    for (int j = 0; j < cols; ++j) {
        if (!(mask >> j & 1u)) continue;
        for (int i = 0; i < rows; ++i) sub.at(i, out) = at(i, j);
        ++out;
    }
    return sub;
}

IntMatrix make_matrix(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols)
            throw std::invalid_argument("ragged matrix literal");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

void require_no_zero_columns(const IntMatrix& m) {
    if (m.rows < 1 || m.cols < 1) throw std::invalid_argument("matrix must be at least 1 x 1");
    for (int j = 0; j < m.cols; ++j) {
        bool nonzero = false;
        for (int i = 0; i < m.rows && !nonzero; ++i) nonzero = m.at(i, j) != 0;
        if (!nonzero)
            throw std::invalid_argument("generator matrix has zero column " + std::to_string(j + 1));
    }
}

IntMatrix parse_matrix(std::istream& in) {
    std::vector<std::vector<BigInt>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<BigInt> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_bigint(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix input");

    // Optional "k n" header: first row has exactly two entries that match the
    // remaining row/column counts.
    std::size_t first_data = 0;
    if (rows[0].size() == 2 && rows[0][0] > 0 && rows[0][1] > 0 &&
        rows[0][0].fits_sint_p() && rows[0][1].fits_sint_p()) {
        const auto k = rows[0][0].get_si();
        const auto n = rows[0][1].get_si();
        if (static_cast<long>(rows.size()) - 1 == k) {
            bool widths_ok = true;
            for (std::size_t i = 1; i < rows.size(); ++i)
                widths_ok = widths_ok && static_cast<long>(rows[i].size()) == n;
            if (widths_ok) first_data = 1;
        }
    }

    const std::size_t width = rows[first_data].size();
    IntMatrix m(static_cast<int>(rows.size() - first_data), static_cast<int>(width));
    for (std::size_t i = first_data; i < rows.size(); ++i) {
        if (rows[i].size() != width) throw std::invalid_argument("ragged matrix input");
        for (std::size_t j = 0; j < width; ++j) m.at(static_cast<int>(i - first_data), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

IntMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& m, bool header) {
    std::ostringstream os;
    if (header) os << m.rows << " " << m.cols << "\n";
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (j) os << " ";
            os << m.at(i, j).get_str();
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace zqcode
