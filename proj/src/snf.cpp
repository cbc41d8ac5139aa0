#include <algorithm>
#include <stdexcept>

#include "chaincover/group.hpp"

namespace chaincover {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

BigInt abs_val(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

void swap_cols(Matrix& m, int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

// col[a] += q * col[b]
void add_col(Matrix& m, int a, int b, const BigInt& q) {
    for (auto& row : m) row[a] += q * row[b];
}

}  // namespace

SmithResult smith_normal_form(Matrix m, int cols) {
    const int rows = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged matrix");

    SmithResult out;
    out.rows = rows;
    out.cols = cols;
    out.right.assign(cols, std::vector<BigInt>(cols, 0));
    for (int j = 0; j < cols; ++j) out.right[j][j] = 1;

    const int steps = std::min(rows, cols);
    out.diagonal.assign(steps, 0);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing submatrix.
            int pi = -1, pj = -1;
            BigInt best = 0;
            for (int i = t; i < rows && best != 1; ++i)
                for (int j = t; j < cols; ++j)
                    if (m[i][j] != 0) {
                        BigInt a = abs_val(m[i][j]);
                        if (pi < 0 || a < best) {
                            best = a;
                            pi = i;
                            pj = j;
                            if (best == 1) break;
                        }
                    }
            if (pi < 0) break;  // submatrix is zero

            std::swap(m[t], m[pi]);
            if (pj != t) {
                swap_cols(m, t, pj);
                swap_cols(out.right, t, pj);
            }

            bool clean = true;
            for (int i = t + 1; i < rows; ++i)
                if (m[i][t] != 0) {
                    BigInt q = m[i][t] / m[t][t];
                    for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] != 0) clean = false;
                }
            for (int j = t + 1; j < cols; ++j)
                if (m[t][j] != 0) {
                    BigInt q = m[t][j] / m[t][t];
                    add_col(m, j, t, -q);
                    add_col(out.right, j, t, -q);
                    if (m[t][j] != 0) clean = false;
                }
            if (!clean) continue;

            // Pivot must divide the rest of the submatrix for the chain.
            bool divides = true;
            for (int i = t + 1; i < rows && divides; ++i)
                for (int j = t + 1; j < cols && divides; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        // Fold that row in and restart the pivot hunt.
                        for (int k = t; k < cols; ++k) m[t][k] += m[i][k];
                        divides = false;
                    }
            if (divides) break;
        }
        if (m[t][t] < 0) {
            for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];
        }
        out.diagonal[t] = m[t][t];
        if (m[t][t] != 0) ++out.rank;
    }
    return out;
}

bool lattice_contains(const SmithResult& s, const std::vector<BigInt>& v) {
    if (static_cast<int>(v.size()) != s.cols)
        throw std::invalid_argument("vector length does not match lattice");
    for (int j = 0; j < s.cols; ++j) {
        BigInt t = 0;
        for (int i = 0; i < s.cols; ++i)
            if (v[i] != 0) t += v[i] * s.right[i][j];
        if (j < static_cast<int>(s.diagonal.size()) && s.diagonal[j] != 0) {
            if (t % s.diagonal[j] != 0) return false;
        } else if (t != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace chaincover
