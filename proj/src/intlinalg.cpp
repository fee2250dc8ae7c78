#include "monopole/intlinalg.hpp"

#include <cstddef>

namespace monopole {

std::optional<std::vector<Rat>> solve_rational(MatQ A, std::vector<Rat> b)
{
    const size_t n = A.size();
    const size_t m = n == 0 ? 0 : A[0].size();
    std::vector<long> pivot_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t pr = row;
        while (pr < n && A[pr][col] == 0)
            ++pr;
        if (pr == n)
            continue;
        std::swap(A[pr], A[row]);
        std::swap(b[pr], b[row]);
        Rat inv = 1 / A[row][col];
        for (size_t j = col; j < m; ++j)
            A[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || A[i][col] == 0)
                continue;
            Rat f = A[i][col];
            for (size_t j = col; j < m; ++j)
                A[i][j] -= f * A[row][j];
            b[i] -= f * b[row];
        }
        pivot_col[row] = static_cast<long>(col);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (b[i] != 0)
            return std::nullopt;
    std::vector<Rat> x(m, Rat(0));
    for (size_t i = 0; i < row; ++i)
        x[static_cast<size_t>(pivot_col[i])] = b[i];
    return x;
}

std::optional<std::vector<Int>> solve_integer(MatZ A, std::vector<Int> b)
{
    const size_t n = A.size();
    const size_t m = n == 0 ? 0 : A[0].size();

    // Column operations are mirrored in V so that A_final = U * A_orig * V
    // with U applied to b along the way.
    MatZ V(m, std::vector<Int>(m, 0));
    for (size_t j = 0; j < m; ++j)
        V[j][j] = 1;

    const size_t steps = n < m ? n : m;
    size_t rank = 0;
    for (size_t t = 0; t < steps; ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing submatrix as pivot.
            size_t pi = t, pj = t;
            bool found = false;
            for (size_t i = t; i < n; ++i)
                for (size_t j = t; j < m; ++j) {
                    if (A[i][j] == 0)
                        continue;
                    if (!found || mpz_cmpabs(A[i][j].get_mpz_t(), A[pi][pj].get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found)
                goto diagonal;
            if (pi != t) {
                std::swap(A[pi], A[t]);
                std::swap(b[pi], b[t]);
            }
            if (pj != t)
                for (size_t i = 0; i < n; ++i)
                    std::swap(A[i][pj], A[i][t]);
            if (pj != t)
                for (size_t i = 0; i < m; ++i)
                    std::swap(V[i][pj], V[i][t]);

            bool clean = true;
            for (size_t i = t + 1; i < n; ++i) {
                if (A[i][t] == 0)
                    continue;
                Int q = A[i][t] / A[t][t];  // truncated: remainder shrinks
                if (q != 0) {
                    for (size_t j = t; j < m; ++j)
                        A[i][j] -= q * A[t][j];
                    b[i] -= q * b[t];
                }
                if (A[i][t] != 0)
                    clean = false;
            }
            for (size_t j = t + 1; j < m; ++j) {
                if (A[t][j] == 0)
                    continue;
                Int q = A[t][j] / A[t][t];
                if (q != 0)
                    for (size_t i = 0; i < n; ++i) {
                        A[i][j] -= q * A[i][t];
                        V[i][j] -= q * V[i][t];
                    }
                if (A[t][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        rank = t + 1;
    }

diagonal:
    std::vector<Int> y(m, 0);
    for (size_t i = 0; i < rank; ++i) {
        if (b[i] % A[i][i] != 0)
            return std::nullopt;
        y[i] = b[i] / A[i][i];
    }
    for (size_t i = rank; i < n; ++i)
        if (b[i] != 0)
            return std::nullopt;

    std::vector<Int> x(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < rank; ++j)
            x[i] += V[i][j] * y[j];
    return x;
}

}  // namespace monopole
