#include "galepoly/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace galepoly {

int rank_q(QMat m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::optional<std::vector<Rat>> solve_q(QMat a, std::vector<Rat> b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
    return x;
}

Int det_z(ZMat m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    assert(m[0].size() == n);
    // fraction-free elimination; prev divides exactly at every step
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int rank_z_bareiss(ZMat m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[rank][c] - m[i][c] * m[rank][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_mod_p(const ZMat& m, std::uint64_t p) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    Int pz = static_cast<unsigned long>(p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Int v = m[i][j] % pz;
            if (v < 0) v += pz;
            a[i][j] = v.get_ui();
        }
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::uint64_t inv = powmod(a[rank][c], p - 2);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            std::uint64_t f = mulmod(a[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, a[rank][j]);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

ZMat kernel_z(const ZMat& a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    ZMat m = a;
    // U starts as the identity and tracks the unimodular column operations
    ZMat u(cols, std::vector<Int>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][x], m[r][y]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(u[r][x], u[r][y]);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        // column dst -= q * column src
        for (std::size_t r = 0; r < rows; ++r) m[r][dst] -= q * m[r][src];
        for (std::size_t r = 0; r < cols; ++r) u[r][dst] -= q * u[r][src];
    };
    auto col_negate = [&](std::size_t x) {
        for (std::size_t r = 0; r < rows; ++r) m[r][x] = -m[r][x];
        for (std::size_t r = 0; r < cols; ++r) u[r][x] = -u[r][x];
    };

    std::size_t pivcol = 0;
    for (std::size_t r = 0; r < rows && pivcol < cols; ++r) {
        // gcd-reduce row r over columns pivcol..cols-1
        for (;;) {
            std::size_t best = cols;
            for (std::size_t c = pivcol; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                if (best == cols || mpz_cmpabs(m[r][c].get_mpz_t(), m[r][best].get_mpz_t()) < 0)
                    best = c;
            }
            if (best == cols) break;  // row already zero past the pivots
            if (best != pivcol) col_swap(best, pivcol);
            if (m[r][pivcol] < 0) col_negate(pivcol);
            bool reduced = true;
            for (std::size_t c = pivcol + 1; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[r][pivcol].get_mpz_t());
                col_axpy(c, pivcol, q);
                if (m[r][c] != 0) reduced = false;
            }
            if (reduced) {
                ++pivcol;
                break;
            }
        }
    }

    ZMat kernel;
    for (std::size_t c = pivcol; c < cols; ++c) {
        std::vector<Int> v(cols);
        for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace galepoly
