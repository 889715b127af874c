#pragma once

// Internal dense linear algebra over small finite fields. Entries are
// digit values (< q resp. < p) in uint8 storage; not part of the public API.

#include <cstdint>
#include <vector>

#include "rankforge/field.hpp"

namespace rankforge::linalg {

/// Arithmetic on F_q digit values via the context tables.
struct FqOps {
    const FieldCtx* c;
    std::uint32_t size() const { return c->q(); }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return c->q_add(a, b); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return c->q_sub(a, b); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return c->q_mul(a, b); }
    std::uint32_t neg(std::uint32_t a) const { return c->q_neg(a); }
    std::uint32_t inv(std::uint32_t a) const { return c->q_inv(a); }
};

/// Arithmetic mod a prime p.
struct FpOps {
    std::uint32_t p;
    std::uint32_t size() const { return p; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p; }
    std::uint32_t neg(std::uint32_t a) const { return a ? p - a : 0; }
    std::uint32_t inv(std::uint32_t a) const {
        // p is small and prime
        std::uint32_t r = 1, b = a, k = p - 2;
        while (k) {
            if (k & 1) r = (r * b) % p;
            b = (b * b) % p;
            k >>= 1;
        }
        return r;
    }
};

struct Mat {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    std::uint8_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
    std::uint8_t* row(int r) { return a.data() + std::size_t(r) * cols; }
    const std::uint8_t* row(int r) const { return a.data() + std::size_t(r) * cols; }
};

/// Rank by Gaussian elimination; stops early once `stop_at` pivots are found
/// (pass rows+1 or more for the exact rank).
template <class Ops>
int rank_upto(Mat m, const Ops& F, int stop_at) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int sel = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col)) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(rank, c));
        std::uint32_t piv_inv = F.inv(m.at(rank, col));
        for (int r = rank + 1; r < m.rows; ++r) {
            std::uint32_t f = m.at(r, col);
            if (!f) continue;
            std::uint32_t fac = F.mul(f, piv_inv);
            m.at(r, col) = 0;
            for (int c = col + 1; c < m.cols; ++c)
                if (m.at(rank, c)) m.at(r, c) = std::uint8_t(F.sub(m.at(r, c), F.mul(fac, m.at(rank, c))));
        }
        ++rank;
        if (rank >= stop_at) return rank;
    }
    return rank;
}

template <class Ops>
int rank_of(const Mat& m, const Ops& F) {
    return rank_upto(m, F, m.rows + m.cols + 1);
}

/// In-place reduced row echelon form; returns pivot columns.
template <class Ops>
std::vector<int> rref(Mat& m, const Ops& F) {
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int sel = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col)) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(rank, c));
        std::uint32_t piv_inv = F.inv(m.at(rank, col));
        if (piv_inv != 1)
            for (int c = col; c < m.cols; ++c) m.at(rank, c) = std::uint8_t(F.mul(m.at(rank, c), piv_inv));
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            std::uint32_t f = m.at(r, col);
            if (!f) continue;
            for (int c = col; c < m.cols; ++c)
                if (m.at(rank, c)) m.at(r, c) = std::uint8_t(F.sub(m.at(r, c), F.mul(f, m.at(rank, c))));
        }
        pivots.push_back(col);
        ++rank;
    }
    m.rows = rank;
    m.a.resize(std::size_t(rank) * m.cols);
    return pivots;
}

/// Reduce v against an RREF basis; returns true if v reduced to zero.
template <class Ops>
bool reduce_against(std::vector<std::uint8_t>& v, const Mat& rr, const std::vector<int>& pivots, const Ops& F) {
    for (int r = 0; r < rr.rows; ++r) {
        std::uint32_t f = v[pivots[r]];
        if (!f) continue;
        const std::uint8_t* row = rr.row(r);
        for (int c = pivots[r]; c < rr.cols; ++c)
            if (row[c]) v[c] = std::uint8_t(F.sub(v[c], F.mul(f, row[c])));
    }
    for (auto x : v)
        if (x) return false;
    return true;
}

/// Basis of the right nullspace of m (vectors of length m.cols).
template <class Ops>
std::vector<std::vector<std::uint8_t>> nullspace(Mat m, const Ops& F) {
    std::vector<int> pivots = rref(m, F);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<std::uint8_t> v(m.cols, 0);
        v[fc] = 1;
        for (int r = 0; r < m.rows; ++r) v[pivots[r]] = std::uint8_t(F.neg(m.at(r, fc)));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incrementally maintained reduced row echelon form (canonical basis of a
/// growing span). Rows are kept sorted by pivot column.
template <class Ops>
struct IncEchelon {
    Ops F;
    int ncols = 0;
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<int> pivots;

    IncEchelon(Ops ops, int cols) : F(ops), ncols(cols) {}

    /// Reduce v in place against the current rows; true if v became zero.
    bool reduce(std::vector<std::uint8_t>& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint32_t f = v[pivots[r]];
            if (!f) continue;
            const auto& row = rows[r];
            for (int c = pivots[r]; c < ncols; ++c)
                if (row[c]) v[c] = std::uint8_t(F.sub(v[c], F.mul(f, row[c])));
        }
        for (auto x : v)
            if (x) return false;
        return true;
    }

    /// Insert a vector; returns true if it enlarged the span.
    bool insert(std::vector<std::uint8_t> v) {
        if (reduce(v)) return false;
        int piv = 0;
        while (!v[piv]) ++piv;
        std::uint32_t inv = F.inv(v[piv]);
        if (inv != 1)
            for (int c = piv; c < ncols; ++c) v[c] = std::uint8_t(F.mul(v[c], inv));
        // back-substitute into existing rows to keep RREF canonical
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint32_t f = rows[r][piv];
            if (!f) continue;
            for (int c = piv; c < ncols; ++c)
                if (v[c]) rows[r][c] = std::uint8_t(F.sub(rows[r][c], F.mul(f, v[c])));
        }
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < piv) ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, piv);
        return true;
    }

    int rank() const { return int(rows.size()); }
};

/// Inverse of a square matrix; throws on singular input.
template <class Ops>
Mat inverse(const Mat& m, const Ops& F) {
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    std::vector<int> piv = rref(aug, F);
    if ((int)piv.size() != n || piv[n - 1] != n - 1)
        throw Error(ErrorCode::InvalidArgument, "matrix not invertible");
    Mat out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

}  // namespace rankforge::linalg
