#pragma once

#include <cstdint>
#include <vector>

#include "rankforge/field.hpp"

namespace rankforge {

/// An m x n matrix over F_q, entries stored row-major as packed digit values.
struct MatrixFq {
    const FieldCtx* ctx = nullptr;
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> entries;

    MatrixFq() = default;
    MatrixFq(const FieldCtx* c, int r, int n) : ctx(c), rows(r), cols(n), entries(std::size_t(r) * n, 0) {}

    std::uint8_t& at(int r, int c) { return entries[std::size_t(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return entries[std::size_t(r) * cols + c]; }

    bool operator==(const MatrixFq& o) const {
        return ctx == o.ctx && rows == o.rows && cols == o.cols && entries == o.entries;
    }
    bool operator!=(const MatrixFq& o) const { return !(*this == o); }

    int rank() const;
    MatrixFq mul(const MatrixFq& o) const;
    MatrixFq add(const MatrixFq& o) const;
    MatrixFq pow(long long k) const;  // square matrices
    static MatrixFq identity(const FieldCtx* c, int n);
};

}  // namespace rankforge
