#include "rankforge/matrixfq.hpp"

#include "linalg.hpp"

namespace rankforge {

int MatrixFq::rank() const {
    linalg::Mat m(rows, cols);
    m.a = entries;
    return linalg::rank_of(m, linalg::FqOps{ctx});
}

MatrixFq MatrixFq::mul(const MatrixFq& o) const {
    if (ctx != o.ctx) throw Error(ErrorCode::ContextMismatch, "matrix product across contexts");
    if (cols != o.rows) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
    MatrixFq out(ctx, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            std::uint32_t a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < o.cols; ++j)
                if (o.at(k, j)) out.at(i, j) = std::uint8_t(ctx->q_add(out.at(i, j), ctx->q_mul(a, o.at(k, j))));
        }
    return out;
}

MatrixFq MatrixFq::add(const MatrixFq& o) const {
    if (ctx != o.ctx) throw Error(ErrorCode::ContextMismatch, "matrix sum across contexts");
    if (rows != o.rows || cols != o.cols) throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    MatrixFq out(ctx, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.entries[i] = std::uint8_t(ctx->q_add(entries[i], o.entries[i]));
    return out;
}

MatrixFq MatrixFq::identity(const FieldCtx* c, int n) {
    MatrixFq out(c, n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

MatrixFq MatrixFq::pow(long long k) const {
    if (rows != cols) throw Error(ErrorCode::DimensionMismatch, "matrix power of non-square matrix");
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix power");
    MatrixFq r = identity(ctx, rows), b = *this;
    while (k) {
        if (k & 1) r = r.mul(b);
        b = b.mul(b);
        k >>= 1;
    }
    return r;
}

}  // namespace rankforge
