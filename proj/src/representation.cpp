#include "rankforge/representation.hpp"

#include "linalg.hpp"

namespace rankforge {

namespace {

MatrixFq map_matrix(const FieldCtx* ctx, const std::function<std::uint32_t(std::uint32_t)>& fn) {
    int n = ctx->n();
    MatrixFq m(ctx, n, n);
    std::uint32_t aj = 1;
    for (int j = 0; j < n; ++j) {
        auto col = ctx->alpha_coords(fn(aj));
        for (int i = 0; i < n; ++i) m.at(i, j) = std::uint8_t(col[i]);
        aj = ctx->mul(aj, ctx->alpha());
    }
    return m;
}

}  // namespace

MatrixFq companion_matrix(const FieldCtx* ctx) {
    return map_matrix(ctx, [&](std::uint32_t u) { return ctx->mul(ctx->alpha(), u); });
}

MatrixFq frobenius_matrix(const FieldCtx* ctx) {
    return map_matrix(ctx, [&](std::uint32_t u) { return ctx->frobenius_q(u, 1); });
}

MatrixFq poly_to_matrix(const LinearizedPoly& f) {
    MatrixFq m(f.ctx(), f.ctx()->n(), f.ctx()->n());
    m.entries = f.alpha_matrix_digits();
    return m;
}

LinearizedPoly matrix_to_poly(const MatrixFq& m) {
    const FieldCtx* ctx = m.ctx;
    int n = ctx->n();
    if (m.rows != n || m.cols != n) throw Error(ErrorCode::DimensionMismatch, "matrix_to_poly needs an n x n matrix");
    // Solve sum_i f_i (alpha^j)^{q^i} = v_j over F_{q^n}; the Moore matrix of a
    // basis is invertible.
    std::vector<std::uint32_t> pts(n), vals(n);
    std::uint32_t aj = 1;
    std::vector<std::uint32_t> alpha_pows(n);
    for (int j = 0; j < n; ++j) {
        alpha_pows[j] = aj;
        aj = ctx->mul(aj, ctx->alpha());
    }
    for (int j = 0; j < n; ++j) {
        pts[j] = alpha_pows[j];
        std::uint32_t v = 0;
        for (int i = 0; i < n; ++i) v = ctx->add(v, ctx->mul(m.at(i, j), alpha_pows[i]));
        vals[j] = v;
    }
    auto rows = moore_matrix(ctx, pts, n);
    // augmented elimination over F_{q^n}
    int nn = n;
    std::vector<std::vector<std::uint32_t>> A(nn, std::vector<std::uint32_t>(nn + 1));
    for (int r = 0; r < nn; ++r) {
        for (int c = 0; c < nn; ++c) A[r][c] = rows[r][c];
        A[r][nn] = vals[r];
    }
    for (int col = 0; col < nn; ++col) {
        int sel = -1;
        for (int r = col; r < nn; ++r)
            if (A[r][col]) { sel = r; break; }
        if (sel < 0) throw std::logic_error("Moore system singular");
        std::swap(A[sel], A[col]);
        std::uint32_t piv_inv = ctx->inv(A[col][col]);
        for (int c = col; c <= nn; ++c) A[col][c] = ctx->mul(A[col][c], piv_inv);
        for (int r = 0; r < nn; ++r) {
            if (r == col || !A[r][col]) continue;
            std::uint32_t f = A[r][col];
            for (int c = col; c <= nn; ++c) A[r][c] = ctx->sub(A[r][c], ctx->mul(f, A[col][c]));
        }
    }
    std::vector<std::uint32_t> coeffs(nn);
    for (int r = 0; r < nn; ++r) coeffs[r] = A[r][nn];
    return LinearizedPoly(ctx, std::move(coeffs));
}

std::vector<MatrixFq> code_matrix_basis(const RankMetricCode& code) {
    std::vector<MatrixFq> out;
    for (const auto& b : code.basis()) out.push_back(poly_to_matrix(b));
    return out;
}

GeneratorMatrix generator_matrix(const RankMetricCode& code, const std::vector<FFElement>& points) {
    const FieldCtx* ctx = code.ctx();
    int n = ctx->n();
    if (points.empty() || (int)points.size() > n)
        throw Error(ErrorCode::DependentPoints, "need between 1 and n evaluation points");
    linalg::Mat pm(int(points.size()), n);
    for (int r = 0; r < (int)points.size(); ++r) {
        if (points[r].ctx() != ctx) throw Error(ErrorCode::ContextMismatch, "points from a different context");
        for (int i = 0; i < n; ++i) pm.at(r, i) = std::uint8_t(ctx->qdigit(points[r].raw(), i));
    }
    if (linalg::rank_of(pm, linalg::FqOps{ctx}) != (int)points.size())
        throw Error(ErrorCode::DependentPoints, "evaluation points are F_q-dependent");

    GeneratorMatrix out;
    // F_{q^n}-linear iff closed under coefficient scaling by alpha
    out.fqn_linear = true;
    for (const auto& b : code.basis())
        if (!code.contains(b.scale(ctx->alpha()))) {
            out.fqn_linear = false;
            break;
        }
    std::vector<LinearizedPoly> gens;
    if (out.fqn_linear) {
        // greedy F_{q^n}-generating family
        linalg::IncEchelon<linalg::FpOps> ech(linalg::FpOps{std::uint32_t(ctx->p())}, n * ctx->en());
        for (const auto& b : code.basis()) {
            auto v = code.poly_fp_coords(b);
            if (ech.reduce(v)) continue;
            gens.push_back(b);
            LinearizedPoly s = b;
            for (int t = 0; t < ctx->en(); ++t) {
                ech.insert(code.poly_fp_coords(s));
                s = s.scale(ctx->alpha());
            }
        }
    } else {
        gens = code.basis();
    }
    for (const auto& g : gens) {
        std::vector<FFElement> row;
        for (const auto& pt : points) row.push_back(g.evaluate(pt));
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace rankforge
