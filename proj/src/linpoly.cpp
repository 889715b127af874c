#include "rankforge/linpoly.hpp"

#include <numeric>

#include "linalg.hpp"

namespace rankforge {

LinearizedPoly::LinearizedPoly(const FieldCtx* ctx, std::vector<std::uint32_t> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
    if (!ctx_) throw Error(ErrorCode::InvalidArgument, "null field context");
    if ((int)c_.size() > ctx_->n()) throw Error(ErrorCode::InvalidArgument, "too many coefficients");
    c_.resize(ctx_->n(), 0);
    for (auto v : c_)
        if (v >= ctx_->card()) throw Error(ErrorCode::InvalidArgument, "coefficient out of field range");
}

LinearizedPoly LinearizedPoly::zero(const FieldCtx* ctx) { return LinearizedPoly(ctx, {}); }

LinearizedPoly LinearizedPoly::identity(const FieldCtx* ctx) { return monomial(ctx, 1, 0); }

LinearizedPoly LinearizedPoly::monomial(const FieldCtx* ctx, std::uint32_t coeff, int i) {
    std::vector<std::uint32_t> c(ctx->n(), 0);
    c[((i % ctx->n()) + ctx->n()) % ctx->n()] = coeff;
    return LinearizedPoly(ctx, std::move(c));
}

LinearizedPoly LinearizedPoly::from_stride(const FieldCtx* ctx, const std::vector<std::uint32_t>& coeffs, int s) {
    int n = ctx->n();
    if (std::gcd(((s % n) + n) % n, n) != 1 && n > 1)
        throw Error(ErrorCode::StrideNotCoprime, "gcd(s, n) must be 1");
    if ((int)coeffs.size() > n) throw Error(ErrorCode::InvalidArgument, "too many stride coefficients");
    std::vector<std::uint32_t> c(n, 0);
    for (int i = 0; i < (int)coeffs.size(); ++i) c[(std::size_t(i) * s) % n] = coeffs[i];
    return LinearizedPoly(ctx, std::move(c));
}

bool LinearizedPoly::is_zero() const {
    for (auto v : c_)
        if (v) return false;
    return true;
}

int LinearizedPoly::qdegree() const {
    for (int i = int(c_.size()) - 1; i >= 0; --i)
        if (c_[i]) return i;
    return -1;
}

std::uint32_t LinearizedPoly::evaluate(std::uint32_t x) const {
    std::uint32_t acc = 0, xi = x;
    for (int i = 0; i < n(); ++i) {
        if (c_[i]) acc = ctx_->add(acc, ctx_->mul(c_[i], xi));
        xi = ctx_->frobenius_q(xi, 1);
    }
    return acc;
}

FFElement LinearizedPoly::evaluate(const FFElement& x) const {
    if (x.ctx() != ctx_) throw Error(ErrorCode::ContextMismatch, "argument from a different context");
    return {ctx_, evaluate(x.raw())};
}

LinearizedPoly LinearizedPoly::compose(const LinearizedPoly& g) const {
    if (g.ctx_ != ctx_) throw Error(ErrorCode::ContextMismatch, "compose across contexts");
    int nn = n();
    std::vector<std::uint32_t> h(nn, 0);
    for (int i = 0; i < nn; ++i) {
        if (!c_[i]) continue;
        for (int j = 0; j < nn; ++j) {
            if (!g.c_[j]) continue;
            int m = (i + j) % nn;
            h[m] = ctx_->add(h[m], ctx_->mul(c_[i], ctx_->frobenius_q(g.c_[j], i)));
        }
    }
    return LinearizedPoly(ctx_, std::move(h));
}

LinearizedPoly LinearizedPoly::operator+(const LinearizedPoly& g) const {
    if (g.ctx_ != ctx_) throw Error(ErrorCode::ContextMismatch, "add across contexts");
    std::vector<std::uint32_t> h(n());
    for (int i = 0; i < n(); ++i) h[i] = ctx_->add(c_[i], g.c_[i]);
    return LinearizedPoly(ctx_, std::move(h));
}

LinearizedPoly LinearizedPoly::operator-(const LinearizedPoly& g) const {
    if (g.ctx_ != ctx_) throw Error(ErrorCode::ContextMismatch, "subtract across contexts");
    std::vector<std::uint32_t> h(n());
    for (int i = 0; i < n(); ++i) h[i] = ctx_->sub(c_[i], g.c_[i]);
    return LinearizedPoly(ctx_, std::move(h));
}

LinearizedPoly LinearizedPoly::scale(std::uint32_t c) const {
    std::vector<std::uint32_t> h(n());
    for (int i = 0; i < n(); ++i) h[i] = ctx_->mul(c, c_[i]);
    return LinearizedPoly(ctx_, std::move(h));
}

LinearizedPoly LinearizedPoly::coeff_frobenius_p(long long i) const {
    std::vector<std::uint32_t> h(n());
    for (int t = 0; t < n(); ++t) h[t] = ctx_->frobenius_p(c_[t], i);
    return LinearizedPoly(ctx_, std::move(h));
}

LinearizedPoly LinearizedPoly::adjoint() const {
    int nn = n();
    std::vector<std::uint32_t> h(nn);
    for (int i = 0; i < nn; ++i) h[i] = ctx_->frobenius_q(c_[(nn - i) % nn], i);
    return LinearizedPoly(ctx_, std::move(h));
}

std::vector<std::uint8_t> LinearizedPoly::y_matrix_digits() const {
    int nn = n();
    std::vector<std::uint8_t> m(std::size_t(nn) * nn);
    for (int j = 0; j < nn; ++j) {
        std::uint32_t img = evaluate(std::uint32_t(ctx_->qpow(j)));  // image of y^j
        for (int i = 0; i < nn; ++i) m[std::size_t(i) * nn + j] = std::uint8_t(ctx_->qdigit(img, i));
    }
    return m;
}

std::vector<std::uint8_t> LinearizedPoly::alpha_matrix_digits() const {
    int nn = n();
    std::vector<std::uint8_t> m(std::size_t(nn) * nn);
    std::uint32_t aj = 1;
    for (int j = 0; j < nn; ++j) {
        auto col = ctx_->alpha_coords(evaluate(aj));
        for (int i = 0; i < nn; ++i) m[std::size_t(i) * nn + j] = std::uint8_t(col[i]);
        aj = ctx_->mul(aj, ctx_->alpha());
    }
    return m;
}

int LinearizedPoly::rank() const {
    linalg::Mat m(n(), n());
    m.a = y_matrix_digits();
    return linalg::rank_of(m, linalg::FqOps{ctx_});
}

bool LinearizedPoly::rank_at_least(int t) const {
    if (t <= 0) return true;
    linalg::Mat m(n(), n());
    m.a = y_matrix_digits();
    return linalg::rank_upto(m, linalg::FqOps{ctx_}, t) >= t;
}

Subspace::Subspace(const FieldCtx* ctx, std::vector<std::uint32_t> basis) : ctx_(ctx), basis_(std::move(basis)) {
    int n = ctx_->n();
    linalg::Mat m(int(basis_.size()), n);
    for (int r = 0; r < (int)basis_.size(); ++r)
        for (int i = 0; i < n; ++i) m.at(r, i) = std::uint8_t(ctx_->qdigit(basis_[r], i));
    if (linalg::rank_of(m, linalg::FqOps{ctx_}) != (int)basis_.size())
        throw Error(ErrorCode::DependentBasis, "subspace basis is dependent over F_q");
}

std::vector<std::uint32_t> Subspace::elements() const {
    std::vector<std::uint32_t> out{0};
    for (auto b : basis_) {
        std::size_t sz = out.size();
        for (std::uint32_t lam = 1; lam < ctx_->q(); ++lam) {
            std::uint32_t lb = ctx_->mul(lam, b);
            for (std::size_t i = 0; i < sz; ++i) out.push_back(ctx_->add(out[i], lb));
        }
    }
    return out;
}

bool Subspace::contains(std::uint32_t x) const {
    int n = ctx_->n();
    linalg::Mat m(int(basis_.size()) + 1, n);
    for (int r = 0; r < (int)basis_.size(); ++r)
        for (int i = 0; i < n; ++i) m.at(r, i) = std::uint8_t(ctx_->qdigit(basis_[r], i));
    for (int i = 0; i < n; ++i) m.at(int(basis_.size()), i) = std::uint8_t(ctx_->qdigit(x, i));
    return linalg::rank_of(m, linalg::FqOps{ctx_}) == (int)basis_.size();
}

Subspace kernel(const LinearizedPoly& f) {
    const FieldCtx* ctx = f.ctx();
    int n = ctx->n();
    linalg::Mat m(n, n);
    m.a = f.y_matrix_digits();
    auto null_basis = linalg::nullspace(m, linalg::FqOps{ctx});
    std::vector<std::uint32_t> basis;
    for (const auto& v : null_basis) {
        std::vector<std::uint32_t> d(v.begin(), v.end());
        basis.push_back(ctx->from_qdigits(d));
    }
    return Subspace(ctx, std::move(basis));
}

std::vector<std::vector<std::uint32_t>> moore_matrix(const FieldCtx* ctx, const std::vector<std::uint32_t>& elems,
                                                     int cols) {
    std::vector<std::vector<std::uint32_t>> m(elems.size(), std::vector<std::uint32_t>(cols));
    for (std::size_t r = 0; r < elems.size(); ++r) {
        std::uint32_t x = elems[r];
        for (int c = 0; c < cols; ++c) {
            m[r][c] = x;
            x = ctx->frobenius_q(x, 1);
        }
    }
    return m;
}

namespace {

// determinant over F_{q^n} by elimination
std::uint32_t det_fqn(const FieldCtx* ctx, std::vector<std::vector<std::uint32_t>> m) {
    int n = int(m.size());
    std::uint32_t det = 1;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col]) { sel = r; break; }
        if (sel < 0) return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = ctx->neg(det);
        }
        det = ctx->mul(det, m[col][col]);
        std::uint32_t piv_inv = ctx->inv(m[col][col]);
        for (int r = col + 1; r < n; ++r) {
            if (!m[r][col]) continue;
            std::uint32_t f = ctx->mul(m[r][col], piv_inv);
            for (int c = col; c < n; ++c) m[r][c] = ctx->sub(m[r][c], ctx->mul(f, m[col][c]));
        }
    }
    return det;
}

}  // namespace

LinearizedPoly minimal_polynomial(const Subspace& U) {
    const FieldCtx* ctx = U.ctx();
    int k = U.dim();
    if (k >= ctx->n()) throw Error(ErrorCode::InvalidArgument, "minimal_polynomial needs dim U < n");
    if (k == 0) return LinearizedPoly::identity(ctx);
    auto rows = moore_matrix(ctx, U.basis(), k + 1);
    std::vector<std::uint32_t> f(std::size_t(k) + 1);
    for (int i = 0; i <= k; ++i) {
        // minor: drop column i of the k x (k+1) Moore matrix of the basis
        std::vector<std::vector<std::uint32_t>> minor(k, std::vector<std::uint32_t>(k));
        for (int r = 0; r < k; ++r)
            for (int c = 0, cc = 0; c <= k; ++c)
                if (c != i) minor[r][cc++] = rows[r][c];
        std::uint32_t d = det_fqn(ctx, minor);
        f[i] = (i % 2) ? ctx->neg(d) : d;
    }
    if (!f[k]) throw Error(ErrorCode::DependentBasis, "Moore determinant degenerate");
    std::uint32_t lead_inv = ctx->inv(f[k]);
    std::vector<std::uint32_t> c(ctx->n(), 0);
    for (int i = 0; i <= k; ++i) c[i] = ctx->mul(f[i], lead_inv);
    LinearizedPoly out(ctx, std::move(c));
    for (auto b : U.basis())
        if (out.evaluate(b) != 0) throw std::logic_error("minimal polynomial does not annihilate U");
    return out;
}

}  // namespace rankforge
