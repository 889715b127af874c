#include "rankforge/rankcode.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "linalg.hpp"

namespace rankforge {

namespace {

/// Rank of an n x n F_2 matrix packed one row per byte; stops at stop_at.
inline int rank2_upto(std::uint64_t mat, int n, int stop_at) {
    std::uint8_t pb[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    int r = 0;
    for (int i = 0; i < n && r < stop_at; ++i) {
        std::uint8_t row = std::uint8_t(mat >> (8 * i));
        while (row) {
            int b = __builtin_ctz(row);
            if (pb[b])
                row ^= pb[b];
            else {
                pb[b] = row;
                ++r;
                break;
            }
        }
    }
    return r;
}

inline std::uint64_t pack_bits(const std::vector<std::uint8_t>& digits, int n) {
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t row = 0;
        for (int j = 0; j < n; ++j) row |= std::uint64_t(digits[std::size_t(i) * n + j] & 1) << j;
        m |= row << (8 * i);
    }
    return m;
}

}  // namespace

RankMetricCode RankMetricCode::make(const FieldCtx* ctx, int d0, const std::vector<LinearizedPoly>& generators) {
    if (!ctx) throw Error(ErrorCode::InvalidArgument, "null field context");
    if (d0 < 1 || ctx->e() % d0 != 0) throw Error(ErrorCode::InvalidArgument, "linearity degree must divide e");
    RankMetricCode C;
    C.ctx_ = ctx;
    C.d0_ = d0;
    std::uint64_t q0 = 1;
    for (int i = 0; i < d0; ++i) q0 *= ctx->p();
    C.q0_ = std::uint32_t(q0);
    C.scalars_ = ctx->subfield_of_fq(d0);
    if (C.scalars_.size() != q0) throw std::logic_error("subfield enumeration failed");

    int ncols = ctx->n() * ctx->en();
    std::uint32_t omega = ctx->pow(ctx->alpha(), (long long)((ctx->card() - 1) / (q0 - 1)));
    linalg::IncEchelon<linalg::FpOps> ech(linalg::FpOps{std::uint32_t(ctx->p())}, ncols);
    for (const auto& g : generators) {
        if (g.ctx() != ctx) throw Error(ErrorCode::ContextMismatch, "generator from a different context");
        auto v = C.poly_fp_coords(g);
        if (ech.reduce(v)) continue;  // dependent on earlier generators
        C.basis_.push_back(g);
        LinearizedPoly scaled = g;
        for (int s = 0; s < d0; ++s) {
            ech.insert(C.poly_fp_coords(scaled));
            if (s + 1 < d0) scaled = scaled.scale(omega);
        }
    }
    C.ech_rows_ = std::move(ech.rows);
    C.ech_pivots_ = std::move(ech.pivots);
    if ((int)C.ech_rows_.size() != C.fp_dim()) throw std::logic_error("code span has unexpected F_p dimension");
    return C;
}

std::vector<std::uint8_t> RankMetricCode::poly_fp_coords(const LinearizedPoly& f) const {
    int en = ctx_->en(), n = ctx_->n();
    std::vector<std::uint8_t> v(std::size_t(n) * en);
    for (int i = 0; i < n; ++i) {
        std::uint32_t c = f.coeff(i);
        for (int t = 0; t < en; ++t) {
            v[std::size_t(i) * en + t] = std::uint8_t(c % ctx_->p());
            c /= ctx_->p();
        }
    }
    return v;
}

bool RankMetricCode::reduce_fp(std::vector<std::uint8_t>& v) const {
    linalg::FpOps F{std::uint32_t(ctx_->p())};
    for (std::size_t r = 0; r < ech_rows_.size(); ++r) {
        std::uint32_t f = v[ech_pivots_[r]];
        if (!f) continue;
        const auto& row = ech_rows_[r];
        for (std::size_t c = ech_pivots_[r]; c < row.size(); ++c)
            if (row[c]) v[c] = std::uint8_t(F.sub(v[c], F.mul(f, row[c])));
    }
    for (auto x : v)
        if (x) return false;
    return true;
}

bool RankMetricCode::contains(const LinearizedPoly& f) const {
    if (f.ctx() != ctx_) throw Error(ErrorCode::ContextMismatch, "membership across contexts");
    auto v = poly_fp_coords(f);
    return reduce_fp(v);
}

bool RankMetricCode::sets_equal(const RankMetricCode& other) const {
    if (other.ctx_ != ctx_) throw Error(ErrorCode::ContextMismatch, "comparison across contexts");
    if (fp_dim() != other.fp_dim()) return false;
    for (const auto& b : basis_)
        if (!other.contains(b)) return false;
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

std::uint64_t RankMetricCode::cardinality() const {
    std::uint64_t c = 1;
    for (int i = 0; i < fp_dim(); ++i) {
        if (c > (std::uint64_t(1) << 62) / ctx_->p())
            throw Error(ErrorCode::FieldTooLarge, "code cardinality exceeds 2^63");
        c *= ctx_->p();
    }
    return c;
}

std::vector<std::uint8_t> RankMetricCode::canonical_key() const {
    std::vector<std::uint8_t> key;
    key.push_back(std::uint8_t(d0_));
    for (const auto& r : ech_rows_) key.insert(key.end(), r.begin(), r.end());
    return key;
}

void RankMetricCode::for_each_codeword(const std::function<void(const LinearizedPoly&)>& fn,
                                       std::uint64_t cap) const {
    int m = dim(), n = ctx_->n();
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        total *= q0_;
        if (total > cap) throw Error(ErrorCode::EnumerationTooLarge, "codeword enumeration exceeds the cap");
    }
    // scaled coefficient arrays: scaled[t][s] = scalars_[s] * basis_[t]
    std::vector<std::vector<std::vector<std::uint32_t>>> scaled(m);
    for (int t = 0; t < m; ++t) {
        scaled[t].resize(q0_);
        for (std::uint32_t s = 0; s < q0_; ++s) scaled[t][s] = basis_[t].scale(scalars_[s]).coeffs();
    }
    std::vector<std::vector<std::uint32_t>> buf(m + 1, std::vector<std::uint32_t>(n, 0));
    std::function<void(int)> rec = [&](int level) {
        if (level == m) {
            fn(LinearizedPoly(ctx_, buf[m]));
            return;
        }
        for (std::uint32_t s = 0; s < q0_; ++s) {
            for (int i = 0; i < n; ++i) buf[level + 1][i] = ctx_->add(buf[level][i], scaled[level][s][i]);
            rec(level + 1);
        }
    };
    rec(0);
}

std::vector<LinearizedPoly> RankMetricCode::codewords(std::uint64_t cap) const {
    std::vector<LinearizedPoly> out;
    for_each_codeword([&](const LinearizedPoly& f) { out.push_back(f); }, cap);
    return out;
}

namespace {

/// Visit the y-basis digit matrix of every nonzero codeword.
/// fn(const std::uint8_t* mat) -> bool; false aborts. Returns false on abort.
template <class Fn>
bool enumerate_matrices(const FieldCtx* ctx, const std::vector<LinearizedPoly>& basis,
                        const std::vector<std::uint32_t>& scalars, Fn&& fn) {
    int m = int(basis.size()), n = ctx->n();
    int n2 = n * n;
    std::uint32_t q0 = std::uint32_t(scalars.size());
    std::vector<std::vector<std::vector<std::uint8_t>>> scaled(m);
    for (int t = 0; t < m; ++t) {
        auto base = basis[t].y_matrix_digits();
        scaled[t].resize(q0);
        for (std::uint32_t s = 0; s < q0; ++s) {
            scaled[t][s].resize(n2);
            for (int i = 0; i < n2; ++i) scaled[t][s][i] = std::uint8_t(ctx->q_mul(scalars[s], base[i]));
        }
    }
    std::vector<std::vector<std::uint8_t>> buf(m + 1, std::vector<std::uint8_t>(n2, 0));
    // first nonzero scalar at level t0, free scalars below
    std::function<bool(int)> free_walk = [&](int level) -> bool {
        if (level == m) return fn(buf[m].data());
        for (std::uint32_t s = 0; s < q0; ++s) {
            if (s == 0)
                buf[level + 1] = buf[level];
            else
                for (int i = 0; i < n2; ++i) buf[level + 1][i] = std::uint8_t(ctx->q_add(buf[level][i], scaled[level][s][i]));
            if (!free_walk(level + 1)) return false;
        }
        return true;
    };
    for (int t0 = 0; t0 < m; ++t0) {
        for (std::uint32_t s = 1; s < q0; ++s) {
            buf[t0 + 1] = scaled[t0][s];
            if (!free_walk(t0 + 1)) return false;
        }
    }
    return true;
}

/// Same for q = 2 with n <= 8: matrices packed into uint64, Gray-code order.
template <class Fn>
bool enumerate_matrices_q2(const FieldCtx* ctx, const std::vector<LinearizedPoly>& basis, Fn&& fn) {
    int m = int(basis.size());
    std::vector<std::uint64_t> mats(m);
    for (int t = 0; t < m; ++t) mats[t] = pack_bits(basis[t].y_matrix_digits(), ctx->n());
    std::uint64_t total = std::uint64_t(1) << m;
    std::uint64_t cur = 0;
    for (std::uint64_t t = 1; t < total; ++t) {
        cur ^= mats[__builtin_ctzll(t)];
        if (!fn(cur)) return false;
    }
    return true;
}

}  // namespace

int RankMetricCode::min_distance(std::uint64_t cap) const {
    if (dim() == 0) throw Error(ErrorCode::ZeroCode, "minimum distance of the zero code");
    if (cardinality() > cap) throw Error(ErrorCode::EnumerationTooLarge, "exact mode exceeds the enumeration cap");
    int n = ctx_->n();
    int best = n + 1;
    if (ctx_->q() == 2 && n <= 8) {
        enumerate_matrices_q2(ctx_, basis_, [&](std::uint64_t mat) {
            int r = rank2_upto(mat, n, best);
            if (r < best) best = r;
            return best > 1;
        });
    } else {
        linalg::Mat scratch(n, n);
        linalg::FqOps F{ctx_};
        enumerate_matrices(ctx_, basis_, scalars_, [&](const std::uint8_t* mat) {
            scratch.a.assign(mat, mat + std::size_t(n) * n);
            scratch.rows = scratch.cols = n;
            int r = linalg::rank_upto(scratch, F, best);
            if (r < best) best = r;
            return best > 1;
        });
    }
    return best;
}

int RankMetricCode::min_distance_sampled(std::uint64_t seed, std::uint64_t count) const {
    if (dim() == 0) throw Error(ErrorCode::ZeroCode, "minimum distance of the zero code");
    std::mt19937_64 rng(seed);
    int n = ctx_->n();
    int best = n + 1;
    int m = dim();
    for (std::uint64_t it = 0; it < count; ++it) {
        std::vector<std::uint32_t> digits(m, 0);
        bool nonzero = false;
        while (!nonzero) {
            for (int t = 0; t < m; ++t) {
                digits[t] = std::uint32_t(rng() % q0_);
                nonzero |= digits[t] != 0;
            }
        }
        LinearizedPoly w = LinearizedPoly::zero(ctx_);
        for (int t = 0; t < m; ++t)
            if (digits[t]) w = w + basis_[t].scale(scalars_[digits[t]]);
        best = std::min(best, w.rank());
    }
    return best;
}

RankDistribution RankMetricCode::rank_distribution(std::uint64_t cap) const {
    RankDistribution dist;
    dist.counts[0] = 1;
    if (dim() == 0) return dist;
    if (cardinality() > cap) throw Error(ErrorCode::EnumerationTooLarge, "distribution exceeds the enumeration cap");
    int n = ctx_->n();
    if (ctx_->q() == 2 && n <= 8) {
        enumerate_matrices_q2(ctx_, basis_, [&](std::uint64_t mat) {
            ++dist.counts[rank2_upto(mat, n, n + 1)];
            return true;
        });
    } else {
        linalg::Mat scratch(n, n);
        linalg::FqOps F{ctx_};
        enumerate_matrices(ctx_, basis_, scalars_, [&](const std::uint8_t* mat) {
            scratch.a.assign(mat, mat + std::size_t(n) * n);
            scratch.rows = scratch.cols = n;
            ++dist.counts[linalg::rank_of(scratch, F)];
            return true;
        });
    }
    return dist;
}

MrdReport RankMetricCode::is_mrd(std::uint64_t cap) const {
    if (dim() == 0) throw Error(ErrorCode::ZeroCode, "MRD check needs a nonzero code");
    if (cardinality() > cap) throw Error(ErrorCode::EnumerationTooLarge, "MRD check exceeds the enumeration cap");
    int n = ctx_->n(), en = ctx_->e() * n;
    MrdReport rep;
    rep.dim = dim();
    rep.card_exp_p = card_exp_p();
    int fp = fp_dim();
    if (fp % en == 0) {
        int d_target = n + 1 - fp / en;
        if (d_target >= 1 && d_target <= n) {
            // MRD iff every nonzero word has rank >= d_target; then d = d_target exactly
            bool ok;
            if (ctx_->q() == 2 && n <= 8) {
                ok = enumerate_matrices_q2(ctx_, basis_, [&](std::uint64_t mat) {
                    return rank2_upto(mat, n, d_target) >= d_target;
                });
            } else {
                linalg::Mat scratch(n, n);
                linalg::FqOps F{ctx_};
                ok = enumerate_matrices(ctx_, basis_, scalars_, [&](const std::uint8_t* mat) {
                    scratch.a.assign(mat, mat + std::size_t(n) * n);
                    scratch.rows = scratch.cols = n;
                    return linalg::rank_upto(scratch, F, d_target) >= d_target;
                });
            }
            if (ok) {
                rep.mrd = true;
                rep.d = d_target;
                rep.singleton_exp_p = en * (n - d_target + 1);
                return rep;
            }
        }
    }
    rep.mrd = false;
    rep.d = min_distance(cap);
    rep.singleton_exp_p = en * (n - rep.d + 1);
    return rep;
}

RankMetricCode RankMetricCode::delsarte_dual() const {
    int n = ctx_->n(), en = ctx_->en(), p = ctx_->p();
    int N = n * en;
    // Gram matrix of the tower basis under the absolute trace form
    std::vector<std::uint8_t> G(std::size_t(en) * en);
    std::vector<std::uint32_t> tower(en);
    {
        std::uint32_t v = 1;
        for (int t = 0; t < en; ++t) {
            tower[t] = v;
            v = std::uint32_t(std::uint64_t(v) * p);
        }
    }
    for (int t = 0; t < en; ++t)
        for (int u = 0; u < en; ++u) G[std::size_t(t) * en + u] = std::uint8_t(ctx_->trace_abs(ctx_->mul(tower[t], tower[u])));

    linalg::Mat M(int(ech_rows_.size()), N);
    for (std::size_t r = 0; r < ech_rows_.size(); ++r)
        for (int i = 0; i < n; ++i)
            for (int u = 0; u < en; ++u) {
                std::uint32_t acc = 0;
                for (int t = 0; t < en; ++t)
                    acc = (acc + std::uint32_t(ech_rows_[r][std::size_t(i) * en + t]) * G[std::size_t(t) * en + u]) % p;
                M.at(int(r), i * en + u) = std::uint8_t(acc);
            }
    auto null_basis = linalg::nullspace(M, linalg::FpOps{std::uint32_t(p)});

    std::vector<LinearizedPoly> polys;
    for (const auto& v : null_basis) {
        std::vector<std::uint32_t> coeffs(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> c(en);
            for (int t = 0; t < en; ++t) c[t] = v[std::size_t(i) * en + t];
            coeffs[i] = ctx_->from_coords(c);
        }
        polys.emplace_back(ctx_, std::move(coeffs));
    }
    int d0 = detect_linearity(ctx_, polys);
    auto out = make(ctx_, d0, polys);
    if (out.fp_dim() != N - fp_dim()) throw std::logic_error("dual dimension mismatch");
    return out;
}

RankMetricCode RankMetricCode::adjoint_code() const {
    std::vector<LinearizedPoly> polys;
    for (const auto& b : basis_) polys.push_back(b.adjoint());
    return make(ctx_, d0_, polys);
}

RankMetricCode RankMetricCode::compose_left(const LinearizedPoly& g) const {
    std::vector<LinearizedPoly> polys;
    for (const auto& b : basis_) polys.push_back(g.compose(b));
    return make(ctx_, d0_, polys);
}

RankMetricCode RankMetricCode::compose_right(const LinearizedPoly& g) const {
    std::vector<LinearizedPoly> polys;
    for (const auto& b : basis_) polys.push_back(b.compose(g));
    return make(ctx_, d0_, polys);
}

PuncturedCode RankMetricCode::puncture(int m, std::uint64_t cap) const {
    int n = ctx_->n();
    if (m < 1 || m > n) throw Error(ErrorCode::InvalidArgument, "puncture rows must satisfy 1 <= m <= n");
    PuncturedCode out;
    out.m = m;
    out.n = n;
    std::set<std::vector<std::uint8_t>> seen;
    std::uint64_t words = 0;
    for_each_codeword(
        [&](const LinearizedPoly& f) {
            ++words;
            auto full = f.alpha_matrix_digits();
            std::vector<std::uint8_t> top(full.begin(), full.begin() + std::size_t(m) * n);
            seen.insert(std::move(top));
        },
        cap);
    out.size = seen.size();
    out.collapsed = out.size < words;
    int best = n + 1;
    linalg::FqOps F{ctx_};
    for (const auto& ent : seen) {
        bool zero = true;
        for (auto x : ent)
            if (x) { zero = false; break; }
        if (zero) continue;
        linalg::Mat mat(m, n);
        mat.a = ent;
        best = std::min(best, linalg::rank_of(mat, F));
        MatrixFq mq(ctx_, m, n);
        mq.entries = ent;
        out.matrices.push_back(std::move(mq));
    }
    {
        MatrixFq zero_mat(ctx_, m, n);
        out.matrices.insert(out.matrices.begin(), zero_mat);
    }
    std::sort(out.matrices.begin(), out.matrices.end(),
              [](const MatrixFq& a, const MatrixFq& b) { return a.entries < b.entries; });
    if (best > n) {
        out.d = 0;
        out.mrd = false;
        return out;
    }
    out.d = best;
    // |punctured| must be exactly q^{n(m-d+1)} = p^{e n (m-d+1)}
    std::uint64_t sz = out.size;
    int exp = 0;
    while (sz % ctx_->p() == 0) {
        sz /= ctx_->p();
        ++exp;
    }
    out.mrd = (sz == 1) && exp == ctx_->e() * n * (m - out.d + 1);
    return out;
}

FFElement bilinear_form_b(const LinearizedPoly& f, const LinearizedPoly& g) {
    if (f.ctx() != g.ctx()) throw Error(ErrorCode::ContextMismatch, "bilinear form across contexts");
    const FieldCtx* ctx = f.ctx();
    std::uint32_t s = 0;
    for (int i = 0; i < ctx->n(); ++i) s = ctx->add(s, ctx->mul(f.coeff(i), g.coeff(i)));
    return {ctx, ctx->trace_abs(s)};
}

int detect_linearity(const FieldCtx* ctx, const std::vector<LinearizedPoly>& fp_basis) {
    if (fp_basis.empty()) return ctx->e();
    RankMetricCode span = RankMetricCode::make(ctx, 1, fp_basis);
    for (int d0 = ctx->e(); d0 >= 1; --d0) {
        if (ctx->e() % d0 != 0) continue;
        std::uint64_t q0 = 1;
        for (int i = 0; i < d0; ++i) q0 *= ctx->p();
        std::uint32_t omega = ctx->pow(ctx->alpha(), (long long)((ctx->card() - 1) / (q0 - 1)));
        bool closed = true;
        for (const auto& b : fp_basis)
            if (!span.contains(b.scale(omega))) {
                closed = false;
                break;
            }
        if (closed) return d0;
    }
    return 1;
}

}  // namespace rankforge
