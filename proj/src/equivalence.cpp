#include "rankforge/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "linalg.hpp"

namespace rankforge {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (unsigned __int128)a * b % m;
}

// smallest nonnegative residue
long long smod(long long a, long long m) { return ((a % m) + m) % m; }

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return b ? gcd64(b, a % b) : a; }

// inverse of a mod m for gcd(a, m) = 1 (extended Euclid)
long long inv_mod(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = smod(a, m);
    while (nr) {
        long long qq = r / nr;
        long long tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    return smod(t, m);
}

}  // namespace

LinearizedPoly apply_isometry_poly(const Isometry& iso, const LinearizedPoly& f) {
    return iso.g.compose(f.coeff_frobenius_p(iso.rho_exp)).compose(iso.h);
}

RankMetricCode apply_isometry(const RankMetricCode& code, const Isometry& iso) {
    const FieldCtx* ctx = code.ctx();
    if (iso.g.ctx() != ctx || iso.h.ctx() != ctx)
        throw Error(ErrorCode::ContextMismatch, "isometry from a different context");
    if (!iso.g.rank_at_least(ctx->n()) || !iso.h.rank_at_least(ctx->n()))
        throw Error(ErrorCode::SingularIsometry, "isometry factors must be invertible");
    std::vector<LinearizedPoly> polys;
    for (const auto& b : code.basis()) polys.push_back(apply_isometry_poly(iso, b));
    auto out = RankMetricCode::make(ctx, code.linearity(), polys);
    if (out.dim() != code.dim()) throw std::logic_error("isometry changed the code dimension");
    return out;
}

std::array<long long, 3> MonomialAutGroup::compose(const std::array<long long, 3>& t1,
                                                   const std::array<long long, 3>& t2) const {
    long long M = (long long)ctx->card() - 1;
    int ne = ctx->en();
    long long p1 = 1;
    for (int i = 0; i < t1[2]; ++i) p1 = (long long)mul_mod(p1, ctx->p(), M);
    long long pne2 = 1;
    int shift = int(smod(ne - t2[2], ne));
    for (int i = 0; i < shift; ++i) pne2 = (long long)mul_mod(pne2, ctx->p(), M);
    return {smod(t1[0] + (long long)mul_mod(p1, smod(t2[0], M), M), M),
            smod(t2[1] + (long long)mul_mod(pne2, smod(t1[1], M), M), M),
            smod(t1[2] + t2[2], ne)};
}

bool MonomialAutGroup::contains(const std::array<long long, 3>& t) const {
    return std::binary_search(elements.begin(), elements.end(), t);
}

bool MonomialAutGroup::verify_closure(std::uint64_t max_pairs) const {
    std::uint64_t m = elements.size();
    if (m == 0) return true;
    if (m * m <= max_pairs) {
        for (const auto& t1 : elements)
            for (const auto& t2 : elements)
                if (!contains(compose(t1, t2))) return false;
        return true;
    }
    // deterministic sample
    std::uint64_t step = (m * m) / max_pairs + 1;
    for (std::uint64_t idx = 0; idx < m * m; idx += step)
        if (!contains(compose(elements[idx / m], elements[idx % m]))) return false;
    return true;
}

Isometry MonomialAutGroup::to_isometry(const std::array<long long, 3>& t) const {
    std::uint32_t a = ctx->pow(ctx->alpha(), t[0]);
    std::uint32_t b = ctx->pow(ctx->alpha(), t[1]);
    // (a x^{p^i}, b x^{p^{ne-i}}) acts as f -> (a x) o f^{p^i} o (b^{p^i} x)
    return Isometry{LinearizedPoly::monomial(ctx, a, 0),
                    LinearizedPoly::monomial(ctx, ctx->frobenius_p(b, t[2]), 0), int(t[2])};
}

MonomialAutGroup predicted_aut_gabidulin(const FieldCtx* ctx, int k, int i_range) {
    if (k < 1 || k > ctx->n() - 1) throw Error(ErrorCode::BadK, "automorphism theorem needs 1 <= k <= n-1");
    if (!ctx->has_dlog()) throw Error(ErrorCode::TableUnavailable, "group description needs dlog tables");
    if (i_range < 0) i_range = ctx->en();
    std::uint64_t M = ctx->card() - 1;
    if (M * M * i_range > (std::uint64_t(1) << 23))
        throw Error(ErrorCode::WorkBoundExceeded, "group too large to materialise");
    MonomialAutGroup g;
    g.ctx = ctx;
    g.elements.reserve(M * M * i_range);
    for (long long da = 0; da < (long long)M; ++da)
        for (long long db = 0; db < (long long)M; ++db)
            for (int i = 0; i < i_range; ++i) g.elements.push_back({da, db, i});
    return g;
}

MonomialAutGroup predicted_aut_twisted(const FieldCtx* ctx, const TwistSpec& spec) {
    if (spec.eta == 0) throw Error(ErrorCode::EtaZero, "eta = 0 is the Gabidulin case");
    if (!ctx->has_dlog()) throw Error(ErrorCode::TableUnavailable, "group description needs dlog tables");
    if (!admissible_eta(ctx, spec.k, spec.eta)) throw Error(ErrorCode::InadmissibleEta, "spec is inadmissible");
    int n = ctx->n(), ne = ctx->en();
    long long M = (long long)ctx->card() - 1;
    int sr = ((spec.s % n) + n) % n;
    if (std::gcd(sr, n) != 1) throw Error(ErrorCode::StrideNotCoprime, "gcd(s, n) must be 1");
    int h = ((spec.h % n) + n) % n;
    long long qh = 1, qk = 1;
    for (int i = 0; i < sr * h % n; ++i) qh = (long long)mul_mod(qh, ctx->q(), M);
    for (int i = 0; i < sr * spec.k % n; ++i) qk = (long long)mul_mod(qk, ctx->q(), M);
    long long deta = ctx->dlog(spec.eta);

    MonomialAutGroup g;
    g.ctx = ctx;
    g.heuristic = (spec.k == 1 || spec.k == n - 1 || sr != 1);
    long long c1 = smod(1 - qh, M);
    for (int i = 0; i < ne; ++i) {
        long long pi = 1;
        for (int t = 0; t < i; ++t) pi = (long long)mul_mod(pi, ctx->p(), M);
        long long c2 = (long long)mul_mod(pi, smod(qk - qh, M), M);
        long long rhs0 = (long long)mul_mod(smod(1 - pi, M), smod(deta, M), M);
        long long gc = (long long)gcd64(c2 ? c2 : M, M);
        for (long long da = 0; da < M; ++da) {
            long long rhs = smod(rhs0 - (long long)mul_mod(c1, da, M), M);
            if (c2 == 0) {
                if (rhs == 0)
                    for (long long db = 0; db < M; ++db) g.elements.push_back({da, db, i});
                continue;
            }
            if (rhs % gc) continue;
            long long m2 = M / gc;
            long long db0 = (long long)mul_mod(smod(rhs / gc, m2), inv_mod(c2 / gc, m2), m2);
            for (long long t = 0; t < gc; ++t) g.elements.push_back({da, smod(db0 + t * m2, M), i});
        }
    }
    std::sort(g.elements.begin(), g.elements.end());
    return g;
}

bool verify_aut(const RankMetricCode& code, const MonomialAutGroup& group) {
    const FieldCtx* ctx = code.ctx();
    for (const auto& t : group.elements) {
        std::uint32_t a = ctx->pow(ctx->alpha(), t[0]);
        std::uint32_t b = ctx->pow(ctx->alpha(), t[1]);
        for (const auto& f : code.basis()) {
            // image coefficients: a * f_j^{p^i} * (b^{p^i})^{q^j}
            std::uint32_t bp = ctx->frobenius_p(b, t[2]);
            std::vector<std::uint32_t> c(ctx->n());
            for (int j = 0; j < ctx->n(); ++j)
                c[j] = ctx->mul(a, ctx->mul(ctx->frobenius_p(f.coeff(j), t[2]), ctx->frobenius_q(bp, j)));
            if (!code.contains(LinearizedPoly(ctx, std::move(c)))) return false;
        }
    }
    return true;
}

BruteAutResult brute_force_aut(const RankMetricCode& code, bool extended_rho, std::uint64_t work_bound) {
    const FieldCtx* ctx = code.ctx();
    int n = ctx->n();
    int rho_range = extended_rho ? ctx->en() : ctx->e();
    // |GL(n,q)|
    std::uint64_t gl = 1;
    for (int i = 0; i < n; ++i) {
        std::uint64_t qi = 1;
        for (int t = 0; t < i; ++t) qi *= ctx->q();
        gl *= (ctx->card() - qi);
        if (gl > (std::uint64_t(1) << 40)) throw Error(ErrorCode::WorkBoundExceeded, "GL too large");
    }
    if (gl * gl * rho_range > work_bound)
        throw Error(ErrorCode::WorkBoundExceeded, "|GL|^2 * rho range exceeds the work bound");
    std::uint64_t all_polys = 1;
    for (int i = 0; i < n; ++i) {
        all_polys *= ctx->card();
        if (all_polys > (std::uint64_t(1) << 25))
            throw Error(ErrorCode::WorkBoundExceeded, "polynomial space too large to enumerate");
    }
    // enumerate invertible polynomials
    std::vector<LinearizedPoly> gls;
    gls.reserve(gl);
    std::vector<std::uint32_t> c(n, 0);
    for (std::uint64_t idx = 0; idx < all_polys; ++idx) {
        std::uint64_t v = idx;
        for (int i = 0; i < n; ++i) {
            c[i] = std::uint32_t(v % ctx->card());
            v /= ctx->card();
        }
        LinearizedPoly f(ctx, c);
        if (f.rank_at_least(n)) gls.push_back(std::move(f));
    }
    if (gls.size() != gl) throw std::logic_error("GL enumeration mismatch");

    BruteAutResult out;
    const auto& basis = code.basis();
    for (int rho = 0; rho < rho_range; ++rho) {
        std::vector<LinearizedPoly> basis_rho;
        for (const auto& f : basis) basis_rho.push_back(f.coeff_frobenius_p(rho));
        for (const auto& A : gls) {
            std::vector<LinearizedPoly> left;
            left.reserve(basis_rho.size());
            for (const auto& f : basis_rho) left.push_back(A.compose(f));
            for (const auto& B : gls) {
                bool ok = true;
                for (const auto& lf : left)
                    if (!code.contains(lf.compose(B))) {
                        ok = false;
                        break;
                    }
                if (ok) out.elements.push_back({A, B, rho});
            }
        }
    }
    out.order = out.elements.size();
    return out;
}

TwistedEquivalence twisted_equivalent(const FieldCtx* ctx, int k, const TwistSpec& spec1, const TwistSpec& spec2) {
    if (spec1.eta == 0 || spec2.eta == 0) throw Error(ErrorCode::EtaZero, "twisted equivalence needs nonzero twists");
    if (!admissible_eta(ctx, k, spec1.eta) || !admissible_eta(ctx, k, spec2.eta))
        throw Error(ErrorCode::InadmissibleEta, "inadmissible twist parameter");
    TwistedEquivalence res;
    int n = ctx->n(), ne = ctx->en();
    int h = ((spec1.h % n) + n) % n, j = ((spec2.h % n) + n) % n;
    if (h != j) return res;
    long long M = (long long)ctx->card() - 1;
    long long qh = 1, qk = 1;
    for (int i = 0; i < h; ++i) qh = (long long)mul_mod(qh, ctx->q(), M);
    for (int i = 0; i < k; ++i) qk = (long long)mul_mod(qk, ctx->q(), M);
    long long deta = ctx->dlog(spec1.eta), dnu = ctx->dlog(spec2.eta);
    long long c1 = smod(1 - qh, M);
    for (int i = 0; i < ne && !res.equivalent; ++i) {
        long long pi = 1;
        for (int t = 0; t < i; ++t) pi = (long long)mul_mod(pi, ctx->p(), M);
        long long c2 = (long long)mul_mod(pi, smod(qk - qh, M), M);
        long long rhs0 = smod(dnu - (long long)mul_mod(pi, deta, M), M);
        for (long long da = 0; da < M && !res.equivalent; ++da) {
            long long rhs = smod(rhs0 - (long long)mul_mod(c1, da, M), M);
            long long db = -1;
            if (c2 == 0) {
                if (rhs == 0) db = 0;
            } else {
                long long gc = (long long)gcd64(c2, M);
                if (rhs % gc == 0) {
                    long long m2 = M / gc;
                    db = (long long)mul_mod(smod(rhs / gc, m2), inv_mod(c2 / gc, m2), m2);
                }
            }
            if (db < 0) continue;
            res.equivalent = true;
            res.triple = {da, db, i};
        }
    }
    if (res.equivalent) {
        MonomialAutGroup helper;
        helper.ctx = ctx;
        Isometry iso = helper.to_isometry(res.triple);
        res.witness = iso;
        auto img = apply_isometry(twisted(ctx, TwistSpec{k, 1, spec1.eta, h}), iso);
        res.verified = img.sets_equal(twisted(ctx, TwistSpec{k, 1, spec2.eta, j}));
    }
    return res;
}

namespace {

RankMetricCode idealiser_impl(const RankMetricCode& code, bool left) {
    const FieldCtx* ctx = code.ctx();
    int n = ctx->n(), en = ctx->en();
    int N = n * en;
    // polynomials for the F_p basis of the code
    std::vector<LinearizedPoly> fp_basis;
    for (const auto& row : code.echelon_rows()) {
        std::vector<std::uint32_t> coeffs(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> cc(en);
            for (int t = 0; t < en; ++t) cc[t] = row[std::size_t(i) * en + t];
            coeffs[i] = ctx->from_coords(cc);
        }
        fp_basis.emplace_back(ctx, std::move(coeffs));
    }
    linalg::Mat M(int(fp_basis.size()) * N, N);
    for (int u = 0; u < N; ++u) {
        // unit polynomial E_u: coefficient u/en gets tower basis element p^{u mod en}
        std::vector<std::uint32_t> coeffs(n, 0);
        std::uint32_t tower = 1;
        for (int t = 0; t < u % en; ++t) tower = std::uint32_t(std::uint64_t(tower) * ctx->p());
        coeffs[u / en] = tower;
        LinearizedPoly E(ctx, coeffs);
        for (std::size_t bidx = 0; bidx < fp_basis.size(); ++bidx) {
            LinearizedPoly prod = left ? E.compose(fp_basis[bidx]) : fp_basis[bidx].compose(E);
            auto v = code.poly_fp_coords(prod);
            code.reduce_fp(v);  // residue; zero iff in code
            for (int cidx = 0; cidx < N; ++cidx) M.at(int(bidx) * N + cidx, u) = v[cidx];
        }
    }
    auto null_basis = linalg::nullspace(M, linalg::FpOps{std::uint32_t(ctx->p())});
    std::vector<LinearizedPoly> polys;
    for (const auto& v : null_basis) {
        std::vector<std::uint32_t> coeffs(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> cc(en);
            for (int t = 0; t < en; ++t) cc[t] = v[std::size_t(i) * en + t];
            coeffs[i] = ctx->from_coords(cc);
        }
        polys.emplace_back(ctx, std::move(coeffs));
    }
    int d0 = detect_linearity(ctx, polys);
    return RankMetricCode::make(ctx, d0, polys);
}

}  // namespace

RankMetricCode left_idealiser(const RankMetricCode& code) { return idealiser_impl(code, true); }
RankMetricCode right_idealiser(const RankMetricCode& code) { return idealiser_impl(code, false); }

std::vector<RankMetricCode> gabidulin_subspaces(const RankMetricCode& ambient, int r, std::uint64_t work_bound) {
    const FieldCtx* ctx = ambient.ctx();
    int n = ctx->n();
    int maxdeg = -1;
    for (const auto& b : ambient.basis()) maxdeg = std::max(maxdeg, b.qdegree());
    int budget = (maxdeg + 1) - r;
    if (r < 1 || budget < 0) throw Error(ErrorCode::InvalidArgument, "r out of range for this ambient code");

    std::vector<std::uint32_t> alpha_pows(n);
    std::uint32_t aj = 1;
    for (int jj = 0; jj < n; ++jj) {
        alpha_pows[jj] = aj;
        aj = ctx->mul(aj, ctx->alpha());
    }

    std::uint64_t work = 0;
    std::map<std::vector<std::uint8_t>, RankMetricCode> found;

    // enumerate f with f_0 = 1 and deg <= s, g with deg <= budget - s
    std::function<void(const LinearizedPoly&, const LinearizedPoly&)> consider =
        [&](const LinearizedPoly& f, const LinearizedPoly& g) {
            // containment first (cheap rejection), on the m = 0 generators
            for (int jj = 0; jj < n; ++jj) {
                LinearizedPoly gen = f.compose(LinearizedPoly::monomial(ctx, alpha_pows[jj], 0)).compose(g);
                if (!ambient.contains(gen)) return;
            }
            if (!f.rank_at_least(n) || !g.rank_at_least(n)) return;
            std::vector<LinearizedPoly> gens;
            for (int m = 0; m < r; ++m)
                for (int jj = 0; jj < n; ++jj)
                    gens.push_back(f.compose(LinearizedPoly::monomial(ctx, alpha_pows[jj], m)).compose(g));
            for (const auto& gen : gens)
                if (!ambient.contains(gen)) return;
            auto sub = RankMetricCode::make(ctx, ctx->e(), gens);
            if (sub.dim() != n * r) return;
            found.emplace(sub.canonical_key(), sub);
        };

    // odometer over coefficient tuples of f (positions 1..df) and g (0..dg)
    std::function<void(std::vector<std::uint32_t>&, int, int, const std::function<void(const LinearizedPoly&)>&)>
        enum_coeffs = [&](std::vector<std::uint32_t>& c, int pos, int top,
                          const std::function<void(const LinearizedPoly&)>& emit) {
            if (pos > top) {
                emit(LinearizedPoly(ctx, c));
                return;
            }
            for (std::uint64_t v = 0; v < ctx->card(); ++v) {
                c[pos] = std::uint32_t(v);
                enum_coeffs(c, pos + 1, top, emit);
            }
        };

    for (int df = 0; df <= budget; ++df) {
        std::vector<std::uint32_t> fc(n, 0);
        fc[0] = 1;
        enum_coeffs(fc, 1, df, [&](const LinearizedPoly& f) {
            if (f.qdegree() != df && !(df == 0 && f.qdegree() == 0)) return;  // want deg exactly df (dedup across df)
            for (int dg = 0; dg + df <= budget; ++dg) {
                std::vector<std::uint32_t> gc(n, 0);
                enum_coeffs(gc, 0, dg, [&](const LinearizedPoly& g) {
                    if (g.qdegree() != dg) return;
                    if (++work > work_bound) throw Error(ErrorCode::WorkBoundExceeded, "subspace scan exceeded budget");
                    consider(f, g);
                });
            }
        });
    }

    std::vector<RankMetricCode> out;
    for (auto& [key, code] : found) out.push_back(std::move(code));
    return out;
}

}  // namespace rankforge
