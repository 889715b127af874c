#include "rankforge/constructions.hpp"

#include <numeric>

namespace rankforge {

namespace {

void attach_if_small(RankMetricCode& code, std::uint64_t verify_cap) {
    std::uint64_t card = 1;
    for (int i = 0; i < code.fp_dim(); ++i) {
        card *= code.ctx()->p();
        if (card > verify_cap) return;  // left unverified
    }
    code.attach_verdict(code.is_mrd(verify_cap));
}

int norm_target(const FieldCtx* ctx, int k) {
    // (-1)^{nk} as an element of F_p (hence of F_q)
    long long nk = (long long)ctx->n() * k;
    if (ctx->p() == 2 || nk % 2 == 0) return 1;
    return ctx->p() - 1;
}

}  // namespace

RankMetricCode gabidulin(const FieldCtx* ctx, int k, int s, std::uint64_t verify_cap) {
    int n = ctx->n();
    if (k < 1 || k > n) throw Error(ErrorCode::BadK, "gabidulin needs 1 <= k <= n");
    int sr = ((s % n) + n) % n;
    if (n > 1 && std::gcd(sr, n) != 1) throw Error(ErrorCode::StrideNotCoprime, "gcd(s, n) must be 1");
    std::vector<LinearizedPoly> gens;
    std::uint32_t aj = 1;
    std::vector<std::uint32_t> alpha_pows(n);
    for (int j = 0; j < n; ++j) {
        alpha_pows[j] = aj;
        aj = ctx->mul(aj, ctx->alpha());
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) gens.push_back(LinearizedPoly::monomial(ctx, alpha_pows[j], (i * sr) % n));
    auto code = RankMetricCode::make(ctx, ctx->e(), gens);
    if (code.dim() != n * k) throw std::logic_error("Gabidulin code has unexpected dimension");
    attach_if_small(code, verify_cap);
    return code;
}

bool admissible_eta(const FieldCtx* ctx, int k, std::uint32_t eta) {
    if (eta == 0) return true;
    return ctx->norm(eta) != std::uint32_t(norm_target(ctx, k));
}

RankMetricCode twisted(const FieldCtx* ctx, const TwistSpec& spec, std::uint64_t verify_cap) {
    int n = ctx->n();
    if (spec.k < 1 || spec.k > n - 1) throw Error(ErrorCode::BadK, "twisted needs 1 <= k <= n-1");
    int sr = ((spec.s % n) + n) % n;
    if (std::gcd(sr, n) != 1) throw Error(ErrorCode::StrideNotCoprime, "gcd(s, n) must be 1");
    if (!admissible_eta(ctx, spec.k, spec.eta))
        throw Error(ErrorCode::InadmissibleEta, "N(eta) = (-1)^{nk}; code would contain a singular word");
    int h = ((spec.h % n) + n) % n;
    int top = (sr * spec.k) % n;
    std::vector<LinearizedPoly> gens;
    std::uint32_t aj = 1;
    for (int j = 0; j < n; ++j) {
        std::vector<std::uint32_t> c(n, 0);
        c[0] = aj;
        if (spec.eta) c[top] = ctx->mul(spec.eta, ctx->frobenius_q(aj, (long long)sr * h));
        gens.emplace_back(ctx, std::move(c));
        aj = ctx->mul(aj, ctx->alpha());
    }
    aj = 1;
    std::vector<std::uint32_t> alpha_pows(n);
    for (int j = 0; j < n; ++j) {
        alpha_pows[j] = aj;
        aj = ctx->mul(aj, ctx->alpha());
    }
    for (int i = 1; i < spec.k; ++i)
        for (int j = 0; j < n; ++j) gens.push_back(LinearizedPoly::monomial(ctx, alpha_pows[j], (i * sr) % n));
    auto code = RankMetricCode::make(ctx, ctx->e(), gens);
    if (code.dim() != n * spec.k) throw std::logic_error("twisted code has unexpected dimension");
    attach_if_small(code, verify_cap);
    return code;
}

std::optional<std::uint32_t> pair_admissibility_witness(const FieldCtx* ctx, int k, const FunctionalPair& pair) {
    std::uint32_t target = std::uint32_t(norm_target(ctx, k));
    for (std::uint64_t x = 1; x < ctx->card(); ++x) {
        std::uint32_t n1 = ctx->norm(pair.phi1.evaluate(std::uint32_t(x)));
        std::uint32_t n2 = ctx->norm(pair.phi2.evaluate(std::uint32_t(x)));
        if (n1 == ctx->mul(target, n2)) return std::uint32_t(x);
    }
    return std::nullopt;
}

RankMetricCode general_twisted(const FieldCtx* ctx, int k, const FunctionalPair& pair, std::uint64_t verify_cap) {
    int n = ctx->n();
    if (k < 1 || k > n - 1) throw Error(ErrorCode::BadK, "general twisted needs 1 <= k <= n-1");
    if (pair.phi1.ctx() != ctx || pair.phi2.ctx() != ctx)
        throw Error(ErrorCode::ContextMismatch, "functional pair from a different context");
    if (pair.phi1.is_zero() && pair.phi2.is_zero())
        throw Error(ErrorCode::InvalidArgument, "phi1 and phi2 must not both be zero");
    if (auto w = pair_admissibility_witness(ctx, k, pair))
        throw Error(ErrorCode::InadmissiblePair,
                    "norm condition fails at x = " + ctx->to_string(*w));
    std::vector<LinearizedPoly> gens;
    std::uint32_t aj = 1;
    std::vector<std::uint32_t> alpha_pows(n);
    for (int j = 0; j < n; ++j) {
        alpha_pows[j] = aj;
        aj = ctx->mul(aj, ctx->alpha());
    }
    for (int j = 0; j < n; ++j) {
        std::vector<std::uint32_t> c(n, 0);
        c[0] = pair.phi1.evaluate(alpha_pows[j]);
        c[k] = ctx->add(c[k], pair.phi2.evaluate(alpha_pows[j]));
        gens.emplace_back(ctx, std::move(c));
    }
    for (int i = 1; i < k; ++i)
        for (int j = 0; j < n; ++j) gens.push_back(LinearizedPoly::monomial(ctx, alpha_pows[j], i));
    auto code = RankMetricCode::make(ctx, ctx->e(), gens);
    if (code.dim() != n * k) throw std::logic_error("general twisted code has unexpected dimension");
    attach_if_small(code, verify_cap);
    return code;
}

}  // namespace rankforge
