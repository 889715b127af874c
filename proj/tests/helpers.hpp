#pragma once

// Shared fixtures and independent oracles for the test suite. The oracles
// deliberately avoid the implementation paths they check (root/image
// enumeration instead of Gaussian elimination, repeated multiplication
// instead of fast powering).

#include <set>
#include <vector>

#include "rankforge/constructions.hpp"
#include "rankforge/linpoly.hpp"

namespace testing {

using namespace rankforge;

/// q = 3, n = 4, y^4 = y + 1 (the stated worked-example context).
inline FieldCtxPtr ctx34() {
    FieldSpec fs;
    fs.p = 3;
    fs.e = 1;
    fs.n = 4;
    fs.ext_modulus = {{2}, {2}, {0}, {0}, {1}};
    fs.alpha = {0, 1, 0, 0};
    return FieldCtx::make(fs);
}

/// q = 3, n = 4, y^4 = y^3 + 1 (the context generating the published displays).
inline FieldCtxPtr ctx34_display() {
    FieldSpec fs;
    fs.p = 3;
    fs.e = 1;
    fs.n = 4;
    fs.ext_modulus = {{2}, {0}, {0}, {2}, {1}};
    fs.alpha = {0, 1, 0, 0};
    return FieldCtx::make(fs);
}

inline FieldCtxPtr ctx(int p, int e, int n) { return FieldCtx::make(FieldSpec{p, e, n}); }

namespace oracle {

/// Rank by root counting: #roots = q^(dim ker), so rank = n - log_q(#roots).
inline int rank_by_roots(const LinearizedPoly& f) {
    const FieldCtx* c = f.ctx();
    std::uint64_t roots = 0;
    for (std::uint64_t x = 0; x < c->card(); ++x)
        if (f.evaluate(std::uint32_t(x)) == 0) ++roots;
    int dim_ker = 0;
    while (roots > 1) {
        roots /= c->q();
        ++dim_ker;
    }
    return c->n() - dim_ker;
}

/// Image of f as a set.
inline std::set<std::uint32_t> image(const LinearizedPoly& f) {
    std::set<std::uint32_t> out;
    for (std::uint64_t x = 0; x < f.ctx()->card(); ++x) out.insert(f.evaluate(std::uint32_t(x)));
    return out;
}

/// x^k by repeated multiplication.
inline std::uint32_t pow_by_mult(const FieldCtx* c, std::uint32_t x, std::uint64_t k) {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = c->mul(r, x);
    return r;
}

/// Distinct projective spans of {(y, f(y))}: count via the lexicographically
/// smallest element of each span (independent of the slope-ratio route).
inline std::uint64_t span_count(const LinearizedPoly& f) {
    const FieldCtx* c = f.ctx();
    std::set<std::pair<std::uint32_t, std::uint32_t>> reps;
    for (std::uint64_t y = 1; y < c->card(); ++y) {
        std::uint32_t fy = f.evaluate(std::uint32_t(y));
        std::pair<std::uint32_t, std::uint32_t> best{std::uint32_t(y), fy};
        for (std::uint64_t lam = 1; lam < c->card(); ++lam) {
            std::pair<std::uint32_t, std::uint32_t> cand{c->mul(std::uint32_t(lam), std::uint32_t(y)),
                                                         c->mul(std::uint32_t(lam), fy)};
            if (cand < best) best = cand;
        }
        reps.insert(best);
    }
    return reps.size();
}

}  // namespace oracle

}  // namespace testing
