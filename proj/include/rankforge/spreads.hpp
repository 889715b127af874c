#pragma once

#include "rankforge/matrixfq.hpp"
#include "rankforge/rankcode.hpp"

namespace rankforge {

/// Bilinear multiplication x o y = sum_i y_i R_i(x), where (y_i) are the
/// F_q-coordinates of y in the polynomial basis {1, alpha, ..., alpha^{n-1}}.
/// Zero-divisor-free iff every nonzero combination of the R_i is invertible.
struct PresemifieldMult {
    const FieldCtx* ctx = nullptr;
    std::vector<LinearizedPoly> table;  // R_0, ..., R_{n-1}

    std::uint32_t mult(std::uint32_t x, std::uint32_t y) const;
    FFElement mult(const FFElement& x, const FFElement& y) const;
};

struct ZeroDivisorReport {
    bool found = false;
    std::uint32_t x = 0, y = 0;  // witness pair when found
};

/// View a k=1, F_q-linear MRD code (a semifield spread set) as a presemifield.
/// Throws NotASpreadSet when some nonzero codeword is singular.
PresemifieldMult spread_mult_from_code(const RankMetricCode& code);

/// Generalised twisted field x o y = x y + eta x^{q^h} y^q; needs N(-eta) != 1.
PresemifieldMult gtf_mult(const FieldCtx* ctx, std::uint32_t eta, int h);

/// Zero-divisor scan via ranks of the q^n - 1 nonzero combinations.
ZeroDivisorReport has_zero_divisors(const PresemifieldMult& m, std::uint64_t work_bound = 100000000ull);

/// The opposite algebra x o' y = y o x, re-expressed through coordinate
/// functionals of the polynomial basis.
PresemifieldMult opposite(const PresemifieldMult& m);

/// True iff the spread set is isotopic to the field F_{q^n}
/// (left idealiser of full size q^n).
bool is_field_spread(const RankMetricCode& code);

struct ScatteredReport {
    bool scattered = false;
    std::optional<std::uint32_t> witness_beta;  // rank(f - beta x) < n-1 there
};

/// f is scattered iff rank(f - beta x) >= n-1 for every beta.
ScatteredReport is_scattered(const LinearizedPoly& f);

/// Number of distinct projective points (y : f(y)), y != 0; equals
/// (q^n - 1)/(q - 1) exactly when f is scattered.
std::uint64_t linear_set_size(const LinearizedPoly& f);

/// C_f = <x, f> over F_{q^n}; MRD of dimension 2n with d = n-1 for scattered f.
RankMetricCode scattered_code(const LinearizedPoly& f, std::uint64_t verify_cap = kDefaultEnumCap);

/// S_X = {(u, Xu)}: an n-dimensional subspace of F_q^{2n}.
struct LiftedSubspace {
    const FieldCtx* ctx = nullptr;
    int n = 0;
    std::vector<std::vector<std::uint8_t>> basis;  // n rows of 2n F_q digits

    bool operator==(const LiftedSubspace& o) const { return ctx == o.ctx && basis == o.basis; }
};

LiftedSubspace lift(const MatrixFq& X);
LiftedSubspace lift(const LinearizedPoly& f);

/// d_s(U, V) = dim U + dim V - 2 dim(U intersect V), by linear algebra.
int subspace_distance(const LiftedSubspace& U, const LiftedSubspace& V);

struct LiftReport {
    std::uint64_t count = 0;      // number of lifted subspaces (= |code|)
    bool all_dim_n = false;
    bool all_distinct = false;
    int min_subspace_distance = 0;  // exhaustive pairwise minimum
    int two_times_rank_distance = 0;
};

/// Lift every codeword and exhaustively verify the minimum pairwise subspace
/// distance; also reports 2 * min rank distance for the identity check.
LiftReport lifted_min_distance(const RankMetricCode& code, std::uint64_t cap = 1u << 13);

}  // namespace rankforge
