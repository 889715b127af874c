#pragma once

#include <array>

#include "rankforge/constructions.hpp"
#include "rankforge/rankcode.hpp"

namespace rankforge {

/// Isometry f -> g o f^rho o h with g, h invertible and f^rho the
/// coefficient-wise p^rho_exp power (rho_exp taken mod n*e).
struct Isometry {
    LinearizedPoly g, h;
    int rho_exp = 0;
};

LinearizedPoly apply_isometry_poly(const Isometry& iso, const LinearizedPoly& f);
RankMetricCode apply_isometry(const RankMetricCode& code, const Isometry& iso);

/// A group of monomial isometries: triples (da, db, i) denoting the pair
/// (alpha^da x^{p^i}, alpha^db x^{p^{ne-i}}). Elements sorted by (da, db, i).
struct MonomialAutGroup {
    const FieldCtx* ctx = nullptr;
    bool heuristic = false;  // true when outside the backing theorem's scope
    std::vector<std::array<long long, 3>> elements;

    std::uint64_t order() const { return elements.size(); }
    std::array<long long, 3> compose(const std::array<long long, 3>& t1, const std::array<long long, 3>& t2) const;
    bool contains(const std::array<long long, 3>& t) const;
    /// Check closure on all pairs (or a deterministic sample when the group
    /// is larger than max_pairs products).
    bool verify_closure(std::uint64_t max_pairs = 1u << 20) const;
    Isometry to_isometry(const std::array<long long, 3>& t) const;
};

/// The stabiliser {(a x^{p^i}, b x^{p^{ne-i}})} of a Gabidulin code;
/// order (q^n-1)^2 * i_range. i_range defaults to n*e.
MonomialAutGroup predicted_aut_gabidulin(const FieldCtx* ctx, int k, int i_range = -1);

/// Solutions of a^{1-q^{sh}} (b^{q^{sk}-q^{sh}})^{p^i} eta^{p^i} = eta,
/// via per-i dlog congruences. Flagged heuristic outside k in (1, n-1) or s != 1.
MonomialAutGroup predicted_aut_twisted(const FieldCtx* ctx, const TwistSpec& spec);

/// True iff every group element maps the code onto itself.
bool verify_aut(const RankMetricCode& code, const MonomialAutGroup& group);

struct BruteAutElement {
    LinearizedPoly a, b;
    int rho = 0;
};

struct BruteAutResult {
    std::uint64_t order = 0;
    std::vector<BruteAutElement> elements;
};

/// Exhaustive (A, B, rho) scan over GL x GL x Aut. rho ranges over Aut(F_q)
/// (i < e) by default; extended_rho widens it to the semilinear closure i < ne.
BruteAutResult brute_force_aut(const RankMetricCode& code, bool extended_rho = false,
                               std::uint64_t work_bound = 1000000000ull);

struct TwistedEquivalence {
    bool equivalent = false;
    bool verified = false;  // witness confirmed by apply_isometry + sets_equal
    std::array<long long, 3> triple{0, 0, 0};
    std::optional<Isometry> witness;
};

/// Decides H_k(eta,h) ~ H_k(nu,j) by the twist-parameter criterion; returns a
/// verified witness isometry when equivalent.
TwistedEquivalence twisted_equivalent(const FieldCtx* ctx, int k, const TwistSpec& spec1, const TwistSpec& spec2);

RankMetricCode left_idealiser(const RankMetricCode& code);
RankMetricCode right_idealiser(const RankMetricCode& code);

/// Distinct subcodes of `ambient` of the form {f o a o g : a in G_r} with
/// f_0 = 1, f and g invertible, deg_q(f) + deg_q(g) within the embedding
/// theorem's budget. Work bound counts candidate (f, g) pairs.
std::vector<RankMetricCode> gabidulin_subspaces(const RankMetricCode& ambient, int r,
                                                std::uint64_t work_bound = 100000000ull);

}  // namespace rankforge
