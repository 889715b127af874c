#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "rankforge/linpoly.hpp"
#include "rankforge/matrixfq.hpp"

namespace rankforge {

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 24;

struct MrdReport {
    bool mrd = false;
    int d = 0;                // exact minimum distance
    int dim = 0;              // dimension over F_{q0}
    int card_exp_p = 0;       // |C| = p^card_exp_p
    int singleton_exp_p = 0;  // q^{n(n-d+1)} = p^singleton_exp_p
};

struct RankDistribution {
    std::map<int, std::uint64_t> counts;  // rank value -> number of codewords (rank 0 included)
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto& [r, c] : counts) t += c;
        return t;
    }
};

struct PuncturedCode {
    int m = 0, n = 0;
    std::vector<MatrixFq> matrices;  // distinct, sorted by entries
    bool collapsed = false;
    bool mrd = false;
    int d = 0;  // 0 when only the zero matrix remains
    std::uint64_t size = 0;
};

/// An F_{q0}-linear rank-metric code, q0 = p^{d0} with d0 | e, stored as an
/// independent basis of linearized polynomials plus a canonical F_p echelon
/// form of its coordinate span (used for membership without enumeration).
class RankMetricCode {
public:
    static RankMetricCode make(const FieldCtx* ctx, int d0, const std::vector<LinearizedPoly>& generators);

    const FieldCtx* ctx() const { return ctx_; }
    int linearity() const { return d0_; }               // code is F_{p^{d0}}-linear
    std::uint32_t q0() const { return q0_; }
    int dim() const { return int(basis_.size()); }      // over F_{q0}
    int fp_dim() const { return dim() * d0_; }
    int card_exp_p() const { return fp_dim(); }
    std::uint64_t cardinality() const;                  // p^{fp_dim}, throws if > 2^63
    const std::vector<LinearizedPoly>& basis() const { return basis_; }

    bool contains(const LinearizedPoly& f) const;
    bool sets_equal(const RankMetricCode& other) const;

    /// All codewords in coefficient-odometer order (first basis coordinate
    /// most significant). Throws EnumerationTooLarge above the cap.
    std::vector<LinearizedPoly> codewords(std::uint64_t cap = kDefaultEnumCap) const;
    void for_each_codeword(const std::function<void(const LinearizedPoly&)>& fn,
                           std::uint64_t cap = kDefaultEnumCap) const;

    int min_distance(std::uint64_t cap = kDefaultEnumCap) const;
    /// Upper bound from `count` random nonzero codewords (reproducible by seed).
    int min_distance_sampled(std::uint64_t seed, std::uint64_t count) const;
    RankDistribution rank_distribution(std::uint64_t cap = kDefaultEnumCap) const;
    MrdReport is_mrd(std::uint64_t cap = kDefaultEnumCap) const;

    RankMetricCode delsarte_dual() const;
    RankMetricCode adjoint_code() const;
    RankMetricCode compose_left(const LinearizedPoly& g) const;   // { g o f }
    RankMetricCode compose_right(const LinearizedPoly& g) const;  // { f o g }

    /// Deletes the last n-m rows of every codeword's matrix over the
    /// polynomial basis; collapses duplicates and reports MRD status.
    PuncturedCode puncture(int m, std::uint64_t cap = kDefaultEnumCap) const;

    /// Verdict attached by constructors that verify MRD eagerly.
    const std::optional<MrdReport>& attached_verdict() const { return verdict_; }
    void attach_verdict(MrdReport r) { verdict_ = r; }

    // Internal-ish accessors used by the equivalence/search modules.
    std::vector<std::uint8_t> poly_fp_coords(const LinearizedPoly& f) const;
    /// Reduce an F_p coordinate vector against the code's echelon; true if it
    /// reduced to zero (i.e. the vector lies in the code's span).
    bool reduce_fp(std::vector<std::uint8_t>& v) const;
    const std::vector<std::vector<std::uint8_t>>& echelon_rows() const { return ech_rows_; }
    const std::vector<int>& echelon_pivots() const { return ech_pivots_; }
    /// Canonical key identifying the code as a set (its RREF bytes).
    std::vector<std::uint8_t> canonical_key() const;

private:
    RankMetricCode() = default;
    const FieldCtx* ctx_ = nullptr;
    int d0_ = 1;
    std::uint32_t q0_ = 2;
    std::vector<std::uint32_t> scalars_;  // F_{q0} values, ascending
    std::vector<LinearizedPoly> basis_;
    std::vector<std::vector<std::uint8_t>> ech_rows_;
    std::vector<int> ech_pivots_;
    std::optional<MrdReport> verdict_;
};

/// b(f, g) = absolute trace of sum f_i g_i; symmetric and F_p-bilinear.
FFElement bilinear_form_b(const LinearizedPoly& f, const LinearizedPoly& g);

/// Largest d0 dividing e such that the F_p-span of the given polynomials is
/// closed under F_{p^{d0}} scalar multiplication.
int detect_linearity(const FieldCtx* ctx, const std::vector<LinearizedPoly>& fp_basis);

}  // namespace rankforge
