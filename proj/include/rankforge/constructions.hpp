#pragma once

#include "rankforge/rankcode.hpp"

namespace rankforge {

/// Twisted-code parameters: top coefficient tied to the bottom one by
/// f_{sk} = eta * f_0^{q^{s h}}, support on the stride-s powers.
struct TwistSpec {
    int k = 1;
    int s = 1;
    std::uint32_t eta = 0;
    int h = 0;
};

struct FunctionalPair {
    LinearizedPoly phi1, phi2;
};

/// Generalised Gabidulin code G_{k,s}: spans of x^{q^{s i}}, i < k, over F_{q^n}.
/// k = n gives the full space. Runs the MRD check eagerly when the code is
/// under `verify_cap` and attaches the verdict.
RankMetricCode gabidulin(const FieldCtx* ctx, int k, int s = 1, std::uint64_t verify_cap = kDefaultEnumCap);

/// True iff N(eta) != (-1)^{nk} (eta = 0 is admissible and gives G_k).
bool admissible_eta(const FieldCtx* ctx, int k, std::uint32_t eta);

/// Twisted Gabidulin code H_k(eta, h; s). Throws InadmissibleEta / BadK /
/// StrideNotCoprime. Attaches the MRD verdict when under `verify_cap`.
RankMetricCode twisted(const FieldCtx* ctx, const TwistSpec& spec, std::uint64_t verify_cap = kDefaultEnumCap);

/// Nonzero witness x with N(phi1(x)) = (-1)^{kn} N(phi2(x)), if any.
std::optional<std::uint32_t> pair_admissibility_witness(const FieldCtx* ctx, int k, const FunctionalPair& pair);

/// General two-functional family H_k(phi1, phi2): f_0 = phi1(a), f_k = phi2(a).
/// Throws InadmissiblePair (message carries a witness) when the norm condition
/// fails for some nonzero x.
RankMetricCode general_twisted(const FieldCtx* ctx, int k, const FunctionalPair& pair,
                               std::uint64_t verify_cap = kDefaultEnumCap);

}  // namespace rankforge
