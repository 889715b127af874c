#pragma once

#include <string>

#include "rankforge/rankcode.hpp"

namespace rankforge {

/// Equivalence-invariant fingerprint used to separate codes without claiming
/// equivalence: same signature means "not distinguished", different means
/// provably inequivalent.
struct InvariantSignature {
    int fp_dim = 0;
    std::vector<std::pair<int, std::uint64_t>> rank_distribution;
    int left_idealiser_fp_dim = 0;
    int right_idealiser_fp_dim = 0;
    std::vector<std::pair<int, std::uint64_t>> left_idealiser_distribution;   // empty if over cap
    std::vector<std::pair<int, std::uint64_t>> right_idealiser_distribution;  // empty if over cap

    bool operator==(const InvariantSignature& o) const = default;
    bool operator<(const InvariantSignature& o) const;
    std::string str() const;
};

InvariantSignature invariant_signature(const RankMetricCode& code, std::uint64_t cap = kDefaultEnumCap);

struct DedupResult {
    std::vector<InvariantSignature> signatures;   // one per bucket, ascending
    std::vector<std::vector<int>> buckets;        // indices into the input list
};

/// Bucket codes by invariant signature. Different buckets are provably
/// inequivalent; a shared bucket is not a proof of equivalence.
DedupResult dedup_by_invariants(const std::vector<RankMetricCode>& codes, std::uint64_t cap = kDefaultEnumCap);

struct SearchReport {
    int start_dim = 0;
    int target_dim = 0;
    int min_dist = 0;
    std::vector<RankMetricCode> extensions;  // distinct completions at target_dim
    std::uint64_t nodes_visited = 0;
    std::uint64_t rank_checks = 0;
    std::uint64_t work_bound = 0;
    bool work_bound_exceeded = false;
    double wall_seconds = 0.0;
    DedupResult dedup;  // buckets over `extensions`
};

/// Depth-first extension of `start` by F_{q0}-generators from the canonically
/// ordered candidate list (ascending packed coefficient vectors), keeping
/// every new coset element at rank >= min_dist. `prune` enables the
/// symmetry-killing canonical-generator rules; disabling it is for soundness
/// tests at tiny sizes only.
SearchReport extend_code(const RankMetricCode& start, int target_dim, int min_dist,
                         std::uint64_t work_bound = 1000000000ull, bool prune = true);

struct MaximalityReport {
    bool maximal = false;
    std::optional<LinearizedPoly> certificate;  // an extending generator, when not maximal
    std::uint64_t rank_checks = 0;
};

/// True iff no single additional generator preserves the minimum distance.
MaximalityReport is_maximal(const RankMetricCode& code, int min_dist, std::uint64_t work_bound = 1000000000ull);

}  // namespace rankforge
