#include "rankforge/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "linalg.hpp"
#include "rankforge/equivalence.hpp"

namespace rankforge {

bool InvariantSignature::operator<(const InvariantSignature& o) const {
    auto key = [](const InvariantSignature& s) {
        return std::tie(s.fp_dim, s.rank_distribution, s.left_idealiser_fp_dim, s.right_idealiser_fp_dim,
                        s.left_idealiser_distribution, s.right_idealiser_distribution);
    };
    return key(*this) < key(o);
}

std::string InvariantSignature::str() const {
    std::ostringstream os;
    auto dist = [&](const std::vector<std::pair<int, std::uint64_t>>& d) {
        if (d.empty()) {
            os << "skipped";
            return;
        }
        bool first = true;
        for (auto& [r, c] : d) {
            if (!first) os << ",";
            os << r << ":" << c;
            first = false;
        }
    };
    os << "fpdim=" << fp_dim << ";rd=";
    dist(rank_distribution);
    os << ";li_fpdim=" << left_idealiser_fp_dim << ";ri_fpdim=" << right_idealiser_fp_dim << ";lird=";
    dist(left_idealiser_distribution);
    os << ";rird=";
    dist(right_idealiser_distribution);
    return os.str();
}

InvariantSignature invariant_signature(const RankMetricCode& code, std::uint64_t cap) {
    InvariantSignature sig;
    sig.fp_dim = code.fp_dim();
    auto under_cap = [&](const RankMetricCode& c) {
        std::uint64_t card = 1;
        for (int i = 0; i < c.fp_dim(); ++i) {
            card *= c.ctx()->p();
            if (card > cap) return false;
        }
        return true;
    };
    if (under_cap(code))
        for (auto& [r, c] : code.rank_distribution(cap).counts) sig.rank_distribution.emplace_back(r, c);
    auto li = left_idealiser(code);
    auto ri = right_idealiser(code);
    sig.left_idealiser_fp_dim = li.fp_dim();
    sig.right_idealiser_fp_dim = ri.fp_dim();
    if (under_cap(li))
        for (auto& [r, c] : li.rank_distribution(cap).counts) sig.left_idealiser_distribution.emplace_back(r, c);
    if (under_cap(ri))
        for (auto& [r, c] : ri.rank_distribution(cap).counts) sig.right_idealiser_distribution.emplace_back(r, c);
    return sig;
}

DedupResult dedup_by_invariants(const std::vector<RankMetricCode>& codes, std::uint64_t cap) {
    std::map<InvariantSignature, std::vector<int>> buckets;
    for (int i = 0; i < (int)codes.size(); ++i) buckets[invariant_signature(codes[i], cap)].push_back(i);
    DedupResult out;
    for (auto& [sig, idxs] : buckets) {
        out.signatures.push_back(sig);
        out.buckets.push_back(idxs);
    }
    return out;
}

namespace {

struct AbortSearch {};

/// Shared candidate-space tables for the DFS: every polynomial of the full
/// space indexed by its packed F_p coefficient vector.
struct CandidateSpace {
    const FieldCtx* ctx;
    int N;                  // e * n^2 coordinates
    std::uint64_t total;    // p^N candidates
    bool bits;              // p == 2 and n <= 8: matrices packed in uint64
    std::vector<std::uint64_t> mats2;
    std::vector<std::vector<std::uint8_t>> mats;
    std::vector<std::uint8_t> rank_table;

    std::uint64_t index_add(std::uint64_t a, std::uint64_t b) const {
        if (ctx->p() == 2) return a ^ b;
        std::uint64_t out = 0, mul = 1;
        for (int t = 0; t < N; ++t) {
            out += mul * ((a % ctx->p() + b % ctx->p()) % ctx->p());
            a /= ctx->p();
            b /= ctx->p();
            mul *= ctx->p();
        }
        return out;
    }

    LinearizedPoly poly_of(std::uint64_t idx) const {
        int n = ctx->n(), en = ctx->en();
        std::vector<std::uint32_t> coeffs(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> c(en);
            for (int t = 0; t < en; ++t) {
                c[t] = int(idx % ctx->p());
                idx /= ctx->p();
            }
            coeffs[i] = ctx->from_coords(c);
        }
        return LinearizedPoly(ctx, std::move(coeffs));
    }

    std::uint64_t index_of(const LinearizedPoly& f) const {
        std::uint64_t idx = 0, mul = 1;
        for (int i = 0; i < ctx->n(); ++i) {
            std::uint32_t c = f.coeff(i);
            for (int t = 0; t < ctx->en(); ++t) {
                idx += mul * (c % ctx->p());
                c /= ctx->p();
                mul *= ctx->p();
            }
        }
        return idx;
    }
};

CandidateSpace build_candidate_space(const FieldCtx* ctx) {
    CandidateSpace cs;
    cs.ctx = ctx;
    cs.N = ctx->en() * ctx->n();
    std::uint64_t total = 1;
    for (int i = 0; i < cs.N; ++i) {
        total *= ctx->p();
        if (total > (std::uint64_t(1) << 26))
            throw Error(ErrorCode::WorkBoundExceeded, "candidate space too large to tabulate");
    }
    cs.total = total;
    int n = ctx->n();
    cs.bits = (ctx->q() == 2 && n <= 8);
    if (cs.bits) {
        // unit matrices per coordinate, then XOR dynamic programming
        std::vector<std::uint64_t> units(cs.N);
        for (int u = 0; u < cs.N; ++u) {
            auto digits = cs.poly_of(std::uint64_t(1) << u).y_matrix_digits();
            std::uint64_t m = 0;
            for (int i = 0; i < n; ++i) {
                std::uint64_t row = 0;
                for (int j = 0; j < n; ++j) row |= std::uint64_t(digits[std::size_t(i) * n + j] & 1) << j;
                m |= row << (8 * i);
            }
            units[u] = m;
        }
        cs.mats2.resize(total);
        cs.mats2[0] = 0;
        for (std::uint64_t idx = 1; idx < total; ++idx)
            cs.mats2[idx] = cs.mats2[idx & (idx - 1)] ^ units[__builtin_ctzll(idx)];
        cs.rank_table.resize(total);
        std::uint8_t pb[8];
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t mat = cs.mats2[idx];
            for (int i = 0; i < 8; ++i) pb[i] = 0;
            int r = 0;
            for (int i = 0; i < n; ++i) {
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
            cs.rank_table[idx] = std::uint8_t(r);
        }
    } else {
        cs.mats.resize(total);
        cs.rank_table.resize(total);
        linalg::FqOps F{ctx};
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            cs.mats[idx] = cs.poly_of(idx).y_matrix_digits();
            linalg::Mat m(n, n);
            m.a = cs.mats[idx];
            cs.rank_table[idx] = std::uint8_t(linalg::rank_of(m, F));
        }
    }
    return cs;
}

struct Dfs {
    const CandidateSpace& cs;
    const FieldCtx* ctx;
    int target_dim_q0;  // in F_{q0}-generators
    int min_dist;
    std::uint64_t work_bound;
    bool prune;
    int d0;
    std::vector<std::uint32_t> scalars;  // F_{q0} values
    std::uint64_t nodes = 0, checks = 0;
    std::set<std::vector<std::uint64_t>> completions;  // sorted element index lists

    // elements: sorted index list of current code's elements
    void run(std::vector<std::uint64_t>& elements, std::vector<std::uint64_t>& gens, int dim_q0) {
        ++nodes;
        if (dim_q0 >= target_dim_q0) {
            auto key = elements;
            std::sort(key.begin(), key.end());
            completions.insert(key);
            return;
        }
        std::uint64_t from = gens.empty() ? 1 : gens.back() + 1;
        for (std::uint64_t g = prune ? from : 1; g < cs.total; ++g) {
            if (!prune && std::binary_search(elements.begin(), elements.end(), g)) continue;
            if (admit(elements, g)) {
                std::vector<std::uint64_t> nelem = grow(elements, g);
                gens.push_back(g);
                run(nelem, gens, dim_q0 + 1);
                gens.pop_back();
            }
        }
    }

    bool admit(const std::vector<std::uint64_t>& elements, std::uint64_t g) {
        // scalar multiples of g as indices
        LinearizedPoly gp = cs.poly_of(g);
        for (std::uint32_t s = 1; s < scalars.size(); ++s) {
            std::uint64_t lg = cs.index_of(gp.scale(scalars[s]));
            for (std::uint64_t c : elements) {
                std::uint64_t v = cs.index_add(lg, c);
                if (prune && v < g) return false;  // g must be minimal among new elements
                if (++checks > work_bound) throw AbortSearch{};
                if (cs.rank_table[v] < min_dist) return false;
            }
        }
        return true;
    }

    std::vector<std::uint64_t> grow(const std::vector<std::uint64_t>& elements, std::uint64_t g) {
        std::vector<std::uint64_t> out = elements;
        LinearizedPoly gp = cs.poly_of(g);
        for (std::uint32_t s = 1; s < scalars.size(); ++s) {
            std::uint64_t lg = cs.index_of(gp.scale(scalars[s]));
            for (std::uint64_t c : elements) out.push_back(cs.index_add(lg, c));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

SearchReport extend_code(const RankMetricCode& start, int target_dim, int min_dist, std::uint64_t work_bound,
                         bool prune) {
    auto t0 = std::chrono::steady_clock::now();
    const FieldCtx* ctx = start.ctx();
    SearchReport rep;
    rep.start_dim = start.dim();
    rep.target_dim = target_dim;
    rep.min_dist = min_dist;
    rep.work_bound = work_bound;
    if (target_dim < start.dim()) throw Error(ErrorCode::InvalidArgument, "target below start dimension");
    if (start.dim() > 0 && start.min_distance() < min_dist)
        throw Error(ErrorCode::InvalidArgument, "start code violates the distance constraint");

    CandidateSpace cs = build_candidate_space(ctx);
    Dfs dfs{cs, ctx, target_dim, min_dist, work_bound, prune, start.linearity(),
            ctx->subfield_of_fq(start.linearity())};
    dfs.checks = cs.total;  // building the rank table costs one rank computation per candidate

    std::vector<std::uint64_t> elements;
    start.for_each_codeword([&](const LinearizedPoly& f) { elements.push_back(cs.index_of(f)); });
    std::sort(elements.begin(), elements.end());
    std::vector<std::uint64_t> gens;  // ordering constraint applies to added generators only

    try {
        if (dfs.checks > work_bound) throw AbortSearch{};
        dfs.run(elements, gens, start.dim());
    } catch (const AbortSearch&) {
        rep.work_bound_exceeded = true;
    }
    rep.nodes_visited = dfs.nodes;
    rep.rank_checks = dfs.checks;

    for (const auto& key : dfs.completions) {
        // rebuild a code from the nonzero elements (generators suffice; use all)
        std::vector<LinearizedPoly> gens_polys;
        for (std::uint64_t idx : key)
            if (idx) gens_polys.push_back(cs.poly_of(idx));
        rep.extensions.push_back(RankMetricCode::make(ctx, start.linearity(), gens_polys));
    }
    // post-hoc re-verification: containment, dimension, exact min distance
    for (const auto& ext : rep.extensions) {
        for (const auto& b : start.basis())
            if (!ext.contains(b)) throw std::logic_error("completion lost the start code");
        if (ext.dim() != target_dim) throw std::logic_error("completion has wrong dimension");
        if (ext.min_distance() < min_dist) throw std::logic_error("completion violates the distance constraint");
    }
    rep.dedup = dedup_by_invariants(rep.extensions);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

MaximalityReport is_maximal(const RankMetricCode& code, int min_dist, std::uint64_t work_bound) {
    const FieldCtx* ctx = code.ctx();
    MaximalityReport rep;
    CandidateSpace cs = build_candidate_space(ctx);
    rep.rank_checks = cs.total;
    if (rep.rank_checks > work_bound)
        throw Error(ErrorCode::WorkBoundExceeded, "rank-table construction alone exceeds the budget");
    std::vector<std::uint64_t> elements;
    code.for_each_codeword([&](const LinearizedPoly& f) { elements.push_back(cs.index_of(f)); });
    std::sort(elements.begin(), elements.end());
    auto scalars = ctx->subfield_of_fq(code.linearity());
    for (std::uint64_t g = 1; g < cs.total; ++g) {
        if (std::binary_search(elements.begin(), elements.end(), g)) continue;
        bool ok = true;
        LinearizedPoly gp = cs.poly_of(g);
        for (std::uint32_t s = 1; s < scalars.size() && ok; ++s) {
            std::uint64_t lg = cs.index_of(gp.scale(scalars[s]));
            for (std::uint64_t c : elements) {
                if (++rep.rank_checks > work_bound)
                    throw Error(ErrorCode::WorkBoundExceeded, "maximality scan exceeded the budget");
                if (cs.rank_table[cs.index_add(lg, c)] < min_dist) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            rep.maximal = false;
            rep.certificate = gp;
            return rep;
        }
    }
    rep.maximal = true;
    return rep;
}

}  // namespace rankforge
