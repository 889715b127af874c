// Python bindings for the rank-metric code library. Every wrapper object
// holds a shared_ptr to its field context, so contexts outlive all elements
// reachable from Python.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rankforge/equivalence.hpp"
#include "rankforge/reproduce.hpp"
#include "rankforge/representation.hpp"
#include "rankforge/search.hpp"
#include "rankforge/serialize.hpp"
#include "rankforge/spreads.hpp"

namespace py = pybind11;
using namespace rankforge;

namespace {

struct PyField;

struct PyElement {
    FieldCtxPtr ctx;
    std::uint32_t v = 0;
    FFElement ff() const { return {ctx.get(), v}; }
};

struct PyPoly {
    FieldCtxPtr ctx;
    LinearizedPoly f;
};

struct PyCode {
    FieldCtxPtr ctx;
    RankMetricCode code;
};

struct PyMult {
    FieldCtxPtr ctx;
    PresemifieldMult m;
};

struct PyAutGroup {
    FieldCtxPtr ctx;
    MonomialAutGroup g;
};

struct PyField {
    FieldCtxPtr ctx;

    PyElement el(std::uint32_t raw) const { return {ctx, raw}; }
    PyPoly poly_of(LinearizedPoly f) const { return {ctx, std::move(f)}; }
    PyCode code_of(RankMetricCode c) const { return {ctx, std::move(c)}; }
};

std::vector<std::vector<int>> matrix_to_lists(const MatrixFq& m) {
    std::vector<std::vector<int>> out(m.rows, std::vector<int>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out[r][c] = m.at(r, c);
    return out;
}

MatrixFq matrix_from_lists(const FieldCtx* ctx, const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "empty matrix");
    MatrixFq m(ctx, int(rows.size()), int(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if ((int)rows[r].size() != m.cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = std::uint8_t(rows[r][c]);
    }
    return m;
}

py::dict mrd_dict(const MrdReport& r) {
    py::dict d;
    d["mrd"] = r.mrd;
    d["d"] = r.d;
    d["dim"] = r.dim;
    d["card_exp_p"] = r.card_exp_p;
    d["singleton_exp_p"] = r.singleton_exp_p;
    return d;
}

}  // namespace

PYBIND11_MODULE(rankforge, m) {
    m.doc() = "rank-metric codes as linearized polynomials over finite field towers";

    py::register_exception<Error>(m, "RankforgeError");

    py::class_<PyField>(m, "Field")
        .def_property_readonly("p", [](const PyField& f) { return f.ctx->p(); })
        .def_property_readonly("e", [](const PyField& f) { return f.ctx->e(); })
        .def_property_readonly("n", [](const PyField& f) { return f.ctx->n(); })
        .def_property_readonly("q", [](const PyField& f) { return f.ctx->q(); })
        .def_property_readonly("card", [](const PyField& f) { return f.ctx->card(); })
        .def("alpha", [](const PyField& f) { return PyElement{f.ctx, f.ctx->alpha()}; })
        .def("zero", [](const PyField& f) { return PyElement{f.ctx, 0}; })
        .def("one", [](const PyField& f) { return PyElement{f.ctx, 1}; })
        .def("element", [](const PyField& f, const std::string& s) { return PyElement{f.ctx, f.ctx->parse_element(s)}; })
        .def("element_from_coords",
             [](const PyField& f, const std::vector<int>& c) { return PyElement{f.ctx, f.ctx->from_coords(c)}; })
        .def("elements",
             [](const PyField& f) {
                 std::vector<PyElement> out;
                 for (std::uint64_t v = 0; v < f.ctx->card(); ++v) out.push_back({f.ctx, std::uint32_t(v)});
                 return out;
             })
        .def("poly",
             [](const PyField& f, const std::vector<std::string>& coeffs) {
                 std::vector<std::uint32_t> c;
                 for (const auto& s : coeffs) c.push_back(f.ctx->parse_element(s));
                 return PyPoly{f.ctx, LinearizedPoly(f.ctx.get(), c)};
             })
        .def("poly_from_text", [](const PyField& f, const std::string& s) { return PyPoly{f.ctx, poly_from_text(f.ctx.get(), s)}; })
        .def("poly_stride",
             [](const PyField& f, const std::vector<std::string>& coeffs, int s) {
                 std::vector<std::uint32_t> c;
                 for (const auto& t : coeffs) c.push_back(f.ctx->parse_element(t));
                 return PyPoly{f.ctx, LinearizedPoly::from_stride(f.ctx.get(), c, s)};
             },
             py::arg("coeffs"), py::arg("s") = 1)
        .def("monomial",
             [](const PyField& f, const std::string& coeff, int i) {
                 return PyPoly{f.ctx, LinearizedPoly::monomial(f.ctx.get(), f.ctx->parse_element(coeff), i)};
             },
             py::arg("coeff"), py::arg("i") = 0)
        .def("gabidulin",
             [](const PyField& f, int k, int s) { return PyCode{f.ctx, gabidulin(f.ctx.get(), k, s)}; }, py::arg("k"),
             py::arg("s") = 1)
        .def("twisted",
             [](const PyField& f, int k, const PyElement& eta, int h, int s) {
                 return PyCode{f.ctx, twisted(f.ctx.get(), TwistSpec{k, s, eta.v, h})};
             },
             py::arg("k"), py::arg("eta"), py::arg("h") = 0, py::arg("s") = 1)
        .def("general_twisted",
             [](const PyField& f, int k, const PyPoly& p1, const PyPoly& p2) {
                 return PyCode{f.ctx, general_twisted(f.ctx.get(), k, FunctionalPair{p1.f, p2.f})};
             })
        .def("admissible_eta",
             [](const PyField& f, int k, const PyElement& eta) { return admissible_eta(f.ctx.get(), k, eta.v); })
        .def("make_code",
             [](const PyField& f, int d0, const std::vector<PyPoly>& gens) {
                 std::vector<LinearizedPoly> polys;
                 for (const auto& g : gens) polys.push_back(g.f);
                 return PyCode{f.ctx, RankMetricCode::make(f.ctx.get(), d0, polys)};
             })
        .def("construct", [](const PyField& f, const std::string& s) { return PyCode{f.ctx, parse_construction(f.ctx.get(), s)}; })
        .def("companion_matrix", [](const PyField& f) { return matrix_to_lists(companion_matrix(f.ctx.get())); })
        .def("frobenius_matrix", [](const PyField& f) { return matrix_to_lists(frobenius_matrix(f.ctx.get())); })
        .def("matrix_to_poly",
             [](const PyField& f, const std::vector<std::vector<int>>& rows) {
                 return PyPoly{f.ctx, matrix_to_poly(matrix_from_lists(f.ctx.get(), rows))};
             })
        .def("minimal_polynomial",
             [](const PyField& f, const std::vector<PyElement>& basis) {
                 std::vector<std::uint32_t> raw;
                 for (const auto& b : basis) raw.push_back(b.v);
                 return PyPoly{f.ctx, minimal_polynomial(Subspace(f.ctx.get(), raw))};
             })
        .def("gtf_mult",
             [](const PyField& f, const PyElement& eta, int h) { return PyMult{f.ctx, gtf_mult(f.ctx.get(), eta.v, h)}; })
        .def("predicted_aut_gabidulin",
             [](const PyField& f, int k, int i_range) {
                 return PyAutGroup{f.ctx, predicted_aut_gabidulin(f.ctx.get(), k, i_range)};
             },
             py::arg("k"), py::arg("i_range") = -1)
        .def("predicted_aut_twisted",
             [](const PyField& f, int k, const PyElement& eta, int h, int s) {
                 return PyAutGroup{f.ctx, predicted_aut_twisted(f.ctx.get(), TwistSpec{k, s, eta.v, h})};
             },
             py::arg("k"), py::arg("eta"), py::arg("h") = 0, py::arg("s") = 1)
        .def("twisted_equivalent",
             [](const PyField& f, int k, const PyElement& eta1, int h1, const PyElement& eta2, int h2) {
                 auto res = twisted_equivalent(f.ctx.get(), k, TwistSpec{k, 1, eta1.v, h1}, TwistSpec{k, 1, eta2.v, h2});
                 py::dict d;
                 d["equivalent"] = res.equivalent;
                 d["verified"] = res.verified;
                 if (res.equivalent)
                     d["witness"] = py::make_tuple(res.triple[0], res.triple[1], res.triple[2]);
                 else
                     d["witness"] = py::none();
                 return d;
             })
        .def("to_json", [](const PyField& f) { return field_to_json(f.ctx.get()).dump(); })
        .def("__repr__", [](const PyField& f) {
            return "Field(p=" + std::to_string(f.ctx->p()) + ", e=" + std::to_string(f.ctx->e()) +
                   ", n=" + std::to_string(f.ctx->n()) + ")";
        });

    m.def(
        "make_field",
        [](int p, int e, int n, std::optional<std::vector<int>> q_modulus,
           std::optional<std::vector<std::vector<int>>> ext_modulus, std::optional<std::vector<int>> alpha,
           std::uint64_t dlog_cap) {
            FieldSpec fs;
            fs.p = p;
            fs.e = e;
            fs.n = n;
            if (q_modulus) fs.q_modulus = *q_modulus;
            if (ext_modulus) fs.ext_modulus = *ext_modulus;
            if (alpha) fs.alpha = *alpha;
            fs.dlog_cap = dlog_cap;
            return PyField{FieldCtx::make(fs)};
        },
        py::arg("p"), py::arg("e") = 1, py::arg("n") = 1, py::arg("q_modulus") = py::none(),
        py::arg("ext_modulus") = py::none(), py::arg("alpha") = py::none(),
        py::arg("dlog_cap") = (std::uint64_t(1) << 22));
    m.def("make_field_from_string",
          [](const std::string& s) { return PyField{FieldCtx::make(parse_field_string(s))}; });
    m.def("field_from_json", [](const std::string& s) {
        return PyField{FieldCtx::make(field_spec_from_json(json::parse(s)))};
    });

    py::class_<PyElement>(m, "Element")
        .def("__add__", [](const PyElement& a, const PyElement& b) { return PyElement{a.ctx, (a.ff() + b.ff()).raw()}; })
        .def("__sub__", [](const PyElement& a, const PyElement& b) { return PyElement{a.ctx, (a.ff() - b.ff()).raw()}; })
        .def("__mul__", [](const PyElement& a, const PyElement& b) { return PyElement{a.ctx, (a.ff() * b.ff()).raw()}; })
        .def("__truediv__",
             [](const PyElement& a, const PyElement& b) { return PyElement{a.ctx, (a.ff() / b.ff()).raw()}; })
        .def("__neg__", [](const PyElement& a) { return PyElement{a.ctx, a.ctx->neg(a.v)}; })
        .def("__pow__", [](const PyElement& a, long long k) { return PyElement{a.ctx, a.ctx->pow(a.v, k)}; })
        .def("__eq__", [](const PyElement& a, const PyElement& b) { return a.ctx == b.ctx && a.v == b.v; })
        .def("__hash__", [](const PyElement& a) { return py::hash(py::make_tuple(std::uintptr_t(a.ctx.get()), a.v)); })
        .def("frobenius",
             [](const PyElement& a, long long i, const std::string& level) {
                 if (level == "q") return PyElement{a.ctx, a.ctx->frobenius_q(a.v, i)};
                 if (level == "p") return PyElement{a.ctx, a.ctx->frobenius_p(a.v, i)};
                 throw Error(ErrorCode::InvalidArgument, "level must be 'q' or 'p'");
             },
             py::arg("i"), py::arg("level") = "q")
        .def("norm", [](const PyElement& a) { return PyElement{a.ctx, a.ctx->norm(a.v)}; })
        .def("trace_rel", [](const PyElement& a) { return PyElement{a.ctx, a.ctx->trace_rel(a.v)}; })
        .def("trace_abs", [](const PyElement& a) { return PyElement{a.ctx, a.ctx->trace_abs(a.v)}; })
        .def("dlog", [](const PyElement& a) { return a.ctx->dlog(a.v); })
        .def("coords", [](const PyElement& a) { return a.ctx->coords(a.v); })
        .def_property_readonly("is_zero", [](const PyElement& a) { return a.v == 0; })
        .def("__repr__", [](const PyElement& a) { return a.ctx->to_string(a.v); })
        .def("__str__", [](const PyElement& a) { return a.ctx->to_string(a.v); });

    py::class_<PyPoly>(m, "LinearizedPoly")
        .def("qdegree", [](const PyPoly& p) { return p.f.qdegree(); })
        .def("coeff", [](const PyPoly& p, int i) { return PyElement{p.ctx, p.f.coeff(i)}; })
        .def("evaluate", [](const PyPoly& p, const PyElement& x) { return PyElement{p.ctx, p.f.evaluate(x.v)}; })
        .def("__call__", [](const PyPoly& p, const PyElement& x) { return PyElement{p.ctx, p.f.evaluate(x.v)}; })
        .def("compose", [](const PyPoly& p, const PyPoly& g) { return PyPoly{p.ctx, p.f.compose(g.f)}; })
        .def("__matmul__", [](const PyPoly& p, const PyPoly& g) { return PyPoly{p.ctx, p.f.compose(g.f)}; })
        .def("__add__", [](const PyPoly& p, const PyPoly& g) { return PyPoly{p.ctx, p.f + g.f}; })
        .def("__sub__", [](const PyPoly& p, const PyPoly& g) { return PyPoly{p.ctx, p.f - g.f}; })
        .def("__eq__", [](const PyPoly& p, const PyPoly& g) { return p.f == g.f; })
        .def("scale", [](const PyPoly& p, const PyElement& c) { return PyPoly{p.ctx, p.f.scale(c.v)}; })
        .def("adjoint", [](const PyPoly& p) { return PyPoly{p.ctx, p.f.adjoint()}; })
        .def("rank", [](const PyPoly& p) { return p.f.rank(); })
        .def("kernel",
             [](const PyPoly& p) {
                 std::vector<PyElement> out;
                 for (auto b : kernel(p.f).basis()) out.push_back({p.ctx, b});
                 return out;
             })
        .def("matrix", [](const PyPoly& p) { return matrix_to_lists(poly_to_matrix(p.f)); })
        .def("is_scattered",
             [](const PyPoly& p) {
                 auto rep = is_scattered(p.f);
                 return py::make_tuple(rep.scattered,
                                       rep.witness_beta ? py::cast(PyElement{p.ctx, *rep.witness_beta})
                                                        : py::object(py::none()));
             })
        .def("linear_set_size", [](const PyPoly& p) { return linear_set_size(p.f); })
        .def("scattered_code", [](const PyPoly& p) { return PyCode{p.ctx, scattered_code(p.f)}; })
        .def("__repr__", [](const PyPoly& p) { return poly_to_text(p.f); });

    py::class_<PyCode>(m, "RankMetricCode")
        .def_property_readonly("dim", [](const PyCode& c) { return c.code.dim(); })
        .def_property_readonly("linearity", [](const PyCode& c) { return c.code.linearity(); })
        .def_property_readonly("fp_dim", [](const PyCode& c) { return c.code.fp_dim(); })
        .def("cardinality", [](const PyCode& c) { return c.code.cardinality(); })
        .def("basis",
             [](const PyCode& c) {
                 std::vector<PyPoly> out;
                 for (const auto& b : c.code.basis()) out.push_back({c.ctx, b});
                 return out;
             })
        .def("contains", [](const PyCode& c, const PyPoly& f) { return c.code.contains(f.f); })
        .def("sets_equal", [](const PyCode& c, const PyCode& o) { return c.code.sets_equal(o.code); })
        .def("codewords",
             [](const PyCode& c, std::uint64_t cap) {
                 std::vector<PyPoly> out;
                 for (auto& w : c.code.codewords(cap)) out.push_back({c.ctx, std::move(w)});
                 return out;
             },
             py::arg("cap") = kDefaultEnumCap)
        .def("min_distance", [](const PyCode& c) { return c.code.min_distance(); })
        .def("min_distance_sampled",
             [](const PyCode& c, std::uint64_t seed, std::uint64_t count) {
                 return c.code.min_distance_sampled(seed, count);
             })
        .def("rank_distribution",
             [](const PyCode& c) {
                 py::dict d;
                 for (auto& [r, cnt] : c.code.rank_distribution().counts) d[py::int_(r)] = cnt;
                 return d;
             })
        .def("is_mrd", [](const PyCode& c) { return mrd_dict(c.code.is_mrd()); })
        .def("attached_verdict",
             [](const PyCode& c) -> py::object {
                 if (!c.code.attached_verdict()) return py::none();
                 return mrd_dict(*c.code.attached_verdict());
             })
        .def("delsarte_dual", [](const PyCode& c) { return PyCode{c.ctx, c.code.delsarte_dual()}; })
        .def("adjoint_code", [](const PyCode& c) { return PyCode{c.ctx, c.code.adjoint_code()}; })
        .def("compose_left", [](const PyCode& c, const PyPoly& g) { return PyCode{c.ctx, c.code.compose_left(g.f)}; })
        .def("compose_right", [](const PyCode& c, const PyPoly& g) { return PyCode{c.ctx, c.code.compose_right(g.f)}; })
        .def("puncture",
             [](const PyCode& c, int mm) {
                 auto rep = c.code.puncture(mm);
                 py::dict d;
                 d["m"] = rep.m;
                 d["count"] = rep.size;
                 d["collapsed"] = rep.collapsed;
                 d["mrd"] = rep.mrd;
                 d["d"] = rep.d;
                 std::vector<std::vector<std::vector<int>>> mats;
                 for (const auto& mat : rep.matrices) mats.push_back(matrix_to_lists(mat));
                 d["matrices"] = mats;
                 return d;
             })
        .def("matrix_basis",
             [](const PyCode& c) {
                 std::vector<std::vector<std::vector<int>>> out;
                 for (const auto& mat : code_matrix_basis(c.code)) out.push_back(matrix_to_lists(mat));
                 return out;
             })
        .def("generator_matrix",
             [](const PyCode& c, const std::vector<PyElement>& points) {
                 std::vector<FFElement> pts;
                 for (const auto& p : points) pts.push_back(p.ff());
                 auto gm = generator_matrix(c.code, pts);
                 std::vector<std::vector<std::string>> rows;
                 for (const auto& row : gm.rows) {
                     std::vector<std::string> r;
                     for (const auto& el : row) r.push_back(el.str());
                     rows.push_back(r);
                 }
                 return py::make_tuple(rows, gm.fqn_linear);
             })
        .def("left_idealiser", [](const PyCode& c) { return PyCode{c.ctx, left_idealiser(c.code)}; })
        .def("right_idealiser", [](const PyCode& c) { return PyCode{c.ctx, right_idealiser(c.code)}; })
        .def("apply_isometry",
             [](const PyCode& c, const PyPoly& g, const PyPoly& h, int rho) {
                 return PyCode{c.ctx, apply_isometry(c.code, Isometry{g.f, h.f, rho})};
             },
             py::arg("g"), py::arg("h"), py::arg("rho") = 0)
        .def("brute_force_aut",
             [](const PyCode& c, bool extended, std::uint64_t bound) {
                 auto res = brute_force_aut(c.code, extended, bound);
                 return res.order;
             },
             py::arg("extended_rho") = false, py::arg("work_bound") = 1000000000ull)
        .def("verify_aut", [](const PyCode& c, const PyAutGroup& g) { return verify_aut(c.code, g.g); })
        .def("spread_mult", [](const PyCode& c) { return PyMult{c.ctx, spread_mult_from_code(c.code)}; })
        .def("is_field_spread", [](const PyCode& c) { return is_field_spread(c.code); })
        .def("lifted_min_distance",
             [](const PyCode& c, std::uint64_t cap) {
                 auto rep = lifted_min_distance(c.code, cap);
                 py::dict d;
                 d["count"] = rep.count;
                 d["all_dim_n"] = rep.all_dim_n;
                 d["all_distinct"] = rep.all_distinct;
                 d["min_subspace_distance"] = rep.min_subspace_distance;
                 d["two_times_rank_distance"] = rep.two_times_rank_distance;
                 return d;
             },
             py::arg("cap") = (std::uint64_t(1) << 13))
        .def("invariant_signature", [](const PyCode& c) { return invariant_signature(c.code).str(); })
        .def("extend",
             [](const PyCode& c, int target_dim, int min_dist, std::uint64_t budget, bool prune) {
                 auto rep = extend_code(c.code, target_dim, min_dist, budget, prune);
                 py::dict d;
                 d["extensions_found"] = rep.extensions.size();
                 d["nodes_visited"] = rep.nodes_visited;
                 d["rank_checks"] = rep.rank_checks;
                 d["work_bound_exceeded"] = rep.work_bound_exceeded;
                 d["wall_seconds"] = rep.wall_seconds;
                 std::vector<PyCode> exts;
                 for (auto& e : rep.extensions) exts.push_back({c.ctx, std::move(e)});
                 d["extensions"] = py::cast(exts);
                 std::vector<std::string> sigs;
                 for (auto& s : rep.dedup.signatures) sigs.push_back(s.str());
                 d["bucket_signatures"] = sigs;
                 return d;
             },
             py::arg("target_dim"), py::arg("min_dist"), py::arg("budget") = 1000000000ull, py::arg("prune") = true)
        .def("is_maximal",
             [](const PyCode& c, int min_dist, std::uint64_t budget) {
                 auto rep = is_maximal(c.code, min_dist, budget);
                 py::dict d;
                 d["maximal"] = rep.maximal;
                 d["rank_checks"] = rep.rank_checks;
                 d["certificate"] =
                     rep.certificate ? py::cast(PyPoly{c.ctx, *rep.certificate}) : py::object(py::none());
                 return d;
             },
             py::arg("min_dist"), py::arg("work_bound") = 1000000000ull)
        .def("to_json", [](const PyCode& c) { return code_to_json(c.code).dump(); })
        .def("__repr__", [](const PyCode& c) {
            return "RankMetricCode(dim=" + std::to_string(c.code.dim()) +
                   ", linearity=" + std::to_string(c.code.linearity()) + ")";
        });
    m.def("code_from_json", [](const std::string& s) {
        auto loaded = code_from_json(json::parse(s));
        return PyCode{loaded.ctx, loaded.code};
    });

    py::class_<PyMult>(m, "PresemifieldMult")
        .def("mult",
             [](const PyMult& mm, const PyElement& x, const PyElement& y) {
                 return PyElement{mm.ctx, mm.m.mult(x.v, y.v)};
             })
        .def("has_zero_divisors",
             [](const PyMult& mm) {
                 auto rep = has_zero_divisors(mm.m);
                 return py::make_tuple(rep.found,
                                       rep.found ? py::make_tuple(PyElement{mm.ctx, rep.x}, PyElement{mm.ctx, rep.y})
                                                 : py::make_tuple());
             })
        .def("opposite", [](const PyMult& mm) { return PyMult{mm.ctx, opposite(mm.m)}; });

    py::class_<PyAutGroup>(m, "MonomialAutGroup")
        .def_property_readonly("order", [](const PyAutGroup& g) { return g.g.order(); })
        .def_property_readonly("heuristic", [](const PyAutGroup& g) { return g.g.heuristic; })
        .def("elements",
             [](const PyAutGroup& g, std::size_t limit) {
                 std::vector<std::tuple<long long, long long, long long>> out;
                 for (std::size_t i = 0; i < g.g.elements.size() && i < limit; ++i)
                     out.emplace_back(g.g.elements[i][0], g.g.elements[i][1], g.g.elements[i][2]);
                 return out;
             },
             py::arg("limit") = SIZE_MAX)
        .def("verify_closure", [](const PyAutGroup& g) { return g.g.verify_closure(); });

    m.def("dedup_by_invariants", [](const std::vector<PyCode>& codes) {
        std::vector<RankMetricCode> raw;
        for (const auto& c : codes) raw.push_back(c.code);
        auto res = dedup_by_invariants(raw);
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (std::size_t i = 0; i < res.buckets.size(); ++i) out.emplace_back(res.signatures[i].str(), res.buckets[i]);
        return out;
    });

    m.def("reference_reproduction", []() {
        auto rep = run_reference_reproduction();
        py::dict d;
        d["core_exact"] = rep.core_exact();
        d["a_exact"] = rep.a_display.exact;
        d["s_exact"] = rep.s_display.exact;
        int g2 = 0, h2 = 0, hf = 0;
        for (const auto& c : rep.g2_display) g2 += c.exact;
        for (const auto& c : rep.h2_display) h2 += c.exact;
        for (const auto& c : rep.h2_formula) hf += c.exact;
        d["g2_exact"] = g2;
        d["h2_display_exact"] = h2;
        d["h2_formula_exact"] = hf;
        d["g2_generator_exact"] = rep.g2_generator_exact;
        d["seconds"] = rep.seconds;
        return d;
    });
}
