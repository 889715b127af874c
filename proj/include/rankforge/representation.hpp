#pragma once

#include "rankforge/matrixfq.hpp"
#include "rankforge/rankcode.hpp"

namespace rankforge {

/// Matrix of x -> alpha*x w.r.t. the polynomial basis {1, alpha, ..., alpha^{n-1}}
/// (coordinates written as columns). The companion matrix of alpha's minimal
/// polynomial when alpha generates the extension.
MatrixFq companion_matrix(const FieldCtx* ctx);

/// Matrix of the Frobenius x -> x^q w.r.t. the polynomial basis.
MatrixFq frobenius_matrix(const FieldCtx* ctx);

/// Matrix of u -> f(u) w.r.t. the polynomial basis; rank equals rank(f).
MatrixFq poly_to_matrix(const LinearizedPoly& f);

/// Inverse of poly_to_matrix (square n x n matrices only).
LinearizedPoly matrix_to_poly(const MatrixFq& m);

/// poly_to_matrix of every basis polynomial, order preserved.
std::vector<MatrixFq> code_matrix_basis(const RankMetricCode& code);

struct GeneratorMatrix {
    bool fqn_linear = false;                     // rows span the code over F_{q^n} when true
    std::vector<std::vector<FFElement>> rows;    // v_f = (f(p_0), ..., f(p_{m-1}))
};

/// Evaluation (generator-matrix) view of the code at the given points.
/// F_{q^n}-linear codes get one row per F_{q^n}-generator; everything else
/// falls back to one row per F_{q0}-basis element.
GeneratorMatrix generator_matrix(const RankMetricCode& code, const std::vector<FFElement>& points);

}  // namespace rankforge
