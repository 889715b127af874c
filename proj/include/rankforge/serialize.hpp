#pragma once

#include <string>

#include <json.hpp>

#include "rankforge/constructions.hpp"
#include "rankforge/matrixfq.hpp"
#include "rankforge/rankcode.hpp"

namespace rankforge {

using json = nlohmann::json;

// --- field context ---------------------------------------------------------
json field_to_json(const FieldCtx* ctx);
FieldSpec field_spec_from_json(const json& j);

// --- linearized polynomials --------------------------------------------------
json poly_to_json(const LinearizedPoly& f);
LinearizedPoly poly_from_json(const FieldCtx* ctx, const json& j);
/// "f0 + f1*X^q + f2*X^q2 + ..." with field-element syntax from the context.
std::string poly_to_text(const LinearizedPoly& f);
LinearizedPoly poly_from_text(const FieldCtx* ctx, const std::string& s);

// --- codes -------------------------------------------------------------------
json code_to_json(const RankMetricCode& code);
struct LoadedCode {
    FieldCtxPtr ctx;
    RankMetricCode code;
};
LoadedCode code_from_json(const json& j);
RankMetricCode code_from_json_with_ctx(const FieldCtx* ctx, const json& j);

// --- matrices ------------------------------------------------------------------
json matrix_to_json(const MatrixFq& m);
MatrixFq matrix_from_json(const FieldCtx* ctx, const json& j);
/// Row-per-line, space-separated digit entries.
std::string matrix_to_text(const MatrixFq& m);
/// Throws ParseError carrying line/column on malformed input.
MatrixFq matrix_from_text(const FieldCtx* ctx, const std::string& text);

json distribution_to_json(const RankDistribution& d);

// --- CLI-facing string forms ---------------------------------------------------
/// "p=3,e=1,n=4,ext=y4-y-1[,qmod=x2+1][,alpha=y]". Moduli use the polynomial
/// shorthand cNyK+... with prime-field coefficients; alpha accepts "y" or a
/// coordinate list.
FieldSpec parse_field_string(const std::string& s);

/// "G[k=2,s=1]" | "H[k=2,s=1,eta=a^1,h=1]" | "Hgen[k=2,phi1=...,phi2=...]"
/// | "zero" | "full".
RankMetricCode parse_construction(const FieldCtx* ctx, const std::string& s);

}  // namespace rankforge
