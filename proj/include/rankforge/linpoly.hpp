#pragma once

#include <cstdint>
#include <vector>

#include "rankforge/field.hpp"

namespace rankforge {

/// A linearized polynomial f_0 x + f_1 x^q + ... + f_{n-1} x^{q^{n-1}},
/// always stored reduced mod x^{q^n} - x (exactly n coefficients).
/// Represents an F_q-linear endomorphism of F_{q^n}.
class LinearizedPoly {
public:
    LinearizedPoly() = default;
    LinearizedPoly(const FieldCtx* ctx, std::vector<std::uint32_t> coeffs);

    static LinearizedPoly zero(const FieldCtx* ctx);
    static LinearizedPoly identity(const FieldCtx* ctx);  // x
    static LinearizedPoly monomial(const FieldCtx* ctx, std::uint32_t coeff, int i);  // c * x^{q^i}
    /// Places coeffs[i] at q-power s*i mod n; requires gcd(s, n) = 1.
    static LinearizedPoly from_stride(const FieldCtx* ctx, const std::vector<std::uint32_t>& coeffs, int s);

    const FieldCtx* ctx() const { return ctx_; }
    int n() const { return int(c_.size()); }
    std::uint32_t coeff(int i) const { return c_[i]; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    bool is_zero() const;

    /// Max index with nonzero coefficient; -1 for the zero polynomial.
    int qdegree() const;

    std::uint32_t evaluate(std::uint32_t x) const;
    FFElement evaluate(const FFElement& x) const;

    LinearizedPoly compose(const LinearizedPoly& g) const;  // this after g
    LinearizedPoly operator+(const LinearizedPoly& g) const;
    LinearizedPoly operator-(const LinearizedPoly& g) const;
    bool operator==(const LinearizedPoly& g) const { return ctx_ == g.ctx_ && c_ == g.c_; }
    bool operator!=(const LinearizedPoly& g) const { return !(*this == g); }
    bool operator<(const LinearizedPoly& g) const { return c_ < g.c_; }

    LinearizedPoly scale(std::uint32_t c) const;          // coefficient-wise c*f_i  (= cx after f)
    LinearizedPoly coeff_frobenius_p(long long i) const;  // f^rho: coefficients to the p^i

    /// Adjoint w.r.t. the absolute trace form: coefficient i is f_{(n-i) mod n}^{q^i}.
    LinearizedPoly adjoint() const;

    /// Rank of the induced F_q-linear map (via Gaussian elimination, not root counting).
    int rank() const;
    /// True iff rank >= t (cheaper than rank() for thresholds).
    bool rank_at_least(int t) const;

    /// n x n matrix of the map over the internal y-basis, row-major F_q digits.
    std::vector<std::uint8_t> y_matrix_digits() const;
    /// Same, over the fixed polynomial basis {1, alpha, ..., alpha^{n-1}}.
    std::vector<std::uint8_t> alpha_matrix_digits() const;

private:
    const FieldCtx* ctx_ = nullptr;
    std::vector<std::uint32_t> c_;
};

/// An F_q-subspace of F_{q^n}, held as an independent basis (checked).
class Subspace {
public:
    Subspace(const FieldCtx* ctx, std::vector<std::uint32_t> basis);
    const FieldCtx* ctx() const { return ctx_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<std::uint32_t>& basis() const { return basis_; }
    std::vector<std::uint32_t> elements() const;  // all q^dim elements, deterministic order
    bool contains(std::uint32_t x) const;

private:
    const FieldCtx* ctx_ = nullptr;
    std::vector<std::uint32_t> basis_;
};

/// Kernel of f as a subspace of F_{q^n}.
Subspace kernel(const LinearizedPoly& f);

/// Moore matrix with rows elems and cols+1 Frobenius powers: entry (r, c) = elems[r]^{q^c}.
std::vector<std::vector<std::uint32_t>> moore_matrix(const FieldCtx* ctx,
                                                     const std::vector<std::uint32_t>& elems, int cols);

/// The unique monic linearized polynomial of q-degree dim(U) whose roots
/// contain U, by Laplace expansion of the Moore determinant.
LinearizedPoly minimal_polynomial(const Subspace& U);

}  // namespace rankforge
