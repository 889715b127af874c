#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rankforge/errors.hpp"

namespace rankforge {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Parameters for building the tower F_p < F_q = F_{p^e} < F_{q^n}.
///
/// Omitted moduli are chosen deterministically as the lexicographically
/// smallest monic irreducible polynomial (coefficients compared
/// low-degree-first). An omitted alpha is the lexicographically smallest
/// primitive element of F_{q^n} (coordinates compared low-index-first).
struct FieldSpec {
    int p = 2;
    int e = 1;
    int n = 1;
    std::vector<int> q_modulus;                 // degree e, monic, coeffs in [0,p), low-first; empty = default
    std::vector<std::vector<int>> ext_modulus;  // degree n, monic, coeffs = F_q coordinate arrays; empty = default
    std::vector<int> alpha;                     // e*n coordinates of a primitive element; empty = default
    std::uint64_t dlog_cap = std::uint64_t(1) << 22;
};

/// Immutable context for the field tower. All arithmetic runs on packed
/// element values: an element is the integer whose base-p digits are its
/// e*n tower coordinates (digit t = coefficient of x^j y^i, t = i*e + j),
/// so base-q digit i is the i-th coordinate over F_q.
///
/// Thread safety: contexts are immutable after construction and freely
/// shareable. Elements keep a raw pointer to their context; keep the
/// shared_ptr alive for as long as elements exist.
class FieldCtx {
public:
    static FieldCtxPtr make(const FieldSpec& spec);

    int p() const { return p_; }
    int e() const { return e_; }
    int n() const { return n_; }
    std::uint32_t q() const { return q_; }
    int en() const { return en_; }
    std::uint64_t card() const { return card_; }  // q^n
    std::uint32_t alpha() const { return alpha_; }
    bool has_dlog() const { return !log_.empty(); }

    const std::vector<int>& q_modulus() const { return q_modulus_; }
    const std::vector<std::uint32_t>& ext_modulus() const { return ext_modulus_; }

    // --- arithmetic on packed values ----------------------------------
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, long long k) const;
    std::uint32_t frobenius_q(std::uint32_t a, long long i) const;  // a^{q^i}, i mod n
    std::uint32_t frobenius_p(std::uint32_t a, long long i) const;  // a^{p^i}, i mod e*n
    std::uint32_t norm(std::uint32_t a) const;                      // into F_q
    std::uint32_t trace_rel(std::uint32_t a) const;                 // into F_q
    std::uint32_t trace_abs(std::uint32_t a) const;                 // into F_p
    long long dlog(std::uint32_t a) const;                          // in [0, card-2]

    bool in_fq(std::uint32_t a) const;  // lies in the subfield F_q
    bool in_fp(std::uint32_t a) const;

    // --- coordinates ---------------------------------------------------
    std::uint32_t qdigit(std::uint32_t a, int i) const { return std::uint32_t((a / qpow_[i]) % q_); }
    std::uint32_t from_qdigits(const std::vector<std::uint32_t>& d) const;
    std::vector<std::uint32_t> qdigits(std::uint32_t a) const;
    std::vector<int> coords(std::uint32_t a) const;  // e*n base-p coordinates
    std::uint32_t from_coords(const std::vector<int>& c) const;
    std::uint64_t qpow(int i) const { return qpow_[i]; }

    // --- F_q digit arithmetic (values < q) ------------------------------
    std::uint32_t q_add(std::uint32_t a, std::uint32_t b) const {
        return qadd_tab_.empty() ? q_add_slow(a, b) : qadd_tab_[a * q_ + b];
    }
    std::uint32_t q_mul(std::uint32_t a, std::uint32_t b) const {
        return qmul_tab_.empty() ? q_mul_slow(a, b) : qmul_tab_[a * q_ + b];
    }
    std::uint32_t q_neg(std::uint32_t a) const { return qneg_tab_.empty() ? q_neg_slow(a) : qneg_tab_[a]; }
    std::uint32_t q_sub(std::uint32_t a, std::uint32_t b) const { return q_add(a, q_neg(b)); }
    std::uint32_t q_inv(std::uint32_t a) const;
    std::uint32_t q_frob_p(std::uint32_t a, int i) const;  // a^{p^i} within F_q

    /// Subfield F_{p^{d0}} of F_q (d0 | e): packed values, ascending.
    std::vector<std::uint32_t> subfield_of_fq(int d0) const;

    /// Matrix of the fixed polynomial basis {1, alpha, ..., alpha^{n-1}}
    /// over the internal y-basis, and its inverse; row-major n*n, F_q entries.
    const std::vector<std::uint8_t>& alpha_basis() const { return pbasis_; }
    const std::vector<std::uint8_t>& alpha_basis_inv() const { return pbasis_inv_; }
    /// Coordinates of a w.r.t. the polynomial basis {alpha^j}.
    std::vector<std::uint32_t> alpha_coords(std::uint32_t a) const;

    // --- text ------------------------------------------------------------
    /// "a^k" when a dlog table exists (and a != 0), else "[c0,c1,...]".
    std::string to_string(std::uint32_t a) const;
    /// Accepts "a^k", "a", "[c0,...]", or a bare integer in [0,p).
    std::uint32_t parse_element(const std::string& s) const;

private:
    FieldCtx() = default;

    std::uint32_t q_add_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t q_mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t q_neg_slow(std::uint32_t a) const;
    std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_nolog(std::uint32_t a, unsigned long long k) const;

    int p_ = 0, e_ = 0, n_ = 0, en_ = 0;
    std::uint32_t q_ = 0;
    std::uint64_t card_ = 0;
    std::uint32_t alpha_ = 0;
    std::vector<int> q_modulus_;             // length e+1, F_p values
    std::vector<std::uint32_t> ext_modulus_; // length n+1, F_q packed values
    std::vector<std::uint64_t> qpow_;        // q^i, i <= n
    std::vector<std::uint64_t> qpow_mod_;    // q^i mod (card-1)
    std::vector<std::uint64_t> ppow_mod_;    // p^i mod (card-1)
    std::vector<std::uint32_t> exp_, log_;   // dlog tables (log_[0] unused)
    std::vector<std::uint16_t> qadd_tab_, qmul_tab_;
    std::vector<std::uint16_t> qneg_tab_, qinv_tab_;
    std::vector<std::uint8_t> pbasis_, pbasis_inv_;
};

/// An element of F_{q^n}. Thin value wrapper; ops check context identity.
class FFElement {
public:
    FFElement() = default;
    FFElement(const FieldCtx* ctx, std::uint32_t raw) : ctx_(ctx), raw_(raw) {}

    const FieldCtx* ctx() const { return ctx_; }
    std::uint32_t raw() const { return raw_; }
    bool is_zero() const { return raw_ == 0; }

    FFElement operator+(const FFElement& o) const { return {c(o), ctx_->add(raw_, o.raw_)}; }
    FFElement operator-(const FFElement& o) const { return {c(o), ctx_->sub(raw_, o.raw_)}; }
    FFElement operator*(const FFElement& o) const { return {c(o), ctx_->mul(raw_, o.raw_)}; }
    FFElement operator/(const FFElement& o) const { return {c(o), ctx_->mul(raw_, ctx_->inv(o.raw_))}; }
    FFElement operator-() const { return {ctx_, ctx_->neg(raw_)}; }
    bool operator==(const FFElement& o) const { return ctx_ == o.ctx_ && raw_ == o.raw_; }
    bool operator!=(const FFElement& o) const { return !(*this == o); }

    FFElement pow(long long k) const { return {ctx_, ctx_->pow(raw_, k)}; }
    FFElement frobenius(long long i, bool p_level = false) const {
        return {ctx_, p_level ? ctx_->frobenius_p(raw_, i) : ctx_->frobenius_q(raw_, i)};
    }
    FFElement norm() const { return {ctx_, ctx_->norm(raw_)}; }
    FFElement trace_rel() const { return {ctx_, ctx_->trace_rel(raw_)}; }
    FFElement trace_abs() const { return {ctx_, ctx_->trace_abs(raw_)}; }
    long long dlog() const { return ctx_->dlog(raw_); }
    std::string str() const { return ctx_->to_string(raw_); }

private:
    const FieldCtx* c(const FFElement& o) const {
        if (ctx_ != o.ctx_) throw Error(ErrorCode::ContextMismatch, "elements from different field contexts");
        return ctx_;
    }
    const FieldCtx* ctx_ = nullptr;
    std::uint32_t raw_ = 0;
};

inline FFElement make_element(const FieldCtxPtr& ctx, std::uint32_t raw) { return {ctx.get(), raw}; }

}  // namespace rankforge
