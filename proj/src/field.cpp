#include "rankforge/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "linalg.hpp"

namespace rankforge {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::LogOfZero: return "LogOfZero";
        case ErrorCode::TableUnavailable: return "TableUnavailable";
        case ErrorCode::StrideNotCoprime: return "StrideNotCoprime";
        case ErrorCode::DependentBasis: return "DependentBasis";
        case ErrorCode::DependentPoints: return "DependentPoints";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::ZeroCode: return "ZeroCode";
        case ErrorCode::InadmissibleEta: return "InadmissibleEta";
        case ErrorCode::InadmissiblePair: return "InadmissiblePair";
        case ErrorCode::BadK: return "BadK";
        case ErrorCode::EtaZero: return "EtaZero";
        case ErrorCode::SingularIsometry: return "SingularIsometry";
        case ErrorCode::WorkBoundExceeded: return "WorkBoundExceeded";
        case ErrorCode::NotASpreadSet: return "NotASpreadSet";
        case ErrorCode::NotScattered: return "NotScattered";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    }
    return "Unknown";
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- F_p polynomial helpers (coeff vectors, low-degree-first) -----------

int poly_deg(const std::vector<int>& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

// remainder of f by monic g, mod p
std::vector<int> poly_mod_p(std::vector<int> f, const std::vector<int>& g, int p) {
    int dg = poly_deg(g);
    for (int i = poly_deg(f); i >= dg; i = poly_deg(f)) {
        int c = f[i];
        if (!c) break;
        for (int j = 0; j <= dg; ++j) f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p + p) % p;
    }
    return f;
}

bool irreducible_over_fp(const std::vector<int>& f, int p) {
    int d = poly_deg(f);
    if (d <= 0) return false;
    for (int t = 1; 2 * t <= d; ++t) {
        std::vector<int> g(t + 1, 0);
        g[t] = 1;
        // odometer over (g[0..t-1]) in lex order
        while (true) {
            if (poly_deg(poly_mod_p(f, g, p)) < 0) return false;
            int i = t - 1;
            while (i >= 0 && g[i] == p - 1) g[i--] = 0;
            if (i < 0) break;
            ++g[i];
        }
    }
    return true;
}

}  // namespace

// --- F_q digit helpers ----------------------------------------------------

std::uint32_t FieldCtx::q_add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, mul = 1;
    for (int j = 0; j < e_; ++j) {
        out += mul * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::q_neg_slow(std::uint32_t a) const {
    std::uint32_t out = 0, mul = 1;
    for (int j = 0; j < e_; ++j) {
        std::uint32_t d = a % p_;
        out += mul * (d ? p_ - d : 0);
        a /= p_;
        mul *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::q_mul_slow(std::uint32_t a, std::uint32_t b) const {
    // schoolbook multiply of base-p digit polynomials, reduce by q_modulus
    std::vector<int> prod(2 * e_ - 1, 0);
    std::vector<int> da(e_), db(e_);
    for (int j = 0; j < e_; ++j, a /= p_) da[j] = a % p_;
    for (int j = 0; j < e_; ++j, b /= p_) db[j] = b % p_;
    for (int i = 0; i < e_; ++i)
        if (da[i])
            for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int i = int(prod.size()) - 1; i >= e_; --i) {
        int c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (int j = 0; j <= e_; ++j)
            prod[i - e_ + j] = ((prod[i - e_ + j] - c * q_modulus_[j]) % p_ + p_) % p_;
    }
    std::uint32_t out = 0;
    for (int j = e_ - 1; j >= 0; --j) out = out * p_ + prod[j];
    return out;
}

std::uint32_t FieldCtx::q_inv(std::uint32_t a) const {
    if (!a) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_q");
    if (!qinv_tab_.empty()) return qinv_tab_[a];
    std::uint32_t r = 1, b = a;
    std::uint64_t k = q_ - 2;
    while (k) {
        if (k & 1) r = q_mul(r, b);
        b = q_mul(b, b);
        k >>= 1;
    }
    return r;
}

std::uint32_t FieldCtx::q_frob_p(std::uint32_t a, int i) const {
    i = ((i % e_) + e_) % e_;
    std::uint32_t r = a;
    for (int t = 0; t < i; ++t) {
        std::uint32_t base = r, acc = 1;
        int k = p_;
        while (k) {
            if (k & 1) acc = q_mul(acc, base);
            base = q_mul(base, base);
            k >>= 1;
        }
        r = acc;
    }
    return r;
}

// --- F_{q^n} arithmetic -----------------------------------------------------

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0, mul = 1;
    for (int t = 0; t < en_; ++t) {
        out += mul * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t out = 0, mul = 1;
    for (int t = 0; t < en_; ++t) {
        std::uint32_t d = a % p_;
        out += mul * (d ? p_ - d : 0);
        a /= p_;
        mul *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::mul_poly(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint32_t> prod(2 * n_ - 1, 0);
    std::vector<std::uint32_t> da = qdigits(a), db = qdigits(b);
    for (int i = 0; i < n_; ++i)
        if (da[i])
            for (int j = 0; j < n_; ++j)
                if (db[j]) prod[i + j] = q_add(prod[i + j], q_mul(da[i], db[j]));
    for (int i = int(prod.size()) - 1; i >= n_; --i) {
        std::uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (int j = 0; j <= n_; ++j)
            prod[i - n_ + j] = q_sub(prod[i - n_ + j], q_mul(c, ext_modulus_[j]));
    }
    std::uint32_t out = 0;
    for (int i = n_ - 1; i >= 0; --i) out = std::uint32_t(out * q_ + prod[i]);
    return out;
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
    if (!a || !b) return 0;
    if (!log_.empty()) {
        std::uint64_t m = card_ - 1;
        return exp_[(std::uint64_t(log_[a]) + log_[b]) % m];
    }
    return mul_poly(a, b);
}

std::uint32_t FieldCtx::pow_nolog(std::uint32_t a, unsigned long long k) const {
    std::uint32_t r = 1, b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

std::uint32_t FieldCtx::pow(std::uint32_t a, long long k) const {
    if (a == 0) {
        if (k > 0) return 0;
        if (k == 0) return 1;
        throw Error(ErrorCode::DivisionByZero, "0 raised to a negative power");
    }
    std::uint64_t m = card_ - 1;
    if (m == 0) return 1;
    long long r = k % (long long)m;
    if (r < 0) r += m;
    if (!log_.empty()) return exp_[(std::uint64_t(log_[a]) * std::uint64_t(r)) % m];
    return pow_nolog(a, (unsigned long long)r);
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
    if (!a) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return pow(a, -1);
}

std::uint32_t FieldCtx::frobenius_q(std::uint32_t a, long long i) const {
    if (!a) return 0;
    i = ((i % n_) + n_) % n_;
    if (!log_.empty()) {
        std::uint64_t m = card_ - 1;
        return exp_[(std::uint64_t(log_[a]) * qpow_mod_[i]) % m];
    }
    return pow_nolog(a, qpow_[i]);
}

std::uint32_t FieldCtx::frobenius_p(std::uint32_t a, long long i) const {
    if (!a) return 0;
    i = ((i % en_) + en_) % en_;
    if (!log_.empty()) {
        std::uint64_t m = card_ - 1;
        return exp_[(std::uint64_t(log_[a]) * ppow_mod_[i]) % m];
    }
    std::uint32_t r = a;
    for (long long t = 0; t < i; ++t) r = pow_nolog(r, p_);
    return r;
}

std::uint32_t FieldCtx::norm(std::uint32_t a) const {
    if (!a) return 0;
    std::uint32_t r = pow(a, (long long)((card_ - 1) / (q_ - 1)));
    if (!in_fq(r)) throw std::logic_error("norm left F_q");
    return r;
}

std::uint32_t FieldCtx::trace_rel(std::uint32_t a) const {
    std::uint32_t s = 0;
    for (int i = 0; i < n_; ++i) s = add(s, frobenius_q(a, i));
    if (!in_fq(s)) throw std::logic_error("relative trace left F_q");
    return s;
}

std::uint32_t FieldCtx::trace_abs(std::uint32_t a) const {
    std::uint32_t s = 0;
    for (int i = 0; i < en_; ++i) s = add(s, frobenius_p(a, i));
    if (!in_fp(s)) throw std::logic_error("absolute trace left F_p");
    return s;
}

long long FieldCtx::dlog(std::uint32_t a) const {
    if (!a) throw Error(ErrorCode::LogOfZero, "dlog(0) undefined");
    if (log_.empty()) throw Error(ErrorCode::TableUnavailable, "field exceeds the dlog table cap");
    return log_[a];
}

bool FieldCtx::in_fq(std::uint32_t a) const { return a < q_; }
bool FieldCtx::in_fp(std::uint32_t a) const { return a < std::uint32_t(p_); }

std::uint32_t FieldCtx::from_qdigits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t out = 0;
    for (int i = n_ - 1; i >= 0; --i) out = std::uint32_t(out * q_ + d[i]);
    return out;
}

std::vector<std::uint32_t> FieldCtx::qdigits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(n_);
    for (int i = 0; i < n_; ++i) {
        d[i] = a % q_;
        a /= q_;
    }
    return d;
}

std::vector<int> FieldCtx::coords(std::uint32_t a) const {
    std::vector<int> c(en_);
    for (int t = 0; t < en_; ++t) {
        c[t] = a % p_;
        a /= p_;
    }
    return c;
}

std::uint32_t FieldCtx::from_coords(const std::vector<int>& c) const {
    if ((int)c.size() != en_) throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
    std::uint32_t out = 0;
    for (int t = en_ - 1; t >= 0; --t) {
        if (c[t] < 0 || c[t] >= p_) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
        out = std::uint32_t(out * p_ + c[t]);
    }
    return out;
}

std::vector<std::uint32_t> FieldCtx::subfield_of_fq(int d0) const {
    if (d0 < 1 || e_ % d0 != 0) throw Error(ErrorCode::InvalidArgument, "subfield degree must divide e");
    std::vector<std::uint32_t> out;
    for (std::uint32_t z = 0; z < q_; ++z)
        if (d0 == e_ || q_frob_p(z, d0) == z) out.push_back(z);
    return out;
}

std::vector<std::uint32_t> FieldCtx::alpha_coords(std::uint32_t a) const {
    std::vector<std::uint32_t> out(n_, 0);
    for (int i = 0; i < n_; ++i) {
        std::uint32_t acc = 0;
        for (int j = 0; j < n_; ++j) {
            std::uint8_t m = pbasis_inv_[std::size_t(i) * n_ + j];
            if (m) acc = q_add(acc, q_mul(m, qdigit(a, j)));
        }
        out[i] = acc;
    }
    return out;
}

std::string FieldCtx::to_string(std::uint32_t a) const {
    if (a == 0) return "0";
    if (has_dlog()) return "a^" + std::to_string(log_[a]);
    std::string s = "[";
    auto c = coords(a);
    for (int t = 0; t < en_; ++t) {
        if (t) s += ",";
        s += std::to_string(c[t]);
    }
    return s + "]";
}

std::uint32_t FieldCtx::parse_element(const std::string& s) const {
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty field element");
    if (s == "a" || s == "alpha") return alpha_;
    if (s[0] == 'a' && s.size() > 2 && s[1] == '^') {
        long long k = 0;
        try {
            k = std::stoll(s.substr(2));
        } catch (...) {
            throw Error(ErrorCode::ParseError, "bad exponent in '" + s + "'");
        }
        return pow(alpha_, k);
    }
    if (s[0] == '[') {
        if (s.back() != ']') throw Error(ErrorCode::ParseError, "unterminated coordinate list");
        std::vector<int> c;
        std::string body = s.substr(1, s.size() - 2);
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                c.push_back(std::stoi(tok));
            } catch (...) {
                throw Error(ErrorCode::ParseError, "bad coordinate '" + tok + "'");
            }
        }
        if ((int)c.size() != en_)
            throw Error(ErrorCode::ParseError, "expected " + std::to_string(en_) + " coordinates");
        return from_coords(c);
    }
    try {
        long long v = std::stoll(s);
        if (v < 0 || v >= p_) throw Error(ErrorCode::ParseError, "literal out of prime subfield range");
        return std::uint32_t(v);
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw Error(ErrorCode::ParseError, "cannot parse field element '" + s + "'");
    }
}

// --- construction -----------------------------------------------------------

namespace {

// factor m by trial division; distinct primes
std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

FieldCtxPtr FieldCtx::make(const FieldSpec& spec) {
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    FieldCtx& F = *ctx;
    if (!is_prime(spec.p)) throw Error(ErrorCode::NotPrime, std::to_string(spec.p) + " is not prime");
    if (spec.e < 1 || spec.n < 1) throw Error(ErrorCode::InvalidArgument, "e and n must be >= 1");
    F.p_ = spec.p;
    F.e_ = spec.e;
    F.n_ = spec.n;
    F.en_ = spec.e * spec.n;

    std::uint64_t q = 1;
    for (int i = 0; i < F.e_; ++i) {
        q *= F.p_;
        if (q > (1u << 15)) throw Error(ErrorCode::FieldTooLarge, "q exceeds 2^15");
    }
    F.q_ = std::uint32_t(q);
    std::uint64_t card = 1;
    for (int i = 0; i < F.n_; ++i) {
        card *= q;
        if (card > (std::uint64_t(1) << 31)) throw Error(ErrorCode::FieldTooLarge, "q^n exceeds 2^31");
    }
    F.card_ = card;

    // q_modulus
    if (!spec.q_modulus.empty()) {
        if ((int)spec.q_modulus.size() != F.e_ + 1 || spec.q_modulus.back() != 1)
            throw Error(ErrorCode::InvalidArgument, "q_modulus must be monic of degree e");
        for (int c : spec.q_modulus)
            if (c < 0 || c >= F.p_) throw Error(ErrorCode::InvalidArgument, "q_modulus coefficient out of range");
        if (!irreducible_over_fp(spec.q_modulus, F.p_))
            throw Error(ErrorCode::ReducibleModulus, "q_modulus is reducible over F_p");
        F.q_modulus_ = spec.q_modulus;
    } else {
        // lexicographically smallest monic irreducible of degree e
        std::vector<int> f(F.e_ + 1, 0);
        f[F.e_] = 1;
        while (true) {
            if (irreducible_over_fp(f, F.p_)) break;
            int i = F.e_ - 1;
            while (i >= 0 && f[i] == F.p_ - 1) f[i--] = 0;
            if (i < 0) throw std::logic_error("no irreducible q_modulus found");
            ++f[i];
        }
        F.q_modulus_ = f;
    }

    // F_q tables
    if (F.q_ <= 512) {
        F.qadd_tab_.resize(std::size_t(F.q_) * F.q_);
        F.qmul_tab_.resize(std::size_t(F.q_) * F.q_);
        F.qneg_tab_.resize(F.q_);
        F.qinv_tab_.resize(F.q_);
        for (std::uint32_t a = 0; a < F.q_; ++a) {
            F.qneg_tab_[a] = std::uint16_t(F.q_neg_slow(a));
            for (std::uint32_t b = 0; b < F.q_; ++b) {
                F.qadd_tab_[a * F.q_ + b] = std::uint16_t(F.q_add_slow(a, b));
                F.qmul_tab_[a * F.q_ + b] = std::uint16_t(F.q_mul_slow(a, b));
            }
        }
        F.qinv_tab_[0] = 0;
        for (std::uint32_t a = 1; a < F.q_; ++a)
            for (std::uint32_t b = 1; b < F.q_; ++b)
                if (F.qmul_tab_[a * F.q_ + b] == 1) {
                    F.qinv_tab_[a] = std::uint16_t(b);
                    break;
                }
    }

    // ext_modulus over F_q
    auto irreducible_over_fq = [&](const std::vector<std::uint32_t>& f) {
        int d = F.n_;
        for (int t = 1; 2 * t <= d; ++t) {
            std::vector<std::uint32_t> g(t + 1, 0);
            g[t] = 1;
            while (true) {
                // remainder of f by monic g
                std::vector<std::uint32_t> r = f;
                for (int i = int(r.size()) - 1; i >= t; --i) {
                    std::uint32_t c = r[i];
                    if (!c) continue;
                    r[i] = 0;
                    for (int j = 0; j < t; ++j) r[i - t + j] = F.q_sub(r[i - t + j], F.q_mul(c, g[j]));
                }
                bool zero = true;
                for (auto x : r)
                    if (x) { zero = false; break; }
                if (zero) return false;
                int i = t - 1;
                while (i >= 0 && g[i] == F.q_ - 1) g[i--] = 0;
                if (i < 0) break;
                ++g[i];
            }
        }
        return true;
    };

    if (!spec.ext_modulus.empty()) {
        if ((int)spec.ext_modulus.size() != F.n_ + 1)
            throw Error(ErrorCode::InvalidArgument, "ext_modulus must have degree n");
        std::vector<std::uint32_t> f;
        for (const auto& coeff : spec.ext_modulus) {
            if ((int)coeff.size() != F.e_)
                throw Error(ErrorCode::InvalidArgument, "ext_modulus coefficients need e coordinates");
            std::uint32_t v = 0;
            for (int j = F.e_ - 1; j >= 0; --j) {
                if (coeff[j] < 0 || coeff[j] >= F.p_)
                    throw Error(ErrorCode::InvalidArgument, "ext_modulus coordinate out of range");
                v = std::uint32_t(v * F.p_ + coeff[j]);
            }
            f.push_back(v);
        }
        if (f.back() != 1) throw Error(ErrorCode::InvalidArgument, "ext_modulus must be monic");
        if (!irreducible_over_fq(f))
            throw Error(ErrorCode::ReducibleModulus, "ext_modulus is reducible over F_q");
        F.ext_modulus_ = f;
    } else {
        std::vector<std::uint32_t> f(F.n_ + 1, 0);
        f[F.n_] = 1;
        while (true) {
            if (irreducible_over_fq(f)) break;
            int i = F.n_ - 1;
            while (i >= 0 && f[i] == F.q_ - 1) f[i--] = 0;
            if (i < 0) throw std::logic_error("no irreducible ext_modulus found");
            ++f[i];
        }
        F.ext_modulus_ = f;
    }

    F.qpow_.resize(F.n_ + 1);
    F.qpow_[0] = 1;
    for (int i = 1; i <= F.n_; ++i) F.qpow_[i] = F.qpow_[i - 1] * F.q_;

    std::uint64_t m = F.card_ - 1;
    auto primes = m ? prime_factors(m) : std::vector<std::uint64_t>{};
    auto is_primitive = [&](std::uint32_t x) {
        if (!x) return false;
        if (F.pow_nolog(x, m) != 1) return false;  // sanity; always true in a field
        for (auto l : primes)
            if (F.pow_nolog(x, m / l) == 1) return false;
        return true;
    };

    if (!spec.alpha.empty()) {
        std::uint32_t a = F.from_coords(spec.alpha);
        if (!is_primitive(a))
            throw Error(ErrorCode::NotPrimitive, "alpha_hint does not have order q^n - 1");
        F.alpha_ = a;
    } else {
        // lexicographically smallest primitive element (coordinates low-index-first)
        std::vector<int> c(F.en_, 0);
        bool found = false;
        while (true) {
            int i = F.en_ - 1;
            while (i >= 0 && c[i] == F.p_ - 1) c[i--] = 0;
            if (i < 0) break;
            ++c[i];
            if (is_primitive(F.from_coords(c))) {
                F.alpha_ = F.from_coords(c);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no primitive element found");
    }

    if (F.card_ <= spec.dlog_cap) {
        F.exp_.resize(m ? m : 1);
        F.log_.assign(F.card_, 0);
        std::uint32_t x = 1;
        for (std::uint64_t t = 0; t < (m ? m : 1); ++t) {
            F.exp_[t] = x;
            F.log_[x] = std::uint32_t(t);
            x = F.mul_poly(x, F.alpha_);
        }
        if (x != 1) throw std::logic_error("dlog table construction failed");
    }

    F.qpow_mod_.resize(F.n_);
    F.ppow_mod_.resize(F.en_);
    if (m) {
        std::uint64_t v = 1 % m;
        for (int i = 0; i < F.n_; ++i) {
            F.qpow_mod_[i] = v;
            v = (v * F.q_) % m;
        }
        v = 1 % m;
        for (int i = 0; i < F.en_; ++i) {
            F.ppow_mod_[i] = v;
            v = (v * F.p_) % m;
        }
    }

    // polynomial basis {1, alpha, ..., alpha^{n-1}} over the y-basis
    linalg::Mat P(F.n_, F.n_);
    std::uint32_t aj = 1;
    for (int j = 0; j < F.n_; ++j) {
        for (int i = 0; i < F.n_; ++i) P.at(i, j) = std::uint8_t(F.qdigit(aj, i));
        aj = F.mul(aj, F.alpha_);
    }
    linalg::FqOps ops{&F};
    linalg::Mat Pinv = linalg::inverse(P, ops);
    F.pbasis_.assign(P.a.begin(), P.a.end());
    F.pbasis_inv_.assign(Pinv.a.begin(), Pinv.a.end());

    return ctx;
}

}  // namespace rankforge
