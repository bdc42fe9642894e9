#ifndef SALEMFIELD_FIELD_HPP
#define SALEMFIELD_FIELD_HPP

// Exact arithmetic in F_{q^n} = F_p[x]/(f), q = p^k, deg f = k*n.
// Elements are coefficient vectors of length k*n over Z/p, always reduced, so
// equality is vector equality and every element has a canonical integer index
// sum(coeffs[i] * p^i). The intermediate field F_q is the fixed field of the
// q-power Frobenius; it is never given a second representation.

#include <complex>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "salemfield/errors.hpp"
#include "salemfield/numbers.hpp"

namespace salemfield {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// exp(2*pi*i * num / den) from an exact integer phase index.
inline cplx unit_root(u64 num, u64 den) {
    num %= den;
    if (num == 0) return {1.0, 0.0};
    const double angle = kTwoPi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

// Dense polynomials over Z/p, coefficients low degree first, trimmed.
namespace fp {

using Poly = std::vector<u32>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline bool is_zero(const Poly& a) { return a.empty(); }

inline Poly add(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = static_cast<u32>((r[i] + b[i]) % p);
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = static_cast<u32>((r[i] + p - b[i]) % p);
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u32>((r[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

inline u32 inv_mod_p(u64 a, u64 p) {
    return static_cast<u32>(pow_mod(a % p, p - 2, p));
}

// a mod b, b nonzero (not necessarily monic).
inline Poly mod(Poly a, const Poly& b, u64 p) {
    trim(a);
    if (is_zero(b)) throw value_error("fp::mod: division by zero polynomial");
    const u32 lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        if (a.back() == 0) { a.pop_back(); continue; }
        const u64 c = mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = static_cast<u32>((a[shift + j] + p - mul_mod(c, b[j], p)) % p);
        trim(a);
    }
    return a;
}

inline Poly divide_exact(Poly a, const Poly& b, u64 p) {
    trim(a);
    if (is_zero(b)) throw value_error("fp::divide_exact: division by zero polynomial");
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const u32 lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        if (a.back() == 0) { a.pop_back(); continue; }
        const u64 c = mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - b.size();
        q[shift] = static_cast<u32>(c);
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = static_cast<u32>((a[shift + j] + p - mul_mod(c, b[j], p)) % p);
        trim(a);
    }
    if (!is_zero(a)) throw value_error("fp::divide_exact: remainder nonzero");
    trim(q);
    return q;
}

inline Poly make_monic(Poly a, u64 p) {
    trim(a);
    if (is_zero(a)) return a;
    const u32 c = inv_mod_p(a.back(), p);
    for (auto& v : a) v = static_cast<u32>(mul_mod(v, c, p));
    return a;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

inline Poly pow_mod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly r{1};
    base = mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mod(mul(r, base, p), f, p);
        base = mod(mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// Irreducibility over F_p: x^(p^d) != x mod f for proper divisors d of deg f,
// and x^(p^deg) = x mod f.
inline bool is_irreducible(const Poly& f, u64 p) {
    const int d = degree(f);
    if (d < 1) return false;
    Poly x{0, 1};
    if (d == 1) return true;
    std::vector<Poly> frob_powers; // frob_powers[i] = x^(p^(i+1)) mod f
    Poly cur = mod(x, f, p);
    for (int i = 0; i < d; ++i) {
        cur = pow_mod(cur, p, f, p);
        frob_powers.push_back(cur);
    }
    if (sub(frob_powers[static_cast<std::size_t>(d) - 1], x, p) != Poly{})
        return false;
    for (int dd = 1; dd < d; ++dd) {
        if (d % dd != 0) continue;
        Poly g = gcd(sub(frob_powers[static_cast<std::size_t>(dd) - 1], x, p), f, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

} // namespace fp

struct FieldElement;

struct FieldSpec {
    u64 p = 0;
    u32 k = 0;
    u32 n = 0;
    fp::Poly modulus;             // monic irreducible over Z/p, degree k*n
    u64 q = 0;                    // p^k
    u64 order = 0;                // q^n = p^(k*n)
    std::vector<u32> frob_matrix; // row-major (kn x kn): q-power Frobenius over F_p
    std::vector<u32> trace_row;   // trace_row[j] = absolute trace of x^j
    std::optional<u64> generator_hint; // element index of a known primitive root

    u32 ext_degree() const { return k * n; }

    bool operator==(const FieldSpec& o) const {
        return p == o.p && k == o.k && n == o.n && modulus == o.modulus;
    }
};

struct FieldElement {
    std::vector<u32> coeffs; // length k*n, entries in [0, p)
    const FieldSpec* spec = nullptr;

    bool operator==(const FieldElement& o) const { return coeffs == o.coeffs; }
    bool is_zero() const {
        for (u32 c : coeffs)
            if (c) return false;
        return true;
    }
};

inline void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (a.spec == b.spec) return;
    if (a.spec && b.spec && *a.spec == *b.spec) return;
    throw value_error("field elements belong to different fields");
}

inline FieldElement zero(const FieldSpec& spec) {
    return {std::vector<u32>(spec.ext_degree(), 0), &spec};
}

inline FieldElement one(const FieldSpec& spec) {
    FieldElement e = zero(spec);
    e.coeffs[0] = 1 % static_cast<u32>(spec.p);
    return e;
}

inline FieldElement from_constant(const FieldSpec& spec, u64 c) {
    FieldElement e = zero(spec);
    e.coeffs[0] = static_cast<u32>(c % spec.p);
    return e;
}

inline u64 index_of(const FieldElement& a) {
    u64 idx = 0;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) idx = idx * a.spec->p + a.coeffs[i];
    return idx;
}

inline FieldElement element_from_index(const FieldSpec& spec, u64 idx) {
    if (idx >= spec.order) throw value_error("element index out of range");
    FieldElement e = zero(spec);
    for (u32 i = 0; i < spec.ext_degree(); ++i) {
        e.coeffs[i] = static_cast<u32>(idx % spec.p);
        idx /= spec.p;
    }
    return e;
}

inline FieldElement add(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    FieldElement r = a;
    const u64 p = a.spec->p;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = static_cast<u32>((r.coeffs[i] + b.coeffs[i]) % p);
    return r;
}

inline FieldElement neg(const FieldElement& a) {
    FieldElement r = a;
    const u64 p = a.spec->p;
    for (auto& c : r.coeffs) c = static_cast<u32>((p - c) % p);
    return r;
}

inline FieldElement sub(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    FieldElement r = a;
    const u64 p = a.spec->p;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = static_cast<u32>((r.coeffs[i] + p - b.coeffs[i]) % p);
    return r;
}

inline FieldElement mul(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    const FieldSpec& spec = *a.spec;
    fp::Poly prod = fp::mul(fp::Poly(a.coeffs.begin(), a.coeffs.end()),
                            fp::Poly(b.coeffs.begin(), b.coeffs.end()), spec.p);
    prod = fp::mod(std::move(prod), spec.modulus, spec.p);
    FieldElement r = zero(spec);
    for (std::size_t i = 0; i < prod.size(); ++i) r.coeffs[i] = prod[i];
    return r;
}

inline FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw value_error("inv: division by zero");
    const FieldSpec& spec = *a.spec;
    // extended Euclid over F_p[x]
    fp::Poly r0 = spec.modulus, r1(a.coeffs.begin(), a.coeffs.end());
    fp::trim(r1);
    fp::Poly t0{}, t1{1};
    while (!fp::is_zero(r1)) {
        // quotient of r0 by r1
        fp::Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
        fp::Poly rem = r0;
        const u32 lead_inv = fp::inv_mod_p(r1.back(), spec.p);
        while (rem.size() >= r1.size() && !rem.empty()) {
            if (rem.back() == 0) { rem.pop_back(); continue; }
            const u64 c = mul_mod(rem.back(), lead_inv, spec.p);
            const std::size_t shift = rem.size() - r1.size();
            q[shift] = static_cast<u32>(c);
            for (std::size_t j = 0; j < r1.size(); ++j)
                rem[shift + j] = static_cast<u32>((rem[shift + j] + spec.p - mul_mod(c, r1[j], spec.p)) % spec.p);
            fp::trim(rem);
        }
        fp::trim(q);
        fp::Poly t2 = fp::sub(t0, fp::mul(q, t1, spec.p), spec.p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant gcd; scale t0 by its inverse
    const u32 c = fp::inv_mod_p(r0[0], spec.p);
    FieldElement out = zero(spec);
    for (std::size_t i = 0; i < t0.size(); ++i)
        out.coeffs[i] = static_cast<u32>(mul_mod(t0[i], c, spec.p));
    return out;
}

inline FieldElement pow(const FieldElement& a, u64 e) {
    FieldElement r = one(*a.spec);
    FieldElement base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }

// q-power Frobenius via the precomputed F_p-linear matrix.
inline FieldElement frobenius_q(const FieldElement& a) {
    const FieldSpec& spec = *a.spec;
    const u32 d = spec.ext_degree();
    FieldElement r = zero(spec);
    for (u32 row = 0; row < d; ++row) {
        u64 acc = 0;
        const u32* m = spec.frob_matrix.data() + static_cast<std::size_t>(row) * d;
        for (u32 j = 0; j < d; ++j) acc += static_cast<u64>(m[j]) * a.coeffs[j];
        r.coeffs[row] = static_cast<u32>(acc % spec.p);
    }
    return r;
}

// Absolute trace to the prime field, as a residue in [0, p).
inline u32 trace_abs(const FieldElement& a) {
    const FieldSpec& spec = *a.spec;
    u64 acc = 0;
    for (u32 j = 0; j < spec.ext_degree(); ++j)
        acc += static_cast<u64>(spec.trace_row[j]) * a.coeffs[j];
    return static_cast<u32>(acc % spec.p);
}

// psi_beta(alpha) = exp(2*pi*i * Tr(alpha*beta) / p)
inline cplx additive_character(const FieldElement& beta, const FieldElement& alpha) {
    require_same_spec(beta, alpha);
    return unit_root(trace_abs(mul(alpha, beta)), beta.spec->p);
}

inline std::string format_element(const FieldElement& a) {
    const FieldSpec& spec = *a.spec;
    if (spec.ext_degree() == 1) return std::to_string(a.coeffs[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        const u32 c = a.coeffs[i];
        if (c == 0) continue;
        if (!first) os << "+";
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

inline std::string format_fp_poly(const fp::Poly& f) {
    if (fp::is_zero(f)) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        const u32 c = f[i];
        if (c == 0) continue;
        if (!first) os << "+";
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace detail {

inline void check_pow_fits(u64 base, u32 exp) {
    u64 acc = 1;
    for (u32 i = 0; i < exp; ++i) {
        if (acc > (u64{1} << 62) / base)
            throw value_error("field order overflows the supported range");
        acc *= base;
    }
}

inline u64 int_pow(u64 base, u32 exp) {
    u64 acc = 1;
    while (exp--) acc *= base;
    return acc;
}

} // namespace detail

// Builds F_{q^n} = F_p[x]/(f). When no modulus is supplied, scans monic
// polynomials of degree k*n in canonical index order (constant coefficient is
// the least significant digit) and takes the first irreducible one, so the
// field presentation is reproducible everywhere.
inline FieldSpec build_field(u64 p, u32 k, u32 n,
                             std::optional<fp::Poly> modulus = std::nullopt) {
    if (!is_prime(p)) throw value_error("build_field: p is not prime");
    if (k == 0 || n == 0) throw value_error("build_field: k and n must be positive");
    const u32 d = k * n;
    detail::check_pow_fits(p, d);

    FieldSpec spec;
    spec.p = p;
    spec.k = k;
    spec.n = n;
    spec.q = detail::int_pow(p, k);
    spec.order = detail::int_pow(p, d);

    if (modulus) {
        fp::Poly f = *modulus;
        for (auto& c : f) c = static_cast<u32>(c % p);
        fp::trim(f);
        if (fp::degree(f) != static_cast<int>(d))
            throw value_error("build_field: modulus degree must equal k*n");
        if (f.back() != 1) throw value_error("build_field: modulus must be monic");
        if (!fp::is_irreducible(f, p))
            throw value_error("build_field: supplied modulus is reducible");
        spec.modulus = std::move(f);
    } else {
        const u64 count = detail::int_pow(p, d); // free low-order coefficients
        fp::Poly f;
        bool found = false;
        for (u64 idx = 0; idx < count; ++idx) {
            f.assign(d + 1, 0);
            u64 t = idx;
            for (u32 i = 0; i < d; ++i) {
                f[i] = static_cast<u32>(t % p);
                t /= p;
            }
            f[d] = 1;
            if (fp::is_irreducible(f, p)) { found = true; break; }
        }
        if (!found) throw integrity_error("build_field: no irreducible polynomial found");
        spec.modulus = std::move(f);
    }

    // q-power Frobenius matrix: column j = (x^j)^q mod f.
    const u32 dd = d;
    spec.frob_matrix.assign(static_cast<std::size_t>(dd) * dd, 0);
    fp::Poly xq{0, 1};
    for (u32 i = 0; i < k; ++i) xq = fp::pow_mod(xq, p, spec.modulus, p);
    fp::Poly col{1};
    for (u32 j = 0; j < dd; ++j) {
        for (std::size_t r = 0; r < col.size(); ++r)
            spec.frob_matrix[r * dd + j] = col[r];
        col = fp::mod(fp::mul(col, xq, p), spec.modulus, p);
    }

    // trace row: trace of each basis monomial.
    spec.trace_row.assign(dd, 0);
    for (u32 j = 0; j < dd; ++j) {
        fp::Poly basis(j + 1, 0);
        basis[j] = 1;
        fp::Poly acc{};
        fp::Poly cur = fp::mod(basis, spec.modulus, p);
        for (u32 i = 0; i < dd; ++i) {
            acc = fp::add(acc, cur, p);
            cur = fp::pow_mod(cur, p, spec.modulus, p);
        }
        if (fp::degree(acc) > 0)
            throw integrity_error("build_field: trace of basis monomial not in the prime field");
        spec.trace_row[j] = acc.empty() ? 0 : acc[0];
    }

    return spec;
}

} // namespace salemfield

#endif
