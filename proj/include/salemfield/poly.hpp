#ifndef SALEMFIELD_POLY_HPP
#define SALEMFIELD_POLY_HPP

// Polynomials over the coefficient field F_q, realized as the fixed field of
// the q-power Frobenius inside F_{q^n}. Coefficient arithmetic is ambient
// field arithmetic, so one implementation covers k = 1 and k > 1 alike.
// Provides the Euclidean layer, a fully deterministic factorization pipeline
// (square-free -> distinct-degree -> equal-degree with canonical candidate
// enumeration), divisor enumeration, and the polynomial Moebius and totient.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "salemfield/field.hpp"

namespace salemfield {

// All q elements of the coefficient subfield, in canonical index order.
inline std::vector<FieldElement> subfield_elements(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.q);
    if (spec.k == 1) {
        for (u64 c = 0; c < spec.p; ++c) out.push_back(from_constant(spec, c));
        return out;
    }
    for (u64 idx = 0; idx < spec.order; ++idx) {
        FieldElement e = element_from_index(spec, idx);
        if (frobenius_q(e) == e) out.push_back(std::move(e));
    }
    if (out.size() != spec.q)
        throw integrity_error("subfield_elements: fixed field has wrong size");
    return out;
}

struct PolyQ {
    std::vector<FieldElement> coeffs; // low degree first, trimmed
    const FieldSpec* spec = nullptr;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_one() const { return coeffs.size() == 1 && coeffs[0] == one(*spec); }
    bool operator==(const PolyQ& o) const { return coeffs == o.coeffs; }
};

inline void trim(PolyQ& a) {
    while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
}

inline PolyQ poly_zero(const FieldSpec& spec) { return {{}, &spec}; }

inline PolyQ poly_one(const FieldSpec& spec) { return {{one(spec)}, &spec}; }

inline PolyQ poly_from_elements(const FieldSpec& spec, std::vector<FieldElement> cs) {
    for (const auto& c : cs)
        if (!(frobenius_q(c) == c))
            throw value_error("poly coefficient lies outside the coefficient field");
    PolyQ r{std::move(cs), &spec};
    trim(r);
    return r;
}

// Coefficients given as residues in the prime subfield (enough for x^n - 1).
inline PolyQ poly_from_constants(const FieldSpec& spec, const std::vector<i64>& cs) {
    std::vector<FieldElement> v;
    v.reserve(cs.size());
    const i64 p = static_cast<i64>(spec.p);
    for (i64 c : cs) v.push_back(from_constant(spec, static_cast<u64>(((c % p) + p) % p)));
    PolyQ r{std::move(v), &spec};
    trim(r);
    return r;
}

inline PolyQ x_pow_n_minus_1(const FieldSpec& spec) {
    std::vector<i64> cs(spec.n + 1, 0);
    cs[0] = -1;
    cs[spec.n] = 1;
    return poly_from_constants(spec, cs);
}

inline PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    const FieldSpec& spec = *a.spec;
    PolyQ r = poly_zero(spec);
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), zero(spec));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = add(r.coeffs[i], b.coeffs[i]);
    trim(r);
    return r;
}

inline PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    const FieldSpec& spec = *a.spec;
    PolyQ r = poly_zero(spec);
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), zero(spec));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = sub(r.coeffs[i], b.coeffs[i]);
    trim(r);
    return r;
}

inline PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    const FieldSpec& spec = *a.spec;
    if (a.is_zero() || b.is_zero()) return poly_zero(spec);
    PolyQ r = poly_zero(spec);
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, zero(spec));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = add(r.coeffs[i + j], mul(a.coeffs[i], b.coeffs[j]));
    }
    trim(r);
    return r;
}

inline PolyQ poly_make_monic(PolyQ a) {
    trim(a);
    if (a.is_zero()) return a;
    const FieldElement c = inv(a.coeffs.back());
    for (auto& v : a.coeffs) v = mul(v, c);
    return a;
}

inline std::pair<PolyQ, PolyQ> poly_divmod(PolyQ a, const PolyQ& b) {
    const FieldSpec& spec = *a.spec;
    trim(a);
    if (b.is_zero()) throw value_error("poly_divmod: division by zero polynomial");
    PolyQ q = poly_zero(spec);
    if (a.coeffs.size() >= b.coeffs.size())
        q.coeffs.assign(a.coeffs.size() - b.coeffs.size() + 1, zero(spec));
    const FieldElement lead_inv = inv(b.coeffs.back());
    while (a.coeffs.size() >= b.coeffs.size() && !a.is_zero()) {
        if (a.coeffs.back().is_zero()) { a.coeffs.pop_back(); continue; }
        const FieldElement c = mul(a.coeffs.back(), lead_inv);
        const std::size_t shift = a.coeffs.size() - b.coeffs.size();
        q.coeffs[shift] = c;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            a.coeffs[shift + j] = sub(a.coeffs[shift + j], mul(c, b.coeffs[j]));
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

inline PolyQ poly_mod(PolyQ a, const PolyQ& b) { return poly_divmod(std::move(a), b).second; }

inline PolyQ poly_divide_exact(PolyQ a, const PolyQ& b) {
    auto [q, r] = poly_divmod(std::move(a), b);
    if (!r.is_zero()) throw value_error("poly_divide_exact: remainder nonzero");
    return q;
}

inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    if (a.spec != b.spec && !(*a.spec == *b.spec))
        throw value_error("poly_gcd: polynomials over different fields");
    trim(a);
    trim(b);
    if (a.is_zero() && b.is_zero()) throw value_error("poly_gcd: both inputs zero");
    while (!b.is_zero()) {
        PolyQ r = poly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(std::move(a));
}

inline PolyQ poly_pow_mod(PolyQ base, u64 e, const PolyQ& f) {
    PolyQ r = poly_one(*f.spec);
    base = poly_mod(std::move(base), f);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base), f);
        base = poly_mod(poly_mul(base, base), f);
        e >>= 1;
    }
    return r;
}

// Canonical total order: by degree, then the coefficient index tuple read from
// the high end (the same convention that orders elements and moduli).
inline bool poly_less(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        const u64 ia = index_of(a.coeffs[i]);
        const u64 ib = index_of(b.coeffs[i]);
        if (ia != ib) return ia < ib;
    }
    return false;
}

inline std::string format_poly(const PolyQ& a) {
    if (a.is_zero()) return "0";
    const bool prime_coeffs = (a.spec->k == 1);
    std::string s;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        const FieldElement& c = a.coeffs[i];
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string cs;
        if (prime_coeffs) {
            if (c.coeffs[0] != 1 || i == 0) cs = std::to_string(c.coeffs[0]);
        } else {
            const u64 idx = index_of(c);
            if (idx != 1 || i == 0) cs = "{" + std::to_string(idx) + "}";
        }
        s += cs;
        if (i >= 1) {
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

struct PolyFactor {
    PolyQ factor; // monic irreducible
    u32 exponent;
};

struct Factorization {
    std::vector<PolyFactor> factors; // sorted canonically
    FieldElement unit;               // leading coefficient of the input
};

namespace detail {

// x^(q^i) mod f computed by iterated q-power maps.
inline PolyQ frobenius_step(const PolyQ& h, const PolyQ& f, u64 q) {
    return poly_pow_mod(h, q, f);
}

inline bool is_irreducible_q(const PolyQ& f);

// Equal-degree splitting of a square-free product of irreducibles all of
// degree d. Candidate elements are enumerated in canonical order; no
// randomness, so factor order is reproducible.
inline void split_equal_degree(const PolyQ& f, u32 d, std::vector<PolyQ>& out) {
    const FieldSpec& spec = *f.spec;
    const u32 df = static_cast<u32>(f.degree());
    if (df == d) {
        out.push_back(poly_make_monic(f));
        return;
    }
    const auto subfield = subfield_elements(spec);
    const u64 q = spec.q;

    u64 qd = 1;
    for (u32 i = 0; i < d; ++i) {
        if (qd > (u64{1} << 62) / q) throw value_error("split_equal_degree: q^d overflows");
        qd *= q;
    }

    // enumerate candidate polynomials h of degree >= 1 below deg f
    u64 total = 1;
    for (u32 i = 0; i < df; ++i) {
        if (total > (u64{1} << 40)) break;
        total *= q;
    }
    for (u64 idx = q; idx < total; ++idx) {
        PolyQ h = poly_zero(spec);
        u64 t = idx;
        h.coeffs.assign(df, zero(spec));
        for (u32 i = 0; i < df; ++i) {
            h.coeffs[i] = subfield[t % q];
            t /= q;
        }
        trim(h);
        if (h.degree() < 1) continue;

        PolyQ w;
        if (spec.p == 2) {
            // trace map sum_{i < k*d} h^(2^i) mod f
            PolyQ acc = poly_mod(h, f);
            PolyQ cur = acc;
            const u32 steps = spec.k * d;
            for (u32 i = 1; i < steps; ++i) {
                cur = poly_mod(poly_mul(cur, cur), f);
                acc = poly_add(acc, cur);
            }
            w = std::move(acc);
        } else {
            PolyQ pw = poly_pow_mod(h, (qd - 1) / 2, f);
            w = poly_sub(pw, poly_one(spec));
        }
        if (w.is_zero()) continue;
        PolyQ g = poly_gcd(w, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_equal_degree(g, d, out);
            split_equal_degree(poly_divide_exact(f, g), d, out);
            return;
        }
    }
    throw integrity_error("split_equal_degree: no splitter found");
}

// Distinct-degree decomposition of a monic square-free polynomial.
inline void factor_squarefree(const PolyQ& input, std::vector<PolyQ>& out) {
    const FieldSpec& spec = *input.spec;
    PolyQ f = input;
    PolyQ x = poly_from_constants(spec, {0, 1});
    PolyQ h = poly_mod(x, f);
    for (u32 d = 1; 2 * d <= static_cast<u32>(f.degree()); ++d) {
        h = frobenius_step(h, f, spec.q);
        PolyQ g = poly_gcd(poly_sub(h, x), f);
        if (g.degree() > 0) {
            split_equal_degree(g, d, out);
            f = poly_divide_exact(f, g);
            h = poly_mod(h, f);
        }
        if (f.degree() == 0) break;
    }
    if (f.degree() > 0) out.push_back(poly_make_monic(f));
}

inline PolyQ formal_derivative(const PolyQ& a) {
    const FieldSpec& spec = *a.spec;
    PolyQ r = poly_zero(spec);
    if (a.degree() < 1) return r;
    r.coeffs.assign(a.coeffs.size() - 1, zero(spec));
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
        FieldElement c = zero(spec);
        for (u64 rep = 0; rep < i % spec.p; ++rep) c = add(c, a.coeffs[i]);
        r.coeffs[i - 1] = c;
    }
    trim(r);
    return r;
}

// p-th root of g = h(x^p): coefficient c -> c^(q/p).
inline PolyQ pth_root(const PolyQ& g) {
    const FieldSpec& spec = *g.spec;
    const u64 root_exp = spec.q / spec.p == 0 ? 1 : detail::int_pow(spec.p, spec.k - 1);
    PolyQ r = poly_zero(spec);
    r.coeffs.assign(g.coeffs.size() / spec.p + 1, zero(spec));
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
        if (i % spec.p != 0) {
            if (!g.coeffs[i].is_zero())
                throw integrity_error("pth_root: polynomial is not a p-th power");
            continue;
        }
        r.coeffs[i / spec.p] = pow(g.coeffs[i], root_exp);
    }
    trim(r);
    return r;
}

// Square-free part collection: gathers the distinct irreducible factors of a
// monic polynomial (multiplicities recovered afterwards by trial division).
inline void collect_distinct_factors(const PolyQ& input, std::vector<PolyQ>& out) {
    PolyQ f = input;
    if (f.degree() < 1) return;
    PolyQ der = formal_derivative(f);
    if (der.is_zero()) {
        collect_distinct_factors(pth_root(f), out);
        return;
    }
    PolyQ g = poly_gcd(f, der);
    PolyQ sf = poly_divide_exact(f, g); // square-free part
    factor_squarefree(poly_make_monic(sf), out);
    if (g.degree() > 0) collect_distinct_factors(poly_make_monic(g), out);
}

inline bool is_irreducible_q(const PolyQ& f) {
    const FieldSpec& spec = *f.spec;
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    PolyQ x = poly_from_constants(spec, {0, 1});
    PolyQ h = poly_mod(x, f);
    std::vector<PolyQ> powers;
    for (int i = 1; i <= d; ++i) {
        h = frobenius_step(h, f, spec.q);
        powers.push_back(h);
    }
    if (!poly_sub(powers[static_cast<std::size_t>(d) - 1], x).is_zero()) return false;
    for (int dd = 1; dd < d; ++dd) {
        if (d % dd != 0) continue;
        PolyQ g = poly_gcd(poly_sub(powers[static_cast<std::size_t>(dd) - 1], x), f);
        if (g.degree() != 0) return false;
    }
    return true;
}

} // namespace detail

inline bool poly_is_irreducible(const PolyQ& f) { return detail::is_irreducible_q(f); }

inline Factorization factor_poly(const PolyQ& g) {
    if (g.degree() < 1) throw value_error("factor_poly: input must have degree >= 1");
    const FieldSpec& spec = *g.spec;
    Factorization fact;
    fact.unit = g.coeffs.back();
    PolyQ monic = poly_make_monic(g);

    std::vector<PolyQ> distinct;
    detail::collect_distinct_factors(monic, distinct);
    std::sort(distinct.begin(), distinct.end(), poly_less);
    distinct.erase(std::unique(distinct.begin(), distinct.end(),
                               [](const PolyQ& a, const PolyQ& b) { return a == b; }),
                   distinct.end());

    for (const auto& f : distinct) {
        if (!detail::is_irreducible_q(f))
            throw integrity_error("factor_poly: produced a reducible factor");
        u32 e = 0;
        PolyQ rest = monic;
        while (true) {
            auto [q, r] = poly_divmod(rest, f);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++e;
        }
        fact.factors.push_back({f, e});
    }

    // reconstruction check
    PolyQ prod{{fact.unit}, &spec};
    for (const auto& pf : fact.factors)
        for (u32 i = 0; i < pf.exponent; ++i) prod = poly_mul(prod, pf.factor);
    if (!(prod == g)) throw integrity_error("factor_poly: reconstruction mismatch");
    return fact;
}

// All monic divisors, ordered by degree then canonically. Count = prod(e_i+1).
inline std::vector<PolyQ> divisors_of(const PolyQ& g) {
    const FieldSpec& spec = *g.spec;
    std::vector<PolyQ> divs{poly_one(spec)};
    if (g.degree() >= 1) {
        const Factorization fact = factor_poly(g);
        for (const auto& pf : fact.factors) {
            const std::size_t base = divs.size();
            PolyQ pe = poly_one(spec);
            for (u32 e = 1; e <= pf.exponent; ++e) {
                pe = poly_mul(pe, pf.factor);
                for (std::size_t i = 0; i < base; ++i) divs.push_back(poly_mul(divs[i], pe));
            }
        }
    }
    std::sort(divs.begin(), divs.end(), poly_less);
    return divs;
}

inline int mobius_poly(const PolyQ& d) {
    if (d.is_zero() || !(d.coeffs.back() == one(*d.spec)))
        throw value_error("mobius_poly: input must be monic and nonzero");
    if (d.degree() == 0) return 1;
    const Factorization fact = factor_poly(d);
    for (const auto& pf : fact.factors)
        if (pf.exponent > 1) return 0;
    return (fact.factors.size() % 2 == 0) ? 1 : -1;
}

namespace detail {

inline u64 checked_pow_u64(u64 base, u64 exp) {
    u64 acc = 1;
    while (exp--) {
        if (acc > (u64{1} << 62) / base) throw value_error("polynomial norm overflows");
        acc *= base;
    }
    return acc;
}

} // namespace detail

// Phi_q(g) = prod over irreducible factors r^e of (q^(deg r * e) - q^(deg r * (e-1))).
// Counts residues s with deg s < deg g and monic gcd(s, g) = 1, nonzero
// constants included.
inline u64 totient_poly(const PolyQ& g) {
    if (g.degree() < 1) throw value_error("totient_poly: input must have degree >= 1");
    const u64 q = g.spec->q;
    u64 phi = 1;
    for (const auto& pf : factor_poly(g).factors) {
        const u64 full = detail::checked_pow_u64(q, static_cast<u64>(pf.factor.degree()) * pf.exponent);
        const u64 down = detail::checked_pow_u64(q, static_cast<u64>(pf.factor.degree()) * (pf.exponent - 1));
        phi *= full - down;
    }
    return phi;
}

// Phi_q(d) for a known monic divisor (constant allowed: Phi_q(1) = 1).
inline u64 totient_poly_or_one(const PolyQ& d) {
    return d.degree() < 1 ? 1 : totient_poly(d);
}

inline int mobius_poly_or_one(const PolyQ& d) {
    return d.degree() < 1 ? 1 : mobius_poly(d);
}

} // namespace salemfield

#endif
