#ifndef SALEMFIELD_CLASSIFY_HPP
#define SALEMFIELD_CLASSIFY_HPP

// Element classification: multiplicative order, Frobenius order polynomial,
// primitivity and normality, exhaustive class counts, discrete logarithms,
// multiplicative characters, and the four characteristic functions (divisor
// form and divisor-free detection-kernel form for each of primitive/normal).

#include <cmath>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "salemfield/poly.hpp"

namespace salemfield {

inline constexpr double kIndicatorTol = 1e-6;
inline constexpr u64 kDefaultCap = u64{1} << 16;

inline u64 multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) throw value_error("multiplicative_order: zero element");
    const u64 group = a.spec->order - 1;
    u64 e = group;
    for (const auto& pp : factorize(group == 0 ? 1 : group)) {
        while (e % pp.prime == 0 && pow(a, e / pp.prime) == one(*a.spec)) e /= pp.prime;
    }
    return e == 0 ? 1 : e;
}

// Minimal monic h | x^n - 1 with sum_i h_i a^(q^i) = 0, found by scanning the
// divisors in increasing (degree, canonical) order. The zero element is
// annihilated by the constant 1.
inline PolyQ frobenius_order_poly(const FieldElement& a, const std::vector<PolyQ>& xn1_divisors) {
    const FieldSpec& spec = *a.spec;
    std::vector<FieldElement> conj;
    conj.reserve(spec.n + 1);
    FieldElement cur = a;
    for (u32 i = 0; i <= spec.n; ++i) {
        conj.push_back(cur);
        cur = frobenius_q(cur);
    }
    for (const PolyQ& h : xn1_divisors) {
        FieldElement acc = zero(spec);
        for (std::size_t i = 0; i < h.coeffs.size(); ++i)
            acc = add(acc, mul(h.coeffs[i], conj[i]));
        if (acc.is_zero()) return h;
    }
    throw integrity_error("frobenius_order_poly: x^n - 1 failed to annihilate");
}

inline PolyQ frobenius_order_poly(const FieldElement& a) {
    return frobenius_order_poly(a, divisors_of(x_pow_n_minus_1(*a.spec)));
}

inline bool is_primitive(const FieldElement& a) {
    if (a.is_zero()) return false;
    return multiplicative_order(a) == a.spec->order - 1;
}

inline bool is_normal(const FieldElement& a) {
    if (a.is_zero()) return false;
    return frobenius_order_poly(a) == x_pow_n_minus_1(*a.spec);
}

inline bool is_primitive_normal(const FieldElement& a) {
    return is_primitive(a) && is_normal(a);
}

struct ClassificationRecord {
    FieldElement element;
    u64 mult_order;
    PolyQ frob_order;
    bool primitive;
    bool normal;
    bool primitive_normal;
};

inline ClassificationRecord classify_element(const FieldElement& a,
                                             const std::vector<PolyQ>& xn1_divisors) {
    ClassificationRecord rec{a, 0, frobenius_order_poly(a, xn1_divisors), false, false, false};
    rec.mult_order = a.is_zero() ? 0 : multiplicative_order(a);
    rec.primitive = !a.is_zero() && rec.mult_order == a.spec->order - 1;
    rec.normal = !a.is_zero() && rec.frob_order == x_pow_n_minus_1(*a.spec);
    rec.primitive_normal = rec.primitive && rec.normal;
    return rec;
}

inline ClassificationRecord classify_element(const FieldElement& a) {
    return classify_element(a, divisors_of(x_pow_n_minus_1(*a.spec)));
}

struct ClassCounts {
    u64 primitive;
    u64 normal;
    u64 primitive_normal;
};

// Exhaustive census. The exact identities primitive = phi(q^n - 1) and
// normal = Phi_q(x^n - 1) are enforced; a mismatch is a bug somewhere.
inline ClassCounts count_classes(const FieldSpec& spec, u64 cap = kDefaultCap) {
    if (spec.order > cap) throw cap_error("count_classes: field order exceeds cap");
    const PolyQ xn1 = x_pow_n_minus_1(spec);
    const auto divisors = divisors_of(xn1);
    ClassCounts counts{0, 0, 0};
    for (u64 idx = 1; idx < spec.order; ++idx) {
        const FieldElement a = element_from_index(spec, idx);
        const bool prim = multiplicative_order(a) == spec.order - 1;
        const bool norm = frobenius_order_poly(a, divisors) == xn1;
        counts.primitive += prim;
        counts.normal += norm;
        counts.primitive_normal += (prim && norm);
    }
    if (counts.primitive != totient_int(spec.order - 1))
        throw integrity_error("count_classes: primitive count != phi(q^n - 1)");
    if (counts.normal != totient_poly(xn1))
        throw integrity_error("count_classes: normal count != Phi_q(x^n - 1)");
    return counts;
}

inline FieldElement find_primitive_root(const FieldSpec& spec) {
    if (spec.generator_hint) {
        FieldElement a = element_from_index(spec, *spec.generator_hint);
        if (!a.is_zero() && multiplicative_order(a) == spec.order - 1) return a;
        throw integrity_error("find_primitive_root: cached generator hint is not primitive");
    }
    for (u64 idx = 1; idx < spec.order; ++idx) {
        FieldElement a = element_from_index(spec, idx);
        if (multiplicative_order(a) == spec.order - 1) return a;
    }
    throw integrity_error("find_primitive_root: none found");
}

// Scans once and caches the canonical generator on the spec; later
// find_primitive_root calls return it without rescanning. Call before the
// spec is shared across workers.
inline FieldElement discover_generator(FieldSpec& spec) {
    FieldElement g = find_primitive_root(spec);
    spec.generator_hint = index_of(g);
    return g;
}

inline FieldElement find_normal_element(const FieldSpec& spec) {
    const PolyQ xn1 = x_pow_n_minus_1(spec);
    const auto divisors = divisors_of(xn1);
    for (u64 idx = 1; idx < spec.order; ++idx) {
        FieldElement a = element_from_index(spec, idx);
        if (frobenius_order_poly(a, divisors) == xn1) return a;
    }
    throw integrity_error("find_normal_element: none found");
}

inline FieldElement find_primitive_normal(const FieldSpec& spec) {
    const PolyQ xn1 = x_pow_n_minus_1(spec);
    const auto divisors = divisors_of(xn1);
    for (u64 idx = 1; idx < spec.order; ++idx) {
        FieldElement a = element_from_index(spec, idx);
        if (multiplicative_order(a) == spec.order - 1 &&
            frobenius_order_poly(a, divisors) == xn1)
            return a;
    }
    throw integrity_error("find_primitive_normal: none found");
}

struct LogTable {
    FieldElement base;              // primitive tau
    std::vector<i64> log_by_index;  // -1 for the zero element
    u64 group_order;                // q^n - 1
};

inline LogTable build_log_table(const FieldSpec& spec, const FieldElement& base,
                                u64 cap = kDefaultCap) {
    if (spec.order > cap) throw cap_error("build_log_table: field order exceeds cap");
    if (base.is_zero() || multiplicative_order(base) != spec.order - 1)
        throw value_error("build_log_table: base is not primitive");
    LogTable table{base, std::vector<i64>(spec.order, -1), spec.order - 1};
    FieldElement cur = one(spec);
    for (u64 e = 0; e < table.group_order; ++e) {
        table.log_by_index[index_of(cur)] = static_cast<i64>(e);
        cur = mul(cur, base);
    }
    return table;
}

inline LogTable build_log_table(const FieldSpec& spec, u64 cap = kDefaultCap) {
    return build_log_table(spec, find_primitive_root(spec), cap);
}

inline u64 discrete_log(const LogTable& table, const FieldElement& a) {
    if (a.is_zero()) throw value_error("discrete_log: zero element");
    const i64 e = table.log_by_index[index_of(a)];
    if (e < 0) throw integrity_error("discrete_log: element missing from table");
    return static_cast<u64>(e);
}

// Baby-step giant-step, step ceil(sqrt(q^n - 1)); no table needed.
inline u64 discrete_log_bsgs(const FieldElement& base, const FieldElement& a) {
    if (a.is_zero()) throw value_error("discrete_log_bsgs: zero element");
    const FieldSpec& spec = *base.spec;
    const u64 group = spec.order - 1;
    if (base.is_zero() || multiplicative_order(base) != group)
        throw value_error("discrete_log_bsgs: base is not primitive");
    const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(group))));
    std::unordered_map<u64, u64> baby;
    baby.reserve(m);
    FieldElement cur = one(spec);
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(index_of(cur), j);
        cur = mul(cur, base);
    }
    const FieldElement giant = pow(inv(base), m);
    FieldElement gamma = a;
    for (u64 i = 0; i * m <= group; ++i) {
        auto it = baby.find(index_of(gamma));
        if (it != baby.end()) return (i * m + it->second) % group;
        gamma = mul(gamma, giant);
    }
    throw integrity_error("discrete_log_bsgs: not found");
}

// Multiplicative character of order d, labeled by j coprime to d:
// chi(a) = exp(2 pi i * j * ((q^n-1)/d) * log(a) / (q^n-1)), chi(0) = 0.
class MultCharacter {
public:
    MultCharacter(const LogTable& table, u64 d, u64 j) : table_(&table), d_(d), j_(j) {
        const u64 group = table.group_order;
        if (d == 0 || group % d != 0)
            throw value_error("MultCharacter: d does not divide q^n - 1");
        if (j < 1 || j > d || std::gcd(j, d) != 1)
            throw value_error("MultCharacter: j must lie in [1, d] and be coprime to d");
    }

    u64 order() const { return d_; }

    cplx operator()(const FieldElement& a) const {
        if (a.is_zero()) return {0.0, 0.0};
        const u64 group = table_->group_order;
        const u64 lg = discrete_log(*table_, a);
        const u64 phase = mul_mod(mul_mod(j_, group / d_, group), lg, group);
        return unit_root(phase, group);
    }

private:
    const LogTable* table_;
    u64 d_;
    u64 j_;
};

namespace detail {

inline int round_indicator(cplx value, const char* what) {
    const double re = value.real();
    const double rounded = std::round(re);
    if (std::abs(value.imag()) > kIndicatorTol || std::abs(re - rounded) > kIndicatorTol)
        throw integrity_error(std::string(what) + ": value is not integral within tolerance");
    return static_cast<int>(rounded);
}

} // namespace detail

// Divisor-dependent primitive indicator:
// (phi(N)/N) sum_{d|N} mu(d)/phi(d) sum_{ord chi = d} chi(a),  N = q^n - 1.
inline int psi_primitive_divisor(const FieldElement& a, const LogTable& table) {
    if (a.is_zero()) throw value_error("psi_primitive_divisor: zero element");
    const u64 group = table.group_order;
    cplx acc{0.0, 0.0};
    for (u64 d : divisors_int(group)) {
        const int mu = mobius_int(d);
        if (mu == 0) continue;
        const u64 phi_d = totient_int(d);
        cplx char_sum{0.0, 0.0};
        for (u64 j = 1; j <= d; ++j) {
            if (std::gcd(j, d) != 1) continue;
            char_sum += MultCharacter(table, d, j)(a);
        }
        acc += (static_cast<double>(mu) / static_cast<double>(phi_d)) * char_sum;
    }
    acc *= static_cast<double>(totient_int(group)) / static_cast<double>(group);
    return detail::round_indicator(acc, "psi_primitive_divisor");
}

// Divisor-free primitive indicator: the q^n-point detection kernel compares
// coprime residues s with log(a). The kernel works modulo q^n while s and
// log(a) live below q^n - 1, so it tests integer equality.
inline int psi_primitive_divisorfree(const FieldElement& a, const LogTable& table) {
    if (a.is_zero()) throw value_error("psi_primitive_divisorfree: zero element");
    const FieldSpec& spec = *a.spec;
    const u64 N = spec.order;
    const u64 group = table.group_order;
    const u64 la = discrete_log(table, a);

    std::vector<cplx> roots(N);
    for (u64 r = 0; r < N; ++r) roots[r] = unit_root(r, N);

    cplx acc{0.0, 0.0};
    for (u64 s = 1; s <= group; ++s) {
        if (std::gcd(s, group) != 1) continue;
        const u64 delta = (s + N - la % N) % N;
        cplx inner{0.0, 0.0};
        for (u64 t = 0; t < N; ++t) inner += roots[(delta * t) % N];
        acc += inner / static_cast<double>(N);
    }
    return detail::round_indicator(acc, "psi_primitive_divisorfree");
}

// Additive characters bucketed by their Frobenius order polynomial; the order
// of psi_beta is defined as the Frobenius order polynomial of beta, which
// gives exactly Phi_q(d) characters of order d.
struct AdditiveOrderTable {
    const FieldSpec* spec;
    std::vector<PolyQ> divisors;            // of x^n - 1, canonical order
    std::vector<u32> divisor_of_element;    // per element index
    std::vector<u64> phi_of_divisor;
    std::vector<int> mobius_of_divisor;
    u64 phi_xn1;
};

inline AdditiveOrderTable build_additive_order_table(const FieldSpec& spec,
                                                     u64 cap = kDefaultCap) {
    if (spec.order > cap) throw cap_error("build_additive_order_table: field order exceeds cap");
    AdditiveOrderTable tab;
    tab.spec = &spec;
    const PolyQ xn1 = x_pow_n_minus_1(spec);
    tab.divisors = divisors_of(xn1);
    tab.phi_xn1 = totient_poly(xn1);
    for (const auto& d : tab.divisors) {
        tab.phi_of_divisor.push_back(totient_poly_or_one(d));
        tab.mobius_of_divisor.push_back(mobius_poly_or_one(d));
    }
    tab.divisor_of_element.resize(spec.order);
    for (u64 idx = 0; idx < spec.order; ++idx) {
        const PolyQ h = frobenius_order_poly(element_from_index(spec, idx), tab.divisors);
        const auto it = std::find(tab.divisors.begin(), tab.divisors.end(), h);
        tab.divisor_of_element[idx] = static_cast<u32>(it - tab.divisors.begin());
    }
    return tab;
}

// Divisor-dependent normal indicator:
// (Phi(x^n-1)/q^n) sum_{d | x^n-1} mu_q(d)/Phi_q(d) sum_{Ord psi = d} psi(a).
inline int psi_normal_divisor(const FieldElement& a, const AdditiveOrderTable& tab) {
    if (a.is_zero()) throw value_error("psi_normal_divisor: zero element");
    const FieldSpec& spec = *tab.spec;
    std::vector<cplx> bucket(tab.divisors.size(), cplx{0.0, 0.0});
    for (u64 idx = 0; idx < spec.order; ++idx) {
        const u32 di = tab.divisor_of_element[idx];
        if (tab.mobius_of_divisor[di] == 0) continue;
        bucket[di] += additive_character(element_from_index(spec, idx), a);
    }
    cplx acc{0.0, 0.0};
    for (std::size_t di = 0; di < tab.divisors.size(); ++di) {
        if (tab.mobius_of_divisor[di] == 0) continue;
        acc += (static_cast<double>(tab.mobius_of_divisor[di]) /
                static_cast<double>(tab.phi_of_divisor[di])) *
               bucket[di];
    }
    acc *= static_cast<double>(tab.phi_xn1) / static_cast<double>(spec.order);
    return detail::round_indicator(acc, "psi_normal_divisor");
}

// Enumerates residues s(x) of degree < n coprime to x^n - 1 (the unit group of
// F_q[x]/(x^n-1)); applied to a normal eta these are exactly the normal
// elements s(x) o eta = sum_i s_i eta^(q^i).
inline std::vector<FieldElement> unit_orbit_of(const FieldElement& eta) {
    const FieldSpec& spec = *eta.spec;
    const PolyQ xn1 = x_pow_n_minus_1(spec);
    const auto subfield = subfield_elements(spec);
    std::vector<FieldElement> conj;
    FieldElement cur = eta;
    for (u32 i = 0; i < spec.n; ++i) {
        conj.push_back(cur);
        cur = frobenius_q(cur);
    }
    std::vector<FieldElement> orbit;
    u64 total = 1;
    for (u32 i = 0; i < spec.n; ++i) total *= spec.q;
    for (u64 sidx = 0; sidx < total; ++sidx) {
        std::vector<FieldElement> scoeffs;
        u64 t = sidx;
        for (u32 i = 0; i < spec.n; ++i) {
            scoeffs.push_back(subfield[t % spec.q]);
            t /= spec.q;
        }
        PolyQ s{std::move(scoeffs), &spec};
        trim(s);
        if (s.is_zero()) continue;
        if (poly_gcd(s, xn1).degree() != 0) continue;
        FieldElement image = zero(spec);
        for (std::size_t i = 0; i < s.coeffs.size(); ++i)
            image = add(image, mul(s.coeffs[i], conj[i]));
        orbit.push_back(std::move(image));
    }
    return orbit;
}

// Divisor-free normal indicator: detection kernel comparing log(s(x) o eta)
// against log(a) over all unit residues s(x).
inline int psi_normal_divisorfree(const FieldElement& a, const FieldElement& eta,
                                  const LogTable& table) {
    if (a.is_zero()) throw value_error("psi_normal_divisorfree: zero element");
    if (!is_normal(eta)) throw value_error("psi_normal_divisorfree: eta is not normal");
    const FieldSpec& spec = *a.spec;
    const u64 N = spec.order;
    const u64 la = discrete_log(table, a);

    std::vector<cplx> roots(N);
    for (u64 r = 0; r < N; ++r) roots[r] = unit_root(r, N);

    cplx acc{0.0, 0.0};
    for (const FieldElement& image : unit_orbit_of(eta)) {
        const u64 ms = discrete_log(table, image);
        const u64 delta = (ms + N - la % N) % N;
        cplx inner{0.0, 0.0};
        for (u64 t = 0; t < N; ++t) inner += roots[(delta * t) % N];
        acc += inner / static_cast<double>(N);
    }
    return detail::round_indicator(acc, "psi_normal_divisorfree");
}

} // namespace salemfield

#endif
