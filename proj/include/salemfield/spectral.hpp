#ifndef SALEMFIELD_SPECTRAL_HPP
#define SALEMFIELD_SPECTRAL_HPP

// Finite Fourier transforms of indicator sets over Z/m and over F_{q^n},
// Gauss sums, Parseval/Plancherel and summation-kernel checks, quadratic
// residue / primitive root / primitive-normal spectra with their two-value
// structure checks, the four-part subsum decomposition diagnostic, the
// bilinear character-sum bound, and Salem/Weyl verdicts.
//
// Transforms are direct O(N^2) sums. Every phase is an exact integer index
// into a root-of-unity table, so there is no accumulated phase drift.

#include <cmath>
#include <limits>
#include <numeric>

#include "salemfield/classify.hpp"
#include "salemfield/parallel.hpp"

namespace salemfield {

inline constexpr double kExactTol = 1e-9;
inline constexpr double kRelTol = 1e-6;

struct IndicatorSet {
    enum class Domain { zmod, field };
    Domain domain;
    u64 size;                        // m, or q^n
    const FieldSpec* spec = nullptr; // set for field domains
    std::vector<std::uint8_t> membership;
    u64 cardinality = 0;
};

inline IndicatorSet make_indicator_zmod(u64 m, const std::vector<u64>& members) {
    if (m == 0) throw value_error("make_indicator_zmod: modulus must be positive");
    IndicatorSet E{IndicatorSet::Domain::zmod, m, nullptr, std::vector<std::uint8_t>(m, 0), 0};
    for (u64 t : members) {
        if (t >= m) throw value_error("make_indicator_zmod: member out of range");
        if (!E.membership[t]) { E.membership[t] = 1; ++E.cardinality; }
    }
    return E;
}

inline IndicatorSet make_indicator_field(const FieldSpec& spec, const std::vector<u64>& member_indices) {
    IndicatorSet E{IndicatorSet::Domain::field, spec.order, &spec,
                   std::vector<std::uint8_t>(spec.order, 0), 0};
    for (u64 t : member_indices) {
        if (t >= spec.order) throw value_error("make_indicator_field: member out of range");
        if (!E.membership[t]) { E.membership[t] = 1; ++E.cardinality; }
    }
    return E;
}

struct Spectrum {
    std::vector<cplx> coeffs;
    double value_at_zero = 0.0;
    double sup_nonzero = 0.0;
    u64 sup_index = 0; // frequency attaining sup_nonzero
    double salem_ratio = std::numeric_limits<double>::quiet_NaN();
    double weyl_ratio = 0.0;
};

namespace detail {

inline void fill_stats(Spectrum& s) {
    s.value_at_zero = s.coeffs.empty() ? 0.0 : s.coeffs[0].real();
    s.sup_nonzero = 0.0;
    s.sup_index = 0;
    for (std::size_t i = 1; i < s.coeffs.size(); ++i) {
        const double a = std::abs(s.coeffs[i]);
        if (a > s.sup_nonzero) { s.sup_nonzero = a; s.sup_index = i; }
    }
    s.weyl_ratio = s.coeffs.empty() ? 0.0 : s.sup_nonzero / static_cast<double>(s.coeffs.size());
}

inline std::vector<cplx> root_table(u64 m) {
    std::vector<cplx> w(m);
    for (u64 r = 0; r < m; ++r) w[r] = unit_root(r, m);
    return w;
}

} // namespace detail

// Forward transform on Z/m: coeffs[s] = sum_t f(t) exp(+2 pi i s t / m).
inline Spectrum dft_zmod(const std::vector<cplx>& f, unsigned workers = 1) {
    const u64 m = f.size();
    if (m == 0) throw value_error("dft_zmod: empty function");
    const auto roots = detail::root_table(m);
    Spectrum s;
    s.coeffs.assign(m, cplx{0.0, 0.0});
    parallel_for(m, workers, [&](u64 lo, u64 hi) {
        for (u64 freq = lo; freq < hi; ++freq) {
            cplx acc{0.0, 0.0};
            for (u64 t = 0; t < m; ++t) acc += f[t] * roots[(freq * t) % m];
            s.coeffs[freq] = acc;
        }
    });
    detail::fill_stats(s);
    return s;
}

inline std::vector<cplx> idft_zmod(const std::vector<cplx>& coeffs) {
    const u64 m = coeffs.size();
    if (m == 0) throw value_error("idft_zmod: empty spectrum");
    const auto roots = detail::root_table(m);
    std::vector<cplx> f(m);
    for (u64 t = 0; t < m; ++t) {
        cplx acc{0.0, 0.0};
        for (u64 s = 0; s < m; ++s) acc += coeffs[s] * std::conj(roots[(s * t) % m]);
        f[t] = acc / static_cast<double>(m);
    }
    return f;
}

namespace detail {

// Shared tables for field transforms: element index of tau^e and the absolute
// trace of tau^e, so Tr(alpha*beta) is a single lookup per pair.
struct FieldDftTables {
    std::vector<u64> pow_index;   // pow_index[e] = index of tau^e
    std::vector<u32> trace_pow;   // trace_pow[e] = Tr(tau^e)
    std::vector<i64> log_of;      // log by element index, -1 at zero
    u64 group;
};

inline FieldDftTables build_field_dft_tables(const FieldSpec& spec, const LogTable& table) {
    FieldDftTables t;
    t.group = spec.order - 1;
    t.pow_index.resize(t.group);
    t.trace_pow.resize(t.group);
    t.log_of = table.log_by_index;
    FieldElement cur = one(spec);
    for (u64 e = 0; e < t.group; ++e) {
        t.pow_index[e] = index_of(cur);
        t.trace_pow[e] = trace_abs(cur);
        cur = mul(cur, table.base);
    }
    return t;
}

} // namespace detail

// Forward transform on F_{q^n}: coeffs[beta] = sum_alpha f(alpha) psi_beta(alpha),
// frequencies indexed canonically by the element index of beta.
inline Spectrum dft_field(const FieldSpec& spec, const std::vector<cplx>& f,
                          const LogTable& table, unsigned workers = 1) {
    if (f.size() != spec.order) throw value_error("dft_field: function size != field order");
    const auto tabs = detail::build_field_dft_tables(spec, table);
    const auto roots = detail::root_table(spec.p);
    const u64 group = tabs.group;

    Spectrum s;
    s.coeffs.assign(spec.order, cplx{0.0, 0.0});
    cplx total{0.0, 0.0};
    for (const auto& v : f) total += v;
    s.coeffs[0] = total;

    parallel_for(group, workers, [&](u64 lo, u64 hi) {
        for (u64 lb = lo; lb < hi; ++lb) {
            cplx acc = f[0]; // alpha = 0 contributes f(0) * psi(0) = f(0)
            for (u64 e = 0; e < group; ++e)
                acc += f[tabs.pow_index[e]] * roots[tabs.trace_pow[(e + lb) % group]];
            s.coeffs[tabs.pow_index[lb]] = acc;
        }
    });
    detail::fill_stats(s);
    return s;
}

inline Spectrum dft_field(const FieldSpec& spec, const std::vector<cplx>& f,
                          unsigned workers = 1, u64 cap = kDefaultCap) {
    if (spec.order > cap) throw cap_error("dft_field: field order exceeds cap");
    const LogTable table = build_log_table(spec, cap);
    return dft_field(spec, f, table, workers);
}

inline std::vector<cplx> idft_field(const FieldSpec& spec, const std::vector<cplx>& coeffs,
                                    const LogTable& table) {
    if (coeffs.size() != spec.order) throw value_error("idft_field: spectrum size != field order");
    const auto tabs = detail::build_field_dft_tables(spec, table);
    const auto roots = detail::root_table(spec.p);
    const u64 group = tabs.group;
    std::vector<cplx> f(spec.order);
    for (u64 ia = 0; ia < spec.order; ++ia) {
        cplx acc = coeffs[0];
        if (ia == 0) {
            for (u64 e = 0; e < group; ++e) acc += coeffs[tabs.pow_index[e]];
        } else {
            const u64 la = static_cast<u64>(tabs.log_of[ia]);
            for (u64 e = 0; e < group; ++e)
                acc += coeffs[tabs.pow_index[e]] * std::conj(roots[tabs.trace_pow[(e + la) % group]]);
        }
        f[ia] = acc / static_cast<double>(spec.order);
    }
    return f;
}

// Spectrum of a 0/1 indicator with Salem/Weyl statistics attached. The zero
// coefficient must reproduce the cardinality.
inline Spectrum spectrum_of(const IndicatorSet& E, unsigned workers = 1, u64 cap = kDefaultCap) {
    std::vector<cplx> f(E.size);
    for (u64 t = 0; t < E.size; ++t) f[t] = E.membership[t] ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    Spectrum s = (E.domain == IndicatorSet::Domain::zmod)
                     ? dft_zmod(f, workers)
                     : dft_field(*E.spec, f, workers, cap);
    if (std::abs(s.value_at_zero - static_cast<double>(E.cardinality)) > kExactTol)
        throw integrity_error("spectrum_of: zero coefficient differs from cardinality");
    if (E.cardinality > 0)
        s.salem_ratio = s.sup_nonzero / std::sqrt(static_cast<double>(E.cardinality));
    return s;
}

// ---------------------------------------------------------------------------
// Quadratic residues
// ---------------------------------------------------------------------------

inline IndicatorSet qr_indicator(u64 p) {
    if (p == 2 || !is_prime(p)) throw value_error("qr_indicator: p must be an odd prime");
    std::vector<u64> members;
    for (u64 t = 1; t <= (p - 1) / 2; ++t) members.push_back(mul_mod(t, t, p));
    return make_indicator_zmod(p, members);
}

inline int legendre_symbol(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

struct QrSpectrumReport {
    u64 p;
    u64 cardinality;
    double coeff0;
    double sup_nonzero;
    double salem_ratio;
    double weyl_ratio;
    double max_closed_form_dev; // vs -1/2 + chi(s^{-1}) G / 2
    double sup_bound;           // (sqrt(p) + 1) / 2
    bool pass;
};

// Every nonzero frequency of the quadratic-residue indicator equals
// -1/2 + chi(s^{-1}) G(psi, chi) / 2, G the quadratic Gauss sum mod p.
inline QrSpectrumReport qr_spectrum_check(u64 p, unsigned workers = 1) {
    const IndicatorSet E = qr_indicator(p);
    const Spectrum s = spectrum_of(E, workers, std::max<u64>(kDefaultCap, p + 1));

    const auto roots = detail::root_table(p);
    cplx gauss{0.0, 0.0};
    for (u64 z = 1; z < p; ++z)
        gauss += static_cast<double>(legendre_symbol(z, p)) * roots[z];

    double max_dev = 0.0;
    for (u64 freq = 1; freq < p; ++freq) {
        const u64 sinv = pow_mod(freq, p - 2, p);
        const cplx expected = cplx{-0.5, 0.0} +
                              static_cast<double>(legendre_symbol(sinv, p)) * gauss * 0.5;
        max_dev = std::max(max_dev, std::abs(s.coeffs[freq] - expected));
    }

    QrSpectrumReport rep;
    rep.p = p;
    rep.cardinality = E.cardinality;
    rep.coeff0 = s.value_at_zero;
    rep.sup_nonzero = s.sup_nonzero;
    rep.salem_ratio = s.salem_ratio;
    rep.weyl_ratio = s.weyl_ratio;
    rep.max_closed_form_dev = max_dev;
    rep.sup_bound = (std::sqrt(static_cast<double>(p)) + 1.0) / 2.0;
    rep.pass = std::abs(rep.coeff0 - static_cast<double>((p - 1) / 2)) < kExactTol &&
               max_dev < kRelTol && rep.sup_nonzero <= rep.sup_bound + kRelTol;
    return rep;
}

// ---------------------------------------------------------------------------
// Gauss sums
// ---------------------------------------------------------------------------

struct GaussSumResult {
    cplx value;
    bool nontrivial; // both characters nontrivial; only then |G| = q^(n/2)
    double expected_modulus;
};

// G(psi_beta, chi) = sum_{z != 0} psi_beta(z) chi(z).
inline GaussSumResult gauss_sum(const LogTable& table, u64 d, u64 j, const FieldElement& beta) {
    const FieldSpec& spec = *beta.spec;
    const MultCharacter chi(table, d, j);
    cplx acc{0.0, 0.0};
    for (u64 idx = 1; idx < spec.order; ++idx) {
        const FieldElement z = element_from_index(spec, idx);
        acc += additive_character(beta, z) * chi(z);
    }
    GaussSumResult r;
    r.value = acc;
    r.nontrivial = (d > 1) && !beta.is_zero();
    r.expected_modulus = r.nontrivial ? std::sqrt(static_cast<double>(spec.order)) : 0.0;
    return r;
}

// ---------------------------------------------------------------------------
// Primitive roots mod p
// ---------------------------------------------------------------------------

struct PrimrootSpectrumReport {
    u64 p;
    u64 phi_p_minus_1;
    double coeff0;
    double sup_nonzero;
    double sup_bound; // 2^omega(p-1) * sqrt(p)
    double salem_ratio;
    double weyl_ratio;
    bool pass;
};

inline PrimrootSpectrumReport primroot_spectrum_check(u64 p, unsigned workers = 1) {
    if (p < 3 || !is_prime(p)) throw value_error("primroot_spectrum_check: p must be a prime >= 3");
    const FieldSpec spec = build_field(p, 1, 1);
    const LogTable table = build_log_table(spec, std::max<u64>(kDefaultCap, p + 1));
    std::vector<u64> members;
    for (u64 t = 1; t < p; ++t) {
        const u64 lg = static_cast<u64>(table.log_by_index[t]);
        if (std::gcd(lg, p - 1) == 1) members.push_back(t);
    }
    const IndicatorSet E = make_indicator_zmod(p, members);
    const Spectrum s = spectrum_of(E, workers, std::max<u64>(kDefaultCap, p + 1));

    PrimrootSpectrumReport rep;
    rep.p = p;
    rep.phi_p_minus_1 = totient_int(p - 1);
    rep.coeff0 = s.value_at_zero;
    rep.sup_nonzero = s.sup_nonzero;
    rep.sup_bound = std::pow(2.0, omega_int(p - 1)) * std::sqrt(static_cast<double>(p));
    rep.salem_ratio = s.salem_ratio;
    rep.weyl_ratio = s.weyl_ratio;
    rep.pass = std::abs(rep.coeff0 - static_cast<double>(rep.phi_p_minus_1)) < kExactTol &&
               rep.sup_nonzero <= rep.sup_bound + kRelTol;
    return rep;
}

// ---------------------------------------------------------------------------
// Primitive normal elements
// ---------------------------------------------------------------------------

struct PnSpectrumReport {
    u64 p, k, n;
    u64 order;
    u64 pn_count;
    double coeff0;
    double sup_nonzero;
    u64 sup_beta_index;
    double sup_over_sqrt_order;
    double bound_factor;  // 2^(omega(q^n - 1) + r), r = #distinct factors of x^n - 1
    double parseval_lhs;  // sum |C^(beta)|^2
    double parseval_rhs;  // q^n * pn_count
    double salem_ratio;
    double weyl_ratio;
    bool pass;
};

inline std::vector<u64> primitive_normal_indices(const FieldSpec& spec, u64 cap = kDefaultCap) {
    if (spec.order > cap) throw cap_error("primitive_normal_indices: field order exceeds cap");
    const PolyQ xn1 = x_pow_n_minus_1(spec);
    const auto divisors = divisors_of(xn1);
    std::vector<u64> members;
    for (u64 idx = 1; idx < spec.order; ++idx) {
        const FieldElement a = element_from_index(spec, idx);
        if (multiplicative_order(a) == spec.order - 1 &&
            frobenius_order_poly(a, divisors) == xn1)
            members.push_back(idx);
    }
    return members;
}

inline PnSpectrumReport pn_spectrum(const FieldSpec& spec, unsigned workers = 1,
                                    u64 cap = kDefaultCap) {
    if (spec.order > cap) throw cap_error("pn_spectrum: field order exceeds cap");
    const IndicatorSet E = make_indicator_field(spec, primitive_normal_indices(spec, cap));
    const Spectrum s = spectrum_of(E, workers, cap);

    double parseval = 0.0;
    for (const auto& c : s.coeffs) parseval += std::norm(c);

    PnSpectrumReport rep;
    rep.p = spec.p;
    rep.k = spec.k;
    rep.n = spec.n;
    rep.order = spec.order;
    rep.pn_count = E.cardinality;
    rep.coeff0 = s.value_at_zero;
    rep.sup_nonzero = s.sup_nonzero;
    rep.sup_beta_index = s.sup_index;
    rep.sup_over_sqrt_order = s.sup_nonzero / std::sqrt(static_cast<double>(spec.order));
    const u32 r = static_cast<u32>(factor_poly(x_pow_n_minus_1(spec)).factors.size());
    rep.bound_factor = std::pow(2.0, omega_int(spec.order - 1) + r);
    rep.parseval_lhs = parseval;
    rep.parseval_rhs = static_cast<double>(spec.order) * static_cast<double>(E.cardinality);
    rep.salem_ratio = s.salem_ratio;
    rep.weyl_ratio = s.weyl_ratio;
    const double parseval_rel = std::abs(rep.parseval_lhs - rep.parseval_rhs) /
                                std::max(1.0, rep.parseval_rhs);
    rep.pass = std::abs(rep.coeff0 - static_cast<double>(rep.pn_count)) < kExactTol &&
               parseval_rel < kRelTol &&
               rep.sup_over_sqrt_order <= rep.bound_factor + kRelTol;
    return rep;
}

// ---------------------------------------------------------------------------
// Four-part subsum decomposition of the primitive-normal spectrum
// ---------------------------------------------------------------------------

// Splits each detection kernel at t = 0 versus t != 0 and carries the four
// products over the field. The constant parts are defined on the whole field,
// so the (0,0) piece is a complete additive character sum and vanishes at any
// nonzero frequency; the kernels at alpha = 0 take the value 0 (indicator
// convention), which fixes the alpha = 0 contribution of the other parts.
struct TijContext {
    const FieldSpec* spec;
    const LogTable* table;
    double p0, n0;                  // phi(q^n-1)/q^n, Phi(x^n-1)/q^n
    std::vector<cplx> p1, n1;       // per element index
    std::vector<std::uint8_t> pn;   // primitive-normal membership
    detail::FieldDftTables tabs;
    std::vector<cplx> root_p;
};

inline TijContext build_tij_context(const FieldSpec& spec, const FieldElement& tau,
                                    const FieldElement& eta, const LogTable& table,
                                    u64 cap = kDefaultCap) {
    if (spec.order > cap) throw cap_error("build_tij_context: field order exceeds cap");
    if (!is_primitive_normal(tau)) throw value_error("build_tij_context: tau must be primitive normal");
    if (!(table.base == tau)) throw value_error("build_tij_context: log table must use base tau");
    if (!is_normal(eta)) throw value_error("build_tij_context: eta must be normal");

    TijContext ctx;
    ctx.spec = &spec;
    ctx.table = &table;
    const u64 N = spec.order;
    const u64 group = N - 1;
    ctx.p0 = static_cast<double>(totient_int(group)) / static_cast<double>(N);
    ctx.n0 = static_cast<double>(totient_poly(x_pow_n_minus_1(spec))) / static_cast<double>(N);
    ctx.tabs = detail::build_field_dft_tables(spec, table);
    ctx.root_p = detail::root_table(spec.p);

    const auto rootsN = detail::root_table(N);
    auto kernel_tail = [&](u64 delta) { // (1/N) sum_{t=1}^{N-1} w^(delta t)
        cplx inner{0.0, 0.0};
        for (u64 t = 1; t < N; ++t) inner += rootsN[(delta * t) % N];
        return inner / static_cast<double>(N);
    };

    std::vector<u64> coprime_s;
    for (u64 s = 1; s <= group; ++s)
        if (std::gcd(s, group) == 1) coprime_s.push_back(s);

    std::vector<u64> orbit_logs;
    for (const FieldElement& image : unit_orbit_of(eta))
        orbit_logs.push_back(discrete_log(table, image));

    ctx.p1.assign(N, cplx{0.0, 0.0});
    ctx.n1.assign(N, cplx{0.0, 0.0});
    ctx.p1[0] = cplx{-ctx.p0, 0.0};
    ctx.n1[0] = cplx{-ctx.n0, 0.0};
    for (u64 idx = 1; idx < N; ++idx) {
        const u64 la = static_cast<u64>(ctx.tabs.log_of[idx]);
        cplx pacc{0.0, 0.0};
        for (u64 s : coprime_s) pacc += kernel_tail((s + N - la) % N);
        cplx nacc{0.0, 0.0};
        for (u64 ms : orbit_logs) nacc += kernel_tail((ms + N - la) % N);
        ctx.p1[idx] = pacc;
        ctx.n1[idx] = nacc;
    }

    const auto members = primitive_normal_indices(spec, cap);
    ctx.pn.assign(N, 0);
    for (u64 idx : members) ctx.pn[idx] = 1;
    return ctx;
}

struct TijParts {
    cplx t00, t01, t10, t11;
    cplx total;      // t00 + t01 + t10 + t11
    cplx direct;     // dft coefficient of the pn indicator at beta
    double t00_abs;
    double partition_rel_err;
};

inline TijParts tij_decomposition(const TijContext& ctx, const FieldElement& beta) {
    if (beta.is_zero()) throw value_error("tij_decomposition: beta must be nonzero");
    const FieldSpec& spec = *ctx.spec;
    const u64 N = spec.order;
    const u64 group = N - 1;
    const u64 lb = discrete_log(*ctx.table, beta);

    cplx t00{0.0, 0.0}, t01{0.0, 0.0}, t10{0.0, 0.0}, t11{0.0, 0.0}, direct{0.0, 0.0};
    // alpha = 0: psi_beta(0) = 1
    t00 += ctx.p0 * ctx.n0;
    t01 += ctx.p1[0] * ctx.n0;
    t10 += ctx.p0 * ctx.n1[0];
    t11 += ctx.p1[0] * ctx.n1[0];
    for (u64 e = 0; e < group; ++e) {
        const cplx psi = ctx.root_p[ctx.tabs.trace_pow[(e + lb) % group]];
        const u64 idx = ctx.tabs.pow_index[e];
        t00 += psi * (ctx.p0 * ctx.n0);
        t01 += psi * (ctx.p1[idx] * ctx.n0);
        t10 += psi * (ctx.p0 * ctx.n1[idx]);
        t11 += psi * (ctx.p1[idx] * ctx.n1[idx]);
        if (ctx.pn[idx]) direct += psi;
    }

    TijParts parts;
    parts.t00 = t00;
    parts.t01 = t01;
    parts.t10 = t10;
    parts.t11 = t11;
    parts.total = t00 + t01 + t10 + t11;
    parts.direct = direct;
    parts.t00_abs = std::abs(t00);
    parts.partition_rel_err =
        std::abs(parts.total - parts.direct) / std::max(1.0, std::abs(parts.direct));
    return parts;
}

inline TijParts tij_decomposition(const FieldSpec& spec, const FieldElement& beta,
                                  const FieldElement& tau, const FieldElement& eta,
                                  const LogTable& table, u64 cap = kDefaultCap) {
    return tij_decomposition(build_tij_context(spec, tau, eta, table, cap), beta);
}

// ---------------------------------------------------------------------------
// Bilinear character-sum bound
// ---------------------------------------------------------------------------

struct BilinearReport {
    double sum_abs;
    double bound; // sqrt(q^n * #U * #V)
    double slack; // bound - sum_abs
};

// |sum_{v in V} sum_{u in U} psi(uv)| <= sqrt(q^n #U #V). This is a theorem;
// a violation raises an integrity error rather than a failed report.
inline BilinearReport bilinear_bound_check(const IndicatorSet& U, const IndicatorSet& V,
                                           const FieldElement& beta) {
    if (U.domain != IndicatorSet::Domain::field || V.domain != IndicatorSet::Domain::field)
        throw value_error("bilinear_bound_check: U and V must be field indicators");
    if (!(*U.spec == *V.spec) || !(*U.spec == *beta.spec))
        throw value_error("bilinear_bound_check: U, V, psi must share one field");
    if (beta.is_zero()) throw value_error("bilinear_bound_check: psi must be nontrivial");
    const FieldSpec& spec = *U.spec;

    std::vector<u64> us, vs;
    for (u64 i = 0; i < spec.order; ++i) {
        if (U.membership[i]) us.push_back(i);
        if (V.membership[i]) vs.push_back(i);
    }
    cplx acc{0.0, 0.0};
    for (u64 vi : vs) {
        const FieldElement v = element_from_index(spec, vi);
        for (u64 ui : us) {
            const FieldElement u = element_from_index(spec, ui);
            acc += additive_character(beta, mul(u, v));
        }
    }
    BilinearReport rep;
    rep.sum_abs = std::abs(acc);
    rep.bound = std::sqrt(static_cast<double>(spec.order) * static_cast<double>(U.cardinality) *
                          static_cast<double>(V.cardinality));
    rep.slack = rep.bound - rep.sum_abs;
    if (rep.sum_abs > rep.bound + kRelTol)
        throw integrity_error("bilinear_bound_check: theorem bound violated");
    return rep;
}

// Incomplete character sum over a single subset. The q^(n/2) bound holds when
// U is a coset of a multiplicative subgroup (multiplication permutes the set);
// for arbitrary subsets it can fail, so this checker only reports.
struct IncompleteSumReport {
    double sum_abs;
    double bound; // q^(n/2)
    bool within_bound;
};

inline IncompleteSumReport incomplete_character_sum(const IndicatorSet& U,
                                                    const FieldElement& beta) {
    if (U.domain != IndicatorSet::Domain::field)
        throw value_error("incomplete_character_sum: U must be a field indicator");
    if (!(*U.spec == *beta.spec))
        throw value_error("incomplete_character_sum: U and psi must share one field");
    if (beta.is_zero()) throw value_error("incomplete_character_sum: psi must be nontrivial");
    const FieldSpec& spec = *U.spec;
    cplx acc{0.0, 0.0};
    for (u64 i = 0; i < spec.order; ++i)
        if (U.membership[i]) acc += additive_character(beta, element_from_index(spec, i));
    IncompleteSumReport rep;
    rep.sum_abs = std::abs(acc);
    rep.bound = std::sqrt(static_cast<double>(spec.order));
    rep.within_bound = rep.sum_abs <= rep.bound + kRelTol;
    return rep;
}

// The coset tau^shift * H of the order-d subgroup H of the multiplicative
// group, as an indicator set.
inline IndicatorSet subgroup_coset_indicator(const LogTable& table, u64 d, u64 shift) {
    const u64 group = table.group_order;
    if (d == 0 || group % d != 0)
        throw value_error("subgroup_coset_indicator: d must divide q^n - 1");
    const FieldSpec& spec = *table.base.spec;
    const u64 step = group / d;
    std::vector<u64> members;
    FieldElement cur = pow(table.base, shift % group);
    const FieldElement stride = pow(table.base, step);
    for (u64 i = 0; i < d; ++i) {
        members.push_back(index_of(cur));
        cur = mul(cur, stride);
    }
    return make_indicator_field(spec, members);
}

// ---------------------------------------------------------------------------
// Parseval / Plancherel / summation kernel
// ---------------------------------------------------------------------------

struct ParsevalReport {
    cplx lhs; // sum_s fhat(s) conj(ghat(s))
    cplx rhs; // m sum_t f(t) conj(g(t))
    double rel_err;
    bool pass;
};

inline ParsevalReport parseval_check(const std::vector<cplx>& f, const std::vector<cplx>& g,
                                     unsigned workers = 1) {
    if (f.size() != g.size() || f.empty())
        throw value_error("parseval_check: domain mismatch");
    const u64 m = f.size();
    const Spectrum fs = dft_zmod(f, workers);
    const Spectrum gs = dft_zmod(g, workers);
    cplx lhs{0.0, 0.0}, rhs{0.0, 0.0};
    for (u64 s = 0; s < m; ++s) lhs += fs.coeffs[s] * std::conj(gs.coeffs[s]);
    for (u64 t = 0; t < m; ++t) rhs += f[t] * std::conj(g[t]);
    rhs *= static_cast<double>(m);
    ParsevalReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.rel_err = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    rep.pass = rep.rel_err < kRelTol;
    return rep;
}

inline ParsevalReport plancherel_check(const std::vector<cplx>& f, unsigned workers = 1) {
    return parseval_check(f, f, workers);
}

struct KernelReport {
    double max_abs_dev;
    bool pass;
};

// (1/m) sum_t sum_s w^(t(n-s)) f(s) = f(n) at every point n. The double sum is
// evaluated literally, reorganized through K(d) = sum_t w^(t d).
inline KernelReport kernel_identity_check(const std::vector<cplx>& f) {
    const u64 m = f.size();
    if (m == 0) throw value_error("kernel_identity_check: empty function");
    const auto roots = detail::root_table(m);
    std::vector<cplx> K(m, cplx{0.0, 0.0});
    for (u64 d = 0; d < m; ++d)
        for (u64 t = 0; t < m; ++t) K[d] += roots[(d * t) % m];
    KernelReport rep{0.0, true};
    for (u64 n = 0; n < m; ++n) {
        cplx acc{0.0, 0.0};
        for (u64 s = 0; s < m; ++s) acc += K[(n + m - s) % m] * f[s];
        rep.max_abs_dev = std::max(rep.max_abs_dev, std::abs(acc / static_cast<double>(m) - f[n]));
    }
    rep.pass = rep.max_abs_dev < kExactTol;
    return rep;
}

// ---------------------------------------------------------------------------
// Salem verdict
// ---------------------------------------------------------------------------

struct SalemReport {
    u64 cardinality;
    double sup_nonzero;
    double salem_ratio;
    double weyl_ratio;
    double constant_cap;
    bool within_cap;
    bool empty; // ratio undefined; flagged rather than thrown
};

inline SalemReport salem_verdict(const IndicatorSet& E, double constant_cap = 4.0,
                                 unsigned workers = 1, u64 cap = kDefaultCap) {
    SalemReport rep;
    rep.cardinality = E.cardinality;
    rep.constant_cap = constant_cap;
    if (E.cardinality == 0) {
        rep.sup_nonzero = 0.0;
        rep.salem_ratio = std::numeric_limits<double>::quiet_NaN();
        rep.weyl_ratio = 0.0;
        rep.within_cap = false;
        rep.empty = true;
        return rep;
    }
    const Spectrum s = spectrum_of(E, workers, cap);
    rep.sup_nonzero = s.sup_nonzero;
    rep.salem_ratio = s.salem_ratio;
    rep.weyl_ratio = s.weyl_ratio;
    rep.within_cap = s.salem_ratio <= constant_cap;
    rep.empty = false;
    return rep;
}

} // namespace salemfield

#endif
