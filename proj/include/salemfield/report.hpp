#ifndef SALEMFIELD_REPORT_HPP
#define SALEMFIELD_REPORT_HPP

// Report assembly for the command-line driver: run configuration, JSON/CSV
// serialization (floats fixed at 17 significant digits for byte-stable
// diffs), and the five command implementations. Everything here is callable
// in-process so the report surface can be tested without spawning the binary.

#include <array>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "salemfield/rng.hpp"
#include "salemfield/spectral.hpp"

namespace salemfield {

using ordered_json = nlohmann::ordered_json;

inline constexpr u64 kFourWayCap = 512; // divisor-free sums are O(q^{2n}) per element
inline constexpr char kSchemaVersion[] = "1";

struct RunConfig {
    std::string command;
    std::string target; // qr | primroot | pn (spectrum and salem-scan)
    u64 p = 0;
    u32 k = 1;
    u32 n = 0;
    bool has_prime_range = false;
    u64 prime_lo = 0, prime_hi = 0;
    std::vector<std::array<u64, 3>> field_list; // (p, k, n) rows for pn scans
    u64 cap = kDefaultCap;
    unsigned workers = 1;
    u64 seed = 0;
    std::string out;
    std::string format = "json";
    bool dump_coeffs = false;
};

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

namespace detail {

inline std::string format_double_17(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void emit_json(const ordered_json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + ordered_json(it.key()).dump() + ": ";
                emit_json(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                emit_json(v, out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case ordered_json::value_t::number_float:
            out += format_double_17(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

inline std::string csv_cell(const ordered_json& v) {
    if (v.is_number_float()) return format_double_17(v.get<double>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        bool quote = s.find_first_of(",\"\n") != std::string::npos;
        if (!quote) return s;
        std::string esc = "\"";
        for (char c : s) { if (c == '"') esc += '"'; esc += c; }
        return esc + "\"";
    }
    return v.dump();
}

inline void flatten_record(const ordered_json& rec, const std::string& prefix,
                           std::vector<std::pair<std::string, std::string>>& out) {
    for (auto it = rec.begin(); it != rec.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            flatten_record(*it, key, out);
        } else if (it->is_array()) {
            int i = 0;
            for (const auto& v : *it) {
                if (v.is_object())
                    flatten_record(v, key + "." + std::to_string(i), out);
                else
                    out.emplace_back(key + "." + std::to_string(i), csv_cell(v));
                ++i;
            }
        } else {
            out.emplace_back(key, csv_cell(*it));
        }
    }
}

} // namespace detail

inline std::string report_to_json(const ordered_json& report) {
    std::string out;
    detail::emit_json(report, out, 0);
    out += "\n";
    return out;
}

// Flat projection of the records array: one CSV row per record.
inline std::string report_to_csv(const ordered_json& report) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    for (const auto& rec : report.at("records"))
        rows.push_back([&] {
            std::vector<std::pair<std::string, std::string>> flat;
            detail::flatten_record(rec, "", flat);
            return flat;
        }());
    std::vector<std::string> header;
    for (const auto& row : rows)
        for (const auto& [k, v] : row)
            if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out += ",";
            for (const auto& [k, v] : row)
                if (k == header[i]) { out += v; break; }
        }
        out += "\n";
    }
    return out;
}

inline std::string spectrum_coeffs_csv(const Spectrum& s) {
    std::string out = "index,re,im,abs\n";
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        out += std::to_string(i) + "," + detail::format_double_17(s.coeffs[i].real()) + "," +
               detail::format_double_17(s.coeffs[i].imag()) + "," +
               detail::format_double_17(std::abs(s.coeffs[i])) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// report skeleton
// ---------------------------------------------------------------------------

namespace detail {

inline ordered_json config_echo(const RunConfig& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    if (!cfg.target.empty()) j["target"] = cfg.target;
    if (cfg.p) j["p"] = cfg.p;
    if (cfg.p) j["k"] = cfg.k;
    if (cfg.n) j["n"] = cfg.n;
    if (cfg.has_prime_range) j["prime_range"] = ordered_json::array({cfg.prime_lo, cfg.prime_hi});
    if (!cfg.field_list.empty()) {
        ordered_json fl = ordered_json::array();
        for (const auto& f : cfg.field_list) fl.push_back(ordered_json::array({f[0], f[1], f[2]}));
        j["fields"] = fl;
    }
    j["cap"] = cfg.cap;
    j["workers"] = cfg.workers;
    j["seed"] = cfg.seed;
    j["format"] = cfg.format;
    return j;
}

inline ordered_json check_entry(const std::string& name, double value, double reference,
                                double margin, bool pass) {
    ordered_json c;
    c["name"] = name;
    c["value"] = value;
    c["reference"] = reference;
    c["margin"] = margin;
    c["pass"] = pass;
    return c;
}

class StageClock {
public:
    StageClock() : start_(std::chrono::steady_clock::now()) {}
    double lap(ordered_json& timing, const std::string& stage) {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        timing[stage] = ms;
        last_ = now;
        return ms;
    }
    double total_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline void summarize(ordered_json& report) {
    u64 checks = 0, failures = 0;
    for (const auto& rec : report["records"]) {
        if (rec.contains("checks"))
            for (const auto& c : rec["checks"]) {
                ++checks;
                if (!c.at("pass").get<bool>()) ++failures;
            }
        if (rec.contains("skipped") && rec["skipped"].get<bool>()) continue;
    }
    ordered_json s;
    s["checks"] = checks;
    s["failures"] = failures;
    s["all_pass"] = (failures == 0);
    report["summary"] = s;
}

inline std::string field_label(const FieldSpec& spec) {
    return "F_" + std::to_string(spec.order) + " (p=" + std::to_string(spec.p) +
           ",k=" + std::to_string(spec.k) + ",n=" + std::to_string(spec.n) + ")";
}

} // namespace detail

struct CommandResult {
    ordered_json report;
    std::vector<Spectrum> spectra; // populated by spectrum commands for --dump-coeffs
};

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

inline CommandResult cmd_field(const RunConfig& cfg) {
    detail::StageClock clock;
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["config"] = detail::config_echo(cfg);
    ordered_json timing;

    const FieldSpec spec = build_field(cfg.p, cfg.k, cfg.n);
    if (spec.order > cfg.cap) throw cap_error("field: order exceeds cap");
    const PolyQ xn1 = x_pow_n_minus_1(spec);
    const Factorization fact = factor_poly(xn1);
    const u64 phi_poly = totient_poly(xn1);
    const u64 phi_int = totient_int(spec.order - 1);
    const FieldElement fixture = find_primitive_normal(spec);
    clock.lap(timing, "build");

    ordered_json rec;
    rec["target"] = detail::field_label(spec);
    rec["p"] = spec.p;
    rec["k"] = spec.k;
    rec["n"] = spec.n;
    rec["q"] = spec.q;
    rec["order"] = spec.order;
    rec["modulus"] = format_fp_poly(spec.modulus);
    ordered_json jfact = ordered_json::array();
    for (const auto& pf : fact.factors) {
        ordered_json f;
        f["factor"] = format_poly(pf.factor);
        f["exponent"] = pf.exponent;
        jfact.push_back(f);
    }
    rec["xn_minus_1_factors"] = jfact;
    rec["totient_poly_xn_minus_1"] = phi_poly;
    rec["totient_int_order_minus_1"] = phi_int;
    rec["primitive_normal_fixture"] = format_element(fixture);

    // sum of Phi_q over the divisors of x^n - 1 must rebuild q^n
    u64 divisor_sum = 0;
    for (const auto& d : divisors_of(xn1)) divisor_sum += totient_poly_or_one(d);
    ordered_json checks = ordered_json::array();
    checks.push_back(detail::check_entry("totient_divisor_sum", static_cast<double>(divisor_sum),
                                         static_cast<double>(spec.order),
                                         static_cast<double>(divisor_sum) - static_cast<double>(spec.order),
                                         divisor_sum == spec.order));
    rec["checks"] = checks;
    clock.lap(timing, "checks");

    report["records"] = ordered_json::array({rec});
    detail::summarize(report);
    timing["total"] = clock.total_ms();
    report["timing_ms"] = timing;
    return {std::move(report), {}};
}

inline CommandResult cmd_classify(const RunConfig& cfg) {
    detail::StageClock clock;
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["config"] = detail::config_echo(cfg);
    ordered_json timing;

    const FieldSpec spec = build_field(cfg.p, cfg.k, cfg.n);
    const ClassCounts counts = count_classes(spec, cfg.cap);
    const u64 phi_int = totient_int(spec.order - 1);
    const u64 phi_poly = totient_poly(x_pow_n_minus_1(spec));
    clock.lap(timing, "census");

    ordered_json rec;
    rec["target"] = detail::field_label(spec);
    rec["order"] = spec.order;
    rec["primitive_count"] = counts.primitive;
    rec["normal_count"] = counts.normal;
    rec["primitive_normal_count"] = counts.primitive_normal;
    rec["primitive_density"] = static_cast<double>(phi_int) / static_cast<double>(spec.order);
    rec["normal_density"] = static_cast<double>(phi_poly) / static_cast<double>(spec.order);
    rec["primitive_normal_density"] =
        static_cast<double>(counts.primitive_normal) / static_cast<double>(spec.order);

    ordered_json checks = ordered_json::array();
    checks.push_back(detail::check_entry(
        "primitive_count_identity", static_cast<double>(counts.primitive),
        static_cast<double>(phi_int),
        static_cast<double>(counts.primitive) - static_cast<double>(phi_int),
        counts.primitive == phi_int));
    checks.push_back(detail::check_entry(
        "normal_count_identity", static_cast<double>(counts.normal),
        static_cast<double>(phi_poly),
        static_cast<double>(counts.normal) - static_cast<double>(phi_poly),
        counts.normal == phi_poly));

    // four-way indicator cross-validation (divisor vs divisor-free vs oracle)
    if (spec.order <= kFourWayCap) {
        const LogTable table = build_log_table(spec, cfg.cap);
        const AdditiveOrderTable add_table = build_additive_order_table(spec, cfg.cap);
        const FieldElement eta = find_normal_element(spec);
        const PolyQ xn1 = x_pow_n_minus_1(spec);
        const auto divisors = divisors_of(xn1);
        u64 mismatches = 0, prim_sum = 0, norm_sum = 0;
        for (u64 idx = 1; idx < spec.order; ++idx) {
            const FieldElement a = element_from_index(spec, idx);
            const int oracle_p = multiplicative_order(a) == spec.order - 1 ? 1 : 0;
            const int oracle_n = frobenius_order_poly(a, divisors) == xn1 ? 1 : 0;
            const int pd = psi_primitive_divisor(a, table);
            const int pf = psi_primitive_divisorfree(a, table);
            const int nd = psi_normal_divisor(a, add_table);
            const int nf = psi_normal_divisorfree(a, eta, table);
            if (pd != oracle_p || pf != oracle_p || nd != oracle_n || nf != oracle_n) ++mismatches;
            prim_sum += static_cast<u64>(pd);
            norm_sum += static_cast<u64>(nd);
        }
        rec["cross_validation_skipped"] = false;
        checks.push_back(detail::check_entry("indicator_cross_validation",
                                             static_cast<double>(mismatches), 0.0,
                                             static_cast<double>(mismatches), mismatches == 0));
        checks.push_back(detail::check_entry(
            "primitive_indicator_count", static_cast<double>(prim_sum),
            static_cast<double>(phi_int),
            static_cast<double>(prim_sum) - static_cast<double>(phi_int), prim_sum == phi_int));
        checks.push_back(detail::check_entry(
            "normal_indicator_count", static_cast<double>(norm_sum),
            static_cast<double>(phi_poly),
            static_cast<double>(norm_sum) - static_cast<double>(phi_poly), norm_sum == phi_poly));
        clock.lap(timing, "cross_validation");
    } else {
        rec["cross_validation_skipped"] = true;
        rec["cross_validation_skip_reason"] =
            "divisor-free sums are quadratic in the field order; limit is " +
            std::to_string(kFourWayCap);
    }

    rec["checks"] = checks;
    report["records"] = ordered_json::array({rec});
    detail::summarize(report);
    timing["total"] = clock.total_ms();
    report["timing_ms"] = timing;
    return {std::move(report), {}};
}

namespace detail {

inline ordered_json qr_record(const QrSpectrumReport& rep) {
    ordered_json rec;
    rec["target"] = "qr";
    rec["p"] = rep.p;
    rec["cardinality"] = rep.cardinality;
    rec["coeff0"] = rep.coeff0;
    rec["sup_nonzero"] = rep.sup_nonzero;
    rec["salem_ratio"] = rep.salem_ratio;
    rec["weyl_ratio"] = rep.weyl_ratio;
    ordered_json checks = ordered_json::array();
    checks.push_back(check_entry("qr_coeff0", rep.coeff0, static_cast<double>((rep.p - 1) / 2),
                                 rep.coeff0 - static_cast<double>((rep.p - 1) / 2),
                                 std::abs(rep.coeff0 - static_cast<double>((rep.p - 1) / 2)) < kExactTol));
    checks.push_back(check_entry("qr_two_value_closed_form", rep.max_closed_form_dev, kRelTol,
                                 kRelTol - rep.max_closed_form_dev,
                                 rep.max_closed_form_dev < kRelTol));
    checks.push_back(check_entry("qr_sup_bound", rep.sup_nonzero, rep.sup_bound,
                                 rep.sup_bound - rep.sup_nonzero,
                                 rep.sup_nonzero <= rep.sup_bound + kRelTol));
    rec["checks"] = checks;
    return rec;
}

inline ordered_json primroot_record(const PrimrootSpectrumReport& rep) {
    ordered_json rec;
    rec["target"] = "primroot";
    rec["p"] = rep.p;
    rec["cardinality"] = rep.phi_p_minus_1;
    rec["coeff0"] = rep.coeff0;
    rec["sup_nonzero"] = rep.sup_nonzero;
    rec["salem_ratio"] = rep.salem_ratio;
    rec["weyl_ratio"] = rep.weyl_ratio;
    ordered_json checks = ordered_json::array();
    checks.push_back(check_entry("primroot_coeff0", rep.coeff0,
                                 static_cast<double>(rep.phi_p_minus_1),
                                 rep.coeff0 - static_cast<double>(rep.phi_p_minus_1),
                                 std::abs(rep.coeff0 - static_cast<double>(rep.phi_p_minus_1)) < kExactTol));
    checks.push_back(check_entry("primroot_sup_bound", rep.sup_nonzero, rep.sup_bound,
                                 rep.sup_bound - rep.sup_nonzero,
                                 rep.sup_nonzero <= rep.sup_bound + kRelTol));
    rec["checks"] = checks;
    return rec;
}

inline ordered_json pn_record(const PnSpectrumReport& rep) {
    ordered_json rec;
    rec["target"] = "pn";
    rec["p"] = rep.p;
    rec["k"] = rep.k;
    rec["n"] = rep.n;
    rec["order"] = rep.order;
    rec["pn_count"] = rep.pn_count;
    rec["coeff0"] = rep.coeff0;
    rec["sup_nonzero"] = rep.sup_nonzero;
    rec["sup_beta_index"] = rep.sup_beta_index;
    rec["sup_over_sqrt_order"] = rep.sup_over_sqrt_order;
    rec["salem_ratio"] = rep.salem_ratio;
    rec["weyl_ratio"] = rep.weyl_ratio;
    ordered_json checks = ordered_json::array();
    checks.push_back(check_entry("pn_coeff0", rep.coeff0, static_cast<double>(rep.pn_count),
                                 rep.coeff0 - static_cast<double>(rep.pn_count),
                                 std::abs(rep.coeff0 - static_cast<double>(rep.pn_count)) < kExactTol));
    const double parseval_rel =
        std::abs(rep.parseval_lhs - rep.parseval_rhs) / std::max(1.0, rep.parseval_rhs);
    checks.push_back(check_entry("pn_parseval", rep.parseval_lhs, rep.parseval_rhs, parseval_rel,
                                 parseval_rel < kRelTol));
    checks.push_back(check_entry("pn_sup_bound", rep.sup_over_sqrt_order, rep.bound_factor,
                                 rep.bound_factor - rep.sup_over_sqrt_order,
                                 rep.sup_over_sqrt_order <= rep.bound_factor + kRelTol));
    rec["checks"] = checks;
    return rec;
}

} // namespace detail

inline CommandResult cmd_spectrum(const RunConfig& cfg) {
    detail::StageClock clock;
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["config"] = detail::config_echo(cfg);
    ordered_json timing;
    CommandResult result;

    ordered_json rec;
    if (cfg.target == "qr") {
        const QrSpectrumReport rep = qr_spectrum_check(cfg.p, cfg.workers);
        rec = detail::qr_record(rep);
        result.spectra.push_back(spectrum_of(qr_indicator(cfg.p), cfg.workers,
                                             std::max<u64>(cfg.cap, cfg.p + 1)));
    } else if (cfg.target == "primroot") {
        const PrimrootSpectrumReport rep = primroot_spectrum_check(cfg.p, cfg.workers);
        rec = detail::primroot_record(rep);
        const FieldSpec spec = build_field(cfg.p, 1, 1);
        const LogTable table = build_log_table(spec, std::max<u64>(cfg.cap, cfg.p + 1));
        std::vector<u64> members;
        for (u64 t = 1; t < cfg.p; ++t)
            if (std::gcd(static_cast<u64>(table.log_by_index[t]), cfg.p - 1) == 1)
                members.push_back(t);
        result.spectra.push_back(spectrum_of(make_indicator_zmod(cfg.p, members), cfg.workers));
    } else if (cfg.target == "pn") {
        const FieldSpec spec = build_field(cfg.p, cfg.k, cfg.n);
        const PnSpectrumReport rep = pn_spectrum(spec, cfg.workers, cfg.cap);
        rec = detail::pn_record(rep);
        ordered_json checks = rec["checks"];
        if (spec.order <= kFourWayCap) {
            const FieldElement tau = find_primitive_normal(spec);
            const FieldElement eta = find_normal_element(spec);
            const LogTable table = build_log_table(spec, tau, cfg.cap);
            const TijContext ctx = build_tij_context(spec, tau, eta, table, cfg.cap);
            double max_t00 = 0.0, max_rel = 0.0;
            for (u64 idx = 1; idx < spec.order; ++idx) {
                const TijParts parts = tij_decomposition(ctx, element_from_index(spec, idx));
                max_t00 = std::max(max_t00, parts.t00_abs);
                max_rel = std::max(max_rel, parts.partition_rel_err);
            }
            rec["fixture_tau"] = format_element(tau);
            rec["fixture_eta"] = format_element(eta);
            checks.push_back(detail::check_entry("tij_t00_vanishing", max_t00, kRelTol,
                                                 kRelTol - max_t00, max_t00 < kRelTol));
            checks.push_back(detail::check_entry("tij_partition", max_rel, kRelTol,
                                                 kRelTol - max_rel, max_rel < kRelTol));
            rec["checks"] = checks;
        }
        result.spectra.push_back(
            spectrum_of(make_indicator_field(spec, primitive_normal_indices(spec, cfg.cap)),
                        cfg.workers, cfg.cap));
    } else {
        throw value_error("spectrum: target must be qr, primroot, or pn");
    }
    clock.lap(timing, "spectrum");

    report["records"] = ordered_json::array({rec});
    detail::summarize(report);
    timing["total"] = clock.total_ms();
    report["timing_ms"] = timing;
    result.report = std::move(report);
    return result;
}

inline CommandResult cmd_salem_scan(const RunConfig& cfg) {
    detail::StageClock clock;
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["config"] = detail::config_echo(cfg);
    ordered_json timing;
    ordered_json records = ordered_json::array();

    std::vector<std::pair<u64, double>> weyl_by_size;

    auto add_row = [&](ordered_json row, u64 size, double weyl) {
        records.push_back(std::move(row));
        weyl_by_size.emplace_back(size, weyl);
    };

    if (cfg.target == "qr" || cfg.target == "primroot") {
        const u64 lo = cfg.has_prime_range ? cfg.prime_lo : 3;
        const u64 hi = cfg.has_prime_range ? cfg.prime_hi : 101;
        for (u64 p = lo; p <= hi; ++p) {
            if (!is_prime(p) || (cfg.target == "qr" && p == 2) || (cfg.target == "primroot" && p < 3))
                continue;
            if (p > cfg.cap) {
                ordered_json row;
                row["target"] = cfg.target;
                row["p"] = p;
                row["skipped"] = true;
                row["skip_reason"] = "domain size exceeds cap";
                records.push_back(std::move(row));
                continue;
            }
            if (cfg.target == "qr") {
                const QrSpectrumReport rep = qr_spectrum_check(p, cfg.workers);
                ordered_json row = detail::qr_record(rep);
                row["skipped"] = false;
                // closed-form row bound: sup <= (sqrt(p)+1)/2 hence
                // salem_ratio <= (sqrt(p)+1) / (2 sqrt((p-1)/2))
                const double row_bound = (std::sqrt(static_cast<double>(p)) + 1.0) /
                                         (2.0 * std::sqrt(static_cast<double>((p - 1) / 2)));
                ordered_json checks = row["checks"];
                checks.push_back(detail::check_entry("qr_salem_row_bound", rep.salem_ratio,
                                                     row_bound, row_bound - rep.salem_ratio,
                                                     rep.salem_ratio <= row_bound + kRelTol));
                row["checks"] = checks;
                add_row(std::move(row), p, rep.weyl_ratio);
            } else {
                const PrimrootSpectrumReport rep = primroot_spectrum_check(p, cfg.workers);
                ordered_json row = detail::primroot_record(rep);
                row["skipped"] = false;
                add_row(std::move(row), p, rep.weyl_ratio);
            }
        }
    } else if (cfg.target == "pn") {
        std::vector<std::array<u64, 3>> fields = cfg.field_list;
        if (fields.empty())
            fields = {{2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {3, 1, 2}, {3, 1, 3}, {5, 1, 2}};
        for (const auto& f : fields) {
            const FieldSpec spec = build_field(f[0], static_cast<u32>(f[1]), static_cast<u32>(f[2]));
            if (spec.order > cfg.cap) {
                ordered_json row;
                row["target"] = "pn";
                row["p"] = f[0];
                row["k"] = f[1];
                row["n"] = f[2];
                row["order"] = spec.order;
                row["skipped"] = true;
                row["skip_reason"] = "domain size exceeds cap";
                records.push_back(std::move(row));
                continue;
            }
            const PnSpectrumReport rep = pn_spectrum(spec, cfg.workers, cfg.cap);
            ordered_json row = detail::pn_record(rep);
            row["skipped"] = false;
            add_row(std::move(row), spec.order, rep.weyl_ratio);
        }
    } else {
        throw value_error("salem-scan: target must be qr, primroot, or pn");
    }
    clock.lap(timing, "scan");

    report["records"] = records;

    // monotone trend of the Weyl ratio against the domain size
    std::sort(weyl_by_size.begin(), weyl_by_size.end());
    u64 decreasing = 0;
    for (std::size_t i = 1; i < weyl_by_size.size(); ++i)
        if (weyl_by_size[i].second < weyl_by_size[i - 1].second) ++decreasing;
    detail::summarize(report);
    ordered_json& summary = report["summary"];
    summary["rows"] = weyl_by_size.size();
    if (weyl_by_size.size() >= 2) {
        summary["weyl_decreasing_steps"] = decreasing;
        summary["weyl_decreasing_fraction"] =
            static_cast<double>(decreasing) / static_cast<double>(weyl_by_size.size() - 1);
        summary["weyl_first"] = weyl_by_size.front().second;
        summary["weyl_last"] = weyl_by_size.back().second;
    }
    timing["total"] = clock.total_ms();
    report["timing_ms"] = timing;
    return {std::move(report), {}};
}

inline IndicatorSet random_subset_field(const FieldSpec& spec, CounterRng& rng) {
    std::vector<u64> members;
    for (u64 i = 0; i < spec.order; ++i)
        if (rng.next() & 1) members.push_back(i);
    return make_indicator_field(spec, members);
}

inline FieldElement random_nonzero_element(const FieldSpec& spec, CounterRng& rng) {
    return element_from_index(spec, 1 + rng.next_below(spec.order - 1));
}

inline CommandResult cmd_bounds_check(const RunConfig& cfg) {
    detail::StageClock clock;
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["config"] = detail::config_echo(cfg);
    ordered_json timing;
    ordered_json records = ordered_json::array();

    // totient ratio lower bound on [10, 10^5]
    {
        u64 violations = 0, worst_m = 0;
        double worst = 1e9;
        for (u64 m = 10; m <= 100000; ++m) {
            const BoundReport r = totient_lower_bound_check(m);
            if (!r.pass) ++violations;
            if (r.margin < worst) { worst = r.margin; worst_m = m; }
        }
        ordered_json rec;
        rec["target"] = "totient_lower_bound";
        rec["range"] = ordered_json::array({10, 100000});
        rec["worst_margin"] = worst;
        rec["worst_m"] = worst_m;
        ordered_json checks = ordered_json::array();
        checks.push_back(detail::check_entry("totient_lower_bound_violations",
                                             static_cast<double>(violations), 0.0, worst,
                                             violations == 0));
        rec["checks"] = checks;
        records.push_back(std::move(rec));
        clock.lap(timing, "totient_sweep");
    }

    // density inequality grid
    {
        u64 violations = 0, worst_x = 0, worst_n = 0;
        double worst = 1e9;
        for (u64 x = 3; x <= 1000; ++x) {
            const u64 n_max = std::min<u64>(x - 1, 200);
            for (u64 n = 2; n <= n_max; ++n) {
                const BoundReport r = normal_density_bound_check(static_cast<double>(x), n);
                if (!r.pass) ++violations;
                if (r.margin < worst) { worst = r.margin; worst_x = x; worst_n = n; }
            }
        }
        ordered_json rec;
        rec["target"] = "normal_density_inequality";
        rec["grid"] = "x in [3,1000], n in [2, min(x-1,200)]";
        rec["worst_value"] = worst;
        rec["worst_x"] = worst_x;
        rec["worst_n"] = worst_n;
        ordered_json checks = ordered_json::array();
        checks.push_back(detail::check_entry("density_inequality_violations",
                                             static_cast<double>(violations), 0.0, worst,
                                             violations == 0));
        rec["checks"] = checks;
        records.push_back(std::move(rec));
        clock.lap(timing, "density_grid");
    }

    // bilinear character-sum bound on seeded random subset pairs
    {
        const std::vector<std::array<u64, 3>> fields{{2, 1, 3}, {3, 1, 2}, {2, 1, 4}, {5, 1, 2}};
        for (const auto& f : fields) {
            const FieldSpec spec = build_field(f[0], static_cast<u32>(f[1]), static_cast<u32>(f[2]));
            CounterRng rng{cfg.seed + spec.order};
            double min_slack = 1e18;
            const u64 trials = 1000;
            for (u64 t = 0; t < trials; ++t) {
                const IndicatorSet U = random_subset_field(spec, rng);
                const IndicatorSet V = random_subset_field(spec, rng);
                const FieldElement beta = random_nonzero_element(spec, rng);
                const BilinearReport r = bilinear_bound_check(U, V, beta);
                min_slack = std::min(min_slack, r.slack);
            }
            ordered_json rec;
            rec["target"] = "bilinear_bound " + detail::field_label(spec);
            rec["trials"] = trials;
            rec["min_slack"] = min_slack;
            ordered_json checks = ordered_json::array();
            checks.push_back(detail::check_entry("bilinear_bound_min_slack", min_slack, 0.0,
                                                 min_slack, min_slack >= -kRelTol));
            rec["checks"] = checks;
            records.push_back(std::move(rec));
        }
        clock.lap(timing, "bilinear_trials");
    }

    report["records"] = records;
    detail::summarize(report);
    timing["total"] = clock.total_ms();
    report["timing_ms"] = timing;
    return {std::move(report), {}};
}

inline CommandResult run_command(const RunConfig& cfg) {
    if (cfg.command == "field") return cmd_field(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg);
    if (cfg.command == "salem-scan") return cmd_salem_scan(cfg);
    if (cfg.command == "bounds-check") return cmd_bounds_check(cfg);
    throw value_error("unknown command: " + cfg.command);
}

} // namespace salemfield

#endif
