// salemfield: build finite fields, classify elements as primitive / normal /
// primitive normal, compute finite Fourier spectra of the indicator sets, run
// the bound suites, and emit machine-readable reports.
//
// Exit codes: 0 all checks pass, 1 usage or parameter error, 2 a mathematical
// invariant failed, 3 cap exceeded on a required target.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "salemfield/report.hpp"

namespace {

using namespace salemfield;

u64 env_cap_default() {
    if (const char* env = std::getenv("SALEMFIELD_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw value_error("SALEMFIELD_CAP must be a positive integer");
    }
    return kDefaultCap;
}

void parse_prime_range(const std::string& text, RunConfig& cfg) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw value_error("--prime-range expects lo:hi");
    cfg.prime_lo = std::stoull(text.substr(0, colon));
    cfg.prime_hi = std::stoull(text.substr(colon + 1));
    if (cfg.prime_lo > cfg.prime_hi)
        throw value_error("--prime-range expects lo <= hi");
    cfg.has_prime_range = true;
}

// "p,k,n;p,k,n;..." -> field list
void parse_field_list(const std::string& text, RunConfig& cfg) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto semi = text.find(';', pos);
        const std::string item = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        std::array<u64, 3> f{0, 1, 0};
        const auto c1 = item.find(',');
        const auto c2 = item.find(',', c1 == std::string::npos ? item.size() : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw value_error("--fields expects p,k,n;p,k,n;...");
        f[0] = std::stoull(item.substr(0, c1));
        f[1] = std::stoull(item.substr(c1 + 1, c2 - c1 - 1));
        f[2] = std::stoull(item.substr(c2 + 1));
        cfg.field_list.push_back(f);
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
}

void emit(const RunConfig& cfg, const CommandResult& result) {
    const std::string text = (cfg.format == "csv") ? report_to_csv(result.report)
                                                   : report_to_json(result.report);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(cfg.out, std::ios::binary);
        if (!os) throw value_error("cannot open output file: " + cfg.out);
        os << text;
    }
    if (cfg.dump_coeffs && !result.spectra.empty()) {
        const std::string csv = spectrum_coeffs_csv(result.spectra.front());
        if (cfg.out.empty()) {
            std::cout << csv;
        } else {
            const auto dot = cfg.out.find_last_of('.');
            const std::string base = dot == std::string::npos ? cfg.out : cfg.out.substr(0, dot);
            std::ofstream os(base + ".coeffs.csv", std::ios::binary);
            if (!os) throw value_error("cannot open coefficient dump file");
            os << csv;
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    using namespace salemfield;
    CLI::App app{"finite-field spectral toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string prime_range_text, fields_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cap", cfg.cap, "domain-size limit for exhaustive work");
        sub->add_option("--workers", cfg.workers, "parallelism degree");
        sub->add_option("--seed", cfg.seed, "seed for randomized trials");
        sub->add_option("--out", cfg.out, "output path (stdout when omitted)");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* field = app.add_subcommand("field", "build a field and report its basic data");
    field->add_option("-p", cfg.p, "characteristic (prime)")->required();
    field->add_option("-k", cfg.k, "subfield degree, q = p^k");
    field->add_option("-n", cfg.n, "extension degree over F_q")->required();
    add_common(field);

    CLI::App* classify = app.add_subcommand("classify", "exhaustive element census");
    classify->add_option("-p", cfg.p, "characteristic (prime)")->required();
    classify->add_option("-k", cfg.k, "subfield degree, q = p^k");
    classify->add_option("-n", cfg.n, "extension degree over F_q")->required();
    add_common(classify);

    CLI::App* spectrum = app.add_subcommand("spectrum", "spectrum of one indicator set");
    spectrum->add_option("target", cfg.target, "qr | primroot | pn")->required();
    spectrum->add_option("-p", cfg.p, "prime (qr, primroot) or characteristic (pn)");
    spectrum->add_option("-k", cfg.k, "subfield degree (pn)");
    spectrum->add_option("-n", cfg.n, "extension degree (pn)");
    spectrum->add_flag("--dump-coeffs", cfg.dump_coeffs, "write full spectrum CSV");
    add_common(spectrum);

    CLI::App* scan = app.add_subcommand("salem-scan", "sweep a family and tabulate ratios");
    scan->add_option("target", cfg.target, "qr | primroot | pn")->required();
    scan->add_option("--prime-range", prime_range_text, "lo:hi (qr, primroot)");
    scan->add_option("--fields", fields_text, "p,k,n;p,k,n;... (pn)");
    add_common(scan);

    CLI::App* bounds = app.add_subcommand("bounds-check", "run the bound suites");
    add_common(bounds);

    try {
        cfg.cap = env_cap_default();
        cfg.workers = hardware_workers();
        app.parse(argc, argv);
        cfg.command = app.get_subcommands().front()->get_name();
        if (!prime_range_text.empty()) parse_prime_range(prime_range_text, cfg);
        if (!fields_text.empty()) parse_field_list(fields_text, cfg);

        const CommandResult result = run_command(cfg);
        emit(cfg, result);
        const bool all_pass = result.report.at("summary").at("all_pass").get<bool>();
        return all_pass ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const integrity_error& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return 2;
    } catch (const value_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
