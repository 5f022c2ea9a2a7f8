// Command-line front end: evaluate one signalling scenario from a machine
// file, one entanglement scenario from amplitudes, sweep a parameter grid to
// CSV, or run the full property suites.
//
// Exit codes: 0 ok, 1 property-suite failure, 2 bad input, 3 internal
// contract violation, 4 output I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nogo/errors.hpp"
#include "nogo/machine_format.hpp"
#include "nogo/scenarios.hpp"
#include "nogo/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitIo = 4;

constexpr double kTwoPi = 6.28318530717958647692528676656;

std::string fixed10(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", x);
    return buf;
}

std::string sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void print_matrix(std::ostream& os, const std::string& title, const nogo::DensityMatrix& rho) {
    os << title << " (real | imag)\n";
    const std::size_t n = rho.dim();
    for (std::size_t r = 0; r < n; ++r) {
        os << " ";
        for (std::size_t c = 0; c < n; ++c) os << " " << fixed10(rho.entries()(r, c).real());
        os << "  |";
        for (std::size_t c = 0; c < n; ++c) os << " " << fixed10(rho.entries()(r, c).imag());
        os << "\n";
    }
}

int cmd_signalling(const std::string& machine_path) {
    const nogo::Machine m = nogo::parse_machine_file(machine_path);
    const nogo::SignallingReport report = nogo::signalling_test(m);
    print_matrix(std::cout, "rho_b, computational-basis measurement", report.rho_b_computational);
    print_matrix(std::cout, "rho_b, rotated-basis measurement", report.rho_b_rotated);
    std::cout << "trace distance = " << fixed10(report.distance) << "\n"
              << "verdict        = " << nogo::to_string(report.verdict) << "\n";
    return kExitOk;
}

int cmd_entanglement(double a, double c, double theta, std::optional<nogo::Complex> beta) {
    if (!(a >= 0.0 && a <= 1.0) || !(c >= 0.0 && c <= 1.0))
        throw nogo::InputError("amplitudes a and c must lie in [0, 1]");
    const double b = std::sqrt(1.0 - a * a);
    const double d = std::sqrt(1.0 - c * c);
    const nogo::EntanglementReport r = nogo::monotonicity_test(a, b, c, d, theta, beta);

    const auto field = [](const std::string& name, const std::string& value) {
        std::printf("%-21s = %s\n", name.c_str(), value.c_str());
    };
    field("a", sig12(r.a));
    field("b", sig12(r.b));
    field("c", sig12(r.c));
    field("d", sig12(r.d));
    field("theta", sig12(r.theta));
    field("alpha", sig12(r.alpha.real()) + " + " + sig12(r.alpha.imag()) + "i");
    field("beta", sig12(r.beta.real()) + " + " + sig12(r.beta.imag()) + "i");
    field("abs_alpha", sig12(std::abs(r.alpha)));
    field("lambda_before", sig12(r.lambda_before));
    field("lambda_after", sig12(r.lambda_after));
    field("lambda_before_closed", sig12(r.lambda_before_closed));
    field("lambda_after_closed", sig12(r.lambda_after_closed));
    field("entropy_before", sig12(r.entropy_before));
    field("entropy_after", sig12(r.entropy_after));
    field("delta_entropy", sig12(r.delta_entropy));
    field("cos_bound", r.cos_bound ? sig12(*r.cos_bound) : "undefined (zero amplitude)");
    field("verdict", nogo::to_string(r.verdict));
    return kExitOk;
}

int cmd_sweep(std::size_t a_steps, std::size_t c_steps, std::size_t theta_steps,
              const std::string& out_path) {
    std::ofstream out(out_path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw nogo::IoError("cannot open output file: " + out_path);

    out << "a,b,c,d,theta,alpha_re,alpha_im,abs_alpha,lambda_before,lambda_after,"
           "E_before,E_after,delta_E,cos_bound,verdict\n";
    for (std::size_t i = 1; i <= a_steps; ++i) {
        const double a = static_cast<double>(i) / static_cast<double>(a_steps + 1);
        const double b = std::sqrt(1.0 - a * a);
        for (std::size_t j = 1; j <= c_steps; ++j) {
            const double c = static_cast<double>(j) / static_cast<double>(c_steps + 1);
            const double d = std::sqrt(1.0 - c * c);
            for (std::size_t k = 0; k < theta_steps; ++k) {
                const double theta =
                    kTwoPi * static_cast<double>(k) / static_cast<double>(theta_steps);
                const nogo::EntanglementReport r = nogo::monotonicity_test(a, b, c, d, theta);
                out << sig12(r.a) << ',' << sig12(r.b) << ',' << sig12(r.c) << ','
                    << sig12(r.d) << ',' << sig12(r.theta) << ',' << sig12(r.alpha.real())
                    << ',' << sig12(r.alpha.imag()) << ',' << sig12(std::abs(r.alpha)) << ','
                    << sig12(r.lambda_before) << ',' << sig12(r.lambda_after) << ','
                    << sig12(r.entropy_before) << ',' << sig12(r.entropy_after) << ','
                    << sig12(r.delta_entropy) << ','
                    << (r.cos_bound ? sig12(*r.cos_bound) : "") << ','
                    << (r.verdict == nogo::MonotonicityVerdict::Violated ? "VIOLATED"
                                                                         : "RESPECTED")
                    << '\n';
            }
        }
    }
    out.flush();
    if (!out) throw nogo::IoError("failed writing output file: " + out_path);
    return kExitOk;
}

int cmd_verify(const std::string& seed_hex) {
    std::uint64_t seed = 0;
    try {
        std::size_t pos = 0;
        seed = std::stoull(seed_hex, &pos, 16);
        if (pos != seed_hex.size()) throw nogo::InputError("");
    } catch (const std::exception&) {
        throw nogo::InputError("seed must be a hex integer, got '" + seed_hex + "'");
    }

    std::printf("seed 0x%llX\n", static_cast<unsigned long long>(seed));
    std::size_t total = 0;
    std::size_t failed = 0;
    for (const nogo::SuiteResult& suite : nogo::run_all_suites(seed)) {
        std::printf("suite %s: %zu/%zu checks passed\n", suite.name.c_str(), suite.passed(),
                    suite.checks.size());
        for (const nogo::CheckResult& check : suite.checks) {
            if (check.passed)
                std::printf("  [ok]   %s\n", check.name.c_str());
            else
                std::printf("  [FAIL] %s: %s\n", check.name.c_str(), check.detail.c_str());
        }
        total += suite.checks.size();
        failed += suite.failed();
    }
    if (failed > 0) {
        std::printf("%zu of %zu checks failed\n", failed, total);
        return kExitVerifyFail;
    }
    std::printf("all %zu checks passed\n", total);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical reconstruction of the impossibility arguments against a "
                 "basis-dependent copying device"};
    app.require_subcommand(1);

    std::string machine_path;
    auto* sig = app.add_subcommand("signalling",
                                   "Trace distance between Bob's two mixtures for a device");
    sig->add_option("--machine", machine_path, "machine definition file")->required();

    double a = 0.0, c = 0.0, theta = 0.0;
    double beta_re = 0.0, beta_im = 0.0;
    auto* ent = app.add_subcommand("entanglement",
                                   "Entanglement before/after the device at one point");
    ent->add_option("--a", a, "first-state |0> amplitude")->required();
    ent->add_option("--c", c, "second-state |0> amplitude")->required();
    ent->add_option("--theta", theta, "relative phase (radians)")->required();
    auto* beta_re_opt = ent->add_option("--beta-re", beta_re, "image-overlap real part");
    auto* beta_im_opt = ent->add_option("--beta-im", beta_im, "image-overlap imaginary part");

    std::size_t a_steps = 0, c_steps = 0, theta_steps = 0;
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "Grid sweep of the entanglement scenario to CSV");
    sweep->add_option("--a-steps", a_steps, "interior grid points for a")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--c-steps", c_steps, "interior grid points for c")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--theta-steps", theta_steps, "grid points for theta over [0, 2pi)")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_path, "output CSV path")->required();

    std::string seed_hex = "C0FFEE";
    auto* verify = app.add_subcommand("verify", "Run all randomized property suites");
    verify->add_option("--seed", seed_hex, "hex seed (default C0FFEE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (sig->parsed()) return cmd_signalling(machine_path);
        if (ent->parsed()) {
            if (beta_re_opt->count() != beta_im_opt->count())
                throw nogo::InputError("--beta-re and --beta-im must be given together");
            std::optional<nogo::Complex> beta;
            if (beta_re_opt->count() > 0) beta = nogo::Complex{beta_re, beta_im};
            return cmd_entanglement(a, c, theta, beta);
        }
        if (sweep->parsed()) return cmd_sweep(a_steps, c_steps, theta_steps, out_path);
        if (verify->parsed()) return cmd_verify(seed_hex);
    } catch (const nogo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nogo::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const nogo::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
