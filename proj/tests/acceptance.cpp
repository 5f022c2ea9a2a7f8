// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit 0 only if all
// criteria hold. Each criterion re-derives its expectations here rather than
// trusting the library's own property suite.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nogo/machine.hpp"
#include "nogo/scenarios.hpp"
#include "nogo/verify.hpp"

using namespace nogo;

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676656;
constexpr double kPiOver4 = 0.7853981633974483;

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++g_failures;
}

struct Draw {
    double a, b, c, d, theta;
};

std::vector<Draw> reference_draws(std::size_t n) {
    Rng rng(kDefaultVerifySeed);
    std::vector<Draw> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = rng.uniform(1e-9, 1.0 - 1e-9);
        const double c = rng.uniform(1e-9, 1.0 - 1e-9);
        const double theta = rng.uniform(0.0, kTwoPi);
        out.push_back({a, std::sqrt(1.0 - a * a), c, std::sqrt(1.0 - c * c), theta});
    }
    return out;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(NOGO_CLI_PATH) + " " + args + " >" +
                            std::string(NOGO_TMP_DIR) + "/acc_stdout.txt 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Criterion 1: numeric largest eigenvalues of both reduced matrices equal the
// closed forms 1/2+|alpha|/2 and 1/2+|alpha|^2/2 within 1e-9 on 1000 seeded
// draws, in under one second.
void criterion_closed_forms(const std::vector<Draw>& draws,
                            std::vector<EntanglementReport>& reports) {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::string worst_at;
    try {
        for (const Draw& t : draws) {
            const EntanglementReport r = monotonicity_test(t.a, t.b, t.c, t.d, t.theta);
            const double mag = std::abs(r.alpha);
            const double drift =
                std::max(std::abs(r.lambda_before - (0.5 + 0.5 * mag)),
                         std::abs(r.lambda_after - (0.5 + 0.5 * mag * mag)));
            if (drift > worst) {
                worst = drift;
                worst_at = "a=" + fmt(t.a) + " c=" + fmt(t.c) + " theta=" + fmt(t.theta);
            }
            reports.push_back(r);
        }
    } catch (const std::exception& e) {
        report("closed-form eigenvalue reproduction", false, e.what());
        return;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = worst <= 1e-9 && seconds < 1.0;
    report("closed-form eigenvalue reproduction", ok,
           "1000 draws, worst drift " + fmt(worst) + " (" + worst_at + "), " + fmt(seconds) +
               " s");
}

// Criterion 2: every draw with 1e-6 < |alpha| < 1-1e-6 strictly decreases the
// largest eigenvalue and strictly increases the entropy. Zero exceptions.
void criterion_strict_violation(const std::vector<EntanglementReport>& reports) {
    std::size_t banded = 0;
    std::size_t exceptions = 0;
    std::string first_bad;
    for (const EntanglementReport& r : reports) {
        const double mag = std::abs(r.alpha);
        if (mag <= 1e-6 || mag >= 1.0 - 1e-6) continue;
        ++banded;
        if (!(r.lambda_before - r.lambda_after > 0.0) || !(r.delta_entropy > 0.0)) {
            ++exceptions;
            if (first_bad.empty())
                first_bad = " first at a=" + fmt(r.a) + " c=" + fmt(r.c) +
                            " theta=" + fmt(r.theta);
        }
    }
    const bool ok = banded > 0 && exceptions == 0;
    report("strict entanglement increase off the boundary", ok,
           std::to_string(banded) + " draws in band, " + std::to_string(exceptions) +
               " exceptions" + first_bad);
}

// Criterion 3: the cos-theta bound is >= 1 - 1e-12 on 10^4 interior draws and
// equals 1 within 1e-12 exactly on injected a=c, b=d cases.
void criterion_bound() {
    Rng rng(kDefaultVerifySeed ^ 0xACC3);
    std::string detail;
    bool ok = true;
    double min_bound = 1e300;
    for (int i = 0; i < 10000 && ok; ++i) {
        const double a = rng.uniform(0.05, 0.95);
        const double c = rng.uniform(0.05, 0.95);
        const double b = std::sqrt(1.0 - a * a);
        const double d = std::sqrt(1.0 - c * c);
        const double bound = cos_theta_bound(a, b, c, d);
        min_bound = std::min(min_bound, bound);
        if (bound < 1.0 - 1e-12) {
            ok = false;
            detail = "bound " + fmt(bound) + " below 1 at a=" + fmt(a) + " c=" + fmt(c);
        }
        const double separation = (a - c) * (a - c) + (b - d) * (b - d);
        if (ok && separation > 1e-10 && bound - 1.0 <= 1e-12) {
            ok = false;
            detail = "no strict gap at separated a=" + fmt(a) + " c=" + fmt(c);
        }
    }
    for (int i = 0; i < 100 && ok; ++i) {
        const double a = rng.uniform(0.05, 0.95);
        const double b = std::sqrt(1.0 - a * a);
        const double bound = cos_theta_bound(a, b, a, b);
        if (std::abs(bound - 1.0) > 1e-12) {
            ok = false;
            detail = "equality case off by " + fmt(std::abs(bound - 1.0)) + " at a=c=" + fmt(a);
        }
    }
    if (ok) detail = "10000 interior + 100 equality draws, min bound " + fmt(min_bound);
    report("cos-theta requirement always at or above 1", ok, detail);
}

// Criterion 4: reference devices. Copying at phi=pi/4: distance 0.5 within
// 1e-10, SIGNALLING. Constant: 0 within 1e-12, NO_SIGNALLING. Any device
// consistent with its linear extension: distance <= 1e-9.
void criterion_signalling() {
    try {
        const SignallingReport cloning =
            signalling_test(make_cloning_machine(QubitBasis{kPiOver4, 0.0}));
        if (std::abs(cloning.distance - 0.5) > 1e-10 ||
            cloning.verdict != SignallingVerdict::Signalling) {
            report("signalling distances of the reference devices", false,
                   "copying device gave " + fmt(cloning.distance));
            return;
        }
        const SignallingReport constant = signalling_test(make_constant_machine(
            QubitBasis{kPiOver4, 0.0}, StateVector::basis_state({2}, 0)));
        if (std::abs(constant.distance) > 1e-12 ||
            constant.verdict != SignallingVerdict::NoSignalling) {
            report("signalling distances of the reference devices", false,
                   "constant device gave " + fmt(constant.distance));
            return;
        }
        Rng rng(kDefaultVerifySeed ^ 0xACC4);
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const std::size_t adim = 2 + rng.index(3);
            const StateVector image = rng.state({adim});
            Machine m(adim, rng.state({adim}),
                      QubitBasis{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi)});
            for (MachineLabel label : {MachineLabel::Zero, MachineLabel::One,
                                       MachineLabel::Psi, MachineLabel::PsiBar})
                m.set_image(label, image);
            if (postulate_deviation(m) > 1e-12) {
                report("signalling distances of the reference devices", false,
                       "consistent construction deviated");
                return;
            }
            worst = std::max(worst, signalling_test(m).distance);
        }
        const bool ok = worst <= 1e-9;
        report("signalling distances of the reference devices", ok,
               "copying 0.5, constant 0, worst consistent " + fmt(worst));
    } catch (const std::exception& e) {
        report("signalling distances of the reference devices", false, e.what());
    }
}

// Criterion 5: structural invariants at their stated tolerances.
void criterion_structural() {
    Rng rng(kDefaultVerifySeed ^ 0xACC5);
    std::string detail;
    bool ok = true;

    // Partial-trace trace preservation and marginal-spectrum symmetry.
    const std::vector<std::vector<std::size_t>> shapes = {{2, 2}, {2, 3}, {2, 2, 2}};
    for (const auto& dims : shapes) {
        for (int i = 0; i < 20 && ok; ++i) {
            const StateVector psi = rng.state(dims);
            const DensityMatrix rho = DensityMatrix::pure(psi);
            const std::size_t n = dims.size();
            for (std::size_t mask = 1; ok && mask + 1 < (std::size_t{1} << n); ++mask) {
                std::vector<std::size_t> keep;
                for (std::size_t f = 0; f < n; ++f)
                    if (mask & (std::size_t{1} << f)) keep.push_back(f);
                const Complex tr = partial_trace(rho, keep).entries().trace();
                if (std::abs(tr - Complex{1.0, 0.0}) > 1e-10) {
                    ok = false;
                    detail = "marginal trace " + fmt(std::abs(tr));
                }
            }
            if (!ok) break;
            std::vector<std::size_t> rest(n - 1);
            for (std::size_t f = 1; f < n; ++f) rest[f - 1] = f;
            auto ea = eigvals_hermitian(partial_trace(rho, {0}));
            auto eb = eigvals_hermitian(partial_trace(rho, rest));
            const std::size_t m = std::max(ea.size(), eb.size());
            ea.resize(m, 0.0);
            eb.resize(m, 0.0);
            for (std::size_t k = 0; k < m; ++k)
                if (std::abs(ea[k] - eb[k]) > 1e-10) {
                    ok = false;
                    detail = "marginal spectra differ by " + fmt(std::abs(ea[k] - eb[k]));
                }
        }
    }

    // PSD/Hermiticity enforcement: a non-PSD Hermitian unit-trace matrix and
    // a non-Hermitian matrix must both be rejected.
    if (ok) {
        ComplexMatrix not_psd(2, 2);
        not_psd(0, 0) = Complex{1.5, 0.0};
        not_psd(1, 1) = Complex{-0.5, 0.0};
        try {
            DensityMatrix reject(not_psd, {2});
            ok = false;
            detail = "negative-eigenvalue matrix accepted";
        } catch (const InputError&) {
        }
    }
    if (ok) {
        ComplexMatrix skew(2, 2);
        skew(0, 0) = Complex{0.5, 0.0};
        skew(1, 1) = Complex{0.5, 0.0};
        skew(0, 1) = Complex{0.3, 0.0};
        try {
            DensityMatrix reject(skew, {2});
            ok = false;
            detail = "non-Hermitian matrix accepted";
        } catch (const InputError&) {
        }
    }

    // Isometry property of the linear extension.
    for (int i = 0; i < 100 && ok; ++i) {
        const std::size_t adim = 2 + rng.index(3);
        Machine m(adim, rng.state({adim}),
                  QubitBasis{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi)});
        m.set_image(MachineLabel::Zero, rng.state({adim}));
        m.set_image(MachineLabel::One, rng.state({adim}));
        const Isometry v = linear_extension(m);
        const double drift =
            (v.matrix.adjoint() * v.matrix).max_abs_diff(ComplexMatrix::identity(2));
        if (drift > 1e-12) {
            ok = false;
            detail = "V^dag V drift " + fmt(drift);
        }
    }

    // Singlet invariance across 100 random bases.
    if (ok) {
        const StateVector chi = build_singlet();
        const double inv_sqrt2 = 0.70710678118654752440;
        for (int i = 0; i < 100 && ok; ++i) {
            const QubitBasis basis{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi)};
            const auto coeff = singlet_basis_coefficients(chi, basis);
            const double drift = std::max(
                {std::abs(coeff[0]), std::abs(coeff[1] - Complex{inv_sqrt2, 0.0}),
                 std::abs(coeff[2] + Complex{inv_sqrt2, 0.0}), std::abs(coeff[3])});
            if (drift > 1e-12) {
                ok = false;
                detail = "singlet coefficient drift " + fmt(drift);
            }
        }
    }

    if (ok) detail = "trace, spectra, PSD/Hermiticity, isometry, singlet rotations";
    report("structural invariants", ok, detail);
}

// Criterion 6: the CLI's verify command exits 0 and a 10x10x16 sweep lands
// under ten seconds with byte-identical reruns.
void criterion_end_to_end() {
    const int verify_rc = run_cli("verify");
    if (verify_rc != 0) {
        report("end-to-end verify and sweep", false,
               "verify exited " + std::to_string(verify_rc));
        return;
    }
    const std::string csv1 = std::string(NOGO_TMP_DIR) + "/acc_sweep1.csv";
    const std::string csv2 = std::string(NOGO_TMP_DIR) + "/acc_sweep2.csv";
    const auto start = std::chrono::steady_clock::now();
    const int rc1 = run_cli("sweep --a-steps 10 --c-steps 10 --theta-steps 16 --out " + csv1);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int rc2 = run_cli("sweep --a-steps 10 --c-steps 10 --theta-steps 16 --out " + csv2);
    if (rc1 != 0 || rc2 != 0) {
        report("end-to-end verify and sweep", false, "sweep exited nonzero");
        return;
    }
    const std::string body = slurp(csv1);
    const std::size_t rows = static_cast<std::size_t>(
        std::count(body.begin(), body.end(), '\n'));
    const bool ok = seconds < 10.0 && body == slurp(csv2) && rows == 1601 && !body.empty();
    report("end-to-end verify and sweep", ok,
           "verify exit 0, sweep " + fmt(seconds) + " s, " + std::to_string(rows) +
               " lines, reruns byte-identical");
}

}  // namespace

int main() {
    std::vector<Draw> draws = reference_draws(1000);
    std::vector<EntanglementReport> reports;
    reports.reserve(draws.size());

    criterion_closed_forms(draws, reports);
    criterion_strict_violation(reports);
    criterion_bound();
    criterion_signalling();
    criterion_structural();
    criterion_end_to_end();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
