#include "nogo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "nogo/errors.hpp"
#include "nogo/machine.hpp"
#include "nogo/scenarios.hpp"

namespace nogo {
namespace {

constexpr double kTwoPi = 6.28318530717958647692528676656;
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

// -1 / 0 / +1 with a dead zone: values within 1e-12 of zero count as zero.
int sign_band(double x) {
    if (std::abs(x) <= 1e-12) return 0;
    return x < 0.0 ? -1 : 1;
}

struct Draw {
    double a, b, c, d, theta;
};

std::vector<Draw> make_draws(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
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

std::string describe(const Draw& t) {
    return "a=" + fmt(t.a) + " c=" + fmt(t.c) + " theta=" + fmt(t.theta);
}

Machine random_consistent_machine(Rng& rng) {
    const std::size_t adim = 2 + rng.index(3);
    const StateVector g = rng.state({adim});
    Machine m(adim, rng.state({adim}),
              QubitBasis{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi)});
    for (MachineLabel label : {MachineLabel::Zero, MachineLabel::One, MachineLabel::Psi,
                               MachineLabel::PsiBar})
        m.set_image(label, g);
    return m;
}

}  // namespace

std::size_t SuiteResult::passed() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

std::size_t SuiteResult::failed() const { return checks.size() - passed(); }

bool SuiteResult::all_passed() const { return failed() == 0; }

double Rng::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]: keeps the log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

Complex Rng::gaussian_complex() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex{re, im};
}

Complex Rng::unit_disk() {
    while (true) {
        const double re = uniform(-1.0, 1.0);
        const double im = uniform(-1.0, 1.0);
        if (re * re + im * im <= 1.0) return Complex{re, im};
    }
}

std::size_t Rng::index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

StateVector Rng::state(std::vector<std::size_t> dims) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    while (true) {
        std::vector<Complex> amps(total);
        double norm_sq = 0.0;
        for (auto& a : amps) {
            a = gaussian_complex();
            norm_sq += std::norm(a);
        }
        if (norm_sq < 1e-12) continue;
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& a : amps) a *= inv;
        return StateVector(std::move(amps), dims);
    }
}

ComplexMatrix Rng::unitary_2x2() {
    while (true) {
        Complex u0 = gaussian_complex(), u1 = gaussian_complex();
        const double n0 = std::sqrt(std::norm(u0) + std::norm(u1));
        if (n0 < 1e-6) continue;
        u0 /= n0;
        u1 /= n0;
        Complex v0 = gaussian_complex(), v1 = gaussian_complex();
        const Complex overlap = std::conj(u0) * v0 + std::conj(u1) * v1;
        v0 -= overlap * u0;
        v1 -= overlap * u1;
        const double n1 = std::sqrt(std::norm(v0) + std::norm(v1));
        if (n1 < 1e-6) continue;
        v0 /= n1;
        v1 /= n1;
        ComplexMatrix u(2, 2);
        u(0, 0) = u0;
        u(1, 0) = u1;
        u(0, 1) = v0;
        u(1, 1) = v1;
        return u;
    }
}

CheckResult run_check(const std::string& name,
                      const std::function<std::optional<std::string>()>& body) {
    try {
        if (const auto failure = body()) return CheckResult{name, false, *failure};
        return CheckResult{name, true, ""};
    } catch (const std::exception& e) {
        return CheckResult{name, false, std::string("exception: ") + e.what()};
    }
}

SuiteResult run_qcore_suite(std::uint64_t seed) {
    SuiteResult suite{"qcore", {}};

    suite.checks.push_back(run_check(
        "partial trace preserves unit trace", [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xA1);
            const std::vector<std::vector<std::size_t>> shapes = {{2, 2}, {2, 3}, {2, 2, 2}};
            for (const auto& dims : shapes) {
                const std::size_t n = dims.size();
                for (int rep = 0; rep < 30; ++rep) {
                    const DensityMatrix rho = DensityMatrix::pure(rng.state(dims));
                    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
                        std::vector<std::size_t> keep;
                        for (std::size_t f = 0; f < n; ++f)
                            if (mask & (std::size_t{1} << f)) keep.push_back(f);
                        const Complex tr = partial_trace(rho, keep).entries().trace();
                        if (std::abs(tr - Complex{1.0, 0.0}) > tol::norm)
                            return "trace " + fmt(std::abs(tr)) + " after keeping " +
                                   std::to_string(keep.size()) + " of " + std::to_string(n) +
                                   " factors (rep " + std::to_string(rep) + ")";
                    }
                }
            }
            return std::nullopt;
        }));

    suite.checks.push_back(run_check(
        "marginal spectra agree across a bipartition", [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xA2);
            const std::vector<std::vector<std::size_t>> shapes = {{2, 2}, {2, 3}, {2, 4}};
            for (const auto& dims : shapes)
                for (int rep = 0; rep < 30; ++rep) {
                    const StateVector psi = rng.state(dims);
                    auto ea = eigvals_hermitian(partial_trace(DensityMatrix::pure(psi), {0}));
                    auto eb = eigvals_hermitian(partial_trace(DensityMatrix::pure(psi), {1}));
                    const std::size_t m = std::max(ea.size(), eb.size());
                    ea.resize(m, 0.0);
                    eb.resize(m, 0.0);
                    for (std::size_t i = 0; i < m; ++i)
                        if (std::abs(ea[i] - eb[i]) > 1e-10)
                            return "spectra differ by " + fmt(std::abs(ea[i] - eb[i])) +
                                   " on dims {" + std::to_string(dims[0]) + "," +
                                   std::to_string(dims[1]) + "} (rep " + std::to_string(rep) +
                                   ")";
                }
            return std::nullopt;
        }));

    suite.checks.push_back(
        run_check("trace distance is a metric", [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xA3);
            const auto random_density = [&rng]() {
                const double w = rng.uniform();
                const ComplexMatrix m =
                    DensityMatrix::pure(rng.state({2, 2})).entries() * Complex{w, 0.0} +
                    DensityMatrix::pure(rng.state({2, 2})).entries() * Complex{1.0 - w, 0.0};
                return DensityMatrix(m, {2, 2});
            };
            for (int rep = 0; rep < 30; ++rep) {
                const DensityMatrix a = random_density();
                const DensityMatrix b = random_density();
                const DensityMatrix c = random_density();
                if (trace_distance(a, a) > 1e-12)
                    return "d(a,a) = " + fmt(trace_distance(a, a)) + " (rep " +
                           std::to_string(rep) + ")";
                if (std::abs(trace_distance(a, b) - trace_distance(b, a)) > 1e-12)
                    return "asymmetric distance (rep " + std::to_string(rep) + ")";
                if (trace_distance(a, c) >
                    trace_distance(a, b) + trace_distance(b, c) + 1e-10)
                    return "triangle inequality violated (rep " + std::to_string(rep) + ")";
            }
            return std::nullopt;
        }));

    suite.checks.push_back(run_check("closed-form and iterative 2x2 eigenvalues agree",
                                     [seed]() -> std::optional<std::string> {
                                         Rng rng(seed ^ 0xA4);
                                         for (int rep = 0; rep < 100; ++rep) {
                                             ComplexMatrix h(2, 2);
                                             h(0, 0) = Complex{rng.gaussian(), 0.0};
                                             h(1, 1) = Complex{rng.gaussian(), 0.0};
                                             const Complex off = rng.gaussian_complex();
                                             h(0, 1) = off;
                                             h(1, 0) = std::conj(off);
                                             const auto closed = eigvals_2x2_closed_form(h);
                                             const auto iter = eigvals_jacobi(h);
                                             for (std::size_t i = 0; i < 2; ++i)
                                                 if (std::abs(closed[i] - iter[i]) > 1e-10)
                                                     return "paths differ by " +
                                                            fmt(std::abs(closed[i] - iter[i])) +
                                                            " (rep " + std::to_string(rep) + ")";
                                         }
                                         return std::nullopt;
                                     }));

    suite.checks.push_back(
        run_check("entropy unchanged by local rotations", [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xA5);
            for (int rep = 0; rep < 50; ++rep) {
                const StateVector psi = rng.state({2, 2});
                const double base = entanglement_entropy(psi, {0});
                for (std::size_t factor : {std::size_t{0}, std::size_t{1}}) {
                    const StateVector rotated =
                        apply_unitary_to_factor(rng.unitary_2x2(), psi, factor);
                    const double e = entanglement_entropy(rotated, {0});
                    if (std::abs(e - base) > 1e-9)
                        return "entropy moved by " + fmt(std::abs(e - base)) + " on factor " +
                               std::to_string(factor) + " (rep " + std::to_string(rep) + ")";
                }
            }
            return std::nullopt;
        }));

    return suite;
}

SuiteResult run_machine_suite(std::uint64_t seed) {
    SuiteResult suite{"machine", {}};

    suite.checks.push_back(
        run_check("linear extension is an isometry", [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xB1);
            for (int rep = 0; rep < 100; ++rep) {
                const std::size_t adim = 2 + rng.index(3);
                Machine m(adim, rng.state({adim}),
                          QubitBasis{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi)});
                m.set_image(MachineLabel::Zero, rng.state({adim}));
                m.set_image(MachineLabel::One, rng.state({adim}));
                const Isometry v = linear_extension(m);
                const ComplexMatrix gram = v.matrix.adjoint() * v.matrix;
                const double drift = gram.max_abs_diff(ComplexMatrix::identity(2));
                if (drift > 1e-12)
                    return "V^dag V off identity by " + fmt(drift) + " at ancilla dim " +
                           std::to_string(adim) + " (rep " + std::to_string(rep) + ")";
            }
            return std::nullopt;
        }));

    suite.checks.push_back(run_check("constant-image devices extend without deviation",
                                     [seed]() -> std::optional<std::string> {
                                         Rng rng(seed ^ 0xB2);
                                         for (int rep = 0; rep < 50; ++rep) {
                                             const Machine m = random_consistent_machine(rng);
                                             const double dev = postulate_deviation(m);
                                             if (dev > 1e-12)
                                                 return "deviation " + fmt(dev) + " (rep " +
                                                        std::to_string(rep) + ")";
                                         }
                                         return std::nullopt;
                                     }));

    suite.checks.push_back(
        run_check("overlap realization round-trips", [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xB3);
            for (int rep = 0; rep < 100; ++rep) {
                const Complex alpha = rng.unit_disk();
                const Complex beta = rng.unit_disk();
                const GramRealization r = realize_from_gram(GramSpec{alpha, beta});
                const double drift = std::max(std::abs(r.psi1.inner(r.psi2) - alpha),
                                              std::abs(r.f_psi1.inner(r.f_psi2) - beta));
                if (drift > 1e-12)
                    return "overlap drift " + fmt(drift) + " for alpha=(" + fmt(alpha.real()) +
                           "," + fmt(alpha.imag()) + ") beta=(" + fmt(beta.real()) + "," +
                           fmt(beta.imag()) + ")";
            }
            return std::nullopt;
        }));

    return suite;
}

SuiteResult run_scenario_suite(std::uint64_t seed) {
    SuiteResult suite{"nogo", {}};
    const std::vector<Draw> draws = make_draws(seed ^ 0xC1, 1000);

    suite.checks.push_back(run_check(
        "numeric eigenvalues match closed forms", [&draws]() -> std::optional<std::string> {
            for (const Draw& t : draws) {
                const EntanglementReport r = monotonicity_test(t.a, t.b, t.c, t.d, t.theta);
                const double drift =
                    std::max(std::abs(r.lambda_before - r.lambda_before_closed),
                             std::abs(r.lambda_after - r.lambda_after_closed));
                if (drift > 1e-9) return "drift " + fmt(drift) + " at " + describe(t);
            }
            return std::nullopt;
        }));

    suite.checks.push_back(run_check(
        "entanglement strictly increases off the boundary",
        [&draws]() -> std::optional<std::string> {
            std::size_t banded = 0;
            for (const Draw& t : draws) {
                const EntanglementReport r = monotonicity_test(t.a, t.b, t.c, t.d, t.theta);
                const double mag = std::abs(r.alpha);
                if (mag <= 1e-6 || mag >= 1.0 - 1e-6) continue;
                ++banded;
                if (!(r.lambda_before - r.lambda_after > 0.0))
                    return "largest eigenvalue did not drop at " + describe(t) +
                           " (|alpha|=" + fmt(mag) + ")";
                if (!(r.delta_entropy > 0.0))
                    return "entropy did not rise at " + describe(t) + " (|alpha|=" + fmt(mag) +
                           ")";
                if (mag > 1e-3 && mag < 1.0 - 1e-3 &&
                    r.verdict != MonotonicityVerdict::Violated)
                    return "verdict not VIOLATED well inside the band at " + describe(t);
            }
            if (banded == 0) return std::string("no draws landed in the test band");
            return std::nullopt;
        }));

    suite.checks.push_back(run_check(
        "identical or orthogonal pairs sit on the boundary",
        [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xC3);
            const auto flat = [](const EntanglementReport& r) {
                return std::abs(r.lambda_before - r.lambda_after) <= 1e-12 &&
                       r.verdict == MonotonicityVerdict::Respected;
            };
            for (int rep = 0; rep < 20; ++rep) {
                const EntanglementReport orth =
                    monotonicity_test(1.0, 0.0, 0.0, 1.0, rng.uniform(0.0, kTwoPi));
                if (!flat(orth)) return std::string("orthogonal pair moved (a=1, c=0)");
                const double u = rng.uniform(0.1, 0.9);
                const double v = std::sqrt(1.0 - u * u);
                const EntanglementReport same = monotonicity_test(u, v, u, v, 0.0);
                if (!flat(same)) return "identical pair moved (a=c=" + fmt(u) + ", theta=0)";
                const EntanglementReport phase =
                    monotonicity_test(0.0, 1.0, 0.0, 1.0, rng.uniform(0.0, kTwoPi));
                if (!flat(phase)) return std::string("unit-overlap pair moved (a=c=0)");
            }
            return std::nullopt;
        }));

    suite.checks.push_back(run_check(
        "overlap requirement on cos theta is never satisfiable",
        [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xC4);
            for (int rep = 0; rep < 10000; ++rep) {
                const double a = rng.uniform(0.05, 0.95);
                const double c = rng.uniform(0.05, 0.95);
                const double b = std::sqrt(1.0 - a * a);
                const double d = std::sqrt(1.0 - c * c);
                const double bound = cos_theta_bound(a, b, c, d);
                if (bound < 1.0 - 1e-12)
                    return "bound " + fmt(bound) + " below 1 at a=" + fmt(a) + " c=" + fmt(c);
                const double delta = (a - c) * (a - c) + (b - d) * (b - d);
                if (delta > 1e-10 && bound - 1.0 <= 1e-12)
                    return "bound stuck at 1 for distinct pairs a=" + fmt(a) + " c=" + fmt(c);
            }
            for (int rep = 0; rep < 100; ++rep) {
                const double a = rng.uniform(0.05, 0.95);
                const double b = std::sqrt(1.0 - a * a);
                const double bound = cos_theta_bound(a, b, a, b);
                if (std::abs(bound - 1.0) > 1e-12)
                    return "equality case off 1 by " + fmt(std::abs(bound - 1.0)) +
                           " at a=c=" + fmt(a);
            }
            return std::nullopt;
        }));

    suite.checks.push_back(run_check(
        "eigenvalue ordering tracks overlap size", [&draws]() -> std::optional<std::string> {
            for (const Draw& t : draws) {
                const ClosedFormLambdas closed =
                    closed_form_lambdas(t.a, t.b, t.c, t.d, t.theta);
                const double mag =
                    std::abs(overlap_from_amplitudes(t.a, t.b, t.c, t.d, t.theta));
                if (mag < 1e-5 || mag > 1.0 - 1e-5) continue;
                if (sign_band(closed.after - closed.before) != sign_band(mag - 1.0))
                    return "sign mismatch at " + describe(t) + " (|alpha|=" + fmt(mag) + ")";
            }
            // On the unit-overlap boundary both differences vanish together.
            for (double u : {0.3, 0.5, 0.8}) {
                const double v = std::sqrt(1.0 - u * u);
                const ClosedFormLambdas closed = closed_form_lambdas(u, v, u, v, 0.0);
                const double mag = std::abs(overlap_from_amplitudes(u, v, u, v, 0.0));
                if (sign_band(closed.after - closed.before) != 0 || sign_band(mag - 1.0) != 0)
                    return "boundary case a=c=" + fmt(u) + " not recognized as flat";
            }
            return std::nullopt;
        }));

    suite.checks.push_back(run_check(
        "deviation-free devices cannot signal", [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xC6);
            for (int rep = 0; rep < 50; ++rep) {
                const Machine m = random_consistent_machine(rng);
                const double dev = postulate_deviation(m);
                if (dev > 1e-12)
                    return "construction not deviation-free (rep " + std::to_string(rep) + ")";
                const SignallingReport report = signalling_test(m);
                if (report.distance > tol::verdict)
                    return "distance " + fmt(report.distance) + " from a deviation-free device";
            }
            return std::nullopt;
        }));

    suite.checks.push_back(run_check(
        "singlet keeps its form in every basis", [seed]() -> std::optional<std::string> {
            Rng rng(seed ^ 0xC7);
            const StateVector chi = build_singlet();
            for (int rep = 0; rep < 100; ++rep) {
                const QubitBasis basis{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi)};
                const auto coeff = singlet_basis_coefficients(chi, basis);
                const double drift =
                    std::max({std::abs(coeff[0]), std::abs(coeff[1] - Complex{kInvSqrt2, 0.0}),
                              std::abs(coeff[2] + Complex{kInvSqrt2, 0.0}), std::abs(coeff[3])});
                if (drift > 1e-12)
                    return "coefficient drift " + fmt(drift) + " at phi=" + fmt(basis.phi) +
                           " gamma=" + fmt(basis.gamma);
            }
            return std::nullopt;
        }));

    return suite;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
    return {run_qcore_suite(seed), run_machine_suite(seed), run_scenario_suite(seed)};
}

}  // namespace nogo
