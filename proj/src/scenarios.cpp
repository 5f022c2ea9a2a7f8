#include "nogo/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "nogo/errors.hpp"

namespace nogo {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Numeric-vs-closed-form agreement required inside monotonicity_test.
constexpr double kClosedNumericTol = 1e-9;

// The builders put equal weight on Alice's two branches, so her reduced
// diagonal is exactly 1/2; used to reject foreign states.
void require_builder_shape(const StateVector& psi) {
    if (psi.dims() != std::vector<std::size_t>{2, 2, 2})
        throw InputError("expected a state on [control, system, ancilla] qubits");
}

ComplexMatrix pure_projector(const StateVector& psi) {
    const auto& amp = psi.amplitudes();
    ComplexMatrix p(psi.dim(), psi.dim());
    for (std::size_t r = 0; r < psi.dim(); ++r)
        for (std::size_t c = 0; c < psi.dim(); ++c) p(r, c) = amp[r] * std::conj(amp[c]);
    return p;
}

}  // namespace

std::string to_string(SignallingVerdict v) {
    return v == SignallingVerdict::Signalling ? "SIGNALLING" : "NO_SIGNALLING";
}

std::string to_string(MonotonicityVerdict v) {
    return v == MonotonicityVerdict::Violated ? "MONOTONE_VIOLATED" : "MONOTONE_RESPECTED";
}

StateVector build_singlet() {
    StateVector singlet({Complex{0.0, 0.0}, Complex{kInvSqrt2, 0.0},
                         Complex{-kInvSqrt2, 0.0}, Complex{0.0, 0.0}},
                        {2, 2});
    // Basis invariance at two fixed rotations; the full randomized version
    // lives in the property suite.
    for (const QubitBasis basis : {QubitBasis{0.78539816339744831, 0.0},
                                   QubitBasis{1.1, 0.65}}) {
        const auto coeff = singlet_basis_coefficients(singlet, basis);
        const double drift =
            std::max({std::abs(coeff[0]), std::abs(coeff[1] - Complex{kInvSqrt2, 0.0}),
                      std::abs(coeff[2] + Complex{kInvSqrt2, 0.0}), std::abs(coeff[3])});
        if (drift > 1e-12)
            throw InternalError("singlet lost its antisymmetric form under rotation");
    }
    return singlet;
}

std::array<Complex, 4> singlet_basis_coefficients(const StateVector& psi,
                                                  const QubitBasis& basis) {
    if (psi.dims() != std::vector<std::size_t>{2, 2})
        throw InputError("expected a two-qubit state");
    const StateVector kets[2] = {basis.ket(), basis.ket_bar()};
    std::array<Complex, 4> out{};
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
            Complex sum{0.0, 0.0};
            for (std::size_t s = 0; s < 2; ++s)
                for (std::size_t t = 0; t < 2; ++t)
                    sum += std::conj(kets[j].amplitudes()[s] * kets[k].amplitudes()[t]) *
                           psi.amplitudes()[s * 2 + t];
            out[j * 2 + k] = sum;
        }
    return out;
}

DensityMatrix bob_mixture(const Machine& m, AliceBasis alice_basis) {
    const auto labels = alice_basis == AliceBasis::Computational
                            ? std::pair{MachineLabel::One, MachineLabel::Zero}
                            : std::pair{MachineLabel::PsiBar, MachineLabel::Psi};
    const StateVector first = tensor(m.system_ket(labels.first), m.image(labels.first));
    const StateVector second = tensor(m.system_ket(labels.second), m.image(labels.second));
    const ComplexMatrix entries =
        (pure_projector(first) + pure_projector(second)) * Complex{0.5, 0.0};
    return DensityMatrix(entries, {2, m.ancilla_dim()});
}

SignallingReport signalling_test(const Machine& m) {
    for (MachineLabel label : {MachineLabel::Zero, MachineLabel::One, MachineLabel::Psi,
                               MachineLabel::PsiBar})
        if (!m.has_image(label))
            throw InputError("signalling test needs an image for label " + to_string(label));

    SignallingReport report{bob_mixture(m, AliceBasis::Computational),
                            bob_mixture(m, AliceBasis::Rotated), 0.0,
                            SignallingVerdict::NoSignalling};
    report.distance = trace_distance(report.rho_b_computational, report.rho_b_rotated);
    report.verdict = report.distance > tol::verdict ? SignallingVerdict::Signalling
                                                    : SignallingVerdict::NoSignalling;
    return report;
}

StateVector build_shared_state(const GramSpec& g) {
    const GramRealization r = realize_from_gram(g);
    std::vector<Complex> amps(8, Complex{0.0, 0.0});
    for (std::size_t s = 0; s < 2; ++s) {
        amps[(0 * 2 + s) * 2 + 0] = kInvSqrt2 * r.psi1.amplitudes()[s];
        amps[(1 * 2 + s) * 2 + 0] = kInvSqrt2 * r.psi2.amplitudes()[s];
    }
    return StateVector(std::move(amps), {2, 2, 2});
}

StateVector apply_general_operation(const StateVector& psi, const GramSpec& g) {
    const StateVector expected = build_shared_state(g);
    require_builder_shape(psi);
    double drift = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i)
        drift = std::max(drift, std::abs(psi.amplitudes()[i] - expected.amplitudes()[i]));
    if (drift > 1e-10)
        throw InputError("input state was not built from this overlap data");

    const GramRealization r = realize_from_gram(g);
    std::vector<Complex> amps(8, Complex{0.0, 0.0});
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t e = 0; e < 2; ++e) {
            amps[(0 * 2 + s) * 2 + e] =
                kInvSqrt2 * r.psi1.amplitudes()[s] * r.f_psi1.amplitudes()[e];
            amps[(1 * 2 + s) * 2 + e] =
                kInvSqrt2 * r.psi2.amplitudes()[s] * r.f_psi2.amplitudes()[e];
        }
    return StateVector(std::move(amps), {2, 2, 2});
}

DensityMatrix alice_reduced(const StateVector& psi, Stage stage) {
    require_builder_shape(psi);
    if (stage == Stage::Before) {
        double leak = 0.0;
        for (std::size_t i = 0; i < psi.dim(); ++i)
            if (i % 2 != 0) leak = std::max(leak, std::abs(psi.amplitudes()[i]));
        if (leak > 1e-10)
            throw InputError("ancilla is not blank; state is not pre-operation");
    }
    DensityMatrix reduced = partial_trace(DensityMatrix::pure(psi), {0});
    for (std::size_t i = 0; i < 2; ++i)
        if (std::abs(reduced.entries()(i, i) - Complex{0.5, 0.0}) > 1e-10)
            throw InputError("state does not have equal-weight control branches");
    return reduced;
}

ClosedFormLambdas closed_form_lambdas(double a, double b, double c, double d, double theta) {
    if (a < 0.0 || b < 0.0 || c < 0.0 || d < 0.0)
        throw InputError("amplitudes must be non-negative");
    if (std::abs(a * a + b * b - 1.0) > tol::norm || std::abs(c * c + d * d - 1.0) > tol::norm)
        throw InputError("amplitude pairs must be normalized");
    const double mag = std::abs(overlap_from_amplitudes(a, b, c, d, theta));
    return ClosedFormLambdas{0.5 + 0.5 * mag, 0.5 + 0.5 * mag * mag};
}

double cos_theta_bound(double a, double b, double c, double d) {
    if (std::abs(a * a + b * b - 1.0) > tol::norm || std::abs(c * c + d * d - 1.0) > tol::norm)
        throw InputError("amplitude pairs must be normalized");
    if (a <= 0.0 || b <= 0.0 || c <= 0.0 || d <= 0.0)
        throw DegenerateError("bound undefined: denominator 2abcd vanishes");
    return (1.0 - (a * a * c * c + b * b * d * d)) / (2.0 * a * b * c * d);
}

EntanglementReport monotonicity_test(double a, double b, double c, double d, double theta,
                                     std::optional<Complex> beta_override) {
    const ClosedFormLambdas closed = closed_form_lambdas(a, b, c, d, theta);

    EntanglementReport report;
    report.a = a;
    report.b = b;
    report.c = c;
    report.d = d;
    report.theta = theta;
    report.alpha = overlap_from_amplitudes(a, b, c, d, theta);
    report.beta = beta_override.value_or(report.alpha);

    const GramSpec g{report.alpha, report.beta};
    const StateVector before = build_shared_state(g);
    const StateVector after = apply_general_operation(before, g);
    const DensityMatrix rho_before = alice_reduced(before, Stage::Before);
    const DensityMatrix rho_after = alice_reduced(after, Stage::After);

    // The realized states make the off-diagonal formulas exact: conj(alpha)/2
    // before, conj(alpha beta)/2 after.
    const Complex off_before = rho_before.entries()(0, 1);
    const Complex off_after = rho_after.entries()(0, 1);
    if (std::abs(off_before - std::conj(report.alpha) * 0.5) > 1e-12 ||
        std::abs(off_after - std::conj(report.alpha * report.beta) * 0.5) > 1e-12)
        throw InternalError("reduced matrix disagrees with the overlap formulas");

    report.lambda_before = eigvals_hermitian(rho_before).front();
    report.lambda_after = eigvals_hermitian(rho_after).front();
    report.lambda_before_closed = closed.before;
    report.lambda_after_closed = 0.5 + 0.5 * std::abs(report.alpha * report.beta);
    if (std::abs(report.lambda_before - report.lambda_before_closed) > kClosedNumericTol ||
        std::abs(report.lambda_after - report.lambda_after_closed) > kClosedNumericTol)
        throw InternalError("numeric eigenvalues disagree with closed forms");

    report.entropy_before = entanglement_entropy(before, {0});
    report.entropy_after = entanglement_entropy(after, {0});
    report.delta_entropy = report.entropy_after - report.entropy_before;

    if (a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0)
        report.cos_bound = cos_theta_bound(a, b, c, d);

    report.verdict = report.lambda_after < report.lambda_before - tol::verdict
                         ? MonotonicityVerdict::Violated
                         : MonotonicityVerdict::Respected;
    return report;
}

}  // namespace nogo
