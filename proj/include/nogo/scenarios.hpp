// scenarios.hpp
// The two operational consequences of a basis-dependent copying device,
// reconstructed end to end:
//
//  1. Signalling: Alice and Bob share a singlet; Alice measures in either the
//     computational or the rotated basis, Bob's device copies his collapsed
//     state. If the device's postulated action is basis-dependent, Bob's two
//     unconditional mixtures differ and their trace distance is a directly
//     measurable signal.
//
//  2. Entanglement increase: Alice holds a control qubit entangled with a
//     system qubit in one of two non-orthogonal states; applying the device
//     on the system side (a local operation) changes the overlap seen across
//     Alice's cut from alpha to alpha*beta, which *raises* the entanglement
//     whenever 0 < |alpha| < 1 and beta = alpha — impossible under local
//     operations.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "nogo/machine.hpp"
#include "nogo/qcore.hpp"

namespace nogo {

enum class AliceBasis { Computational, Rotated };
enum class SignallingVerdict { Signalling, NoSignalling };
enum class Stage { Before, After };
enum class MonotonicityVerdict { Violated, Respected };

std::string to_string(SignallingVerdict v);    // "SIGNALLING" / "NO_SIGNALLING"
std::string to_string(MonotonicityVerdict v);  // "MONOTONE_VIOLATED" / "MONOTONE_RESPECTED"

// Bob's two unconditional mixtures and their trace distance. Any distance
// above the verdict threshold means Alice's basis choice is visible to Bob.
struct SignallingReport {
    DensityMatrix rho_b_computational;
    DensityMatrix rho_b_rotated;
    double distance = 0.0;
    SignallingVerdict verdict = SignallingVerdict::NoSignalling;
};

// One evaluation of the entanglement scenario. Numeric eigenvalues come from
// the actual reduced matrices; the *_closed fields from the overlap formulas
// (lambda = 1/2 + |alpha|/2 before, 1/2 + |alpha*beta|/2 after). Entropies
// are in bits across Alice's cut; cos_bound is absent when any of a,b,c,d
// vanishes (its denominator 2abcd is zero there).
struct EntanglementReport {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    double theta = 0.0;
    Complex alpha{0.0, 0.0};
    Complex beta{0.0, 0.0};
    double lambda_before = 0.0;
    double lambda_after = 0.0;
    double lambda_before_closed = 0.0;
    double lambda_after_closed = 0.0;
    double entropy_before = 0.0;
    double entropy_after = 0.0;
    double delta_entropy = 0.0;
    std::optional<double> cos_bound;
    MonotonicityVerdict verdict = MonotonicityVerdict::Respected;
};

// (|01> - |10>)/sqrt(2) on dims [2,2]. Self-checks its basis invariance at
// construction: re-expanded in a rotated orthonormal pair the coefficients
// keep the same antisymmetric pattern.
StateVector build_singlet();

// Coefficients of a two-qubit state in the product basis of a rotated pair,
// in the order (psi psi, psi psibar, psibar psi, psibar psibar). For the
// singlet this is (0, 1/sqrt2, -1/sqrt2, 0) for every basis, exactly (the
// rotation has unit determinant).
std::array<Complex, 4> singlet_basis_coefficients(const StateVector& psi,
                                                  const QubitBasis& basis);

// Bob's unconditional mixture when Alice measures the singlet in the given
// basis and Bob's device then copies his collapsed state: the equal-weight
// mixture of |k>|F(k)> over the basis labels. Dims [2, ancilla].
DensityMatrix bob_mixture(const Machine& m, AliceBasis alice_basis);

// Trace distance between the two mixtures; requires images for all four
// fixed labels.
SignallingReport signalling_test(const Machine& m);

// (1/sqrt2)(|0>|psi1> + |1>|psi2>) (x) |0> on dims [2,2,2]: Alice's control
// qubit, the system qubit carrying the realized overlap pair, and a blank
// qubit ancilla for the device.
StateVector build_shared_state(const GramSpec& g);

// (1/sqrt2)(|0>|psi1>|F(psi1)> + |1>|psi2>|F(psi2)>): the postulated action
// applied branch-by-branch. The input must be the state built from the same
// overlap data.
StateVector apply_general_operation(const StateVector& psi, const GramSpec& g);

// Reduced state of Alice's control qubit. Before the operation the ancilla
// must still be blank; both stages expect a state of the builders' shape
// (equal-weight branches, so the diagonal is 1/2).
DensityMatrix alice_reduced(const StateVector& psi, Stage stage);

struct ClosedFormLambdas {
    double before = 0.0;
    double after = 0.0;
};

// Largest eigenvalue of Alice's reduced state directly from the overlap
// alpha = (ac + bd cos theta) + i bd sin theta:
//   before = 1/2 + |alpha|/2,   after = 1/2 + |alpha|^2/2.
// Requires a^2+b^2 = 1 and c^2+d^2 = 1 within 1e-10, amplitudes >= 0.
ClosedFormLambdas closed_form_lambdas(double a, double b, double c, double d, double theta);

// (1 - (a^2 c^2 + b^2 d^2)) / (2abcd): the value cos theta would have to
// reach for the operation not to raise entanglement. Always >= 1, with
// equality exactly when a=c and b=d — so for non-identical pairs the
// requirement is unsatisfiable. Throws DegenerateError when any amplitude
// is <= 0 (the denominator vanishes).
double cos_theta_bound(double a, double b, double c, double d);

// Full entanglement scenario at one parameter point: builds the shared
// state, applies the operation, reduces to Alice, and compares numeric
// eigenvalues against the closed forms (disagreement beyond 1e-9 is an
// internal error). beta defaults to alpha (the device preserves pairwise
// overlaps no better than it must); an override exercises other devices.
EntanglementReport monotonicity_test(double a, double b, double c, double d, double theta,
                                     std::optional<Complex> beta_override = std::nullopt);

}  // namespace nogo
