// machine.hpp
// The hypothetical basis-dependent copying device: a qubit system plus an
// ancilla, with a postulated image F(.) for each input ket. The postulated
// action is not linear, so the machine stores it as data (an image table)
// rather than as an operator; its unique legal linear extension and the
// deviation between the two are computed on demand.

#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "nogo/qcore.hpp"

namespace nogo {

// Input slots of the image table. Zero/One/Psi/PsiBar name fixed kets (the
// computational pair and the machine's rotated basis pair); Psi1/Psi2 are
// free-state slots whose kets are supplied by the caller.
enum class MachineLabel { Zero, One, Psi, PsiBar, Psi1, Psi2 };

std::string to_string(MachineLabel label);

class Machine {
public:
    Machine(std::size_t ancilla_dim, StateVector blank, QubitBasis basis);

    void set_image(MachineLabel label, StateVector image);
    bool has_image(MachineLabel label) const;
    const StateVector& image(MachineLabel label) const;  // throws if absent

    std::size_t ancilla_dim() const { return ancilla_dim_; }
    const StateVector& blank() const { return blank_; }
    const QubitBasis& basis() const { return basis_; }

    // The qubit ket named by a fixed label; throws for the free slots.
    StateVector system_ket(MachineLabel label) const;

private:
    std::size_t ancilla_dim_;
    StateVector blank_;
    QubitBasis basis_;
    std::map<MachineLabel, StateVector> images_;
};

// All four fixed-label images equal to the blank state.
Machine make_constant_machine(QubitBasis basis, StateVector blank);

// Qubit ancilla with F(x) = x for all four fixed labels; blank |0>.
Machine make_cloning_machine(QubitBasis basis);

// |label>|Sigma> -> |label>|F(label)>, exactly as postulated. For fixed
// labels, system_state must equal the named ket; free slots take any
// unit-norm qubit state.
StateVector apply_postulate(const Machine& m, MachineLabel label,
                            const StateVector& system_state);

// The unique linear map agreeing with the postulate on the computational
// basis: V|i> = |i> (x) |F(i)> for i in {0, 1}, extended linearly. It is an
// isometry automatically because <0|1> = 0.
struct Isometry {
    ComplexMatrix matrix;                // (2 * ancilla_dim) x 2
    std::vector<std::size_t> out_dims;   // {2, ancilla_dim}

    StateVector apply(const StateVector& qubit_state) const;
};

Isometry linear_extension(const Machine& m);

// Worst-case infidelity between the linear extension's output and the
// postulated output over the rotated-basis labels:
//   max over j in {psi, psibar} of 1 - |<j, F(j)| V |j>|^2.
// Requires images for all four fixed labels. Result in [0, 1].
double postulate_deviation(const Machine& m);

// Pairwise overlap data for the two free states and their images:
// alpha = <psi1|psi2>, beta = <F(psi1)|F(psi2)>. beta defaults to alpha.
struct GramSpec {
    Complex alpha;
    Complex beta;

    explicit GramSpec(Complex a) : alpha(a), beta(a) {}
    GramSpec(Complex a, Complex b) : alpha(a), beta(b) {}
};

// Concrete qubit states realizing a GramSpec. Convention: psi1 = |0>,
// psi2 = alpha|0> + sqrt(1-|alpha|^2)|1> (all phase in the |0> coefficient),
// and the same shape for the F pair with beta.
struct GramRealization {
    StateVector psi1;
    StateVector psi2;
    StateVector f_psi1;
    StateVector f_psi2;
};

GramRealization realize_from_gram(const GramSpec& g);

// Overlap of the two states a|0>+b|1> and c|0>+d e^{i theta}|1>:
// (ac + bd cos theta) + i bd sin theta.
Complex overlap_from_amplitudes(double a, double b, double c, double d, double theta);

}  // namespace nogo
