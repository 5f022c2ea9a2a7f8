#include "nogo/machine.hpp"

#include <algorithm>
#include <cmath>

namespace nogo {

std::string to_string(MachineLabel label) {
    switch (label) {
        case MachineLabel::Zero: return "0";
        case MachineLabel::One: return "1";
        case MachineLabel::Psi: return "psi";
        case MachineLabel::PsiBar: return "psibar";
        case MachineLabel::Psi1: return "psi1";
        case MachineLabel::Psi2: return "psi2";
    }
    return "?";
}

Machine::Machine(std::size_t ancilla_dim, StateVector blank, QubitBasis basis)
    : ancilla_dim_(ancilla_dim), blank_(std::move(blank)), basis_(basis) {
    if (ancilla_dim_ < 1) throw InputError("ancilla dimension must be >= 1");
    if (blank_.dim() != ancilla_dim_)
        throw InputError("blank state does not live on the ancilla space");
}

void Machine::set_image(MachineLabel label, StateVector image) {
    if (image.dim() != ancilla_dim_)
        throw InputError("image for " + to_string(label) + " does not live on the ancilla space");
    images_.insert_or_assign(label, std::move(image));
}

bool Machine::has_image(MachineLabel label) const { return images_.count(label) > 0; }

const StateVector& Machine::image(MachineLabel label) const {
    auto it = images_.find(label);
    if (it == images_.end())
        throw InputError("machine has no image for label " + to_string(label));
    return it->second;
}

StateVector Machine::system_ket(MachineLabel label) const {
    switch (label) {
        case MachineLabel::Zero: return StateVector::basis_state({2}, 0);
        case MachineLabel::One: return StateVector::basis_state({2}, 1);
        case MachineLabel::Psi: return basis_.ket();
        case MachineLabel::PsiBar: return basis_.ket_bar();
        default:
            throw InputError("label " + to_string(label) + " does not name a fixed ket");
    }
}

Machine make_constant_machine(QubitBasis basis, StateVector blank) {
    Machine m(blank.dim(), blank, basis);
    for (MachineLabel label : {MachineLabel::Zero, MachineLabel::One, MachineLabel::Psi,
                               MachineLabel::PsiBar})
        m.set_image(label, blank);
    return m;
}

Machine make_cloning_machine(QubitBasis basis) {
    Machine m(2, StateVector::basis_state({2}, 0), basis);
    m.set_image(MachineLabel::Zero, StateVector::basis_state({2}, 0));
    m.set_image(MachineLabel::One, StateVector::basis_state({2}, 1));
    m.set_image(MachineLabel::Psi, basis.ket());
    m.set_image(MachineLabel::PsiBar, basis.ket_bar());
    return m;
}

StateVector apply_postulate(const Machine& m, MachineLabel label,
                            const StateVector& system_state) {
    const StateVector& img = m.image(label);
    if (system_state.dim() != 2) throw InputError("system state must be a qubit");
    if (label != MachineLabel::Psi1 && label != MachineLabel::Psi2) {
        const StateVector named = m.system_ket(label);
        double worst = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
            worst = std::max(worst,
                             std::abs(system_state.amplitudes()[i] - named.amplitudes()[i]));
        if (worst > 1e-9)
            throw InputError("system state does not equal the ket named by label " +
                             to_string(label));
    }
    return tensor(system_state, img);
}

StateVector Isometry::apply(const StateVector& qubit_state) const {
    if (qubit_state.dim() != matrix.cols())
        throw InputError("isometry input dimension mismatch");
    std::vector<Complex> out(matrix.rows(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < matrix.rows(); ++r)
        for (std::size_t c = 0; c < matrix.cols(); ++c)
            out[r] += matrix(r, c) * qubit_state.amplitudes()[c];
    return StateVector(std::move(out), out_dims);
}

Isometry linear_extension(const Machine& m) {
    const StateVector& f0 = m.image(MachineLabel::Zero);
    const StateVector& f1 = m.image(MachineLabel::One);
    const std::size_t a = m.ancilla_dim();
    ComplexMatrix v(2 * a, 2);
    for (std::size_t k = 0; k < a; ++k) {
        v(k, 0) = f0.amplitudes()[k];          // |0> (x) F(0)
        v(a + k, 1) = f1.amplitudes()[k];      // |1> (x) F(1)
    }
    return Isometry{std::move(v), {2, a}};
}

double postulate_deviation(const Machine& m) {
    const Isometry v = linear_extension(m);
    double worst = 0.0;
    for (MachineLabel label : {MachineLabel::Psi, MachineLabel::PsiBar}) {
        const StateVector sys = m.system_ket(label);
        const StateVector extended = v.apply(sys);
        const StateVector postulated = apply_postulate(m, label, sys);
        const double fidelity = std::norm(postulated.inner(extended));
        worst = std::max(worst, 1.0 - fidelity);
    }
    return std::clamp(worst, 0.0, 1.0);
}

GramRealization realize_from_gram(const GramSpec& g) {
    const auto realize_pair = [](Complex overlap, const char* name) {
        const double mag = std::abs(overlap);
        if (mag > 1.0 + 1e-12)
            throw InputError(std::string(name) + " overlap magnitude exceeds 1");
        const double rest = std::sqrt(std::max(0.0, 1.0 - mag * mag));
        return StateVector::qubit(overlap, Complex{rest, 0.0});
    };
    StateVector first = StateVector::basis_state({2}, 0);
    return GramRealization{
        first,
        realize_pair(g.alpha, "alpha"),
        first,
        realize_pair(g.beta, "beta"),
    };
}

Complex overlap_from_amplitudes(double a, double b, double c, double d, double theta) {
    return Complex{a * c + b * d * std::cos(theta), b * d * std::sin(theta)};
}

}  // namespace nogo
