// qcore.hpp
// Dense complex linear algebra on small tensor-product Hilbert spaces:
// state vectors carrying factor-dimension metadata, density matrices,
// partial trace, Hermitian eigenvalues, trace distance, entanglement entropy.
// Everything here is a value type, immutable after construction, and safe to
// use from multiple threads.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "nogo/errors.hpp"

namespace nogo {

using Complex = std::complex<double>;

// Shared numerical tolerances. Dimensions in this library never exceed ~8,
// so double precision leaves several orders of magnitude of margin.
namespace tol {
inline constexpr double norm = 1e-10;        // |sum |amp|^2 - 1|
inline constexpr double hermitian = 1e-12;   // max_ij |M - M^dag|
inline constexpr double psd_floor = -1e-10;  // smallest admissible eigenvalue
inline constexpr double orthogonal = 1e-12;
inline constexpr double verdict = 1e-9;      // signalling / monotonicity thresholds
}  // namespace tol

// Row-major dense complex matrix. Plain storage, no validation; the
// quantum-specific invariants live in DensityMatrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix operator*(Complex scalar) const;

    // max_ij |this_ij - other_ij|
    double max_abs_diff(const ComplexMatrix& other) const;

    bool is_hermitian(double tolerance) const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

// Normalized pure state on a tensor product of finite factors. dims lists the
// factor dimensions in ket order (leftmost factor is the most significant
// index), and their product equals the number of amplitudes.
class StateVector {
public:
    StateVector(std::vector<Complex> amplitudes, std::vector<std::size_t> dims);

    // |index> on the given factor structure.
    static StateVector basis_state(std::vector<std::size_t> dims, std::size_t index);
    // Single-qubit state a0|0> + a1|1>; must be normalized.
    static StateVector qubit(Complex a0, Complex a1);

    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::size_t factors() const { return dims_.size(); }

    // <this|other>; dimensions must match.
    Complex inner(const StateVector& other) const;

private:
    std::vector<Complex> amplitudes_;
    std::vector<std::size_t> dims_;
};

// Hermitian, positive-semidefinite, unit-trace matrix over the same factor
// structure as StateVector. Validated (and Hermitian-canonicalized) on
// construction.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix entries, std::vector<std::size_t> dims);

    static DensityMatrix pure(const StateVector& psi);

    const ComplexMatrix& entries() const { return entries_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return entries_.rows(); }

private:
    ComplexMatrix entries_;
    std::vector<std::size_t> dims_;
};

// Orthonormal qubit pair parameterized by a rotation angle and a relative
// phase, both in radians:
//   |psi>    =  cos(phi)|0> + e^{i gamma} sin(phi)|1>
//   |psibar> = -e^{-i gamma} sin(phi)|0> + cos(phi)|1>
// The pair is orthonormal by construction for every (phi, gamma); the sign
// convention for |psibar> fixes the global phase.
struct QubitBasis {
    double phi = 0.0;
    double gamma = 0.0;

    StateVector ket() const;
    StateVector ket_bar() const;
};

// Kronecker product; dims concatenate.
StateVector tensor(const StateVector& u, const StateVector& v);

// Trace out every factor not listed in `keep`. `keep` must be a non-empty
// proper subset of factor indices; the result keeps the original factor order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

// Eigenvalues of a Hermitian matrix, descending. 2x2 inputs use the closed
// form (t +- sqrt(t^2 - 4 det))/2; larger inputs a cyclic Jacobi iteration
// that stops once the off-diagonal Frobenius norm is <= 1e-12. Throws
// InputError if the matrix is not Hermitian within tol::hermitian.
std::vector<double> eigvals_hermitian(const ComplexMatrix& m);
std::vector<double> eigvals_hermitian(const DensityMatrix& rho);

// The two dispatch targets, exposed so they can be cross-checked against
// each other on the same input.
std::vector<double> eigvals_2x2_closed_form(const ComplexMatrix& m);
std::vector<double> eigvals_jacobi(const ComplexMatrix& m);

// (1/2) sum_i |eig_i(a - b)|. Same dims required. Result clamped to [0, 1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Von Neumann entropy, in bits, of the reduced state on the `keep` side of a
// bipartition of a pure state. 0 log 0 := 0.
double entanglement_entropy(const StateVector& psi, const std::vector<std::size_t>& keep);

// -p log2 p - (1-p) log2 (1-p), clamped to [0,1] inputs.
double binary_entropy(double p);

// Apply a dims[factor] x dims[factor] unitary to one factor of a pure state.
StateVector apply_unitary_to_factor(const ComplexMatrix& u, const StateVector& psi,
                                    std::size_t factor);

}  // namespace nogo
