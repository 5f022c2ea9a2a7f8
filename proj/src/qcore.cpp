#include "nogo/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace nogo {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::size_t product(const std::vector<std::size_t>& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// stride of factor f: how far the flat index moves when factor f advances by 1
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t f = dims.size(); f-- > 1;) {
        strides[f - 1] = strides[f] * dims[f];
    }
    return strides;
}

// Flat offsets of the subspace spanned by `factors`, last listed factor fastest.
std::vector<std::size_t> subspace_offsets(const std::vector<std::size_t>& dims,
                                          const std::vector<std::size_t>& strides,
                                          const std::vector<std::size_t>& factors) {
    std::size_t count = 1;
    for (std::size_t f : factors) count *= dims[f];
    std::vector<std::size_t> offsets(count);
    for (std::size_t lin = 0; lin < count; ++lin) {
        std::size_t rem = lin;
        std::size_t off = 0;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            off += (rem % dims[*it]) * strides[*it];
            rem /= dims[*it];
        }
        offsets[lin] = off;
    }
    return offsets;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InputError("matrix shape mismatch in addition");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InputError("matrix shape mismatch in subtraction");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("matrix shape mismatch in product");
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex v = (*this)(r, k);
            if (v == Complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += v * other(k, c);
        }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InputError("matrix shape mismatch in comparison");
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    return worst;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) return false;
    return true;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : data_)
        if (!finite(z)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::vector<Complex> amplitudes, std::vector<std::size_t> dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (dims_.empty()) throw InputError("state vector needs at least one factor");
    for (std::size_t d : dims_)
        if (d < 1) throw InputError("factor dimensions must be >= 1");
    if (product(dims_) != amplitudes_.size())
        throw InputError("amplitude count does not match the factor dimensions");
    double norm_sq = 0.0;
    for (const Complex& z : amplitudes_) {
        if (!finite(z)) throw InputError("non-finite amplitude");
        norm_sq += std::norm(z);
    }
    if (std::abs(norm_sq - 1.0) > tol::norm)
        throw InputError("state vector is not normalized (|amp|^2 sums to " +
                         std::to_string(norm_sq) + ")");
}

StateVector StateVector::basis_state(std::vector<std::size_t> dims, std::size_t index) {
    std::size_t n = product(dims);
    if (index >= n) throw InputError("basis state index out of range");
    std::vector<Complex> amps(n, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return StateVector(std::move(amps), std::move(dims));
}

StateVector StateVector::qubit(Complex a0, Complex a1) {
    return StateVector({a0, a1}, {2});
}

Complex StateVector::inner(const StateVector& other) const {
    if (dim() != other.dim()) throw InputError("dimension mismatch in inner product");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < amplitudes_.size(); ++i)
        acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    return acc;
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix entries, std::vector<std::size_t> dims)
    : entries_(std::move(entries)), dims_(std::move(dims)) {
    if (entries_.rows() != entries_.cols()) throw InputError("density matrix must be square");
    if (dims_.empty()) throw InputError("density matrix needs at least one factor");
    if (product(dims_) != entries_.rows())
        throw InputError("density matrix size does not match the factor dimensions");
    if (!entries_.all_finite()) throw InputError("non-finite density matrix entry");
    if (!entries_.is_hermitian(tol::hermitian))
        throw InputError("density matrix is not Hermitian within tolerance");
    // Canonicalize: (M + M^dag)/2 is exactly Hermitian, so downstream
    // differences of density matrices stay Hermitian to machine precision.
    entries_ = (entries_ + entries_.adjoint()) * Complex{0.5, 0.0};
    if (std::abs(entries_.trace().real() - 1.0) > tol::norm ||
        std::abs(entries_.trace().imag()) > tol::norm)
        throw InputError("density matrix trace is not 1 within tolerance");
    std::vector<double> eigs = eigvals_hermitian(entries_);
    if (eigs.back() < tol::psd_floor)
        throw InputError("density matrix has eigenvalue " + std::to_string(eigs.back()) +
                         " below the PSD tolerance");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    const auto& a = psi.amplitudes();
    ComplexMatrix m(a.size(), a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) m(r, c) = a[r] * std::conj(a[c]);
    return DensityMatrix(std::move(m), psi.dims());
}

// ---------------------------------------------------------------------------
// QubitBasis

StateVector QubitBasis::ket() const {
    return StateVector::qubit(Complex{std::cos(phi), 0.0},
                              std::polar(std::sin(phi), gamma));
}

StateVector QubitBasis::ket_bar() const {
    return StateVector::qubit(-std::polar(std::sin(phi), -gamma),
                              Complex{std::cos(phi), 0.0});
}

// ---------------------------------------------------------------------------
// Operations

StateVector tensor(const StateVector& u, const StateVector& v) {
    const auto& a = u.amplitudes();
    const auto& b = v.amplitudes();
    std::vector<Complex> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    std::vector<std::size_t> dims = u.dims();
    dims.insert(dims.end(), v.dims().begin(), v.dims().end());
    return StateVector(std::move(out), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    const auto& dims = rho.dims();
    std::vector<std::size_t> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty()) throw InputError("partial trace: keep set is empty");
    for (std::size_t f : kept)
        if (f >= dims.size())
            throw InputError("partial trace: factor index " + std::to_string(f) +
                             " out of range");
    if (kept.size() == dims.size())
        throw InputError("partial trace: keeping all factors is not a reduction");

    std::vector<std::size_t> traced;
    for (std::size_t f = 0; f < dims.size(); ++f)
        if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);

    const auto strides = strides_of(dims);
    const auto kept_off = subspace_offsets(dims, strides, kept);
    const auto traced_off = subspace_offsets(dims, strides, traced);

    ComplexMatrix out(kept_off.size(), kept_off.size());
    for (std::size_t r = 0; r < kept_off.size(); ++r)
        for (std::size_t c = 0; c < kept_off.size(); ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t t : traced_off)
                acc += rho.entries()(kept_off[r] + t, kept_off[c] + t);
            out(r, c) = acc;
        }

    std::vector<std::size_t> out_dims;
    for (std::size_t f : kept) out_dims.push_back(dims[f]);
    return DensityMatrix(std::move(out), std::move(out_dims));
}

std::vector<double> eigvals_2x2_closed_form(const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw InputError("closed form requires a 2x2 matrix");
    if (!m.is_hermitian(tol::hermitian)) throw InputError("matrix is not Hermitian");
    const double t = m(0, 0).real() + m(1, 1).real();
    const double det = m(0, 0).real() * m(1, 1).real() - std::norm(m(0, 1));
    const double disc = std::max(0.0, t * t - 4.0 * det);
    const double root = std::sqrt(disc);
    return {(t + root) / 2.0, (t - root) / 2.0};
}

std::vector<double> eigvals_jacobi(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("eigenvalues require a square matrix");
    if (!m.is_hermitian(tol::hermitian)) throw InputError("matrix is not Hermitian");
    const std::size_t n = m.rows();

    ComplexMatrix a = (m + m.adjoint()) * Complex{0.5, 0.0};

    const auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (p != q) s += std::norm(a(p, q));
        return std::sqrt(s);
    };

    constexpr int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps && off_norm() > 1e-12; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double r = std::abs(g);
                if (r < 1e-18) continue;
                const Complex phase = g / r;  // e^{i phi}
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::hypot(1.0, tau))
                                              : 1.0 / (tau - std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Unitary on the (p, q) plane chosen to zero a(p, q):
                //   U[p][p] = c            U[p][q] = s
                //   U[q][p] = -s e^{-iphi} U[q][q] = c e^{-iphi}
                const Complex ph_conj = std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {  // columns: A <- A U
                    const Complex ap = a(k, p), aq = a(k, q);
                    a(k, p) = ap * c - aq * s * ph_conj;
                    a(k, q) = ap * s + aq * c * ph_conj;
                }
                for (std::size_t k = 0; k < n; ++k) {  // rows: A <- U^dag A
                    const Complex bp = a(p, k), bq = a(q, k);
                    a(p, k) = bp * c - bq * s * phase;
                    a(q, k) = bp * s + bq * c * phase;
                }
            }
        }
    }
    if (sweep == max_sweeps && off_norm() > 1e-12)
        throw InternalError("Jacobi eigensolver failed to converge");

    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i).real();
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    return eigs;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("eigenvalues require a square matrix");
    if (m.rows() == 1) {
        if (!m.is_hermitian(tol::hermitian)) throw InputError("matrix is not Hermitian");
        return {m(0, 0).real()};
    }
    if (m.rows() == 2) return eigvals_2x2_closed_form(m);
    return eigvals_jacobi(m);
}

std::vector<double> eigvals_hermitian(const DensityMatrix& rho) {
    return eigvals_hermitian(rho.entries());
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dims() != b.dims()) throw InputError("trace distance requires matching dims");
    const ComplexMatrix diff = a.entries() - b.entries();
    double sum = 0.0;
    for (double lambda : eigvals_hermitian(diff)) sum += std::abs(lambda);
    return std::clamp(sum / 2.0, 0.0, 1.0);
}

double entanglement_entropy(const StateVector& psi, const std::vector<std::size_t>& keep) {
    const DensityMatrix reduced = partial_trace(DensityMatrix::pure(psi), keep);
    double entropy = 0.0;
    for (double lambda : eigvals_hermitian(reduced)) {
        if (lambda > 0.0) entropy -= lambda * std::log2(lambda);
    }
    return std::max(entropy, 0.0);
}

double binary_entropy(double p) {
    p = std::clamp(p, 0.0, 1.0);
    double s = 0.0;
    if (p > 0.0) s -= p * std::log2(p);
    if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
    return std::max(s, 0.0);
}

StateVector apply_unitary_to_factor(const ComplexMatrix& u, const StateVector& psi,
                                    std::size_t factor) {
    const auto& dims = psi.dims();
    if (factor >= dims.size()) throw InputError("factor index out of range");
    const std::size_t d = dims[factor];
    if (u.rows() != d || u.cols() != d)
        throw InputError("operator size does not match the factor dimension");

    const auto strides = strides_of(dims);
    const std::size_t stride = strides[factor];
    const auto& in = psi.amplitudes();
    std::vector<Complex> out(in.size(), Complex{0.0, 0.0});

    for (std::size_t base = 0; base < in.size(); ++base) {
        const std::size_t pos = (base / stride) % d;
        if (pos != 0) continue;  // visit each fiber once, at its pos-0 element
        for (std::size_t i = 0; i < d; ++i) {
            Complex acc{0.0, 0.0};
            for (std::size_t j = 0; j < d; ++j) acc += u(i, j) * in[base + j * stride];
            out[base + i * stride] = acc;
        }
    }
    return StateVector(std::move(out), dims);
}

}  // namespace nogo
