#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace workbench {

using cplx = std::complex<double>;

// Structural tolerances (Hermiticity, idempotency, normalization) and the
// looser eigendecomposition residual tolerance, chosen for double precision
// at dimensions up to a few hundred.
inline constexpr double kStructTol = 1e-9;
inline constexpr double kEigTol = 1e-8;

/// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;
    bool all_finite() const;

    /// max_ij |a_ij - b_ij|
    static double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
    double max_abs() const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

private:
    std::size_t rows_, cols_;
    std::vector<cplx> a_;
};

/// Normalized pure state.
struct StateVector {
    std::size_t dim = 0;
    std::vector<cplx> amplitudes;

    StateVector() = default;
    explicit StateVector(std::vector<cplx> amps);

    double norm() const;
    ComplexMatrix density_matrix() const;
};

/// Hermitian idempotent matrix. Validated on construction.
struct Projector {
    ComplexMatrix matrix;

    Projector() = default;
    explicit Projector(ComplexMatrix m, double tol = kStructTol);
};

bool is_hermitian(const ComplexMatrix& a, double tol = kStructTol);
bool is_projector_matrix(const ComplexMatrix& a, double tol = kStructTol);

/// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> tensor(const std::vector<cplx>& a, const std::vector<cplx>& b);

double frobenius_norm(const ComplexMatrix& a);

/// Sum of singular values, computed through the Hermitian dilation
/// [[0, A], [A^dag, 0]].
double trace_norm(const ComplexMatrix& a);

struct EigenDecomposition {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // columns are eigenvectors, same order
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
EigenDecomposition hermitian_eig(const ComplexMatrix& a);

/// Unitary V making every V† A_k V as diagonal as possible simultaneously
/// (Jacobi-style joint approximate diagonalization of a Hermitian family).
ComplexMatrix joint_diagonalizer(const std::vector<ComplexMatrix>& mats,
                                 std::size_t max_sweeps = 100);

/// Reduced density matrix on the kept subsystems (indices into dims).
ComplexMatrix partial_trace(const ComplexMatrix& dm, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

/// Eigenvalues thresholded at 1/2 to {0,1} in the input's own eigenbasis.
/// Ties within 1e-12 of 1/2 round down.
Projector nearest_projector(const ComplexMatrix& h);

struct GentleMeasurementResult {
    double distance;  // || rho - sqrt(X) rho sqrt(X) ||_1
    double bound;     // 3 sqrt(1 - Tr X rho)
};

GentleMeasurementResult gentle_measurement_bound(const ComplexMatrix& rho,
                                                 const ComplexMatrix& x);

/// Matrix applied to a vector.
std::vector<cplx> apply(const ComplexMatrix& m, const std::vector<cplx>& v);

double vec_norm_sq(const std::vector<cplx>& v);

/// Apply an operator acting on subsystem `slot` of a state over `n_slots`
/// subsystems of local dimension `d` each (op is d x d).
void apply_local(std::vector<cplx>& state, const ComplexMatrix& op, std::size_t slot,
                 std::size_t n_slots, std::size_t d);

}  // namespace workbench
