// qcore.hpp: dense one- and two-qubit states and their entropies

#pragma once

#include <array>
#include <complex>
#include <span>

#include <Eigen/Dense>

namespace tidisc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// Tolerances shared by every state check in the library.
struct StateTolerance {
    static constexpr double hermiticity = 1e-12;
    static constexpr double trace = 1e-12;
    static constexpr double min_eigenvalue = -1e-10;
};

/// Qubit label in A⊗B. Basis ordering is |00>,|01>,|10>,|11> with A the left factor
/// and |0> the σ_z = +1 ("up") level.
enum class Subsystem { A, B };

/// Positive semidefinite Hermitian 2×2 or 4×4 matrix of unit trace.
/// The constructor enforces the invariants of StateTolerance.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix entries);

    [[nodiscard]] int dim() const { return static_cast<int>(entries_.rows()); }
    [[nodiscard]] const Matrix& matrix() const { return entries_; }
    [[nodiscard]] Complex operator()(int i, int j) const { return entries_(i, j); }

    /// Ascending eigenvalues.
    [[nodiscard]] Eigen::VectorXd eigenvalues() const;

private:
    Matrix entries_;
};

struct StateDiagnostics {
    bool square_qubit_dim = false;   // 2×2 or 4×4
    double hermiticity_defect = 0.0; // max |M_ij − conj(M_ji)|
    double trace_defect = 0.0;       // |Tr M − 1|
    double min_eigenvalue = 0.0;     // of the Hermitian part

    [[nodiscard]] bool ok() const {
        return square_qubit_dim && hermiticity_defect <= StateTolerance::hermiticity &&
               trace_defect <= StateTolerance::trace &&
               min_eigenvalue >= StateTolerance::min_eigenvalue;
    }
};

/// Reports how far `m` is from being a density matrix. Never throws.
StateDiagnostics validate_state(const Matrix& m) noexcept;

/// Bell-diagonal correlation parameters (m1, m2, m3):
/// ρ = (I⊗I + m1 σx⊗σx + m2 σy⊗σy + m3 σz⊗σz)/4.
struct BellDiagonalParams {
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;

    /// One-parameter family (1, m, −m).
    static BellDiagonalParams family(double m) { return {1.0, m, -m}; }
};

/// Eigenvalues in the Bell basis, ordered
/// (1−m1−m2−m3)/4, (1−m1+m2+m3)/4, (1+m1−m2+m3)/4, (1+m1+m2−m3)/4.
std::array<double, 4> bell_eigenvalues(const BellDiagonalParams& p);

/// Throws InvalidState if any |m_i| > 1 or any Bell eigenvalue < −1e-12.
DensityMatrix bell_diagonal_state(const BellDiagonalParams& p);

Matrix2 pauli(int k); // 0 = I, 1 = x, 2 = y, 3 = z
Matrix kron(const Matrix& a, const Matrix& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// −Σ p log₂ p with 0·log 0 = 0; entries below zero are clamped.
double shannon_entropy_bits(std::span<const double> probabilities);

/// Binary-symmetric entropy deficit Σ_{j=1,2} (1+(−1)^j x)/2 · log₂(1+(−1)^j x),
/// i.e. 1 − H₂((1+x)/2). The building block of every closed-form correlation.
double correlation_kernel(double x);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// Reduced state of the kept qubit. Throws DimensionMismatch unless dim = 4.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Real Pauli coordinates R_ij = Tr[ρ σ_i⊗σ_j] (i, j = 0..3) of a two-qubit operator.
Eigen::Matrix4d pauli_coordinates(const Matrix& rho);
Matrix from_pauli_coordinates(const Eigen::Matrix4d& r);

/// Single-qubit (1, x, y, z) coordinates, x = Tr[ρσ_x] etc.
Eigen::Vector4d bloch_coordinates(const Matrix& rho);
Matrix from_bloch_coordinates(const Eigen::Vector4d& v);

} // namespace tidisc
