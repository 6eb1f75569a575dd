// qcore.cpp: dense one- and two-qubit state utilities

#include "tidisc/qcore.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>

#include "tidisc/errors.hpp"

namespace tidisc {

namespace {

constexpr Complex I_UNIT{0.0, 1.0};

double min_hermitian_eigenvalue(const Matrix& m) {
    const Matrix herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    const auto diag = validate_state(entries_);
    if (!diag.square_qubit_dim) {
        throw DimensionMismatch("density matrix must be 2x2 or 4x4");
    }
    if (!diag.ok()) {
        std::ostringstream os;
        os << "not a density matrix: hermiticity defect " << diag.hermiticity_defect
           << ", trace defect " << diag.trace_defect << ", min eigenvalue "
           << diag.min_eigenvalue;
        throw NotAState(os.str());
    }
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

StateDiagnostics validate_state(const Matrix& m) noexcept {
    StateDiagnostics d;
    d.square_qubit_dim = m.rows() == m.cols() && (m.rows() == 2 || m.rows() == 4);
    if (m.rows() != m.cols() || m.rows() == 0) {
        d.hermiticity_defect = std::numeric_limits<double>::infinity();
        d.trace_defect = std::numeric_limits<double>::infinity();
        d.min_eigenvalue = -std::numeric_limits<double>::infinity();
        return d;
    }
    d.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    d.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
    d.min_eigenvalue = min_hermitian_eigenvalue(m);
    return d;
}

std::array<double, 4> bell_eigenvalues(const BellDiagonalParams& p) {
    return {(1.0 - p.m1 - p.m2 - p.m3) / 4.0, (1.0 - p.m1 + p.m2 + p.m3) / 4.0,
            (1.0 + p.m1 - p.m2 + p.m3) / 4.0, (1.0 + p.m1 + p.m2 - p.m3) / 4.0};
}

DensityMatrix bell_diagonal_state(const BellDiagonalParams& p) {
    for (double m : {p.m1, p.m2, p.m3}) {
        if (!(std::abs(m) <= 1.0)) {
            throw InvalidState("Bell-diagonal parameters must lie in [-1, 1]");
        }
    }
    for (double lam : bell_eigenvalues(p)) {
        if (lam < -1e-12) {
            throw InvalidState("Bell-diagonal parameters give a negative eigenvalue");
        }
    }
    // σx⊗σx and σy⊗σy only touch the (1,4) and (2,3) corners; σz⊗σz is diagonal.
    Matrix rho = Matrix::Zero(4, 4);
    rho(0, 0) = rho(3, 3) = (1.0 + p.m3) / 4.0;
    rho(1, 1) = rho(2, 2) = (1.0 - p.m3) / 4.0;
    rho(0, 3) = rho(3, 0) = (p.m1 - p.m2) / 4.0;
    rho(1, 2) = rho(2, 1) = (p.m1 + p.m2) / 4.0;
    return DensityMatrix(std::move(rho));
}

Matrix2 pauli(int k) {
    Matrix2 s;
    switch (k) {
    case 0: s << 1.0, 0.0, 0.0, 1.0; break;
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -I_UNIT, I_UNIT, 0.0; break;
    case 3: s << 1.0, 0.0, 0.0, -1.0; break;
    default: throw InvalidInput("Pauli index must be 0..3");
    }
    return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw DimensionMismatch("tensor_product expects two single-qubit states");
    }
    return DensityMatrix(kron(a.matrix(), b.matrix()));
}

double shannon_entropy_bits(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

double correlation_kernel(double x) {
    double sum = 0.0;
    for (double sign : {-1.0, 1.0}) {
        const double v = 1.0 + sign * x;
        if (v > 0.0) {
            sum += 0.5 * v * std::log2(v);
        }
    }
    return sum;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Eigen::VectorXd lam = rho.eigenvalues();
    return shannon_entropy_bits(std::span<const double>(lam.data(), lam.size()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    if (rho.dim() != 4) {
        throw DimensionMismatch("partial_trace expects a two-qubit state");
    }
    const Matrix& m = rho.matrix();
    Matrix out = Matrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                if (keep == Subsystem::A) {
                    out(i, j) += m(2 * i + k, 2 * j + k);
                } else {
                    out(i, j) += m(2 * k + i, 2 * k + j);
                }
            }
        }
    }
    return DensityMatrix(std::move(out));
}

Eigen::Matrix4d pauli_coordinates(const Matrix& rho) {
    Eigen::Matrix4d r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r(i, j) = (rho * kron(pauli(i), pauli(j))).trace().real();
        }
    }
    return r;
}

Matrix from_pauli_coordinates(const Eigen::Matrix4d& r) {
    Matrix rho = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (r(i, j) != 0.0) {
                rho += r(i, j) * kron(pauli(i), pauli(j));
            }
        }
    }
    return rho / 4.0;
}

Eigen::Vector4d bloch_coordinates(const Matrix& rho) {
    Eigen::Vector4d v;
    for (int k = 0; k < 4; ++k) {
        v(k) = (rho * pauli(k)).trace().real();
    }
    return v;
}

Matrix from_bloch_coordinates(const Eigen::Vector4d& v) {
    Matrix rho = Matrix::Zero(2, 2);
    for (int k = 0; k < 4; ++k) {
        rho += v(k) * pauli(k);
    }
    return rho / 2.0;
}

} // namespace tidisc
