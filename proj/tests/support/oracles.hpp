// Independent reference routines shared by the unit and acceptance tests.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat ginibre(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = cd(g(rng), g(rng));
        }
    }
    return m;
}

/// Hilbert–Schmidt random mixed state.
inline Mat random_state(int n, std::mt19937_64& rng) {
    const Mat g = ginibre(n, rng);
    Mat rho = g * g.adjoint();
    rho /= rho.trace();
    return 0.5 * (rho + rho.adjoint().eval());
}

inline Mat random_pure_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
        v(i) = cd(g(rng), g(rng));
    }
    v.normalize();
    return v * v.adjoint();
}

/// Haar unitary from the QR decomposition of a Ginibre matrix (phases fixed).
inline Mat random_unitary(int n, std::mt19937_64& rng) {
    const Mat g = ginibre(n, rng);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
    }
    return q;
}

/// Tr_B by literal index summation over |a b><a' b'|.
inline Mat trace_out_b(const Mat& rho) {
    Mat out = Mat::Zero(2, 2);
    for (int a = 0; a < 2; ++a) {
        for (int ap = 0; ap < 2; ++ap) {
            for (int b = 0; b < 2; ++b) {
                out(a, ap) += rho(2 * a + b, 2 * ap + b);
            }
        }
    }
    return out;
}

inline Mat trace_out_a(const Mat& rho) {
    Mat out = Mat::Zero(2, 2);
    for (int b = 0; b < 2; ++b) {
        for (int bp = 0; bp < 2; ++bp) {
            for (int a = 0; a < 2; ++a) {
                out(b, bp) += rho(2 * a + b, 2 * a + bp);
            }
        }
    }
    return out;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline double entropy_bits(const Mat& rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(rho);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double p = es.eigenvalues()(i);
        if (p > 1e-300) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

inline double h2(double p) {
    double s = 0.0;
    for (double q : {p, 1.0 - p}) {
        if (q > 0.0) {
            s -= q * std::log2(q);
        }
    }
    return s;
}

/// Bell-diagonal matrix assembled from its Pauli expansion.
inline Mat bell_from_paulis(double m1, double m2, double m3) {
    Mat sx(2, 2), sy(2, 2), sz(2, 2), id = Mat::Identity(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, cd(0, -1), cd(0, 1), 0;
    sz << 1, 0, 0, -1;
    return 0.25 * (kron(id, id) + m1 * kron(sx, sx) + m2 * kron(sy, sy) + m3 * kron(sz, sz));
}

/// Composite Simpson rule on [a, b] with n (even) panels.
template <class F>
double simpson(F&& f, double a, double b, int n) {
    if (n % 2) {
        ++n;
    }
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    }
    return acc * h / 3.0;
}

} // namespace oracle
