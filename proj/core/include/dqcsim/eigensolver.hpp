#pragma once

#include <Eigen/Dense>

namespace dqcsim {

struct JacobiOptions {
    // Converged once the off-diagonal Frobenius norm falls below
    // `tolerance` times the Frobenius norm of the (shifted) matrix; one more
    // sweep is then applied to polish the result to roundoff.
    double tolerance = 1e-12;
    int max_sweeps = 100;
};

struct EigenDecomposition {
    Eigen::VectorXd energies;   // ascending
    Eigen::MatrixXcd vectors;   // columns are eigenvectors, H V = V diag(E)
    int sweeps = 0;
    double off_norm = 0.0;      // final off-diagonal Frobenius norm
};

// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
//
// Eigenvalues are sorted ascending; exact ties are broken by the basis index
// of each vector's largest-magnitude component. Each eigenvector is rephased
// so that its largest-magnitude component (first one on ties) is real and
// positive, which makes repeated runs bit-identical.
//
// Throws NumericError (with the residual norm) if the sweep cap is reached,
// std::invalid_argument for non-square input.
EigenDecomposition diagonalize_hermitian(const Eigen::MatrixXcd& h, const JacobiOptions& options = {});

// max |H V - V diag(E)| and max |V^H V - I|.
double eigen_residual(const Eigen::MatrixXcd& h, const EigenDecomposition& d);
double unitarity_defect(const Eigen::MatrixXcd& v);

}  // namespace dqcsim
