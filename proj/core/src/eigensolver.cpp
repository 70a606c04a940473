#include "dqcsim/eigensolver.hpp"

#include "dqcsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dqcsim {

namespace {

using cplx = std::complex<double>;

double off_diagonal_norm(const Eigen::MatrixXcd& a) {
    double sum = 0.0;
    const Eigen::Index n = a.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

// One cyclic sweep over the strict upper triangle.
void jacobi_sweep(Eigen::MatrixXcd& a, Eigen::MatrixXcd& v) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double r = std::abs(apq);
            if (r == 0.0) continue;
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            // Below roundoff of both diagonal entries: annihilate directly.
            if (r < 1e-18 * (std::abs(app) + std::abs(aqq)) * 1e-2) {
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                continue;
            }
            const cplx e = apq / r;
            const double theta = (aqq - app) / (2.0 * r);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const cplx se = s * e;
            const cplx se_conj = s * std::conj(e);

            // A <- A J, V <- V J with J_pp = J_qq = c, J_pq = s e, J_qp = -s conj(e).
            for (Eigen::Index i = 0; i < n; ++i) {
                const cplx aip = a(i, p);
                const cplx aiq = a(i, q);
                a(i, p) = c * aip - se_conj * aiq;
                a(i, q) = se * aip + c * aiq;
            }
            // A <- J^H A.
            for (Eigen::Index j = 0; j < n; ++j) {
                const cplx apj = a(p, j);
                const cplx aqj = a(q, j);
                a(p, j) = c * apj - se * aqj;
                a(q, j) = se_conj * apj + c * aqj;
            }
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = a(p, p).real();
            a(q, q) = a(q, q).real();
            for (Eigen::Index i = 0; i < n; ++i) {
                const cplx vip = v(i, p);
                const cplx viq = v(i, q);
                v(i, p) = c * vip - se_conj * viq;
                v(i, q) = se * vip + c * viq;
            }
        }
    }
}

Eigen::Index dominant_component(const Eigen::MatrixXcd& v, Eigen::Index col) {
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        const double m = std::abs(v(i, col));
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    return best;
}

}  // namespace

EigenDecomposition diagonalize_hermitian(const Eigen::MatrixXcd& h, const JacobiOptions& options) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("diagonalize_hermitian: matrix must be square");
    }
    const Eigen::Index n = h.rows();
    EigenDecomposition out;
    if (n == 0) {
        out.energies.resize(0);
        out.vectors.resize(0, 0);
        return out;
    }

    Eigen::MatrixXcd a = 0.5 * (h + h.adjoint());
    // Work on the traceless part: keeps rotation roundoff proportional to the
    // spectral spread rather than the absolute energy scale.
    const double shift = a.diagonal().real().mean();
    a.diagonal().array() -= shift;
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);

    const double scale = a.norm();
    const double threshold = options.tolerance * (scale > 0.0 ? scale : 1.0);

    int sweeps = 0;
    double off = off_diagonal_norm(a);
    bool converged = off <= threshold;
    while (!converged && sweeps < options.max_sweeps) {
        jacobi_sweep(a, v);
        ++sweeps;
        off = off_diagonal_norm(a);
        converged = off <= threshold;
    }
    if (!converged) {
        Eigen::VectorXd diag = a.diagonal().real().array() + shift;
        EigenDecomposition partial{diag, v, sweeps, off};
        std::ostringstream os;
        os << "diagonalize_hermitian: no convergence after " << sweeps
           << " sweeps (off-diagonal norm " << off << ", residual "
           << eigen_residual(h, partial) << ")";
        throw NumericError(os.str());
    }
    if (off > 0.0) {
        jacobi_sweep(a, v);
        ++sweeps;
        off = off_diagonal_norm(a);
    }

    // Rephase: largest component real and positive.
    std::vector<Eigen::Index> dominant(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index i = dominant_component(v, j);
        dominant[static_cast<std::size_t>(j)] = i;
        const cplx vij = v(i, j);
        const double mag = std::abs(vij);
        if (mag > 0.0) {
            v.col(j) *= std::conj(vij) / mag;
            v(i, j) = cplx(v(i, j).real(), 0.0);
        }
    }

    const Eigen::VectorXd raw = a.diagonal().real();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        if (raw(x) != raw(y)) return raw(x) < raw(y);
        return dominant[static_cast<std::size_t>(x)] < dominant[static_cast<std::size_t>(y)];
    });

    out.energies.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.energies(k) = raw(src) + shift;
        out.vectors.col(k) = v.col(src);
    }
    out.sweeps = sweeps;
    out.off_norm = off;
    return out;
}

double eigen_residual(const Eigen::MatrixXcd& h, const EigenDecomposition& d) {
    if (h.rows() == 0) return 0.0;
    const Eigen::MatrixXcd r = h * d.vectors - d.vectors * d.energies.cast<cplx>().asDiagonal();
    return r.cwiseAbs().maxCoeff();
}

double unitarity_defect(const Eigen::MatrixXcd& v) {
    if (v.cols() == 0) return 0.0;
    const Eigen::MatrixXcd g = v.adjoint() * v - Eigen::MatrixXcd::Identity(v.cols(), v.cols());
    return g.cwiseAbs().maxCoeff();
}

}  // namespace dqcsim
