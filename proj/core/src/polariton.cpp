#include "dqcsim/polariton.hpp"

#include "dqcsim/errors.hpp"

#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

namespace dqcsim {

void CavitySpec::validate() const {
    if (!std::isfinite(omega_c_cm1) || !(omega_c_cm1 > 0.0)) {
        throw ConfigError("cavity: omega_c must be positive");
    }
    if (!std::isfinite(coupling_cm1) || coupling_cm1 < 0.0) {
        throw ConfigError("cavity: coupling g_c must be non-negative");
    }
}

std::string PolaritonBasisLabel::to_string() const {
    std::ostringstream os;
    os << '|';
    if (exciton_a < 0 && exciton_b < 0 && photons == 0) {
        os << 'g';
    }
    if (exciton_a >= 0) os << 'e' << exciton_a;
    if (exciton_b >= 0) os << ",e" << exciton_b;
    if (photons > 0) {
        if (exciton_a >= 0) os << ',';
        os << photons << "ph";
    }
    os << '>';
    return os.str();
}

std::size_t polariton_manifold_dimension(std::size_t n_sites, int manifold) {
    switch (manifold) {
        case 0: return 1;
        case 1: return n_sites + 1;
        case 2: return n_sites * (n_sites + 1) / 2 + n_sites + 1;
        default: throw std::invalid_argument("polariton manifold must be 0, 1 or 2");
    }
}

std::vector<PolaritonBasisLabel> polariton_basis_labels(std::size_t n_sites, int manifold) {
    std::vector<PolaritonBasisLabel> labels;
    labels.reserve(polariton_manifold_dimension(n_sites, manifold));
    const int n = static_cast<int>(n_sites);
    if (manifold == 0) {
        labels.push_back({});
    } else if (manifold == 1) {
        for (int m = 0; m < n; ++m) labels.push_back({m, -1, 0});
        labels.push_back({-1, -1, 1});
    } else {
        for (int m = 0; m < n; ++m) {
            for (int k = m; k < n; ++k) labels.push_back({m, k, 0});
        }
        for (int m = 0; m < n; ++m) labels.push_back({m, -1, 1});
        labels.push_back({-1, -1, 2});
    }
    return labels;
}

Eigen::MatrixXd build_polariton_hamiltonian(const SiteOperatorSet& site_ops, const CavitySpec& cavity,
                                            int manifold) {
    cavity.validate();
    const auto n = static_cast<Eigen::Index>(site_ops.h1.rows());
    const double g = cavity.coupling_cm1;
    const double wc = cavity.omega_c_cm1;

    if (manifold == 1) {
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 1, n + 1);
        h.topLeftCorner(n, n) = site_ops.h1;
        h(n, n) = wc;
        for (Eigen::Index m = 0; m < n; ++m) {
            h(m, n) = g;
            h(n, m) = g;
        }
        return h;
    }
    if (manifold == 2) {
        const auto pairs = static_cast<Eigen::Index>(site_ops.basis.two_size());
        const Eigen::Index dim = pairs + n + 1;
        const Eigen::Index two_photon = pairs + n;
        const double pair_factor = site_ops.bosonic_pair_factor ? std::sqrt(2.0) : 1.0;
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
        h.topLeftCorner(pairs, pairs) = site_ops.h2;
        h.block(pairs, pairs, n, n) = site_ops.h1;
        for (Eigen::Index m = 0; m < n; ++m) h(pairs + m, pairs + m) += wc;
        h(two_photon, two_photon) = 2.0 * wc;
        for (Eigen::Index m = 0; m < n; ++m) {
            const Eigen::Index mc = pairs + m;
            // a B_k^dagger |m,1ph> -> |m k>
            for (Eigen::Index k = 0; k < n; ++k) {
                const auto p = static_cast<Eigen::Index>(
                    site_ops.basis.pair_index(static_cast<int>(m), static_cast<int>(k)));
                const double amp = (k == m ? pair_factor : 1.0) * g;
                h(p, mc) += amp;
                h(mc, p) += amp;
            }
            // B_m^dagger a |2ph> = sqrt(2) |m,1ph>
            h(mc, two_photon) = std::sqrt(2.0) * g;
            h(two_photon, mc) = std::sqrt(2.0) * g;
        }
        return h;
    }
    throw std::invalid_argument("build_polariton_hamiltonian: manifold must be 1 or 2, got " +
                                std::to_string(manifold));
}

namespace {

PolaritonManifold solve_block(const SiteOperatorSet& site_ops, const CavitySpec& cavity, int manifold,
                              const JacobiOptions& options) {
    PolaritonManifold out;
    out.excitation = manifold;
    out.labels = polariton_basis_labels(site_ops.basis.one_size(), manifold);
    const Eigen::MatrixXd h = build_polariton_hamiltonian(site_ops, cavity, manifold);
    EigenDecomposition d = diagonalize_hermitian(h.cast<std::complex<double>>(), options);
    out.energies = std::move(d.energies);
    out.transform = std::move(d.vectors);
    return out;
}

}  // namespace

PolaritonEigensystem solve_polaritons(const SiteOperatorSet& site_ops, const CavitySpec& cavity,
                                      const JacobiOptions& options) {
    cavity.validate();
    PolaritonEigensystem eig;
    PolaritonManifold& ground = eig.manifolds[0];
    ground.excitation = 0;
    ground.labels = polariton_basis_labels(site_ops.basis.one_size(), 0);
    ground.energies = Eigen::VectorXd::Zero(1);
    ground.transform = Eigen::MatrixXcd::Identity(1, 1);

    auto two = std::async(std::launch::async, [&] { return solve_block(site_ops, cavity, 2, options); });
    eig.manifolds[1] = solve_block(site_ops, cavity, 1, options);
    eig.manifolds[2] = two.get();
    return eig;
}

Eigen::VectorXd embed_ground_dipoles(const SiteOperatorSet& site_ops) {
    const auto n = site_ops.d01.size();
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n + 1);
    d.head(n) = site_ops.d01;
    return d;
}

Eigen::MatrixXd embed_one_two_dipoles(const SiteOperatorSet& site_ops, PhotonSectorDipoles mode) {
    const auto n = site_ops.d01.size();
    const auto pairs = site_ops.d12.rows();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(pairs + n + 1, n + 1);
    d.topLeftCorner(pairs, n) = site_ops.d12;
    if (mode == PhotonSectorDipoles::spectator) {
        // B_m^dagger |1ph> = |m,1ph>
        for (Eigen::Index m = 0; m < n; ++m) {
            d(pairs + m, n) = site_ops.d01(m);
        }
    }
    return d;
}

Eigen::VectorXd embed_phonon_weights(const SiteOperatorSet& site_ops, int manifold) {
    const auto n = site_ops.phonon_one.size();
    switch (manifold) {
        case 0: return Eigen::VectorXd::Zero(1);
        case 1: {
            Eigen::VectorXd w = Eigen::VectorXd::Zero(n + 1);
            w.head(n) = site_ops.phonon_one;
            return w;
        }
        case 2: {
            const auto pairs = site_ops.phonon_two.size();
            Eigen::VectorXd w = Eigen::VectorXd::Zero(pairs + n + 1);
            w.head(pairs) = site_ops.phonon_two;
            w.segment(pairs, n) = site_ops.phonon_one;
            return w;
        }
        default: throw std::invalid_argument("embed_phonon_weights: manifold must be 0, 1 or 2");
    }
}

PolaritonOperators transform_operators(const SiteOperatorSet& site_ops, const PolaritonEigensystem& eig,
                                       PhotonSectorDipoles mode) {
    const auto dims = eig.dimensions();
    const auto n = static_cast<std::size_t>(site_ops.d01.size());
    if (dims[1] != polariton_manifold_dimension(n, 1) || dims[2] != polariton_manifold_dimension(n, 2)) {
        throw std::invalid_argument("transform_operators: eigensystem does not match the site operators");
    }
    const Eigen::MatrixXcd& t1 = eig.manifolds[1].transform;
    const Eigen::MatrixXcd& t2 = eig.manifolds[2].transform;

    PolaritonOperators ops;
    ops.photon_sector = mode;
    ops.mu_01 = t1.adjoint() * embed_ground_dipoles(site_ops).cast<std::complex<double>>();
    ops.mu_12 = t2.adjoint() * embed_one_two_dipoles(site_ops, mode).cast<std::complex<double>>() * t1;
    for (int k = 0; k < 3; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        ops.coupling_weights[idx] = embed_phonon_weights(site_ops, k);
        const Eigen::MatrixXcd& t = eig.manifolds[idx].transform;
        ops.phonon_coupling[idx] =
            t.adjoint() * ops.coupling_weights[idx].cast<std::complex<double>>().asDiagonal() * t;
    }
    return ops;
}

}  // namespace dqcsim
