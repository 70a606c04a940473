// polariton.hpp: single cavity mode (<= 2 photons) coupled to the aggregate.
//
// Number-conserving blocks n = 0, 1, 2 are built in the composite
// exciton/photon basis, diagonalized exactly, and the transition dipoles and
// phonon couplings are carried into the polariton eigenbasis.

#pragma once

#include "dqcsim/aggregate.hpp"
#include "dqcsim/eigensolver.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace dqcsim {

struct CavitySpec {
    static constexpr int max_photons = 2;

    double omega_c_cm1 = 15400.0;
    double coupling_cm1 = 100.0;  // uniform over sites

    void validate() const;
};

// Composite basis label: up to two excitons (site indices, -1 if absent)
// plus a photon count.
struct PolaritonBasisLabel {
    int exciton_a = -1;
    int exciton_b = -1;
    int photons = 0;

    int excitation_number() const noexcept {
        return (exciton_a >= 0 ? 1 : 0) + (exciton_b >= 0 ? 1 : 0) + photons;
    }
    bool has_photon() const noexcept { return photons > 0; }
    std::string to_string() const;
};

// Basis ordering used by every manifold block:
//   n = 0: {|g>}
//   n = 1: {|m>} then {|1ph>}
//   n = 2: {|m n>, m <= n} then {|m, 1ph>} then {|2ph>}
std::vector<PolaritonBasisLabel> polariton_basis_labels(std::size_t n_sites, int manifold);
std::size_t polariton_manifold_dimension(std::size_t n_sites, int manifold);

// Rotating-wave exciton-cavity block for manifold n in {1, 2}.
// Throws std::invalid_argument for any other n.
Eigen::MatrixXd build_polariton_hamiltonian(const SiteOperatorSet& site_ops, const CavitySpec& cavity,
                                            int manifold);

struct PolaritonManifold {
    int excitation = 0;
    std::vector<PolaritonBasisLabel> labels;
    Eigen::VectorXd energies;     // ascending
    Eigen::MatrixXcd transform;   // columns are eigenvectors in the composite basis

    std::size_t size() const noexcept { return static_cast<std::size_t>(energies.size()); }
};

struct PolaritonEigensystem {
    std::array<PolaritonManifold, 3> manifolds;

    const PolaritonManifold& operator[](int n) const { return manifolds.at(static_cast<std::size_t>(n)); }
    std::array<std::size_t, 3> dimensions() const noexcept {
        return {manifolds[0].size(), manifolds[1].size(), manifolds[2].size()};
    }
};

// Builds and diagonalizes the n = 1 and n = 2 blocks (concurrently).
PolaritonEigensystem solve_polaritons(const SiteOperatorSet& site_ops, const CavitySpec& cavity,
                                      const JacobiOptions& options = {});

// How the external field acts on photon-containing basis states.
//   spectator: the matter dipole acts on the exciton part while cavity
//              photons are left untouched (|1ph> -> |m,1ph> carries mu_m).
//   zero:      every photon-containing row/column of the one->two dipole
//              block is set to zero.
enum class PhotonSectorDipoles { spectator, zero };

// Transition dipoles in the composite basis.
Eigen::VectorXd embed_ground_dipoles(const SiteOperatorSet& site_ops);
Eigen::MatrixXd embed_one_two_dipoles(const SiteOperatorSet& site_ops, PhotonSectorDipoles mode);

// Diagonal exciton-phonon weights over the composite basis of manifold n
// (photons carry no phonon coupling; |m,1ph> carries the one-exciton g_m).
Eigen::VectorXd embed_phonon_weights(const SiteOperatorSet& site_ops, int manifold);

struct PolaritonOperators {
    Eigen::VectorXcd mu_01;                       // <p1| d |g>
    Eigen::MatrixXcd mu_12;                       // <p2| d |p1>, rows p2
    std::array<Eigen::VectorXd, 3> coupling_weights;   // composite-basis diagonals
    std::array<Eigen::MatrixXcd, 3> phonon_coupling;   // T^H diag(w) T per manifold
    PhotonSectorDipoles photon_sector = PhotonSectorDipoles::spectator;
};

PolaritonOperators transform_operators(const SiteOperatorSet& site_ops, const PolaritonEigensystem& eig,
                                       PhotonSectorDipoles mode = PhotonSectorDipoles::spectator);

}  // namespace dqcsim
