// aggregate.hpp: Frenkel-exciton aggregate in the site basis.
//
// Builds the one- and two-excitation Hamiltonians, the ground->one and
// one->two transition dipole matrices, and the diagonal exciton-phonon
// coupling weights of both manifolds from a per-site material description.

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dqcsim {

// Pigment class; selects the exciton-phonon coupling scale of a site.
enum class SiteClass { A, B };

std::string_view to_string(SiteClass c) noexcept;

struct Site {
    double energy_cm1 = 0.0;  // one-exciton energy E_m
    double mu10 = 1.0;        // ground -> one transition dipole (scalar, orientationally averaged)
    double kappa = 1.0;       // mu21 / mu10, relative to the harmonic ladder
    double delta_cm1 = 0.0;   // anharmonicity of the local double excitation
    SiteClass site_class = SiteClass::A;
};

struct AggregateSpec {
    std::vector<Site> sites;
    Eigen::MatrixXd hopping;  // symmetric, zero diagonal (cm^-1)

    // sqrt(2) bosonic normalization on every transition into a local double
    // excitation (hopping, cavity exchange and one->two dipoles).
    bool bosonic_pair_factor = true;

    std::size_t n_sites() const noexcept { return sites.size(); }

    // Throws ConfigError naming the first violated invariant.
    void validate() const;
};

// Canonical labelling of the excitonic basis states.
struct ExcitonBasis {
    std::vector<int> one;                    // site index m
    std::vector<std::pair<int, int>> two;    // (m, n), m <= n, lexicographic

    static ExcitonBasis make(std::size_t n_sites);

    std::size_t one_size() const noexcept { return one.size(); }
    std::size_t two_size() const noexcept { return two.size(); }

    // Position of the unordered pair {m, n} in `two`.
    std::size_t pair_index(int m, int n) const;
};

// Exciton-phonon coupling scale per pigment class and the two-exciton rule.
inline constexpr double kPhononCouplingA = 1.0;
inline constexpr double kPhononCouplingB = 1.4;
inline constexpr double kTwoExcitonPhononFactor = 0.6;

double phonon_coupling_scale(SiteClass c) noexcept;

struct DipoleOperators {
    Eigen::VectorXd d01;  // length n_sites
    Eigen::MatrixXd d12;  // rows: two-exciton pairs, cols: sites
};

struct PhononCouplings {
    Eigen::VectorXd one;  // diagonal weights over the one-exciton basis
    Eigen::VectorXd two;  // diagonal weights over the two-exciton basis
};

struct SiteOperatorSet {
    ExcitonBasis basis;
    Eigen::MatrixXd h1;
    Eigen::MatrixXd h2;
    Eigen::VectorXd d01;
    Eigen::MatrixXd d12;
    Eigen::VectorXd phonon_one;
    Eigen::VectorXd phonon_two;
    bool bosonic_pair_factor = true;
};

Eigen::MatrixXd build_one_exciton_hamiltonian(const AggregateSpec& spec);
Eigen::MatrixXd build_two_exciton_hamiltonian(const AggregateSpec& spec);
DipoleOperators build_dipole_operators(const AggregateSpec& spec);
PhononCouplings build_phonon_couplings(const AggregateSpec& spec);

SiteOperatorSet build_site_operators(const AggregateSpec& spec);

// Parameter-file I/O. Schema:
//   { "sites": [ {"energy_cm1", "mu10", "kappa", "delta_cm1", "class": "A"|"B"} ],
//     "hopping": [[...]], optional "bosonic_pair_factor": bool,
//     optional "name": string, optional "note": string }
// Unknown keys are rejected with a ConfigError naming the JSON path.
AggregateSpec parse_aggregate_json(std::string_view text);
AggregateSpec load_aggregate_file(const std::filesystem::path& path);
std::string aggregate_to_json(const AggregateSpec& spec);

}  // namespace dqcsim
