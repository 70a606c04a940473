// dephasing.hpp: Markovian/secular line-broadening rates and resonances.
//
// For a polariton state p1 of manifold n,
//   gamma_p1 = sum_p2 Re C(w_p1 - w_p2) K(p1, p2),
// where C is the half-sided bath transform and K the phonon overlap between
// the two eigenvectors (see CouplingReading). Pair rates are the arithmetic
// mean of the state rates and enter the retarded Green's functions
//   G_ab(w) = i / (w - w_ab + i gamma_ab).

#pragma once

#include "dqcsim/bath.hpp"
#include "dqcsim/polariton.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>

namespace dqcsim {

enum class CouplingReading {
    // Independent bath per composite basis state s:
    //   K = sum_s w_s^2 |T_s,p1|^2 |T_s,p2|^2
    site_local,
    // One bath shared by all basis states, weights outside the overlap:
    //   K = |sum_s w_s conj(T_s,p1) T_s,p2|^2
    common_bath,
};

struct DephasingOptions {
    CouplingReading reading = CouplingReading::site_local;
};

// Rates for every state of one manifold. Negative totals (possible from the
// truncated Matsubara tail) are clamped to zero and counted in `clamped`.
Eigen::VectorXd line_broadening_rates(const PolaritonManifold& manifold, const Eigen::VectorXd& weights,
                                      const ExponentialSumCorrelation& bath,
                                      const DephasingOptions& options = {}, int* clamped = nullptr);

struct PairDephasing {
    Eigen::MatrixXd gamma;       // gamma(a, b) = (gamma_a + gamma_b) / 2
    Eigen::MatrixXcd resonance;  // z(a, b) = (E_a - E_b) - i gamma(a, b)
};

PairDephasing pair_dephasing(const Eigen::VectorXd& energies_a, const Eigen::VectorXd& rates_a,
                             const Eigen::VectorXd& energies_b, const Eigen::VectorXd& rates_b);

struct DephasingTable {
    std::array<Eigen::VectorXd, 3> energies;
    std::array<Eigen::VectorXd, 3> rates;   // gamma_p per manifold; ground is 0
    int clamped = 0;

    double gamma_pair(int ma, Eigen::Index a, int mb, Eigen::Index b) const;
    std::complex<double> resonance(int ma, Eigen::Index a, int mb, Eigen::Index b) const;

    // FNV-1a over the raw bytes of energies and rates.
    std::uint64_t hash() const;
};

DephasingTable build_dephasing_table(const PolaritonEigensystem& eig, const PolaritonOperators& ops,
                                     const ExponentialSumCorrelation& bath,
                                     const DephasingOptions& options = {});

// i / (omega - z). Throws NumericError on an exact pole.
std::complex<double> greens_function(double omega_cm1, std::complex<double> z);
std::complex<double> greens_function(double omega_cm1, const DephasingTable& table, int ma, Eigen::Index a,
                                     int mb, Eigen::Index b);

}  // namespace dqcsim
